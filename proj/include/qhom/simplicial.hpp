/**
 * Finite semi-simplicial sets (face maps only, no degeneracies) and their
 * q-deformed chain complexes.
 *
 * Face tables follow the identity d_i d_j = d_j d_{i+1} for j <= i, with the
 * right-hand map applied first; for vertex-deletion models this is the
 * classical semi-simplicial identity. A finite model computes exactly the
 * homology of the model itself; it is not a stand-in for the singular theory
 * of the underlying space (for that the one-point model already needs its
 * infinite tail of degenerate cells).
 */

#pragma once

#include "qhom/cyclotomic.hpp"
#include "qhom/ncomplex.hpp"

#include <map>
#include <string>
#include <vector>

namespace qhom {

struct SemiSimplicialSet {
    /// cells[n] lists the ids of the n-dimensional cells.
    std::vector<std::vector<std::string>> cells;
    /// faces[n][c] lists the n+1 faces [d_0, ..., d_n] of cell c as indices
    /// into cells[n-1]; faces[0] is empty.
    std::vector<std::vector<std::vector<long>>> faces;

    long top_dim() const { return static_cast<long>(cells.size()) - 1; }

    long cell_count(long n) const {
        if (n < 0 || n > top_dim()) return 0;
        return static_cast<long>(cells[static_cast<std::size_t>(n)].size());
    }

    long face(long n, long i, long c) const {
        return faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
    }

    /// Index of the cell with the given id in dimension n, or -1.
    long cell_index(long n, const std::string& id) const;
};

struct SimplicialValidation {
    bool ok = true;
    bool structural = false;  // missing/malformed face entries
    long dim = -1, i = -1, j = -1, cell = -1;
    std::string detail;
    explicit operator bool() const { return ok; }
};

/// Exhaustively checks the face identity d_i d_j = d_j d_{i+1} (j <= i) over
/// all cells; reports the first violated (i, j, cell) triple. Missing or
/// out-of-range face entries are reported as structural errors.
SimplicialValidation validate_simplicial(const SemiSimplicialSet& x);

/// Homogeneous q-chain: coefficients on the cells of one dimension.
struct QChain {
    long degree = 0;
    std::map<long, CyclotomicRational> coeffs;  // cell index -> nonzero coefficient

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const QChain& o) const { return degree == o.degree && coeffs == o.coeffs; }
};

/// Adds coeff * cell into the chain, merging and dropping zeros.
void chain_add_term(QChain& c, long cell, const CyclotomicRational& coeff);
QChain chain_add(const QChain& a, const QChain& b);
QChain chain_scale(const QChain& c, const CyclotomicRational& s);

/// The q-deformed border sum_i q^i d_i, extended linearly; the border of a
/// degree-0 chain is the zero chain in degree -1.
QChain chain_border(const SemiSimplicialSet& x, long order, const QChain& c);

/// Matrices of the q-deformed border per degree <= hi. The input must
/// validate; the result is marked truncated when hi cuts the model.
GradedNComplex to_ncomplex(const SemiSimplicialSet& x, long order, long hi);

/// Compares the k-fold border against the closed form
///   [k]_q! * sum_{i_1 <= ... <= i_k} q^{i_1+...+i_k} d_{i_k} ... d_{i_1}
/// via brute-force enumeration of weakly increasing index tuples.
bool iteration_rule_check(const SemiSimplicialSet& x, long order, const QChain& c, long k);

// --- Stock models ----------------------------------------------------------

/// One cell per dimension 0..maxdim, every face the unique lower cell.
SemiSimplicialSet point_model(long maxdim);

/// Full simplex on k+1 vertices: cells are the nonempty vertex subsets,
/// faces delete the i-th smallest vertex.
SemiSimplicialSet delta_model(long k);

/// The boundary of the full simplex (all proper nonempty subsets).
SemiSimplicialSet boundary_delta_model(long k);

}  // namespace qhom
