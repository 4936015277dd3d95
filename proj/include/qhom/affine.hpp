/**
 * Affine realization of singular q-chains: formal Z[q]-combinations of
 * affine simplices with exact rational vertices. The convex product of two
 * affine simplices is the affine simplex on the concatenated vertex tuple
 * (for affine tau, |a| * tau(a/|a|) = sum_i a_i x_i, so the pointwise convex
 * combination is again affine), which keeps every computation exact.
 *
 * On top of the product: the q-Leibnitz rule, Newton terms and the Newton
 * polynomial expansion of border powers, the tail formulas, augmentation,
 * the index map to the scalar complex, and the degree-(N-1) homotopy
 * operator K(sigma) = (1/[N-1]_q!) (iota * sigma) together with its
 * coefficient table.
 */

#pragma once

#include "qhom/cyclotomic.hpp"

#include <map>
#include <string>
#include <vector>

namespace qhom {

struct AffineSimplex {
    long ambient = 0;                              // dimension of the surrounding space
    std::vector<std::vector<mpq_class>> vertices;  // n+1 points of length `ambient`

    long degree() const { return static_cast<long>(vertices.size()) - 1; }

    bool operator==(const AffineSimplex& o) const { return ambient == o.ambient && vertices == o.vertices; }
    bool operator<(const AffineSimplex& o) const;  // lexicographic, for canonical maps

    std::string to_string() const;
};

/// Deletes vertex j (the j-th face of the simplex).
AffineSimplex face(const AffineSimplex& s, long j);

/// Constant simplex with n+1 copies of the given point.
AffineSimplex constant_simplex(const std::vector<mpq_class>& point, long n);

struct AffineChain {
    long ambient = 0;
    long degree = 0;
    std::map<AffineSimplex, CyclotomicRational> terms;  // no zero coefficients stored

    AffineChain() = default;
    AffineChain(long ambient_in, long degree_in) : ambient(ambient_in), degree(degree_in) {}

    bool is_zero() const { return terms.empty(); }
    bool operator==(const AffineChain& o) const;

    std::string to_string() const;
};

AffineChain chain_of(const AffineSimplex& s, const CyclotomicRational& coeff);
AffineChain chain_of(const AffineSimplex& s, long order);  // coefficient 1

void add_term(AffineChain& c, const AffineSimplex& s, const CyclotomicRational& coeff);
AffineChain add(const AffineChain& a, const AffineChain& b);
AffineChain scale(const AffineChain& c, const CyclotomicRational& s);

/// Sum of the chain's coefficients (zero of the given order when empty).
CyclotomicRational coefficient_sum(const AffineChain& c, long order);

/// q-deformed border sum_i q^i face(., i); zero on degree 0.
AffineChain affine_border(const AffineChain& c, long order);

/// k-fold border.
AffineChain affine_border_power(const AffineChain& c, long order, long k);

/// Convex product: on simplices the affine simplex on the concatenated
/// vertex tuple, extended bilinearly. Degrees add plus one.
AffineChain convex_product(const AffineChain& tau, const AffineChain& sigma);

/// Exact check of border(tau * sigma) = border(tau) * sigma
///                                      + q^{m+1} tau * border(sigma)
/// for deg(tau) = m >= 1 and deg(sigma) >= 1 (the rule's hypothesis).
bool leibnitz_check(const AffineChain& tau, const AffineChain& sigma, long order);

/// Newton operand: a chain, a scalar, or zero, with the product rules
///   chain * chain   -> convex product
///   scalar * chain  -> scalar multiple (either side)
///   scalar * scalar -> zero
///   zero * anything -> zero
struct NewtonOperand {
    enum class Kind { chain, scalar, zero };
    Kind kind = Kind::zero;
    AffineChain chain;
    CyclotomicRational scalar;

    static NewtonOperand make_zero();
    static NewtonOperand make_chain(AffineChain c);
    static NewtonOperand make_scalar(CyclotomicRational s);
};

NewtonOperand newton_star(const NewtonOperand& a, const NewtonOperand& b);

/// Newton term of a degree-m chain: border^i for i <= m, the scalar
/// [m+1]_q! times the coefficient sum at i = m+1, zero beyond.
NewtonOperand newton_term(const AffineChain& tau, long i, long order);

struct NewtonCheckResult {
    bool ok = false;
    AffineChain lhs, rhs;
};

/// Exact comparison of border^k(tau * sigma) against
///   sum_{i=0}^{k} q^{i(m+1-k+i)} [k choose i]_q N^{k-i}(tau) * N^i(sigma).
NewtonCheckResult newton_polynomial_check(const AffineChain& tau, const AffineChain& sigma, long k, long order);

/// border^m(tau) = [m]_q! sum_j q^j T_{m-j} for a degree-m chain, where the
/// T_j are the vertex 0-simplices (extended linearly over the chain).
bool tail1_check(const AffineChain& tau, long order);

/// border(border^m(tau) * border^n(sigma)) =
///   [m+1]_q! s(tau) border^n(sigma) + q [n+1]_q! s(sigma) border^m(tau)
/// with s(.) the coefficient sum (1 for single simplices, matching the
/// printed identity).
bool tail2_check(const AffineChain& tau, const AffineChain& sigma, long order);

/// The three-branch formula for border^k(border^m(tau) * sigma), k >= 1,
/// requiring deg(tau), deg(sigma) >= 1; scalar parts again weighted by
/// coefficient sums.
bool tail3_check(const AffineChain& tau, const AffineChain& sigma, long k, long order);

/// Sum of coefficients of a degree-0 chain; rejects positive degree.
CyclotomicRational augmentation_eps(const AffineChain& c, long order);

/// Index map: coefficient sum in degrees 0..N-2, zero above.
CyclotomicRational index_map_eta(const AffineChain& c, long order);

/// Section of the index map: the constant simplices nu_0 .. nu_{N-2} at the
/// given basepoint.
std::vector<AffineSimplex> section_phat(long order, long ambient, const std::vector<mpq_class>& basepoint);

/// Homotopy operator K(sigma) = (1/[N-1]_q!) (iota * sigma) for a fixed
/// (N-2)-simplex iota; raises degree by N-1.
AffineChain homotopy_K(const AffineChain& sigma, const AffineSimplex& iota, long order);

struct HomotopyCheckResult {
    bool ok = false;
    AffineChain sum;       // sum_k border^k K border^{N-k-1}(sigma), honest chain arithmetic
    AffineChain expected;  // sigma when deg >= N-1, zero below
};

/// Evaluates the homotopy-operator sum by honest chain operations and
/// compares against (sigma for deg >= N-1, 0 below).
HomotopyCheckResult homotopy_identity_check(const AffineChain& sigma, const AffineSimplex& iota, long order);

struct ProjectionComparison {
    AffineChain sum;        // the homotopy-operator sum
    AffineChain id_minus_projection;  // c - (coefficient sum) nu_deg, 0 correction above N-2
    bool equal = false;
};

/// Side-by-side report of the operator sum against id - (section o index),
/// using the constant simplices at the given basepoint as the section.
ProjectionComparison homotopy_vs_projection(const AffineChain& c, const AffineSimplex& iota, long order,
                                            const std::vector<mpq_class>& basepoint);

struct CoefficientTable {
    long order = 0;
    // alpha[k][i] = q^{i(N-1-k+i)} [k choose i]_q for 0 <= i <= k <= N-1
    std::vector<std::vector<CyclotomicInt>> alpha;
    std::vector<CyclotomicInt> column_sums;  // alpha_l, l = k - i, l = 0..N-1
    std::vector<CyclotomicInt> beta;         // beta_s for s = 1..N-1 (beta[0] unused)

    bool sums_vanish = false;      // alpha_l = 0 for l <= N-2
    bool top_is_one = false;       // alpha_{N-1} = 1
    bool recursion_holds = false;  // beta_{s+1} = (1 - q^s) beta_s, beta_1 = [N]_q = 0
    bool beta_matches_columns = false;  // beta_s = alpha_{N-1-s}
};

CoefficientTable coefficient_table(long order);

}  // namespace qhom
