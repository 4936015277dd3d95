/**
 * Graded N-complexes as exact matrix data over Q(q).
 *
 * A complex is a finite degree window [lo, hi] with a rank per degree and one
 * border matrix per degree d (mapping degree d to d-1); the defining relation
 * is that every N-fold composition of consecutive borders vanishes. Degrees
 * outside the window are zero modules; windows are always complete below
 * (nothing exists under lo), and `truncated_above` records whether the window
 * is a finite view of a complex that continues above hi. Amplitude homology
 * dims computed near the top of a truncated window can under-count incoming
 * borders and are flagged unreliable.
 */

#pragma once

#include "qhom/cyclotomic.hpp"
#include "qhom/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace qhom {

struct GradedNComplex {
    long order = 0;  // N
    long lo = 0, hi = -1;
    bool truncated_above = false;
    std::vector<long> ranks;     // degree d at index d-lo
    std::vector<Matrix> borders; // border at degree d (lo < d <= hi) at index d-lo-1

    long rank(long d) const {
        if (d < lo || d > hi) return 0;
        return ranks[static_cast<std::size_t>(d - lo)];
    }

    /// Border matrix at degree d with shape rank(d-1) x rank(d); a zero
    /// matrix of the right shape outside the stored range.
    Matrix border_at(long d) const {
        if (d > lo && d <= hi) return borders[static_cast<std::size_t>(d - lo - 1)];
        return Matrix(order, static_cast<std::size_t>(rank(d - 1)), static_cast<std::size_t>(rank(d)));
    }

    /// Structural equality: order, window, ranks and borders (the truncation
    /// marker is presentation metadata and does not participate).
    bool operator==(const GradedNComplex& o) const {
        return order == o.order && lo == o.lo && hi == o.hi && ranks == o.ranks && borders == o.borders;
    }
};

struct ValidationResult {
    enum class Status { ok, shape_error, nilpotency_violation };
    Status status = Status::ok;
    long degree = 0;  // first failing degree
    std::string detail;
    explicit operator bool() const { return status == Status::ok; }
};

/// Checks shapes first (structural errors), then that every N-fold
/// composition of consecutive borders is exactly zero.
ValidationResult validate_ncomplex(const GradedNComplex& c);

/// Matrix of the k-fold border starting at degree d (identity for k = 0;
/// compositions leaving the window are zero through the zero modules there).
Matrix border_power(const GradedNComplex& c, long k, long d);

struct HomologyCell {
    long m = 0, n = 0;
    long dim = 0;
    bool reliable = true;
};

struct AmplitudeHomologyReport {
    long order = 0;
    long lo = 0, hi = -1;
    std::vector<HomologyCell> cells;  // m-major, degree-minor

    const HomologyCell& cell(long m, long n) const;
};

/// dim H_{m,n} = dim ker(border^m at n) - rank(border^{N-m} into n) for each
/// degree n in the window. Cells with n > hi - (N-m) of a truncated window
/// are flagged unreliable.
std::vector<HomologyCell> amplitude_homology(const GradedNComplex& c, long m);

AmplitudeHomologyReport full_homology(const GradedNComplex& c);

/// Rank-one complex in degrees 0..hi with border [n+1]_q at degree n; a
/// finite window of the (infinite) chain complex of a one-point space.
GradedNComplex build_point_complex(long order, long hi);

/// Rank-one complex in degrees 0..N-2 with border [k+1]_q at degree k; the
/// multiplication-by-[*]_q complex. Complete (not truncated).
GradedNComplex build_scalar_complex(long order);

struct GradedMorphism {
    GradedNComplex source, target;
    long shift = 0;                   // maps degree n to n + shift
    std::vector<Matrix> mats;         // per source degree lo..hi

    /// Matrix at source degree n, shape target.rank(n+shift) x source.rank(n);
    /// zero-shaped outside the source window.
    Matrix at(long n) const {
        if (n >= source.lo && n <= source.hi) return mats[static_cast<std::size_t>(n - source.lo)];
        return Matrix(source.order, static_cast<std::size_t>(target.rank(n + shift)),
                      static_cast<std::size_t>(source.rank(n)));
    }
};

GradedMorphism zero_morphism(const GradedNComplex& src, const GradedNComplex& tgt, long shift);
GradedMorphism identity_morphism(const GradedNComplex& c);

GradedMorphism morphism_add(const GradedMorphism& a, const GradedMorphism& b);
GradedMorphism morphism_sub(const GradedMorphism& a, const GradedMorphism& b);
bool morphism_equal(const GradedMorphism& a, const GradedMorphism& b);
bool morphism_is_zero(const GradedMorphism& f);

/// True iff f has degree shift 0 and every square commutes exactly.
/// Throws if the shift is nonzero.
bool check_chain_map(const GradedMorphism& f);

/// Cycle-representative basis of H_{m,n}: boundary columns plus chosen
/// kernel extensions, with coordinates taken against their concatenation.
struct HomologyBasis {
    Matrix boundary;  // rank(n) x b, independent boundary columns
    Matrix reps;      // rank(n) x h, representatives spanning the quotient
    Matrix combined;  // [boundary | reps]
};

HomologyBasis homology_basis(const GradedNComplex& c, long m, long n);

/// Coordinates of a cycle in the homology classes of the given basis (the
/// boundary components are discarded). Throws if the vector is not a cycle
/// expressible in the basis.
std::vector<CyclotomicRational> homology_coords(const HomologyBasis& hb,
                                                const std::vector<CyclotomicRational>& cycle);

/// The matrices induced on H_{m,n} by a chain map, one per source degree.
/// Rejects non-chain-maps.
std::map<long, Matrix> induced_homology_map(const GradedMorphism& f, long m);

/// The hom-complex differential
///   D(f) = sum_{i=0}^{N-1} q^{i(deg f + 1)} border'^i f border^{N-i-1},
/// lowering the degree shift by N-1. Rejects order mismatch.
GradedMorphism hom_differential(const GradedMorphism& f);

struct HomotopyWitness {
    std::vector<GradedMorphism> maps;  // K_0 .. K_{N-1}, each of shift N-1
};

/// True iff sum_m (border')^m K_m border^{N-m-1} = f - g exactly.
bool check_homotopy(const HomotopyWitness& k, const GradedMorphism& f, const GradedMorphism& g);

}  // namespace qhom
