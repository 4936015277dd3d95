#include "qhom/ncomplex.hpp"

#include <stdexcept>

namespace qhom {

ValidationResult validate_ncomplex(const GradedNComplex& c) {
    ValidationResult res;
    if (c.order < 2 || !is_prime(c.order)) {
        res.status = ValidationResult::Status::shape_error;
        res.detail = "order must be a prime >= 2";
        return res;
    }
    if (c.hi < c.lo - 1) {
        res.status = ValidationResult::Status::shape_error;
        res.detail = "empty window must have hi = lo - 1";
        return res;
    }
    if (c.ranks.size() != static_cast<std::size_t>(c.hi - c.lo + 1)) {
        res.status = ValidationResult::Status::shape_error;
        res.detail = "rank vector length does not match window";
        return res;
    }
    for (long d = c.lo; d <= c.hi; ++d) {
        if (c.rank(d) < 0) {
            res.status = ValidationResult::Status::shape_error;
            res.degree = d;
            res.detail = "negative rank";
            return res;
        }
    }
    if (c.borders.size() != static_cast<std::size_t>(std::max<long>(c.hi - c.lo, 0))) {
        res.status = ValidationResult::Status::shape_error;
        res.detail = "border vector length does not match window";
        return res;
    }
    for (long d = c.lo + 1; d <= c.hi; ++d) {
        const Matrix& b = c.borders[static_cast<std::size_t>(d - c.lo - 1)];
        if (b.rows() != static_cast<std::size_t>(c.rank(d - 1)) ||
            b.cols() != static_cast<std::size_t>(c.rank(d)) || b.order() != c.order) {
            res.status = ValidationResult::Status::shape_error;
            res.degree = d;
            res.detail = "border matrix shape does not match adjacent ranks";
            return res;
        }
    }
    for (long d = c.lo; d <= c.hi; ++d) {
        if (!border_power(c, c.order, d).is_zero()) {
            res.status = ValidationResult::Status::nilpotency_violation;
            res.degree = d;
            res.detail = "N-fold border composition starting at this degree is nonzero";
            return res;
        }
    }
    return res;
}

Matrix border_power(const GradedNComplex& c, long k, long d) {
    if (k < 0) throw std::invalid_argument("border_power requires k >= 0");
    Matrix m = Matrix::identity(c.order, static_cast<std::size_t>(c.rank(d)));
    for (long j = 0; j < k; ++j) m = c.border_at(d - j) * m;
    return m;
}

const HomologyCell& AmplitudeHomologyReport::cell(long m, long n) const {
    for (const auto& c : cells)
        if (c.m == m && c.n == n) return c;
    throw std::out_of_range("no homology cell at the requested (m, n)");
}

std::vector<HomologyCell> amplitude_homology(const GradedNComplex& c, long m) {
    if (m < 1 || m > c.order - 1) throw std::invalid_argument("amplitude must satisfy 1 <= m <= N-1");
    std::vector<HomologyCell> row;
    for (long n = c.lo; n <= c.hi; ++n) {
        Matrix out = border_power(c, m, n);
        Matrix in = border_power(c, c.order - m, n + (c.order - m));
        long nullity = static_cast<long>(out.cols()) - static_cast<long>(rank(out));
        long brank = static_cast<long>(rank(in));
        HomologyCell cell;
        cell.m = m;
        cell.n = n;
        cell.dim = nullity - brank;
        cell.reliable = !(c.truncated_above && n > c.hi - (c.order - m));
        if (cell.dim < 0) throw std::logic_error("negative homology dimension: border^N != 0?");
        row.push_back(cell);
    }
    return row;
}

AmplitudeHomologyReport full_homology(const GradedNComplex& c) {
    AmplitudeHomologyReport rep;
    rep.order = c.order;
    rep.lo = c.lo;
    rep.hi = c.hi;
    for (long m = 1; m <= c.order - 1; ++m) {
        auto row = amplitude_homology(c, m);
        rep.cells.insert(rep.cells.end(), row.begin(), row.end());
    }
    return rep;
}

GradedNComplex build_point_complex(long order, long hi) {
    require_prime_order(order);
    if (hi < 0) throw std::invalid_argument("build_point_complex requires hi >= 0");
    GradedNComplex c;
    c.order = order;
    c.lo = 0;
    c.hi = hi;
    c.truncated_above = true;
    c.ranks.assign(static_cast<std::size_t>(hi + 1), 1);
    for (long n = 1; n <= hi; ++n) {
        Matrix b(order, 1, 1);
        b.at(0, 0) = to_rational(qbasic(order, n + 1));
        c.borders.push_back(std::move(b));
    }
    return c;
}

GradedNComplex build_scalar_complex(long order) {
    require_prime_order(order);
    GradedNComplex c;
    c.order = order;
    c.lo = 0;
    c.hi = order - 2;
    c.truncated_above = false;
    c.ranks.assign(static_cast<std::size_t>(order - 1), 1);
    for (long k = 1; k <= order - 2; ++k) {
        Matrix b(order, 1, 1);
        b.at(0, 0) = to_rational(qbasic(order, k + 1));
        c.borders.push_back(std::move(b));
    }
    return c;
}

GradedMorphism zero_morphism(const GradedNComplex& src, const GradedNComplex& tgt, long shift) {
    GradedMorphism f;
    f.source = src;
    f.target = tgt;
    f.shift = shift;
    for (long n = src.lo; n <= src.hi; ++n)
        f.mats.emplace_back(src.order, static_cast<std::size_t>(tgt.rank(n + shift)),
                            static_cast<std::size_t>(src.rank(n)));
    return f;
}

GradedMorphism identity_morphism(const GradedNComplex& c) {
    GradedMorphism f = zero_morphism(c, c, 0);
    for (long n = c.lo; n <= c.hi; ++n)
        f.mats[static_cast<std::size_t>(n - c.lo)] =
            Matrix::identity(c.order, static_cast<std::size_t>(c.rank(n)));
    return f;
}

namespace {

void require_parallel(const GradedMorphism& a, const GradedMorphism& b) {
    if (!(a.source == b.source) || !(a.target == b.target) || a.shift != b.shift)
        throw std::invalid_argument("morphisms are not parallel");
}

}  // namespace

GradedMorphism morphism_add(const GradedMorphism& a, const GradedMorphism& b) {
    require_parallel(a, b);
    GradedMorphism r = a;
    for (std::size_t i = 0; i < r.mats.size(); ++i) r.mats[i] = r.mats[i] + b.mats[i];
    return r;
}

GradedMorphism morphism_sub(const GradedMorphism& a, const GradedMorphism& b) {
    require_parallel(a, b);
    GradedMorphism r = a;
    for (std::size_t i = 0; i < r.mats.size(); ++i) r.mats[i] = r.mats[i] - b.mats[i];
    return r;
}

bool morphism_equal(const GradedMorphism& a, const GradedMorphism& b) {
    if (!(a.source == b.source) || !(a.target == b.target) || a.shift != b.shift) return false;
    return a.mats == b.mats;
}

bool morphism_is_zero(const GradedMorphism& f) {
    for (const auto& m : f.mats)
        if (!m.is_zero()) return false;
    return true;
}

bool check_chain_map(const GradedMorphism& f) {
    if (f.shift != 0) throw std::invalid_argument("check_chain_map requires a degree-0 morphism");
    if (f.source.order != f.target.order) throw std::invalid_argument("order mismatch between complexes");
    for (long n = f.source.lo; n <= f.source.hi; ++n) {
        Matrix lhs = f.at(n - 1) * f.source.border_at(n);
        Matrix rhs = f.target.border_at(n) * f.at(n);
        if (lhs != rhs) return false;
    }
    return true;
}

HomologyBasis homology_basis(const GradedNComplex& c, long m, long n) {
    HomologyBasis hb;
    Matrix out = border_power(c, m, n);
    Matrix in = border_power(c, c.order - m, n + (c.order - m));
    Matrix cycles = nullspace(out);
    hb.boundary = column_space_basis(in);
    auto ext = extend_column_basis(hb.boundary, cycles);
    hb.reps = Matrix(c.order, cycles.rows(), ext.size());
    for (std::size_t k = 0; k < ext.size(); ++k)
        for (std::size_t i = 0; i < cycles.rows(); ++i) hb.reps.at(i, k) = cycles.at(i, ext[k]);
    hb.combined = hb.boundary.augmented(hb.reps);
    return hb;
}

std::vector<CyclotomicRational> homology_coords(const HomologyBasis& hb,
                                                const std::vector<CyclotomicRational>& cycle) {
    auto sol = solve(hb.combined, cycle);
    if (!sol) throw std::logic_error("vector is not a cycle of the expected amplitude");
    return std::vector<CyclotomicRational>(sol->end() - static_cast<long>(hb.reps.cols()), sol->end());
}

std::map<long, Matrix> induced_homology_map(const GradedMorphism& f, long m) {
    if (!check_chain_map(f)) throw std::invalid_argument("induced_homology_map requires a chain map");
    std::map<long, Matrix> out;
    for (long n = f.source.lo; n <= f.source.hi; ++n) {
        HomologyBasis src = homology_basis(f.source, m, n);
        HomologyBasis tgt = homology_basis(f.target, m, n);
        Matrix mat(f.source.order, tgt.reps.cols(), src.reps.cols());
        for (std::size_t j = 0; j < src.reps.cols(); ++j) {
            std::vector<CyclotomicRational> u(src.reps.rows(), CyclotomicRational(f.source.order));
            for (std::size_t i = 0; i < src.reps.rows(); ++i) u[i] = src.reps.at(i, j);
            auto w = f.at(n).apply(u);
            auto coords = homology_coords(tgt, w);
            mat.set_column(j, coords);
        }
        out.emplace(n, std::move(mat));
    }
    return out;
}

GradedMorphism hom_differential(const GradedMorphism& f) {
    if (f.source.order != f.target.order)
        throw std::invalid_argument("hom_differential requires matching orders");
    const long N = f.source.order;
    const long d = f.shift;
    GradedMorphism r = zero_morphism(f.source, f.target, d - (N - 1));
    for (long n = f.source.lo; n <= f.source.hi; ++n) {
        Matrix acc(f.source.order, static_cast<std::size_t>(f.target.rank(n + d - (N - 1))),
                   static_cast<std::size_t>(f.source.rank(n)));
        for (long i = 0; i <= N - 1; ++i) {
            const long j = N - 1 - i;  // inner border power
            Matrix term = border_power(f.target, i, n - j + d) * f.at(n - j) * border_power(f.source, j, n);
            CyclotomicRational w = to_rational(CyclotomicInt::q_power(N, i * (d + 1)));
            acc = acc + term.scaled(w);
        }
        r.mats[static_cast<std::size_t>(n - f.source.lo)] = std::move(acc);
    }
    return r;
}

bool check_homotopy(const HomotopyWitness& k, const GradedMorphism& f, const GradedMorphism& g) {
    require_parallel(f, g);
    if (f.shift != 0) throw std::invalid_argument("check_homotopy compares degree-0 morphisms");
    const long N = f.source.order;
    if (k.maps.size() != static_cast<std::size_t>(N))
        throw std::invalid_argument("homotopy witness must provide K_0 .. K_{N-1}");
    for (const auto& km : k.maps) {
        if (!(km.source == f.source) || !(km.target == f.target))
            throw std::invalid_argument("homotopy component connects the wrong complexes");
        if (km.shift != N - 1)
            throw std::invalid_argument("homotopy component must raise degree by N-1");
    }
    for (long n = f.source.lo; n <= f.source.hi; ++n) {
        Matrix acc(N, static_cast<std::size_t>(f.target.rank(n)), static_cast<std::size_t>(f.source.rank(n)));
        for (long m = 0; m <= N - 1; ++m) {
            const long j = N - m - 1;
            Matrix term =
                border_power(f.target, m, n - j + (N - 1)) * k.maps[static_cast<std::size_t>(m)].at(n - j) *
                border_power(f.source, j, n);
            acc = acc + term;
        }
        if (acc != f.at(n) - g.at(n)) return false;
    }
    return true;
}

}  // namespace qhom
