#include "qhom/pairs.hpp"

#include <stdexcept>

namespace qhom {

CellSubset empty_subset(const SemiSimplicialSet& x) {
    CellSubset s(x.cells.size());
    for (long n = 0; n <= x.top_dim(); ++n)
        s[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(x.cell_count(n)), false);
    return s;
}

CellSubset subset_from_ids(const SemiSimplicialSet& x, const std::vector<std::string>& ids) {
    CellSubset s = empty_subset(x);
    for (const auto& id : ids) {
        bool found = false;
        for (long n = 0; n <= x.top_dim(); ++n) {
            long idx = x.cell_index(n, id);
            if (idx >= 0) {
                s[static_cast<std::size_t>(n)][static_cast<std::size_t>(idx)] = true;
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("subcomplex cell not found: " + id);
    }
    if (!subset_face_closed(x, s)) throw std::invalid_argument("subcomplex is not closed under faces");
    return s;
}

bool subset_face_closed(const SemiSimplicialSet& x, const CellSubset& a) {
    for (long n = 1; n <= x.top_dim(); ++n)
        for (long c = 0; c < x.cell_count(n); ++c) {
            if (!a[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)]) continue;
            for (long i = 0; i <= n; ++i)
                if (!a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(x.face(n, i, c))]) return false;
        }
    return true;
}

bool subset_contained(const CellSubset& b, const CellSubset& a) {
    for (std::size_t n = 0; n < b.size(); ++n)
        for (std::size_t c = 0; c < b[n].size(); ++c)
            if (b[n][c] && !a[n][c]) return false;
    return true;
}

SimplicialPair make_pair(const SemiSimplicialSet& x, const std::vector<std::string>& sub_ids) {
    auto v = validate_simplicial(x);
    if (!v) throw std::invalid_argument("invalid semi-simplicial set: " + v.detail);
    SimplicialPair p;
    p.space = x;
    p.sub = subset_from_ids(x, sub_ids);
    return p;
}

namespace {

// Basis of C(X, omit) in degree n: the X cell indices not in `omit`.
std::vector<long> quotient_basis(const SemiSimplicialSet& x, const CellSubset& omit, long n) {
    std::vector<long> basis;
    for (long c = 0; c < x.cell_count(n); ++c)
        if (n > x.top_dim() || !omit[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)]) basis.push_back(c);
    return basis;
}

// keep[n][xcell] = basis position, or -1 when projected away / absent.
std::vector<std::vector<long>> position_table(const SemiSimplicialSet& x, const std::vector<std::vector<long>>& basis,
                                              long hi) {
    std::vector<std::vector<long>> pos(static_cast<std::size_t>(hi + 1));
    for (long n = 0; n <= hi; ++n) {
        pos[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(x.cell_count(n)), -1);
        for (std::size_t k = 0; k < basis[static_cast<std::size_t>(n)].size(); ++k)
            pos[static_cast<std::size_t>(n)][static_cast<std::size_t>(basis[static_cast<std::size_t>(n)][k])] =
                static_cast<long>(k);
    }
    return pos;
}

GradedNComplex quotient_complex(const SemiSimplicialSet& x, const CellSubset& omit, long order, long hi,
                                std::vector<std::vector<long>>& basis_out) {
    basis_out.clear();
    for (long n = 0; n <= hi; ++n) basis_out.push_back(quotient_basis(x, omit, n));
    auto pos = position_table(x, basis_out, hi);

    GradedNComplex c;
    c.order = order;
    c.lo = 0;
    c.hi = hi;
    c.truncated_above = x.top_dim() > hi;
    for (long n = 0; n <= hi; ++n)
        c.ranks.push_back(static_cast<long>(basis_out[static_cast<std::size_t>(n)].size()));
    for (long n = 1; n <= hi; ++n) {
        Matrix b(order, static_cast<std::size_t>(c.rank(n - 1)), static_cast<std::size_t>(c.rank(n)));
        const auto& basis_n = basis_out[static_cast<std::size_t>(n)];
        for (std::size_t col = 0; col < basis_n.size(); ++col) {
            long cell = basis_n[col];
            if (n > x.top_dim()) continue;
            for (long i = 0; i <= n; ++i) {
                long f = x.face(n, i, cell);
                long row = pos[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(f)];
                if (row < 0) continue;  // lands in the omitted subcomplex
                b.at(static_cast<std::size_t>(row), col) += to_rational(CyclotomicInt::q_power(order, i));
            }
        }
        c.borders.push_back(std::move(b));
    }
    return c;
}

}  // namespace

TripleSequence::TripleSequence(const SemiSimplicialSet& x, CellSubset a, CellSubset b, long order, long hi)
    : order_(order), hi_(hi), x_(x), a_(std::move(a)), b_(std::move(b)) {
    require_prime_order(order);
    auto v = validate_simplicial(x_);
    if (!v) throw std::invalid_argument("invalid semi-simplicial set: " + v.detail);
    if (!subset_face_closed(x_, a_) || !subset_face_closed(x_, b_))
        throw std::invalid_argument("subsets of a triple must be face-closed");
    if (!subset_contained(b_, a_)) throw std::invalid_argument("triple requires B contained in A");

    // C(A, B) is the quotient complex on cells of A minus B.
    CellSubset omit_for_sub = empty_subset(x_);
    for (long n = 0; n <= x_.top_dim(); ++n)
        for (long c = 0; c < x_.cell_count(n); ++c) {
            bool in_a = a_[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)];
            bool in_b = b_[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)];
            omit_for_sub[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)] = !(in_a && !in_b);
        }
    // The border of an (A setminus B)-cell stays in A, so this quotient basis
    // carries the honest complex of the pair (A, B).
    sub_ = quotient_complex(x_, omit_for_sub, order_, hi_, basis_sub_);
    total_ = quotient_complex(x_, b_, order_, hi_, basis_total_);
    rel_ = quotient_complex(x_, a_, order_, hi_, basis_rel_);

    auto pos_total = position_table(x_, basis_total_, hi_);
    auto pos_rel = position_table(x_, basis_rel_, hi_);

    incl_ = zero_morphism(sub_, total_, 0);
    for (long n = 0; n <= hi_; ++n) {
        Matrix m(order_, static_cast<std::size_t>(total_.rank(n)), static_cast<std::size_t>(sub_.rank(n)));
        for (std::size_t j = 0; j < basis_sub_[static_cast<std::size_t>(n)].size(); ++j) {
            long xcell = basis_sub_[static_cast<std::size_t>(n)][j];
            long row = pos_total[static_cast<std::size_t>(n)][static_cast<std::size_t>(xcell)];
            m.at(static_cast<std::size_t>(row), j) = CyclotomicRational::one(order_);
        }
        incl_.mats[static_cast<std::size_t>(n)] = std::move(m);
    }

    proj_ = zero_morphism(total_, rel_, 0);
    for (long n = 0; n <= hi_; ++n) {
        Matrix m(order_, static_cast<std::size_t>(rel_.rank(n)), static_cast<std::size_t>(total_.rank(n)));
        for (std::size_t j = 0; j < basis_total_[static_cast<std::size_t>(n)].size(); ++j) {
            long xcell = basis_total_[static_cast<std::size_t>(n)][j];
            long row = pos_rel[static_cast<std::size_t>(n)][static_cast<std::size_t>(xcell)];
            if (row >= 0) m.at(static_cast<std::size_t>(row), j) = CyclotomicRational::one(order_);
        }
        proj_.mats[static_cast<std::size_t>(n)] = std::move(m);
    }
}

std::vector<CyclotomicRational> TripleSequence::connecting_value(
    long m, long n, const std::vector<CyclotomicRational>& rel_cycle) const {
    if (rel_cycle.size() != static_cast<std::size_t>(rel_.rank(n)))
        throw std::invalid_argument("relative cycle has the wrong length");
    // Lift to C(X, B): relative basis cells are total basis cells.
    auto pos_total = position_table(x_, basis_total_, hi_);
    std::vector<CyclotomicRational> lifted(static_cast<std::size_t>(total_.rank(n)), CyclotomicRational(order_));
    for (std::size_t j = 0; j < rel_cycle.size(); ++j) {
        long xcell = basis_rel_[static_cast<std::size_t>(n)][j];
        lifted[static_cast<std::size_t>(pos_total[static_cast<std::size_t>(n)][static_cast<std::size_t>(xcell)])] =
            rel_cycle[j];
    }
    auto w = border_power(total_, m, n).apply(lifted);
    // w lives in degree n-m and must be supported on A setminus B.
    auto pos_sub = position_table(x_, basis_sub_, hi_);
    std::vector<CyclotomicRational> restricted(static_cast<std::size_t>(sub_.rank(n - m)),
                                               CyclotomicRational(order_));
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j].is_zero()) continue;
        long xcell = basis_total_[static_cast<std::size_t>(n - m)][j];
        long row = pos_sub[static_cast<std::size_t>(n - m)][static_cast<std::size_t>(xcell)];
        if (row < 0) throw std::logic_error("connecting chase left the subcomplex");
        restricted[static_cast<std::size_t>(row)] = w[j];
    }
    auto hb = homology_basis(sub_, order_ - m, n - m);
    return homology_coords(hb, restricted);
}

Matrix TripleSequence::connecting(long m, long n) const {
    auto hb_rel = homology_basis(rel_, m, n);
    auto hb_sub = homology_basis(sub_, order_ - m, n - m);
    Matrix out(order_, hb_sub.reps.cols(), hb_rel.reps.cols());
    for (std::size_t j = 0; j < hb_rel.reps.cols(); ++j) {
        std::vector<CyclotomicRational> z(hb_rel.reps.rows(), CyclotomicRational(order_));
        for (std::size_t i = 0; i < hb_rel.reps.rows(); ++i) z[i] = hb_rel.reps.at(i, j);
        out.set_column(j, connecting_value(m, n, z));
    }
    return out;
}

GradedNComplex relative_complex(const SimplicialPair& p, long order, long hi) {
    if (!subset_face_closed(p.space, p.sub))
        throw std::invalid_argument("subcomplex is not closed under faces");
    std::vector<std::vector<long>> basis;
    return quotient_complex(p.space, p.sub, order, hi, basis);
}

Matrix connecting_morphism(const SimplicialPair& p, long order, long m, long n) {
    TripleSequence t(p.space, p.sub, empty_subset(p.space), order, std::max<long>(p.space.top_dim(), n));
    return t.connecting(m, n);
}

namespace {

bool spaces_equal(const Matrix& gens, const Matrix& basis) {
    // col(gens) = col(basis), checked as dimension + containment.
    return rank(gens) == rank(basis) && columns_contained(gens, basis);
}

}  // namespace

ExactnessReport exactness_audit(const TripleSequence& t, long lo, long hi) {
    ExactnessReport report;
    const long N = t.order();
    for (long m = 1; m <= N - 1; ++m) {
        auto incl_maps = induced_homology_map(t.inclusion(), m);
        auto proj_maps = induced_homology_map(t.projection(), m);
        auto incl_next = induced_homology_map(t.inclusion(), N - m);
        for (long n = lo; n <= hi; ++n) {
            bool unreliable = (t.total().truncated_above && n > t.total().hi - (N - m)) ||
                              (t.rel().truncated_above && n > t.rel().hi - (N - m));
            if (unreliable) {
                report.excluded.push_back("m=" + std::to_string(m) + " n=" + std::to_string(n));
                continue;
            }

            // Junction at H_{m,n}(X,B): im(incl) = ker(proj).
            {
                JunctionResult j{m, n, 0, false, ""};
                Matrix im = incl_maps.at(n);
                Matrix ker = nullspace(proj_maps.at(n));
                j.pass = spaces_equal(column_space_basis(im), ker);
                if (!j.pass) j.detail = "im(inclusion) != ker(projection)";
                report.junctions.push_back(j);
            }
            // Junction at H_{m,n}(X,A): im(proj) = ker(connecting).
            {
                JunctionResult j{m, n, 1, false, ""};
                Matrix im = proj_maps.at(n);
                Matrix ker = nullspace(t.connecting(m, n));
                j.pass = spaces_equal(column_space_basis(im), ker);
                if (!j.pass) j.detail = "im(projection) != ker(connecting)";
                report.junctions.push_back(j);
            }
            // Junction at H_{N-m,n-m}(A,B): im(connecting) = ker(inclusion).
            if (n - m >= lo) {
                JunctionResult j{m, n, 2, false, ""};
                Matrix im = t.connecting(m, n);
                Matrix ker = nullspace(incl_next.at(n - m));
                j.pass = spaces_equal(column_space_basis(im), ker);
                if (!j.pass) j.detail = "im(connecting) != ker(inclusion)";
                report.junctions.push_back(j);
            }
        }
    }
    for (const auto& j : report.junctions)
        if (!j.pass) report.all_pass = false;
    return report;
}

ExactnessReport exactness_audit(const SimplicialPair& p, long order, long lo, long hi) {
    TripleSequence t(p.space, p.sub, empty_subset(p.space), order, hi);
    return exactness_audit(t, lo, hi);
}

ReducedHomologyReport reduced_homology(const SemiSimplicialSet& x, long order, long hi) {
    require_prime_order(order);
    if (x.cell_count(0) == 0) throw std::invalid_argument("reduced homology needs a nonempty model");
    GradedNComplex cx = to_ncomplex(x, order, hi);
    GradedNComplex point = build_point_complex(order, hi + order);

    GradedMorphism gamma = zero_morphism(cx, point, 0);
    for (long n = cx.lo; n <= cx.hi; ++n) {
        Matrix m(order, 1, static_cast<std::size_t>(cx.rank(n)));
        for (std::size_t j = 0; j < static_cast<std::size_t>(cx.rank(n)); ++j)
            m.at(0, j) = CyclotomicRational::one(order);
        gamma.mats[static_cast<std::size_t>(n - cx.lo)] = std::move(m);
    }

    ReducedHomologyReport rep;
    rep.order = order;
    rep.point_pattern_identity = true;
    rep.shifted_pattern_identity = true;
    for (long m = 1; m <= order - 1; ++m) {
        auto induced = induced_homology_map(gamma, m);
        auto full = amplitude_homology(cx, m);
        for (long n = cx.lo; n <= cx.hi; ++n) {
            const Matrix& mat = induced.at(n);
            long reduced_dim = static_cast<long>(mat.cols()) - static_cast<long>(rank(mat));
            HomologyCell cell;
            cell.m = m;
            cell.n = n;
            cell.dim = reduced_dim;
            cell.reliable = full[static_cast<std::size_t>(n - cx.lo)].reliable;
            rep.cells.push_back(cell);
            long full_dim = full[static_cast<std::size_t>(n - cx.lo)].dim;
            long point_ind = (n == m - 1 && n >= 0 && n <= order - 2) ? 1 : 0;
            long shifted_ind = (n == m && n >= 1 && n <= order - 2) ? 1 : 0;
            if (cell.reliable) {
                if (full_dim != reduced_dim + point_ind) rep.point_pattern_identity = false;
                if (full_dim != reduced_dim + shifted_ind) rep.shifted_pattern_identity = false;
            }
        }
    }
    return rep;
}

}  // namespace qhom
