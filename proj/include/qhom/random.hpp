/**
 * Seeded generator for the randomized suites. The engine is std::mt19937_64
 * (bit-exact across platforms by the standard) and bounded draws use plain
 * modulo mapping, so a seed fully determines every case and reports are
 * byte-reproducible.
 */

#pragma once

#include "qhom/affine.hpp"
#include "qhom/linalg.hpp"
#include "qhom/ncomplex.hpp"
#include "qhom/simplicial.hpp"

#include <cstdint>
#include <random>

namespace qhom {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform-ish value in [0, n); n >= 1.
    long below(long n) { return static_cast<long>(eng_() % static_cast<std::uint64_t>(n)); }

    /// Value in [lo, hi] inclusive.
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }

    /// Nonzero value in [-bound, bound].
    long nonzero(long bound) {
        long v = range(1, bound);
        return below(2) ? v : -v;
    }

    mpq_class rational(long num_bound, long den_bound) {
        mpq_class v(range(-num_bound, num_bound), range(1, den_bound));
        v.canonicalize();
        return v;
    }

private:
    std::mt19937_64 eng_;
};

inline CyclotomicInt random_cyclotomic_int(Rng& rng, long order, long bound) {
    std::vector<mpz_class> c;
    for (long i = 0; i < order - 1; ++i) c.emplace_back(rng.range(-bound, bound));
    return CyclotomicInt(order, std::move(c));
}

inline CyclotomicRational random_cyclotomic_rational(Rng& rng, long order, long bound) {
    std::vector<mpq_class> c;
    for (long i = 0; i < order - 1; ++i) c.push_back(rng.rational(bound, 3));
    return CyclotomicRational(order, std::move(c));
}

inline AffineSimplex random_affine_simplex(Rng& rng, long ambient, long degree, long coord_bound) {
    AffineSimplex s;
    s.ambient = ambient;
    for (long v = 0; v <= degree; ++v) {
        std::vector<mpq_class> p;
        for (long i = 0; i < ambient; ++i) p.push_back(rng.rational(coord_bound, 3));
        s.vertices.push_back(std::move(p));
    }
    return s;
}

inline AffineChain random_affine_chain(Rng& rng, long order, long ambient, long degree, long max_terms,
                                       long coeff_bound) {
    AffineChain c(ambient, degree);
    long terms = rng.range(1, max_terms);
    for (long t = 0; t < terms; ++t) {
        CyclotomicRational coeff = random_cyclotomic_rational(rng, order, coeff_bound);
        if (coeff.is_zero()) coeff = CyclotomicRational::one(order);
        add_term(c, random_affine_simplex(rng, ambient, degree, 4), coeff);
    }
    return c;
}

inline QChain random_qchain(Rng& rng, const SemiSimplicialSet& x, long order, long degree, long max_terms,
                            long coeff_bound) {
    QChain c;
    c.degree = degree;
    long terms = rng.range(1, max_terms);
    for (long t = 0; t < terms; ++t) {
        CyclotomicRational coeff = random_cyclotomic_rational(rng, order, coeff_bound);
        if (coeff.is_zero()) coeff = CyclotomicRational::one(order);
        chain_add_term(c, rng.below(x.cell_count(degree)), coeff);
    }
    return c;
}

inline Matrix random_matrix(Rng& rng, long order, std::size_t rows, std::size_t cols, long bound) {
    Matrix m(order, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = to_rational(random_cyclotomic_int(rng, order, bound));
    return m;
}

inline GradedMorphism random_morphism(Rng& rng, const GradedNComplex& src, const GradedNComplex& tgt, long shift,
                                      long bound) {
    GradedMorphism f = zero_morphism(src, tgt, shift);
    for (long n = src.lo; n <= src.hi; ++n)
        f.mats[static_cast<std::size_t>(n - src.lo)] =
            random_matrix(rng, src.order, static_cast<std::size_t>(tgt.rank(n + shift)),
                          static_cast<std::size_t>(src.rank(n)), bound);
    return f;
}

}  // namespace qhom
