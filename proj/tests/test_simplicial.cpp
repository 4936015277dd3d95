#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhom/random.hpp"
#include "qhom/simplicial.hpp"

using namespace qhom;

namespace {

// Test-local classical homology oracle: signed incidence matrices over Q and
// a self-contained elimination, independent of the library's linear algebra.
using RatMat = std::vector<std::vector<mpq_class>>;

RatMat signed_incidence(const SemiSimplicialSet& x, long n) {
    RatMat m(static_cast<std::size_t>(x.cell_count(n - 1)),
             std::vector<mpq_class>(static_cast<std::size_t>(x.cell_count(n)), mpq_class(0)));
    for (long c = 0; c < x.cell_count(n); ++c)
        for (long i = 0; i <= n; ++i)
            m[static_cast<std::size_t>(x.face(n, i, c))][static_cast<std::size_t>(c)] +=
                (i % 2 == 0) ? mpq_class(1) : mpq_class(-1);
    return m;
}

std::size_t rat_rank(RatMat m) {
    std::size_t rank = 0;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            mpq_class f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

long classical_betti(const SemiSimplicialSet& x, long k) {
    long cells = x.cell_count(k);
    long rank_out = k >= 1 ? static_cast<long>(rat_rank(signed_incidence(x, k))) : 0;
    long rank_in = k + 1 <= x.top_dim() ? static_cast<long>(rat_rank(signed_incidence(x, k + 1))) : 0;
    return cells - rank_out - rank_in;
}

}  // namespace

TEST_CASE("face identity validation") {
    CHECK(static_cast<bool>(validate_simplicial(delta_model(2))));
    CHECK(static_cast<bool>(validate_simplicial(delta_model(4))));
    CHECK(static_cast<bool>(validate_simplicial(boundary_delta_model(3))));
    CHECK(static_cast<bool>(validate_simplicial(point_model(6))));

    SemiSimplicialSet broken = delta_model(2);
    std::swap(broken.faces[2][0][0], broken.faces[2][0][1]);
    auto v = validate_simplicial(broken);
    CHECK_FALSE(static_cast<bool>(v));
    CHECK_FALSE(v.structural);
    CHECK(v.dim == 2);
    CHECK(v.cell == 0);

    SemiSimplicialSet missing = delta_model(2);
    missing.faces[2].clear();
    auto v2 = validate_simplicial(missing);
    CHECK_FALSE(static_cast<bool>(v2));
    CHECK(v2.structural);
}

TEST_CASE("q-deformed border on stock models") {
    SemiSimplicialSet pt = point_model(5);
    for (long order : {3L, 5L}) {
        for (long n = 1; n <= 5; ++n) {
            QChain c;
            c.degree = n;
            chain_add_term(c, 0, CyclotomicRational::one(order));
            QChain b = chain_border(pt, order, c);
            QChain expect;
            expect.degree = n - 1;
            chain_add_term(expect, 0, to_rational(qbasic(order, n + 1)));
            CHECK(b == expect);
        }
    }

    // Interval: border of the edge is v1 + q v0.
    SemiSimplicialSet d1 = delta_model(1);
    long v0 = d1.cell_index(0, "0"), v1 = d1.cell_index(0, "1");
    QChain e;
    e.degree = 1;
    chain_add_term(e, 0, CyclotomicRational::one(3));
    QChain b = chain_border(d1, 3, e);
    // the edge "0.1" deletes vertex 0 under d_0 (giving "1") and vertex 1
    // under d_1 (giving "0")
    QChain expect;
    expect.degree = 0;
    chain_add_term(expect, v1, CyclotomicRational::one(3));
    chain_add_term(expect, v0, to_rational(CyclotomicInt::q_power(3, 1)));
    CHECK(b == expect);

    QChain vertex;
    vertex.degree = 0;
    chain_add_term(vertex, 0, CyclotomicRational::one(3));
    CHECK(chain_border(d1, 3, vertex).is_zero());
}

TEST_CASE("chain border is linear") {
    Rng rng(31);
    SemiSimplicialSet x = delta_model(3);
    for (int t = 0; t < 50; ++t) {
        long deg = rng.range(1, 3);
        QChain c1 = random_qchain(rng, x, 5, deg, 3, 4);
        QChain c2 = random_qchain(rng, x, 5, deg, 3, 4);
        CyclotomicRational a = random_cyclotomic_rational(rng, 5, 4);
        QChain lhs = chain_border(x, 5, chain_add(chain_scale(c1, a), c2));
        QChain rhs = chain_add(chain_scale(chain_border(x, 5, c1), a), chain_border(x, 5, c2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("to_ncomplex reproduces the point complex and validates everywhere") {
    CHECK(to_ncomplex(point_model(9), 5, 9) == build_point_complex(5, 9));
    for (long order : {2L, 3L, 5L, 7L}) {
        CHECK(static_cast<bool>(validate_ncomplex(to_ncomplex(point_model(2 * order), order, 2 * order))));
        for (long k = 1; k <= 4; ++k)
            CHECK(static_cast<bool>(validate_ncomplex(to_ncomplex(delta_model(k), order, k))));
        for (long k = 1; k <= 4; ++k)
            CHECK(static_cast<bool>(
                validate_ncomplex(to_ncomplex(boundary_delta_model(k), order, std::max<long>(k - 1, 0)))));
    }

    SemiSimplicialSet broken = delta_model(2);
    std::swap(broken.faces[2][0][0], broken.faces[2][0][1]);
    CHECK_THROWS_AS(to_ncomplex(broken, 3, 2), std::invalid_argument);
}

TEST_CASE("N=2 amplitude homology equals classical simplicial homology") {
    struct Case {
        SemiSimplicialSet model;
        long top;
    };
    std::vector<Case> cases;
    cases.push_back({delta_model(1), 1});
    cases.push_back({delta_model(2), 2});
    cases.push_back({boundary_delta_model(2), 1});
    cases.push_back({boundary_delta_model(3), 2});
    for (auto& [model, top] : cases) {
        GradedNComplex c = to_ncomplex(model, 2, top);
        auto row = amplitude_homology(c, 1);
        for (long n = 0; n <= top; ++n)
            CHECK(row[static_cast<std::size_t>(n)].dim == classical_betti(model, n));
    }
    // Interval: dim 1 at degree 0 only; circle: dim 1 at degrees 0 and 1.
    CHECK(classical_betti(delta_model(1), 0) == 1);
    CHECK(classical_betti(delta_model(1), 1) == 0);
    CHECK(classical_betti(boundary_delta_model(2), 1) == 1);
}

TEST_CASE("iteration rule") {
    SemiSimplicialSet d2 = delta_model(2);
    Rng rng(17);
    QChain c = random_qchain(rng, d2, 5, 2, 2, 5);
    CHECK(iteration_rule_check(d2, 5, c, 0));
    CHECK(iteration_rule_check(d2, 5, c, 2));
    CHECK(iteration_rule_check(d2, 5, c, 5));  // both sides vanish at k = N

    for (long order : {3L, 5L, 7L}) {
        SemiSimplicialSet x = delta_model(3);
        for (int t = 0; t < 20; ++t) {
            QChain chain = random_qchain(rng, x, order, rng.range(0, 3), 3, 4);
            for (long k = 0; k <= std::min<long>(4, order); ++k)
                CHECK(iteration_rule_check(x, order, chain, k));
        }
    }
    CHECK_THROWS_AS(iteration_rule_check(d2, 5, c, 6), std::invalid_argument);
}
