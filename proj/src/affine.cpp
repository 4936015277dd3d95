#include "qhom/affine.hpp"

#include <stdexcept>

namespace qhom {

bool AffineSimplex::operator<(const AffineSimplex& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    if (vertices.size() != o.vertices.size()) return vertices.size() < o.vertices.size();
    for (std::size_t v = 0; v < vertices.size(); ++v)
        for (std::size_t i = 0; i < vertices[v].size(); ++i) {
            int c = cmp(vertices[v][i], o.vertices[v][i]);
            if (c != 0) return c < 0;
        }
    return false;
}

std::string AffineSimplex::to_string() const {
    std::string out = "<";
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (v) out += "; ";
        for (std::size_t i = 0; i < vertices[v].size(); ++i) {
            if (i) out += ",";
            out += vertices[v][i].get_str();
        }
    }
    out += ">";
    return out;
}

AffineSimplex face(const AffineSimplex& s, long j) {
    if (s.degree() < 1) throw std::invalid_argument("face of a 0-simplex");
    if (j < 0 || j > s.degree()) throw std::invalid_argument("face index out of range");
    AffineSimplex r;
    r.ambient = s.ambient;
    r.vertices = s.vertices;
    r.vertices.erase(r.vertices.begin() + j);
    return r;
}

AffineSimplex constant_simplex(const std::vector<mpq_class>& point, long n) {
    if (n < 0) throw std::invalid_argument("simplex degree must be >= 0");
    AffineSimplex s;
    s.ambient = static_cast<long>(point.size());
    s.vertices.assign(static_cast<std::size_t>(n + 1), point);
    return s;
}

bool AffineChain::operator==(const AffineChain& o) const {
    if (is_zero() && o.is_zero()) return true;  // empty chains agree regardless of bookkeeping degree
    return ambient == o.ambient && degree == o.degree && terms == o.terms;
}

std::string AffineChain::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")" + s.to_string();
    }
    return out;
}

AffineChain chain_of(const AffineSimplex& s, const CyclotomicRational& coeff) {
    AffineChain c(s.ambient, s.degree());
    add_term(c, s, coeff);
    return c;
}

AffineChain chain_of(const AffineSimplex& s, long order) {
    return chain_of(s, CyclotomicRational::one(order));
}

void add_term(AffineChain& c, const AffineSimplex& s, const CyclotomicRational& coeff) {
    if (coeff.is_zero()) return;
    if (s.degree() != c.degree || s.ambient != c.ambient)
        throw std::invalid_argument("simplex does not match the chain's degree/ambient");
    auto it = c.terms.find(s);
    if (it == c.terms.end()) {
        c.terms.emplace(s, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) c.terms.erase(it);
    }
}

AffineChain add(const AffineChain& a, const AffineChain& b) {
    if (a.is_zero()) return b.is_zero() ? a : b;
    if (b.is_zero()) return a;
    if (a.degree != b.degree || a.ambient != b.ambient)
        throw std::invalid_argument("chain degree/ambient mismatch in add");
    AffineChain r = a;
    for (const auto& [s, c] : b.terms) add_term(r, s, c);
    return r;
}

AffineChain scale(const AffineChain& c, const CyclotomicRational& s) {
    AffineChain r(c.ambient, c.degree);
    if (s.is_zero()) return r;
    for (const auto& [sx, cx] : c.terms) add_term(r, sx, cx * s);
    return r;
}

CyclotomicRational coefficient_sum(const AffineChain& c, long order) {
    CyclotomicRational acc(order);
    for (const auto& [s, coeff] : c.terms) acc += coeff;
    return acc;
}

AffineChain affine_border(const AffineChain& c, long order) {
    AffineChain r(c.ambient, c.degree - 1);
    if (c.degree <= 0) return r;
    for (const auto& [s, coeff] : c.terms)
        for (long i = 0; i <= c.degree; ++i)
            add_term(r, face(s, i), coeff * to_rational(CyclotomicInt::q_power(order, i)));
    return r;
}

AffineChain affine_border_power(const AffineChain& c, long order, long k) {
    if (k < 0) throw std::invalid_argument("border power requires k >= 0");
    AffineChain r = c;
    for (long j = 0; j < k; ++j) r = affine_border(r, order);
    return r;
}

AffineChain convex_product(const AffineChain& tau, const AffineChain& sigma) {
    if (!tau.is_zero() && !sigma.is_zero() && tau.ambient != sigma.ambient)
        throw std::invalid_argument("ambient dimension mismatch in convex product");
    AffineChain r(tau.ambient, tau.degree + sigma.degree + 1);
    for (const auto& [ts, tc] : tau.terms)
        for (const auto& [ss, sc] : sigma.terms) {
            AffineSimplex p;
            p.ambient = ts.ambient;
            p.vertices = ts.vertices;
            p.vertices.insert(p.vertices.end(), ss.vertices.begin(), ss.vertices.end());
            add_term(r, p, tc * sc);
        }
    return r;
}

bool leibnitz_check(const AffineChain& tau, const AffineChain& sigma, long order) {
    if (tau.degree < 1 || sigma.degree < 1)
        throw std::invalid_argument("the Leibnitz rule requires both degrees positive");
    AffineChain lhs = affine_border(convex_product(tau, sigma), order);
    AffineChain rhs = add(convex_product(affine_border(tau, order), sigma),
                          scale(convex_product(tau, affine_border(sigma, order)),
                                to_rational(CyclotomicInt::q_power(order, tau.degree + 1))));
    return lhs == rhs;
}

NewtonOperand NewtonOperand::make_zero() { return NewtonOperand{}; }

NewtonOperand NewtonOperand::make_chain(AffineChain c) {
    NewtonOperand o;
    o.kind = Kind::chain;
    o.chain = std::move(c);
    return o;
}

NewtonOperand NewtonOperand::make_scalar(CyclotomicRational s) {
    NewtonOperand o;
    o.kind = Kind::scalar;
    o.scalar = std::move(s);
    return o;
}

NewtonOperand newton_star(const NewtonOperand& a, const NewtonOperand& b) {
    using K = NewtonOperand::Kind;
    if (a.kind == K::zero || b.kind == K::zero) return NewtonOperand::make_zero();
    if (a.kind == K::chain && b.kind == K::chain)
        return NewtonOperand::make_chain(convex_product(a.chain, b.chain));
    if (a.kind == K::scalar && b.kind == K::scalar) return NewtonOperand::make_zero();
    if (a.kind == K::scalar) return NewtonOperand::make_chain(scale(b.chain, a.scalar));
    return NewtonOperand::make_chain(scale(a.chain, b.scalar));
}

NewtonOperand newton_term(const AffineChain& tau, long i, long order) {
    if (i < 0) throw std::invalid_argument("newton_term requires i >= 0");
    const long m = tau.degree;
    if (i <= m) return NewtonOperand::make_chain(affine_border_power(tau, order, i));
    if (i == m + 1)
        return NewtonOperand::make_scalar(to_rational(qfactorial_any(order, m + 1)) *
                                          coefficient_sum(tau, order));
    return NewtonOperand::make_zero();
}

NewtonCheckResult newton_polynomial_check(const AffineChain& tau, const AffineChain& sigma, long k, long order) {
    if (k < 0) throw std::invalid_argument("newton_polynomial_check requires k >= 0");
    const long m = tau.degree;
    NewtonCheckResult res;
    res.lhs = affine_border_power(convex_product(tau, sigma), order, k);
    AffineChain rhs(tau.ambient, tau.degree + sigma.degree + 1 - k);
    for (long i = 0; i <= k; ++i) {
        NewtonOperand prod = newton_star(newton_term(tau, k - i, order), newton_term(sigma, i, order));
        if (prod.kind != NewtonOperand::Kind::chain) continue;
        CyclotomicRational w = to_rational(CyclotomicInt::q_power(order, i * (m + 1 - k + i))) *
                               to_rational(qbinomial_any(order, k, i));
        rhs = add(rhs, scale(prod.chain, w));
    }
    res.rhs = std::move(rhs);
    res.ok = res.lhs == res.rhs;
    return res;
}

bool tail1_check(const AffineChain& tau, long order) {
    const long m = tau.degree;
    AffineChain lhs = affine_border_power(tau, order, m);
    AffineChain rhs(tau.ambient, 0);
    CyclotomicRational fac = to_rational(qfactorial_any(order, m));
    for (const auto& [s, coeff] : tau.terms)
        for (long j = 0; j <= m; ++j) {
            AffineSimplex pt;
            pt.ambient = s.ambient;
            pt.vertices = {s.vertices[static_cast<std::size_t>(m - j)]};
            add_term(rhs, pt, coeff * fac * to_rational(CyclotomicInt::q_power(order, j)));
        }
    return lhs == rhs;
}

bool tail2_check(const AffineChain& tau, const AffineChain& sigma, long order) {
    const long m = tau.degree, n = sigma.degree;
    AffineChain dm = affine_border_power(tau, order, m);
    AffineChain dn = affine_border_power(sigma, order, n);
    AffineChain lhs = affine_border(convex_product(dm, dn), order);
    CyclotomicRational st = coefficient_sum(tau, order), ss = coefficient_sum(sigma, order);
    AffineChain rhs = add(scale(dn, to_rational(qfactorial_any(order, m + 1)) * st),
                          scale(dm, to_rational(CyclotomicInt::q_power(order, 1)) *
                                        to_rational(qfactorial_any(order, n + 1)) * ss));
    return lhs == rhs;
}

bool tail3_check(const AffineChain& tau, const AffineChain& sigma, long k, long order) {
    const long m = tau.degree, n = sigma.degree;
    if (m < 1 || n < 1) throw std::invalid_argument("tail formula #3 requires both degrees positive");
    if (k < 1) throw std::invalid_argument("tail formula #3 is stated for k >= 1");
    AffineChain dm = affine_border_power(tau, order, m);
    AffineChain lhs = affine_border_power(convex_product(dm, sigma), order, k);
    CyclotomicRational st = coefficient_sum(tau, order), ss = coefficient_sum(sigma, order);
    CyclotomicRational facm1 = to_rational(qfactorial_any(order, m + 1));

    AffineChain rhs(tau.ambient, n + 1 - k);
    if (k <= n) {
        rhs = add(scale(affine_border_power(sigma, order, k - 1),
                        facm1 * st * to_rational(qbasic(order, k))),
                  scale(convex_product(dm, affine_border_power(sigma, order, k)),
                        to_rational(CyclotomicInt::q_power(order, k))));
    } else if (k == n + 1) {
        CyclotomicRational facn1 = to_rational(qfactorial_any(order, n + 1));
        rhs = add(scale(affine_border_power(sigma, order, n), facm1 * st * to_rational(qbasic(order, n + 1))),
                  scale(dm, facn1 * ss * to_rational(CyclotomicInt::q_power(order, n + 1))));
    }
    return lhs == rhs;
}

CyclotomicRational augmentation_eps(const AffineChain& c, long order) {
    if (c.degree != 0) throw std::invalid_argument("augmentation is defined on degree-0 chains");
    return coefficient_sum(c, order);
}

CyclotomicRational index_map_eta(const AffineChain& c, long order) {
    if (c.degree < 0 || c.degree > order - 2) return CyclotomicRational(order);
    return coefficient_sum(c, order);
}

std::vector<AffineSimplex> section_phat(long order, long ambient, const std::vector<mpq_class>& basepoint) {
    require_prime_order(order);
    if (static_cast<long>(basepoint.size()) != ambient)
        throw std::invalid_argument("basepoint does not match the ambient dimension");
    std::vector<AffineSimplex> out;
    for (long n = 0; n <= order - 2; ++n) out.push_back(constant_simplex(basepoint, n));
    return out;
}

AffineChain homotopy_K(const AffineChain& sigma, const AffineSimplex& iota, long order) {
    if (iota.degree() != order - 2)
        throw std::invalid_argument("the homotopy operator needs an (N-2)-dimensional simplex");
    if (!sigma.is_zero() && iota.ambient != sigma.ambient)
        throw std::invalid_argument("ambient dimension mismatch in homotopy operator");
    CyclotomicRational unit = to_rational(qfactorial(order, order - 1));
    AffineChain prod = convex_product(chain_of(iota, order), sigma);
    return scale(prod, CyclotomicRational::one(order) / unit);
}

HomotopyCheckResult homotopy_identity_check(const AffineChain& sigma, const AffineSimplex& iota, long order) {
    HomotopyCheckResult res;
    AffineChain total(sigma.ambient, sigma.degree);
    for (long k = 0; k <= order - 1; ++k) {
        AffineChain inner = affine_border_power(sigma, order, order - k - 1);
        AffineChain lifted = homotopy_K(inner, iota, order);
        total = add(total, affine_border_power(lifted, order, k));
    }
    res.sum = std::move(total);
    res.expected = sigma.degree >= order - 1 ? sigma : AffineChain(sigma.ambient, sigma.degree);
    res.ok = res.sum == res.expected;
    return res;
}

ProjectionComparison homotopy_vs_projection(const AffineChain& c, const AffineSimplex& iota, long order,
                                            const std::vector<mpq_class>& basepoint) {
    ProjectionComparison out;
    out.sum = homotopy_identity_check(c, iota, order).sum;
    AffineChain proj(c.ambient, c.degree);
    if (c.degree >= 0 && c.degree <= order - 2) {
        AffineSimplex nu = constant_simplex(basepoint, c.degree);
        proj = chain_of(nu, coefficient_sum(c, order));
    }
    AffineChain id_minus = add(c, scale(proj, -CyclotomicRational::one(order)));
    out.id_minus_projection = std::move(id_minus);
    out.equal = out.sum == out.id_minus_projection;
    return out;
}

CoefficientTable coefficient_table(long order) {
    require_prime_order(order);
    CoefficientTable t;
    t.order = order;
    const long N = order;
    t.alpha.resize(static_cast<std::size_t>(N));
    for (long k = 0; k <= N - 1; ++k)
        for (long i = 0; i <= k; ++i)
            t.alpha[static_cast<std::size_t>(k)].push_back(
                CyclotomicInt::q_power(N, i * (N - 1 - k + i)) * qbinomial(N, k, i));

    t.column_sums.assign(static_cast<std::size_t>(N), CyclotomicInt::zero(N));
    for (long k = 0; k <= N - 1; ++k)
        for (long i = 0; i <= k; ++i)
            t.column_sums[static_cast<std::size_t>(k - i)] += t.alpha[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];

    t.beta.assign(static_cast<std::size_t>(N), CyclotomicInt::zero(N));
    for (long s = 1; s <= N - 1; ++s) {
        CyclotomicInt acc = CyclotomicInt::zero(N);
        for (long i = 0; i <= s; ++i)
            acc += CyclotomicInt::q_power(N, i * s) * qbinomial(N, N - 1 - s + i, i);
        t.beta[static_cast<std::size_t>(s)] = acc;
    }

    t.sums_vanish = true;
    for (long l = 0; l <= N - 2; ++l)
        if (!t.column_sums[static_cast<std::size_t>(l)].is_zero()) t.sums_vanish = false;
    t.top_is_one = t.column_sums[static_cast<std::size_t>(N - 1)].is_one();

    t.beta_matches_columns = true;
    for (long s = 1; s <= N - 1; ++s)
        if (t.beta[static_cast<std::size_t>(s)] != t.column_sums[static_cast<std::size_t>(N - 1 - s)])
            t.beta_matches_columns = false;

    t.recursion_holds = t.beta[1] == qbasic(N, N);
    for (long s = 1; s <= N - 2; ++s) {
        CyclotomicInt lhs = t.beta[static_cast<std::size_t>(s + 1)];
        CyclotomicInt rhs = (CyclotomicInt::one(N) - CyclotomicInt::q_power(N, s)) *
                            t.beta[static_cast<std::size_t>(s)];
        if (lhs != rhs) t.recursion_holds = false;
    }
    return t;
}

}  // namespace qhom
