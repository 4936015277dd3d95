#include "qhom/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qhom {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long p = 3; p <= n / p; p += 2)
        if (n % p == 0) return false;
    return true;
}

void require_prime_order(long n) {
    if (!is_prime(n)) throw std::invalid_argument("cyclotomic order must be a prime >= 2");
}

template <>
void CyclotomicElem<mpz_class>::canonicalize() {}

template <>
void CyclotomicElem<mpq_class>::canonicalize() {
    for (auto& c : c_) c.canonicalize();
}

namespace {

template <typename Coeff>
std::string coeff_str(const Coeff& c) {
    return c.get_str();
}

template <typename Coeff>
std::string render_list(const std::vector<Coeff>& cs) {
    std::string out = "[";
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ", ";
        out += coeff_str(cs[i]);
    }
    out += "]";
    return out;
}

template <typename Coeff>
std::string render_pretty(const std::vector<Coeff>& cs) {
    std::string out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        Coeff a = cs[i];
        bool neg = a < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Coeff mag = neg ? Coeff(-a) : a;
        std::string m = coeff_str(mag);
        if (i == 0) {
            out += m;
        } else {
            if (mag != 1) out += m + "*";
            out += "q";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> split_list(const std::string& text) {
    auto l = text.find('[');
    auto r = text.rfind(']');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw std::invalid_argument("malformed coefficient list: " + text);
    std::vector<std::string> parts;
    std::string body = text.substr(l + 1, r - l - 1);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' ' || c == '\t'; }),
                   item.end());
        parts.push_back(item);
    }
    if (parts.size() == 1 && parts[0].empty()) parts.clear();
    return parts;
}

}  // namespace

template <>
std::string CyclotomicElem<mpz_class>::to_string() const {
    return render_list(c_);
}

template <>
std::string CyclotomicElem<mpq_class>::to_string() const {
    return render_list(c_);
}

template <>
std::string CyclotomicElem<mpz_class>::pretty() const {
    return render_pretty(c_);
}

template <>
std::string CyclotomicElem<mpq_class>::pretty() const {
    return render_pretty(c_);
}

CyclotomicRational to_rational(const CyclotomicInt& x) {
    std::vector<mpq_class> cs;
    cs.reserve(x.coeffs().size());
    for (const auto& c : x.coeffs()) cs.emplace_back(c);
    return CyclotomicRational(x.order(), std::move(cs));
}

std::optional<CyclotomicInt> to_integral(const CyclotomicRational& x) {
    std::vector<mpz_class> cs;
    cs.reserve(x.coeffs().size());
    for (const auto& c : x.coeffs()) {
        if (c.get_den() != 1) return std::nullopt;
        cs.push_back(c.get_num());
    }
    return CyclotomicInt(x.order(), std::move(cs));
}

namespace {

// Dense polynomial over Q, lowest index = constant term.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_scale(const QPoly& p, const mpq_class& s) {
    QPoly r = p;
    for (auto& c : r) c *= s;
    trim(r);
    return r;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), mpq_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Division with remainder; returns {quotient, remainder}.
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
    QPoly q;
    trim(a);
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

}  // namespace

std::optional<CyclotomicRational> try_invert(const CyclotomicRational& x) {
    if (x.is_zero()) return std::nullopt;
    const long n = x.order();
    QPoly f(x.coeffs().begin(), x.coeffs().end());
    trim(f);
    QPoly phi(static_cast<std::size_t>(n), mpq_class(1));  // 1 + x + ... + x^{N-1}

    // Extended Euclid: maintain r = s*f mod phi. phi is irreducible over Q,
    // so the loop terminates with a nonzero constant.
    QPoly r0 = phi, r1 = f;
    QPoly s0 = {}, s1 = {mpq_class(1)};
    while (!(r1.size() <= 1)) {
        auto [q, r2] = poly_divmod(r0, r1);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) return std::nullopt;  // x was a multiple of phi, i.e. zero
    QPoly inv = poly_scale(s1, mpq_class(1) / r1[0]);
    auto [q, rem] = poly_divmod(inv, phi);
    (void)q;
    std::vector<mpq_class> cs(static_cast<std::size_t>(2 * n - 2), mpq_class(0));
    for (std::size_t i = 0; i < rem.size(); ++i) cs[i] = rem[i];
    return CyclotomicRational::reduce(n, cs);
}

CyclotomicRational operator/(const CyclotomicRational& a, const CyclotomicRational& b) {
    auto inv = try_invert(b);
    if (!inv) throw std::invalid_argument("division by zero in Q(q)");
    return a * *inv;
}

CyclotomicRational parse_rational(long order, const std::string& text) {
    auto parts = split_list(text);
    if (parts.size() != static_cast<std::size_t>(order - 1))
        throw std::invalid_argument("coefficient list has wrong length for order " + std::to_string(order) +
                                    ": " + text);
    std::vector<mpq_class> cs;
    cs.reserve(parts.size());
    for (const auto& p : parts) {
        mpq_class v(p);
        v.canonicalize();
        cs.push_back(v);
    }
    return CyclotomicRational(order, std::move(cs));
}

CyclotomicInt parse_int(long order, const std::string& text) {
    auto r = parse_rational(order, text);
    auto z = to_integral(r);
    if (!z) throw std::invalid_argument("expected integer coefficients: " + text);
    return *z;
}

CyclotomicInt qbasic(long order, long k) {
    require_prime_order(order);
    if (k < 0) throw std::invalid_argument("qbasic requires k >= 0");
    std::vector<mpz_class> raw(static_cast<std::size_t>(std::max<long>(k, 1)), mpz_class(0));
    for (long i = 0; i < k; ++i) raw[static_cast<std::size_t>(i)] = 1;
    return CyclotomicInt::reduce(order, raw);
}

CyclotomicInt qfactorial(long order, long k) {
    require_prime_order(order);
    if (k < 0 || k > order - 1)
        throw std::invalid_argument("qfactorial requires 0 <= k <= N-1");
    CyclotomicInt acc = CyclotomicInt::one(order);
    for (long i = 1; i <= k; ++i) acc *= qbasic(order, i);
    return acc;
}

CyclotomicInt qbinomial(long order, long k, long l) {
    require_prime_order(order);
    if (l < 0 || k < l || k > order - 1)
        throw std::invalid_argument("qbinomial requires 0 <= l <= k <= N-1");
    // [n choose j] = [n-1 choose j-1] + q^j [n-1 choose j]
    std::vector<std::vector<CyclotomicInt>> row(static_cast<std::size_t>(k + 1));
    for (long n = 0; n <= k; ++n) {
        row[n].assign(static_cast<std::size_t>(n + 1), CyclotomicInt::zero(order));
        row[n][0] = CyclotomicInt::one(order);
        row[n][static_cast<std::size_t>(n)] = CyclotomicInt::one(order);
        for (long j = 1; j < n; ++j)
            row[n][static_cast<std::size_t>(j)] =
                row[n - 1][static_cast<std::size_t>(j - 1)] +
                CyclotomicInt::q_power(order, j) * row[n - 1][static_cast<std::size_t>(j)];
    }
    return row[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
}

CyclotomicInt qbinomial_any(long order, long k, long l) {
    require_prime_order(order);
    if (l < 0 || k < l) throw std::invalid_argument("qbinomial_any requires 0 <= l <= k");
    std::vector<CyclotomicInt> prev, cur;
    for (long n = 0; n <= k; ++n) {
        cur.assign(static_cast<std::size_t>(n + 1), CyclotomicInt::zero(order));
        cur[0] = CyclotomicInt::one(order);
        cur[static_cast<std::size_t>(n)] = CyclotomicInt::one(order);
        for (long j = 1; j < n; ++j)
            cur[static_cast<std::size_t>(j)] =
                prev[static_cast<std::size_t>(j - 1)] +
                CyclotomicInt::q_power(order, j) * prev[static_cast<std::size_t>(j)];
        prev = cur;
    }
    return cur[static_cast<std::size_t>(l)];
}

CyclotomicInt qfactorial_any(long order, long k) {
    require_prime_order(order);
    if (k < 0) throw std::invalid_argument("qfactorial_any requires k >= 0");
    CyclotomicInt acc = CyclotomicInt::one(order);
    for (long i = 1; i <= k; ++i) acc *= qbasic(order, i);
    return acc;
}

CyclotomicInt invert_qbasic(long order, long n) {
    require_prime_order(order);
    if (n < 1 || n > order - 1 || n % order == 0)
        throw std::invalid_argument("invert_qbasic requires 1 <= n <= N-1 (a unit)");
    // a*n + b*N = 1; the inverse of [n]_q is [a]_{q^n}.
    long a = 1;
    for (long cand = 1; cand < order; ++cand) {
        if ((cand * n) % order == 1) {
            a = cand;
            break;
        }
    }
    std::vector<mpz_class> raw(static_cast<std::size_t>(a * n + 1), mpz_class(0));
    for (long i = 0; i < a; ++i) raw[static_cast<std::size_t>(i * n)] += 1;
    return CyclotomicInt::reduce(order, raw);
}

CyclotomicInt permutation_sum(long order, long n) {
    require_prime_order(order);
    if (n < 0) throw std::invalid_argument("permutation_sum requires n >= 0");
    if (n > 8) throw std::invalid_argument("permutation_sum enumeration is limited to n <= 8");
    std::vector<long> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<mpz_class> raw(static_cast<std::size_t>(n * (n - 1) / 2 + 1), mpz_class(0));
    do {
        long inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        raw[static_cast<std::size_t>(inv)] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CyclotomicInt::reduce(order, raw);
}

QNumberTable::QNumberTable(long order_in) : order(order_in) {
    require_prime_order(order);
    for (long k = 0; k <= order; ++k) basics.push_back(qbasic(order, k));
    for (long k = 0; k <= order - 1; ++k) factorials.push_back(qfactorial(order, k));
    binomials.resize(static_cast<std::size_t>(order));
    for (long k = 0; k <= order - 1; ++k)
        for (long l = 0; l <= k; ++l) binomials[static_cast<std::size_t>(k)].push_back(qbinomial(order, k, l));
}

template class CyclotomicElem<mpz_class>;
template class CyclotomicElem<mpq_class>;

}  // namespace qhom
