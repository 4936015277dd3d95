/**
 * Exact arithmetic in Z[q] and Q(q), where q is a primitive N-th root of
 * unity and N is prime, together with the q-number combinatorics built on
 * top of it ([k]_q, [k]_q!, Gaussian binomials, inversion-counting sums).
 *
 * Elements are stored as coefficient vectors of length N-1 over the basis
 * {1, q, ..., q^{N-2}} of Z[x]/(1 + x + ... + x^{N-1}); the relation
 * q^{N-1} = -(1 + q + ... + q^{N-2}) keeps every value fully reduced.
 * All integers are arbitrary precision; there is no floating point anywhere.
 */

#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhom {

bool is_prime(long n);

/// Throws std::invalid_argument unless n is a prime >= 2.
void require_prime_order(long n);

template <typename Coeff>
class CyclotomicElem {
public:
    /// Invalid sentinel (order 0); only assignment and valid() are allowed.
    CyclotomicElem() = default;

    /// Zero of the given order.
    explicit CyclotomicElem(long order) : order_(order) {
        require_prime_order(order);
        c_.assign(static_cast<std::size_t>(order - 1), Coeff(0));
    }

    /// From a reduced coefficient vector of length exactly order-1.
    CyclotomicElem(long order, std::vector<Coeff> coeffs) : order_(order), c_(std::move(coeffs)) {
        require_prime_order(order);
        if (c_.size() != static_cast<std::size_t>(order - 1))
            throw std::invalid_argument("cyclotomic coefficient vector must have length N-1");
        canonicalize();
    }

    static CyclotomicElem zero(long order) { return CyclotomicElem(order); }

    static CyclotomicElem one(long order) {
        CyclotomicElem e(order);
        e.c_[0] = Coeff(1);
        return e;
    }

    static CyclotomicElem from_integer(long order, long value) {
        CyclotomicElem e(order);
        e.c_[0] = Coeff(value);
        e.canonicalize();
        return e;
    }

    /// q^exponent; the exponent may be any integer (reduced mod N).
    static CyclotomicElem q_power(long order, long exponent) {
        CyclotomicElem e(order);
        long r = exponent % order;
        if (r < 0) r += order;
        if (r < order - 1) {
            e.c_[static_cast<std::size_t>(r)] = Coeff(1);
        } else {
            for (auto& c : e.c_) c = Coeff(-1);
        }
        return e;
    }

    long order() const { return order_; }
    bool valid() const { return order_ >= 2; }
    const std::vector<Coeff>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }

    bool is_one() const {
        if (c_[0] != 1) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    bool operator==(const CyclotomicElem& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const CyclotomicElem& o) const { return !(*this == o); }

    CyclotomicElem operator-() const {
        CyclotomicElem r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    CyclotomicElem operator+(const CyclotomicElem& o) const {
        check_same_order(o);
        CyclotomicElem r(*this);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        r.canonicalize();
        return r;
    }

    CyclotomicElem operator-(const CyclotomicElem& o) const {
        check_same_order(o);
        CyclotomicElem r(*this);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
        r.canonicalize();
        return r;
    }

    CyclotomicElem operator*(const CyclotomicElem& o) const {
        check_same_order(o);
        const std::size_t n = c_.size();
        std::vector<Coeff> conv(2 * n - 1, Coeff(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (o.c_[j] == 0) continue;
                conv[i + j] += c_[i] * o.c_[j];
            }
        }
        return reduce(order_, conv);
    }

    CyclotomicElem& operator+=(const CyclotomicElem& o) { return *this = *this + o; }
    CyclotomicElem& operator-=(const CyclotomicElem& o) { return *this = *this - o; }
    CyclotomicElem& operator*=(const CyclotomicElem& o) { return *this = *this * o; }

    /// Scale by an integer (or exact rational for the rational instantiation).
    CyclotomicElem scaled(const Coeff& s) const {
        CyclotomicElem r(*this);
        for (auto& c : r.c_) c *= s;
        r.canonicalize();
        return r;
    }

    CyclotomicElem pow(long e) const {
        if (e < 0) throw std::invalid_argument("negative power of a cyclotomic element");
        CyclotomicElem acc = one(order_), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Reduce an arbitrary-degree coefficient vector (exponent i = index)
    /// into canonical form: exponents mod N, then fold q^{N-1}.
    static CyclotomicElem reduce(long order, const std::vector<Coeff>& raw) {
        CyclotomicElem e(order);
        const long n = order;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] == 0) continue;
            long r = static_cast<long>(i) % n;
            if (r < n - 1) {
                e.c_[static_cast<std::size_t>(r)] += raw[i];
            } else {
                for (auto& c : e.c_) c -= raw[i];
            }
        }
        e.canonicalize();
        return e;
    }

    /// Canonical text rendering: the coefficient list, e.g. "[1, 1]" for 1+q
    /// at N=3. Rationals print in lowest terms ("3/7").
    std::string to_string() const;

    /// Human-readable polynomial form, e.g. "1 + q - 2*q^2".
    std::string pretty() const;

private:
    void check_same_order(const CyclotomicElem& o) const {
        if (!valid() || !o.valid()) throw std::invalid_argument("arithmetic on invalid cyclotomic element");
        if (order_ != o.order_) throw std::invalid_argument("cyclotomic order mismatch");
    }

    void canonicalize();

    long order_ = 0;
    std::vector<Coeff> c_;
};

using CyclotomicInt = CyclotomicElem<mpz_class>;
using CyclotomicRational = CyclotomicElem<mpq_class>;

/// Lossless embedding Z[q] -> Q(q).
CyclotomicRational to_rational(const CyclotomicInt& x);

/// If every coefficient is integral, the corresponding element of Z[q].
std::optional<CyclotomicInt> to_integral(const CyclotomicRational& x);

/// Multiplicative inverse in the field Q(q) (extended Euclid against the
/// N-th cyclotomic polynomial). Empty for zero.
std::optional<CyclotomicRational> try_invert(const CyclotomicRational& x);

/// Exact division in Q(q); throws on division by zero.
CyclotomicRational operator/(const CyclotomicRational& a, const CyclotomicRational& b);

/// Parse the canonical coefficient-list rendering (integers or fractions).
CyclotomicRational parse_rational(long order, const std::string& text);
CyclotomicInt parse_int(long order, const std::string& text);

// --- q-numbers ------------------------------------------------------------

/// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0 and [N]_q = 0.
CyclotomicInt qbasic(long order, long k);

/// [k]_q! = [1]_q [2]_q ... [k]_q for 0 <= k <= N-1 (empty product = 1).
CyclotomicInt qfactorial(long order, long k);

/// Gaussian binomial [k choose l]_q for 0 <= l <= k <= N-1, computed by the
/// q-Pascal recurrence so every intermediate value stays in Z[q].
CyclotomicInt qbinomial(long order, long k, long l);

/// Pascal extension of the Gaussian binomial to arbitrary k >= l >= 0 (the
/// image in Z[q] of the integer-coefficient Gaussian polynomial); used by
/// border-power expansions whose exponent exceeds N-1.
CyclotomicInt qbinomial_any(long order, long k, long l);

/// Raw product [1]_q [2]_q ... [k]_q for any k >= 0; equals qfactorial for
/// k <= N-1 and vanishes beyond (the factor [N]_q = 0).
CyclotomicInt qfactorial_any(long order, long k);

/// Inverse of the unit [n]_q for n coprime to N: returns [a]_{q^n} where
/// a*n + b*N = 1.
CyclotomicInt invert_qbasic(long order, long n);

/// Sum of q^{inv(sigma)} over all permutations of n elements, inv counting
/// inversions; equals [n]_q!. Brute-force enumeration, n <= 8.
CyclotomicInt permutation_sum(long order, long n);

/// Precomputed [k]_q (0..N), [k]_q! (0..N-1) and [k choose l]_q tables.
struct QNumberTable {
    long order;
    std::vector<CyclotomicInt> basics;                  // [0]_q .. [N]_q
    std::vector<CyclotomicInt> factorials;              // [0]_q! .. [N-1]_q!
    std::vector<std::vector<CyclotomicInt>> binomials;  // [k][l], 0<=l<=k<=N-1

    explicit QNumberTable(long order);
};

}  // namespace qhom
