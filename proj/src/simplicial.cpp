#include "qhom/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qhom {

long SemiSimplicialSet::cell_index(long n, const std::string& id) const {
    if (n < 0 || n > top_dim()) return -1;
    const auto& list = cells[static_cast<std::size_t>(n)];
    auto it = std::find(list.begin(), list.end(), id);
    return it == list.end() ? -1 : static_cast<long>(it - list.begin());
}

SimplicialValidation validate_simplicial(const SemiSimplicialSet& x) {
    SimplicialValidation v;
    if (x.faces.size() != x.cells.size()) {
        v.ok = false;
        v.structural = true;
        v.detail = "face table does not cover every dimension";
        return v;
    }
    for (long n = 1; n <= x.top_dim(); ++n) {
        const auto& fn = x.faces[static_cast<std::size_t>(n)];
        if (fn.size() != static_cast<std::size_t>(x.cell_count(n))) {
            v.ok = false;
            v.structural = true;
            v.dim = n;
            v.detail = "missing face entries in dimension " + std::to_string(n);
            return v;
        }
        for (long c = 0; c < x.cell_count(n); ++c) {
            if (fn[static_cast<std::size_t>(c)].size() != static_cast<std::size_t>(n + 1)) {
                v.ok = false;
                v.structural = true;
                v.dim = n;
                v.cell = c;
                v.detail = "cell has wrong number of faces";
                return v;
            }
            for (long i = 0; i <= n; ++i) {
                long f = x.face(n, i, c);
                if (f < 0 || f >= x.cell_count(n - 1)) {
                    v.ok = false;
                    v.structural = true;
                    v.dim = n;
                    v.i = i;
                    v.cell = c;
                    v.detail = "face index out of range";
                    return v;
                }
            }
        }
    }
    // d_i d_j = d_j d_{i+1} for j <= i (right map applied first).
    for (long n = 2; n <= x.top_dim(); ++n) {
        for (long c = 0; c < x.cell_count(n); ++c) {
            for (long i = 0; i <= n - 1; ++i) {
                for (long j = 0; j <= i; ++j) {
                    long lhs = x.face(n - 1, i, x.face(n, j, c));
                    long rhs = x.face(n - 1, j, x.face(n, i + 1, c));
                    if (lhs != rhs) {
                        v.ok = false;
                        v.dim = n;
                        v.i = i;
                        v.j = j;
                        v.cell = c;
                        v.detail = "face identity violated";
                        return v;
                    }
                }
            }
        }
    }
    return v;
}

void chain_add_term(QChain& c, long cell, const CyclotomicRational& coeff) {
    if (coeff.is_zero()) return;
    auto it = c.coeffs.find(cell);
    if (it == c.coeffs.end()) {
        c.coeffs.emplace(cell, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) c.coeffs.erase(it);
    }
}

QChain chain_add(const QChain& a, const QChain& b) {
    if (a.degree != b.degree) throw std::invalid_argument("chain degree mismatch in add");
    QChain r = a;
    for (const auto& [cell, coeff] : b.coeffs) chain_add_term(r, cell, coeff);
    return r;
}

QChain chain_scale(const QChain& c, const CyclotomicRational& s) {
    QChain r;
    r.degree = c.degree;
    if (s.is_zero()) return r;
    for (const auto& [cell, coeff] : c.coeffs) chain_add_term(r, cell, coeff * s);
    return r;
}

QChain chain_border(const SemiSimplicialSet& x, long order, const QChain& c) {
    QChain r;
    r.degree = c.degree - 1;
    if (c.degree <= 0) return r;
    for (const auto& [cell, coeff] : c.coeffs) {
        for (long i = 0; i <= c.degree; ++i) {
            CyclotomicRational w = to_rational(CyclotomicInt::q_power(order, i)) * coeff;
            chain_add_term(r, x.face(c.degree, i, cell), w);
        }
    }
    return r;
}

GradedNComplex to_ncomplex(const SemiSimplicialSet& x, long order, long hi) {
    require_prime_order(order);
    if (hi < 0) throw std::invalid_argument("to_ncomplex requires hi >= 0");
    auto v = validate_simplicial(x);
    if (!v) throw std::invalid_argument("invalid semi-simplicial set: " + v.detail);
    GradedNComplex c;
    c.order = order;
    c.lo = 0;
    c.hi = hi;
    c.truncated_above = x.top_dim() > hi;
    for (long n = 0; n <= hi; ++n) c.ranks.push_back(x.cell_count(n));
    for (long n = 1; n <= hi; ++n) {
        Matrix b(order, static_cast<std::size_t>(x.cell_count(n - 1)), static_cast<std::size_t>(x.cell_count(n)));
        for (long cell = 0; cell < x.cell_count(n); ++cell)
            for (long i = 0; i <= n; ++i) {
                auto& entry = b.at(static_cast<std::size_t>(x.face(n, i, cell)), static_cast<std::size_t>(cell));
                entry += to_rational(CyclotomicInt::q_power(order, i));
            }
        c.borders.push_back(std::move(b));
    }
    return c;
}

bool iteration_rule_check(const SemiSimplicialSet& x, long order, const QChain& c, long k) {
    if (k < 0 || k > order) throw std::invalid_argument("iteration rule is stated for 0 <= k <= N");
    QChain lhs = c;
    for (long j = 0; j < k; ++j) lhs = chain_border(x, order, lhs);

    QChain rhs;
    rhs.degree = c.degree - k;
    // [k]_q! as a raw product; for k = N the factor [N]_q makes it vanish.
    CyclotomicRational fac = CyclotomicRational::one(order);
    for (long i = 1; i <= k; ++i) fac *= to_rational(qbasic(order, i));
    for (const auto& [cell, coeff] : c.coeffs) {
        if (k == 0) {
            chain_add_term(rhs, cell, coeff);
            continue;
        }
        if (c.degree - k < 0) continue;  // no legal face compositions
        // Weakly increasing tuples i_1 <= ... <= i_k <= degree - k + 1; the
        // composition applies d_{i_1} first.
        std::vector<long> tuple(static_cast<std::size_t>(k), 0);
        std::function<void(long, long)> rec = [&](long pos, long minval) {
            if (pos == k) {
                long cur = cell;
                long dim = c.degree;
                long expsum = 0;
                for (long t = 0; t < k; ++t) {
                    cur = x.face(dim, tuple[static_cast<std::size_t>(t)], cur);
                    expsum += tuple[static_cast<std::size_t>(t)];
                    --dim;
                }
                chain_add_term(rhs, cur,
                               coeff * to_rational(CyclotomicInt::q_power(order, expsum)));
                return;
            }
            for (long val = minval; val <= c.degree - k + 1; ++val) {
                tuple[static_cast<std::size_t>(pos)] = val;
                rec(pos + 1, val);
            }
        };
        rec(0, 0);
    }
    rhs = chain_scale(rhs, fac);
    return lhs == rhs;
}

SemiSimplicialSet point_model(long maxdim) {
    if (maxdim < 0) throw std::invalid_argument("point_model requires maxdim >= 0");
    SemiSimplicialSet x;
    x.cells.resize(static_cast<std::size_t>(maxdim + 1));
    x.faces.resize(static_cast<std::size_t>(maxdim + 1));
    for (long n = 0; n <= maxdim; ++n) {
        x.cells[static_cast<std::size_t>(n)] = {"s" + std::to_string(n)};
        if (n >= 1) x.faces[static_cast<std::size_t>(n)] = {std::vector<long>(static_cast<std::size_t>(n + 1), 0)};
    }
    return x;
}

namespace {

std::string subset_id(const std::vector<long>& s) {
    std::string id;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) id += ".";
        id += std::to_string(s[i]);
    }
    return id;
}

std::vector<std::vector<long>> subsets_of_size(long k, long size) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long)> rec = [&](long start) {
        if (static_cast<long>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (long v = start; v <= k; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

SemiSimplicialSet simplex_like_model(long k, long topdim) {
    SemiSimplicialSet x;
    x.cells.resize(static_cast<std::size_t>(topdim + 1));
    x.faces.resize(static_cast<std::size_t>(topdim + 1));
    std::vector<std::vector<std::vector<long>>> verts(static_cast<std::size_t>(topdim + 1));
    for (long n = 0; n <= topdim; ++n) {
        verts[static_cast<std::size_t>(n)] = subsets_of_size(k, n + 1);
        for (const auto& s : verts[static_cast<std::size_t>(n)])
            x.cells[static_cast<std::size_t>(n)].push_back(subset_id(s));
    }
    for (long n = 1; n <= topdim; ++n) {
        for (const auto& s : verts[static_cast<std::size_t>(n)]) {
            std::vector<long> fs;
            for (long i = 0; i <= n; ++i) {
                std::vector<long> t = s;
                t.erase(t.begin() + i);
                long idx = -1;
                const auto& lower = verts[static_cast<std::size_t>(n - 1)];
                for (std::size_t j = 0; j < lower.size(); ++j)
                    if (lower[j] == t) {
                        idx = static_cast<long>(j);
                        break;
                    }
                fs.push_back(idx);
            }
            x.faces[static_cast<std::size_t>(n)].push_back(std::move(fs));
        }
    }
    return x;
}

}  // namespace

SemiSimplicialSet delta_model(long k) {
    if (k < 0) throw std::invalid_argument("delta_model requires k >= 0");
    return simplex_like_model(k, k);
}

SemiSimplicialSet boundary_delta_model(long k) {
    if (k < 1) throw std::invalid_argument("boundary_delta_model requires k >= 1");
    return simplex_like_model(k, k - 1);
}

}  // namespace qhom
