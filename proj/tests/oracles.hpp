#pragma once

// Independent oracles used by the tests only. Each one recomputes a
// library result along a different algorithmic route: determinantal
// divisors instead of elementary operations, bounded brute force instead
// of pruned search, closed forms instead of lattice membership.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "symgenus/genvec.hpp"
#include "symgenus/metacyclic.hpp"
#include "symgenus/signature.hpp"
#include "symgenus/smith.hpp"

namespace oracles {

using symgenus::Element;
using symgenus::GeneratingVector;
using symgenus::Group;
using symgenus::Int;
using symgenus::Matrix;
using symgenus::Rational;
using symgenus::Signature;

// --- determinants and determinantal divisors -------------------------------

inline Int determinant(const Matrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Int det = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (a[0][col] == 0) continue;
        Matrix minor(n - 1, std::vector<Int>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t mc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[i - 1][mc++] = a[i][j];
            }
        }
        Int term = a[0][col] * determinant(minor);
        det += (col % 2 == 0) ? term : -term;
    }
    return det;
}

inline void choose_indices(std::size_t total, std::size_t want,
                           std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (cur.size() == want) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i + (want - cur.size()) <= total; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

/// Invariant factors via determinantal divisors: d_k = g_k / g_{k-1} where
/// g_k is the gcd of all k x k minors (g_k = 0 once all minors vanish).
inline std::vector<Int> smith_by_minors(const Matrix& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    const std::size_t rank_bound = std::min(rows, cols);
    std::vector<Int> g(rank_bound + 1, 0);
    g[0] = 1;
    for (std::size_t k = 1; k <= rank_bound; ++k) {
        std::vector<std::vector<std::size_t>> row_sets, col_sets;
        choose_indices(rows, k, row_sets);
        choose_indices(cols, k, col_sets);
        Int gk = 0;
        for (const auto& rs : row_sets) {
            for (const auto& cs : col_sets) {
                Matrix sub(k, std::vector<Int>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[rs[i]][cs[j]];
                Int d = determinant(sub);
                gk = boost::multiprecision::gcd(gk, d < 0 ? Int(-d) : d);
            }
        }
        g[k] = gk;
    }
    std::vector<Int> out(rank_bound, 0);
    for (std::size_t k = 1; k <= rank_bound; ++k) {
        if (g[k] == 0) break;  // later factors are all 0
        out[k - 1] = g[k] / g[k - 1];
    }
    return out;
}

// --- signature enumeration ---------------------------------------------------

/// All hyperbolic signatures with multiplier > c, h <= h_max, r <= 4 and
/// periods <= period_bound, by plain bounded enumeration.
inline std::vector<Signature> above_ratio_bounded(const Rational& c, long long period_bound,
                                                  long long h_max = 1) {
    const Rational mu_cap = Rational(2) / c;  // multiplier > c  <=>  0 < mu < 2/c
    std::vector<Signature> out;
    for (long long h = 0; h <= h_max; ++h) {
        for (int r = 0; r <= 4; ++r) {
            std::vector<long long> periods(r, 2);
            std::function<void(int, long long, Rational)> rec = [&](int slot, long long min_p,
                                                                    Rational partial) {
                if (slot == r) {
                    if (partial.is_positive() && partial < mu_cap) out.emplace_back(h, periods);
                    return;
                }
                for (long long p = min_p; p <= period_bound; ++p) {
                    periods[slot] = p;
                    rec(slot + 1, p, partial + Rational(Int(p - 1), Int(p)));
                }
            };
            rec(0, 2, Rational(2 * h - 2));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All signatures with mu = 2(genus-1)/order and periods in the allowed
/// set: enumerate every multiset up to the size cap and test the measure.
inline std::vector<Signature> signatures_for_bounded(long long order, long long genus,
                                                     const std::set<long long>& allowed) {
    const Rational mu(Int(2 * (genus - 1)), Int(order));
    std::vector<long long> pool(allowed.begin(), allowed.end());
    std::vector<Signature> out;
    for (long long h = 0; Rational(2 * h - 2) <= mu; ++h) {
        Rational target = mu - Rational(2 * h - 2);
        // Each period adds at least 1/2 to the measure.
        long long r_cap = 0;
        while (Rational(Int(r_cap), Int(2)) <= target) ++r_cap;
        std::vector<long long> periods;
        std::function<void(std::size_t, Rational)> rec = [&](std::size_t min_idx,
                                                             Rational partial) {
            if (partial == target) out.emplace_back(h, periods);
            if (static_cast<long long>(periods.size()) >= r_cap) return;
            for (std::size_t i = min_idx; i < pool.size(); ++i) {
                periods.push_back(pool[i]);
                rec(i, partial + Rational(Int(pool[i] - 1), Int(pool[i])));
                periods.pop_back();
            }
        };
        rec(0, Rational(0));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// --- abelianization ----------------------------------------------------------

/// Order of the i-th period generator in the abelianization, in closed
/// form: gcd(m_i, lcm of the other periods).
inline Int image_order_closed_form(const Signature& sig, std::size_t i) {
    Int l = 1;
    for (std::size_t j = 0; j < sig.num_periods(); ++j)
        if (j != i) l = boost::multiprecision::lcm(l, Int(sig.periods[j]));
    return boost::multiprecision::gcd(Int(sig.periods[i]), l);
}

/// Surjection onto C_d by brute force over generator images.
inline bool admits_quotient_bruteforce(const Signature& sig, long long d) {
    const std::size_t r = sig.num_periods();
    const std::size_t free_gens = static_cast<std::size_t>(2 * sig.h);
    std::vector<long long> img(r + free_gens, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t slot) -> bool {
        if (slot == r + free_gens) {
            long long sum = 0;
            for (std::size_t i = 0; i < r; ++i) sum = (sum + img[i]) % d;
            if (sum != 0) return false;  // x1...xr = 1 (commutators die in C_d)
            long long g = d;
            for (long long v : img) g = std::gcd(g, v);
            return g == 1;  // surjective
        }
        bool is_period = slot < r;
        for (long long v = 0; v < d; ++v) {
            if (is_period && (sig.periods[slot] * v) % d != 0) continue;
            img[slot] = v;
            if (rec(slot + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

// --- groups ------------------------------------------------------------------

/// Derived subgroup as the subgroup generated by all commutators of all
/// element pairs.
inline std::vector<Element> derived_all_pairs(const Group& g) {
    std::vector<Element> comms;
    for (long long xi = 0; xi < g.order(); ++xi)
        for (long long yi = 0; yi < g.order(); ++yi)
            comms.push_back(g.commutator(g.element_at(xi), g.element_at(yi)));
    return symgenus::subgroup_closure(g, comms);
}

// --- generating vectors ------------------------------------------------------

/// Unpruned search: every slot (hyperbolic pairs first, then the elliptics
/// in the signature's own ascending order) ranges over the full candidate
/// list; no conjugacy reduction, no derived last slot.
inline bool vector_exists_bruteforce(const Group& g, const Signature& sig) {
    const std::size_t r = sig.num_periods();
    const long long h = sig.h;
    const long long size = g.order();

    std::vector<std::vector<Element>> elliptic_candidates(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (long long idx = 0; idx < size; ++idx) {
            Element x = g.element_at(idx);
            if (g.element_order(x) == sig.periods[i]) elliptic_candidates[i].push_back(x);
        }
        if (elliptic_candidates[i].empty()) return false;
    }

    std::vector<Element> chosen;
    std::function<bool(std::size_t, Element)> rec_elliptic = [&](std::size_t slot,
                                                                 Element product) -> bool {
        if (slot == r) {
            if (!(product == g.identity())) return false;
            return static_cast<long long>(symgenus::subgroup_closure(g, chosen).size()) == size;
        }
        for (const Element& x : elliptic_candidates[slot]) {
            chosen.push_back(x);
            if (rec_elliptic(slot + 1, g.mul(product, x))) return true;
            chosen.pop_back();
        }
        return false;
    };

    std::function<bool(long long, Element)> rec_pairs = [&](long long pair,
                                                            Element product) -> bool {
        if (pair == h) return rec_elliptic(0, product);
        for (long long ai = 0; ai < size; ++ai) {
            for (long long bi = 0; bi < size; ++bi) {
                Element a = g.element_at(ai);
                Element b = g.element_at(bi);
                chosen.push_back(a);
                chosen.push_back(b);
                if (rec_pairs(pair + 1, g.mul(product, g.commutator(a, b)))) return true;
                chosen.pop_back();
                chosen.pop_back();
            }
        }
        return false;
    };

    return rec_pairs(0, g.identity());
}

}  // namespace oracles
