#pragma once

/**
 * @file signature.hpp
 * @brief Fuchsian signatures and exact Riemann-Hurwitz arithmetic.
 *
 * A signature (h; m1,...,mr) carries a quotient orbit genus h >= 0 and a
 * multiset of branching periods mi >= 2, stored sorted ascending. Its
 * measure mu = 2h - 2 + sum(1 - 1/mi) drives everything: a group of order
 * N covered by the signature acts on genus g = 1 + N*mu/2, equivalently
 * N = (2/mu)(g - 1) when mu > 0.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symgenus/errors.hpp"
#include "symgenus/rational.hpp"

namespace symgenus {

struct Signature {
    long long h = 0;
    std::vector<long long> periods;  // each >= 2, ascending

    Signature() = default;
    Signature(long long genus_h, std::vector<long long> ps) : h(genus_h), periods(std::move(ps)) {
        if (h < 0) throw Error("Signature: negative orbit genus");
        for (long long p : periods)
            if (p < 2) throw Error("Signature: period < 2");
        std::sort(periods.begin(), periods.end());
    }

    std::size_t num_periods() const { return periods.size(); }

    bool operator==(const Signature& o) const { return h == o.h && periods == o.periods; }
    bool operator!=(const Signature& o) const { return !(*this == o); }
    bool operator<(const Signature& o) const {
        if (h != o.h) return h < o.h;
        return periods < o.periods;
    }

    std::string str() const {
        std::string s = "(" + std::to_string(h) + ";";
        if (periods.empty()) {
            s += " -";
        } else {
            for (std::size_t i = 0; i < periods.size(); ++i)
                s += (i ? "," : " ") + std::to_string(periods[i]);
        }
        return s + ")";
    }
};

/// mu = 2h - 2 + sum(1 - 1/mi), exactly.
inline Rational measure(const Signature& sig) {
    Rational mu(2 * sig.h - 2);
    for (long long p : sig.periods) mu += Rational(Int(p - 1), Int(p));
    return mu;
}

inline bool is_hyperbolic(const Signature& sig) { return measure(sig).is_positive(); }

/// The coefficient 2/mu in |G| = (2/mu)(g-1). Requires mu > 0.
inline Rational order_multiplier(const Signature& sig) {
    Rational mu = measure(sig);
    if (!mu.is_positive())
        throw NonHyperbolic("order_multiplier: measure of " + sig.str() + " is " + mu.str());
    return Rational(2) / mu;
}

/// g = 1 + order*mu/2; must be an integer >= 2.
inline long long genus_of_action(const Signature& sig, const Int& order) {
    Rational mu = measure(sig);
    if (!mu.is_positive())
        throw NonHyperbolic("genus_of_action: measure of " + sig.str() + " is " + mu.str());
    Rational g = Rational(1) + Rational(order) * mu / Rational(2);
    if (!g.is_integer())
        throw NonIntegralGenus("genus_of_action: " + sig.str() + " with order " + order.str() +
                               " gives genus " + g.str());
    if (g.numerator() < 2)
        throw GenusTooSmall("genus_of_action: " + sig.str() + " with order " + order.str() +
                            " gives genus " + g.str());
    return static_cast<long long>(g.numerator());
}

namespace detail {

inline void enumerate_period_multisets(const std::vector<long long>& allowed, std::size_t from,
                                       const Rational& remaining, std::vector<long long>& chosen,
                                       long long h, std::vector<Signature>& out) {
    if (remaining.is_zero()) {
        out.emplace_back(h, chosen);
        // fall through: a longer multiset can never re-reach zero (terms > 0)
        return;
    }
    for (std::size_t idx = from; idx < allowed.size(); ++idx) {
        long long p = allowed[idx];
        Rational term(Int(p - 1), Int(p));
        // Periods are chosen nondecreasing, so every later term is >= this
        // one; once remaining < term nothing longer can work either.
        if (remaining < term) break;
        chosen.push_back(p);
        enumerate_period_multisets(allowed, idx, remaining - term, chosen, h, out);
        chosen.pop_back();
    }
}

}  // namespace detail

/// All signatures with periods drawn from allowed_periods and
/// mu = 2(genus-1)/order exactly. Finite: each period adds >= 1/2 to mu.
inline std::vector<Signature> enumerate_signatures_for(long long order, long long genus,
                                                       const std::set<long long>& allowed_periods) {
    if (order < 1) throw Error("enumerate_signatures_for: order must be positive");
    if (genus < 2) throw Error("enumerate_signatures_for: genus must be >= 2");
    for (long long p : allowed_periods) {
        if (p < 2) throw Error("enumerate_signatures_for: period < 2");
        if (order % p != 0)
            throw Error("enumerate_signatures_for: period " + std::to_string(p) +
                        " does not divide order " + std::to_string(order));
    }
    const Rational mu(Int(2 * (genus - 1)), Int(order));
    std::vector<long long> allowed(allowed_periods.begin(), allowed_periods.end());

    std::vector<Signature> out;
    for (long long h = 0;; ++h) {
        Rational target = mu - Rational(2 * h - 2);
        if (target.is_negative()) break;
        std::vector<long long> chosen;
        detail::enumerate_period_multisets(allowed, 0, target, chosen, h, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Divisibility demands derived from a cyclic quotient C_d: for each prime
/// power q || d, at least two periods must be divisible by q.
struct QuotientConstraint {
    std::vector<long long> prime_powers;

    static QuotientConstraint for_cyclic(long long d) {
        if (d < 2) throw Error("QuotientConstraint: d must be >= 2");
        QuotientConstraint c;
        long long rest = d;
        for (long long p = 2; p * p <= rest; ++p) {
            if (rest % p) continue;
            long long q = 1;
            while (rest % p == 0) {
                q *= p;
                rest /= p;
            }
            c.prime_powers.push_back(q);
        }
        if (rest > 1) c.prime_powers.push_back(rest);
        std::sort(c.prime_powers.begin(), c.prime_powers.end());
        return c;
    }

    bool satisfied_by(const std::vector<long long>& periods) const {
        for (long long q : prime_powers) {
            int count = 0;
            for (long long m : periods)
                if (m % q == 0) ++count;
            if (count < 2) return false;
        }
        return true;
    }
};

namespace detail {

struct AboveRatioSearch {
    Rational mu_cap;  // multiplier > c  <=>  0 < mu < 2/c
    const QuotientConstraint* constraint;
    std::vector<Signature>* out;

    // True if a tail period can still supply the missing divisibility:
    // every prime power short of its quota must be coverable by the single
    // remaining slot, i.e. at most a quota deficit of 1 per prime power.
    // Returns the lcm the tail must be divisible by, or nullopt if the
    // prefix can never be completed.
    std::optional<long long> tail_divisor(const std::vector<long long>& prefix) const {
        if (!constraint) return 1;
        long long need = 1;
        for (long long q : constraint->prime_powers) {
            int count = 0;
            for (long long m : prefix)
                if (m % q == 0) ++count;
            if (count >= 2) continue;
            if (count == 0) return std::nullopt;  // one tail slot cannot supply two
            need = std::lcm(need, q);
        }
        return need;
    }

    // prefix has r-1 periods; the last one ranges over multiples of div.
    // mu(m) = base - 1/m is increasing in m with limit base, so the family
    // is finite only if base > mu_cap; otherwise every large m qualifies.
    void close_family(const std::vector<long long>& prefix, const Rational& base,
                      long long div) const {
        if (!base.is_positive()) return;  // mu = base - 1/m < 0 for every tail
        if (base <= mu_cap) {
            Signature family(0, prefix);
            std::string head = family.str();
            head.pop_back();
            throw ThresholdTooLow("enumerate_signatures_above_ratio: infinite family " + head +
                                  ",*) stays above the threshold");
        }
        // 1/m in (base - mu_cap, base), i.e. m in (1/base, 1/(base - mu_cap)).
        Rational hi = (base - mu_cap).reciprocal();
        long long m_min = std::max<long long>(prefix.back(), 2);
        for (long long m = m_min;; ++m) {
            if (Rational(m) >= hi) break;  // mu >= mu_cap from here on
            Rational inv(Int(1), Int(m));
            if (!(inv < base)) continue;  // mu <= 0
            if (div != 1 && m % div != 0) continue;
            std::vector<long long> periods = prefix;
            periods.push_back(m);
            if (constraint && !constraint->satisfied_by(periods)) continue;
            out->emplace_back(0, periods);
        }
    }
};

}  // namespace detail

/**
 * The complete list of hyperbolic signatures with order_multiplier > c,
 * optionally restricted to signatures admitting a cyclic quotient of order
 * cyclic_quotient (at least two periods divisible by each prime power of
 * it). Sorted by descending multiplier, ties by ascending signature.
 *
 * Requires c > 4. All results have h = 0 and r in {3,4}: any signature
 * with h >= 1 or r >= 5 has mu >= 1/2, hence multiplier <= 4. Throws
 * ThresholdTooLow when the requested set is infinite, which happens
 * whenever some period family (m1,...,m_{r-1},*) compatible with the
 * constraint has limiting multiplier >= c. Unconstrained, the smallest
 * such limit is 12 from (0;2,3,*), so unconstrained calls need c > 12.
 */
inline std::vector<Signature> enumerate_signatures_above_ratio(
    const Rational& c, std::optional<long long> cyclic_quotient = std::nullopt) {
    if (!(c > Rational(4)))
        throw ThresholdTooLow("enumerate_signatures_above_ratio: threshold must exceed 4");

    std::optional<QuotientConstraint> constraint;
    if (cyclic_quotient) constraint = QuotientConstraint::for_cyclic(*cyclic_quotient);

    std::vector<Signature> out;
    detail::AboveRatioSearch search{Rational(2) / c, constraint ? &*constraint : nullptr, &out};
    const Rational one(1);
    const Rational two(2);

    // r = 3: mu = 1 - 1/m1 - 1/m2 - 1/m3.
    for (long long m1 = 2;; ++m1) {
        Rational s1 = one - Rational(Int(1), Int(m1));
        // Even with both remaining periods maximal, mu < s1 - 1/m1... the
        // coarse cut: mu >= 1 - 3/m1 must stay below mu_cap.
        if (one - Rational(Int(3), Int(m1)) >= search.mu_cap) break;
        for (long long m2 = m1;; ++m2) {
            Rational s2 = s1 - Rational(Int(1), Int(m2));
            if (s2 - Rational(Int(1), Int(m2)) >= search.mu_cap) break;  // mu >= s2 - 1/m2
            std::vector<long long> prefix{m1, m2};
            auto div = search.tail_divisor(prefix);
            if (!div) continue;
            search.close_family(prefix, s2, *div);
        }
    }

    // r = 4: mu = 2 - sum 1/mi, and mu >= 2 - 1/2*3 - 1/m4 forces small periods.
    for (long long m1 = 2;; ++m1) {
        Rational s1 = two - Rational(Int(1), Int(m1));
        if (s1 - Rational(Int(3), Int(m1)) >= search.mu_cap) break;
        for (long long m2 = m1;; ++m2) {
            Rational s2 = s1 - Rational(Int(1), Int(m2));
            if (s2 - Rational(Int(2), Int(m2)) >= search.mu_cap) break;
            for (long long m3 = m2;; ++m3) {
                Rational s3 = s2 - Rational(Int(1), Int(m3));
                if (s3 - Rational(Int(1), Int(m3)) >= search.mu_cap) break;
                std::vector<long long> prefix{m1, m2, m3};
                auto div = search.tail_divisor(prefix);
                if (!div) continue;
                search.close_family(prefix, s3, *div);
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const Signature& a, const Signature& b) {
        Rational ma = order_multiplier(a);
        Rational mb = order_multiplier(b);
        if (ma != mb) return mb < ma;
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace symgenus
