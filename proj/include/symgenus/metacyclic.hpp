#pragma once

/**
 * @file metacyclic.hpp
 * @brief Exact engine for metacyclic groups <a,b | a^m = 1, b^n = a^t, b a b^-1 = a^k>.
 *
 * Elements are pairs a^i b^j with 0 <= i < m, 0 <= j < n; the pair is a
 * unique normal form and multiplication is
 *   (i1,j1)*(i2,j2) = (i1 + k^j1 * i2 + t * floor((j1+j2)/n) mod m,
 *                      (j1+j2) mod n).
 * This is a group of order exactly m*n iff k^n = 1 (mod m) and
 * t(k-1) = 0 (mod m), and every metacyclic group of order m*n arises from
 * some such parameter tuple.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "symgenus/errors.hpp"
#include "symgenus/smith.hpp"

namespace symgenus {

namespace detail {

inline long long mulmod(long long a, long long b, long long m) {
    return static_cast<long long>((static_cast<__int128>(a) * b) % m);
}

inline long long powmod(long long base, long long exp, long long m) {
    if (m == 1) return 0;
    long long r = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace detail

struct MetacyclicParams {
    long long m = 1;  // order of the normal cyclic subgroup <a>
    long long n = 1;  // order of the cyclic quotient
    long long k = 1;  // conjugation action b a b^-1 = a^k, gcd(k, m) = 1
    long long t = 0;  // extension class b^n = a^t

    long long order() const { return m * n; }

    void validate() const {
        if (m < 1 || n < 1) throw InvalidParams("metacyclic params: m and n must be positive");
        if (k < 1 || k > m) throw InvalidParams("metacyclic params: need 1 <= k <= m");
        if (std::gcd(k, m) != 1) throw InvalidParams("metacyclic params: gcd(k, m) != 1");
        if (t < 0 || t >= m) throw InvalidParams("metacyclic params: need 0 <= t < m");
        if (detail::powmod(k, n, m) != 1 % m)
            throw InvalidParams("metacyclic params: k^n != 1 (mod m)");
        if (detail::mulmod(t % m, (k - 1) % m, m) != 0)
            throw InvalidParams("metacyclic params: t(k-1) != 0 (mod m)");
    }

    bool operator==(const MetacyclicParams& o) const {
        return m == o.m && n == o.n && k == o.k && t == o.t;
    }
    bool operator<(const MetacyclicParams& o) const {
        if (order() != o.order()) return order() < o.order();
        if (m != o.m) return m < o.m;
        if (k != o.k) return k < o.k;
        return t < o.t;
    }

    std::string str() const {
        return "(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k) +
               ",t=" + std::to_string(t) + ")";
    }
};

/// a^i b^j in normal form.
struct Element {
    long long i = 0;
    long long j = 0;

    bool operator==(const Element& o) const { return i == o.i && j == o.j; }
    bool operator!=(const Element& o) const { return !(*this == o); }
    bool operator<(const Element& o) const { return i != o.i ? i < o.i : j < o.j; }

    std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
};

class Group {
public:
    explicit Group(MetacyclicParams p) : p_(p) {
        p_.validate();
        size_ = p_.m * p_.n;
        kpow_.resize(p_.n);
        for (long long j = 0; j < p_.n; ++j) kpow_[j] = detail::powmod(p_.k, j, p_.m);
        if (size_ <= kEagerOrderTableCap) build_order_table();
    }

    const MetacyclicParams& params() const { return p_; }
    long long order() const { return size_; }

    Element identity() const { return {0, 0}; }
    Element gen_a() const { return {1 % p_.m, 0}; }
    // For n = 1 the quotient generator is already inside <a>: b = a^t.
    Element gen_b() const { return p_.n > 1 ? Element{0, 1} : Element{p_.t, 0}; }

    bool contains(const Element& x) const {
        return x.i >= 0 && x.i < p_.m && x.j >= 0 && x.j < p_.n;
    }

    Element mul(const Element& x, const Element& y) const {
        long long js = x.j + y.j;
        long long i = x.i + detail::mulmod(kpow_[x.j], y.i, p_.m);
        if (js >= p_.n) {
            i += p_.t;  // b^n = a^t and a^t is central
            js -= p_.n;
        }
        return {i % p_.m, js};
    }

    Element inverse(const Element& x) const {
        if (x.j == 0) return {(p_.m - x.i) % p_.m, 0};
        long long kinv = kpow_[p_.n - x.j];  // k^n = 1 (mod m)
        long long i = detail::mulmod((2 * p_.m - x.i - p_.t) % p_.m, kinv, p_.m);
        return {i, p_.n - x.j};
    }

    Element power(Element x, long long e) const {
        if (e < 0) {
            x = inverse(x);
            e = -e;
        }
        Element r = identity();
        while (e > 0) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    Element conjugate(const Element& g, const Element& x) const {
        return mul(mul(g, x), inverse(g));
    }

    Element commutator(const Element& x, const Element& y) const {
        return mul(mul(x, y), mul(inverse(x), inverse(y)));
    }

    long long index_of(const Element& x) const { return x.i * p_.n + x.j; }
    Element element_at(long long idx) const { return {idx / p_.n, idx % p_.n}; }

    long long element_order(const Element& x) const {
        if (!orders_.empty()) return orders_[index_of(x)];
        return order_by_iteration(x);
    }

    /// Per-element orders indexed by index_of; built eagerly for small groups.
    const std::vector<int32_t>& order_table() const {
        if (orders_.empty())
            throw Error("Group: order table not built for |G| = " + std::to_string(size_));
        return orders_;
    }

    bool has_order_table() const { return !orders_.empty(); }

private:
    static constexpr long long kEagerOrderTableCap = 1 << 16;

    long long order_by_iteration(const Element& x) const {
        Element y = x;
        long long s = 1;
        while (!(y == identity())) {
            y = mul(y, x);
            ++s;
        }
        return s;
    }

    void build_order_table() {
        orders_.assign(size_, 0);
        // Walk each cyclic subgroup once: ord(x^s) = L / gcd(L, s).
        for (long long idx = 0; idx < size_; ++idx) {
            if (orders_[idx] != 0) continue;
            Element x = element_at(idx);
            std::vector<long long> path;
            Element y = x;
            while (!(y == identity())) {
                path.push_back(index_of(y));
                y = mul(y, x);
            }
            long long l = static_cast<long long>(path.size()) + 1;
            orders_[index_of(identity())] = 1;
            for (long long s = 1; s < l; ++s)
                orders_[path[s - 1]] = l / std::gcd(l, s);
        }
    }

    MetacyclicParams p_;
    long long size_ = 1;
    std::vector<long long> kpow_;
    std::vector<int32_t> orders_;
};

inline Group make_group(const MetacyclicParams& p) { return Group(p); }

/// Least subgroup containing gens, as index-sorted elements. Breadth-first
/// right multiplication by the generators; in a finite group the monoid
/// closure is already the subgroup.
inline std::vector<Element> subgroup_closure(const Group& g, const std::vector<Element>& gens) {
    std::vector<char> seen(g.order(), 0);
    std::vector<long long> members{g.index_of(g.identity())};
    seen[members[0]] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
        Element x = g.element_at(members[head]);
        for (const Element& gen : gens) {
            long long idx = g.index_of(g.mul(x, gen));
            if (!seen[idx]) {
                seen[idx] = 1;
                members.push_back(idx);
            }
        }
    }
    std::sort(members.begin(), members.end());
    std::vector<Element> out;
    out.reserve(members.size());
    for (long long idx : members) out.push_back(g.element_at(idx));
    return out;
}

/// Derived subgroup: normal closure of [a, b], which generates G' for any
/// 2-generated group. Element set, index-sorted.
inline std::vector<Element> derived_subgroup(const Group& g) {
    Element c = g.commutator(g.gen_a(), g.gen_b());
    // Orbit of c under conjugation by the generators.
    std::vector<char> seen(g.order(), 0);
    std::vector<long long> orbit{g.index_of(c)};
    seen[orbit[0]] = 1;
    const Element gens[2] = {g.gen_a(), g.gen_b()};
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        Element x = g.element_at(orbit[head]);
        for (const Element& h : gens) {
            long long idx = g.index_of(g.conjugate(h, x));
            if (!seen[idx]) {
                seen[idx] = 1;
                orbit.push_back(idx);
            }
        }
    }
    std::vector<Element> orbit_elems;
    orbit_elems.reserve(orbit.size());
    for (long long idx : orbit) orbit_elems.push_back(g.element_at(idx));
    return subgroup_closure(g, orbit_elems);
}

/// G/G' in invariant-factor form, from the abelianized relations
/// m*a = 0, (k-1)*a = 0, n*b - t*a = 0.
inline AbelianInvariants abelianization_of_group(const Group& g) {
    const auto& p = g.params();
    Matrix rel{{Int(p.m), Int(0)}, {Int(p.k - 1), Int(0)}, {Int(-p.t), Int(p.n)}};
    return abelian_invariants_of(rel);
}

/// lcm of all element orders.
inline long long exponent(const Group& g) {
    long long e = 1;
    for (long long idx = 0; idx < g.order(); ++idx)
        e = std::lcm(e, g.element_order(g.element_at(idx)));
    return e;
}

/// Product of the distinct primes dividing N.
inline long long radical_of_order(long long n) {
    if (n < 1) throw Error("radical_of_order: argument must be positive");
    long long rad = 1;
    long long rest = n;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        rad *= p;
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) rad *= rest;
    return rad;
}

namespace detail {

inline std::vector<std::pair<long long, long long>> prime_power_parts(long long n) {
    std::vector<std::pair<long long, long long>> parts;  // (p, p^vp(n))
    long long rest = n;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        long long q = 1;
        while (rest % p == 0) {
            q *= p;
            rest /= p;
        }
        parts.emplace_back(p, q);
    }
    if (rest > 1) parts.emplace_back(rest, rest);
    return parts;
}

inline bool has_element_of_order(const Group& g, long long target) {
    for (long long idx = 0; idx < g.order(); ++idx)
        if (g.element_order(g.element_at(idx)) == target) return true;
    return false;
}

}  // namespace detail

/// All Sylow subgroups cyclic. Sylow subgroups of a fixed prime are
/// conjugate, so cyclicity is equivalent to an element of full p-power order.
inline bool is_z_group(const Group& g) {
    for (auto [p, q] : detail::prime_power_parts(g.order()))
        if (!detail::has_element_of_order(g, q)) return false;
    return true;
}

inline bool has_cyclic_sylow2(const Group& g) {
    long long n = g.order();
    if (n % 2 != 0) return true;
    long long q = 1;
    while (n % 2 == 0) {
        q *= 2;
        n /= 2;
    }
    return detail::has_element_of_order(g, q);
}

/// Cheap isomorphism invariant: equal for isomorphic groups, but equality
/// does not certify isomorphism.
struct GroupFingerprint {
    long long order = 1;
    std::vector<int32_t> element_order_multiset;  // sorted
    AbelianInvariants abelianization;
    long long derived_order = 1;
    long long exponent = 1;

    bool operator==(const GroupFingerprint& o) const {
        return order == o.order && derived_order == o.derived_order && exponent == o.exponent &&
               abelianization == o.abelianization &&
               element_order_multiset == o.element_order_multiset;
    }
    bool operator!=(const GroupFingerprint& o) const { return !(*this == o); }
    bool operator<(const GroupFingerprint& o) const {
        if (order != o.order) return order < o.order;
        if (exponent != o.exponent) return exponent < o.exponent;
        if (derived_order != o.derived_order) return derived_order < o.derived_order;
        if (abelianization != o.abelianization) return abelianization < o.abelianization;
        return element_order_multiset < o.element_order_multiset;
    }
};

inline GroupFingerprint fingerprint(const Group& g) {
    GroupFingerprint fp;
    fp.order = g.order();
    fp.element_order_multiset.reserve(g.order());
    for (long long idx = 0; idx < g.order(); ++idx)
        fp.element_order_multiset.push_back(
            static_cast<int32_t>(g.element_order(g.element_at(idx))));
    std::sort(fp.element_order_multiset.begin(), fp.element_order_multiset.end());
    fp.abelianization = abelianization_of_group(g);
    fp.derived_order = static_cast<long long>(derived_subgroup(g).size());
    fp.exponent = exponent(g);
    return fp;
}

/**
 * Every valid parameter tuple with order in [order_min, order_max], emitted
 * in lexicographic (order, m, n, k, t) order. The extension class t is
 * reduced to its orbit under unit substitutions a -> a^u, which map
 * (m,n,k,t) to an isomorphic (m,n,k,ut mod m): representatives are t = 0
 * and the divisors of m below m that satisfy t(k-1) = 0 (mod m). Every
 * metacyclic group of an order in range appears at least once.
 *
 * With fingerprint_dedup, only the first tuple of each fingerprint class
 * is kept (heuristic: fingerprints may collide across classes).
 */
inline std::vector<MetacyclicParams> enumerate_metacyclic(long long order_min, long long order_max,
                                                          bool fingerprint_dedup = false) {
    if (order_min < 1 || order_min > order_max)
        throw Error("enumerate_metacyclic: need 1 <= order_min <= order_max");
    std::vector<MetacyclicParams> out;
    std::map<GroupFingerprint, bool> seen;
    for (long long order = order_min; order <= order_max; ++order) {
        for (long long m = 1; m <= order; ++m) {
            if (order % m) continue;
            long long n = order / m;
            std::vector<long long> t_reps{0};
            if (n > 1) {  // for n = 1 the group is <a> whatever t is
                for (long long d = 1; d < m; ++d)
                    if (m % d == 0) t_reps.push_back(d);
            }
            std::sort(t_reps.begin(), t_reps.end());
            for (long long k = 1; k <= m; ++k) {
                if (std::gcd(k, m) != 1) continue;
                if (detail::powmod(k, n, m) != 1 % m) continue;
                for (long long t : t_reps) {
                    if (detail::mulmod(t, (k - 1) % m, m) != 0) continue;
                    MetacyclicParams p{m, n, k, t};
                    if (fingerprint_dedup) {
                        GroupFingerprint fp = fingerprint(Group(p));
                        if (seen.count(fp)) continue;
                        seen.emplace(std::move(fp), true);
                    }
                    out.push_back(p);
                }
            }
        }
    }
    return out;
}

/**
 * Generator-image search for an isomorphism G -> H: a map (a, b) -> (x, y)
 * that satisfies G's defining relations and generates H extends to a
 * homomorphism, and equal orders make it bijective.
 */
inline bool is_isomorphic(const Group& g, const Group& h, long long cap = 500) {
    if (g.order() != h.order()) return false;
    if (g.order() > cap)
        throw CapExceeded("is_isomorphic: order " + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(cap));
    if (fingerprint(g) != fingerprint(h)) return false;

    const auto& p = g.params();
    const long long size = h.order();
    for (long long xi = 0; xi < size; ++xi) {
        Element x = h.element_at(xi);
        if (p.m % h.element_order(x) != 0) continue;  // x^m = 1
        Element x_t = h.power(x, p.t);
        Element x_k = h.power(x, p.k);
        for (long long yi = 0; yi < size; ++yi) {
            Element y = h.element_at(yi);
            if (!(h.power(y, p.n) == x_t)) continue;         // y^n = x^t
            if (!(h.conjugate(y, x) == x_k)) continue;       // y x y^-1 = x^k
            if (static_cast<long long>(subgroup_closure(h, {x, y}).size()) == size) return true;
        }
    }
    return false;
}

/// Conjugacy classes as index-sorted element lists, ordered by minimal
/// member; representatives are the minimal members.
inline std::vector<std::vector<Element>> conjugacy_classes(const Group& g) {
    const long long size = g.order();
    std::vector<char> seen(size, 0);
    std::vector<std::vector<Element>> classes;
    for (long long idx = 0; idx < size; ++idx) {
        if (seen[idx]) continue;
        Element x = g.element_at(idx);
        std::vector<long long> members;
        for (long long gi = 0; gi < size; ++gi) {
            long long ci = g.index_of(g.conjugate(g.element_at(gi), x));
            if (!seen[ci]) {
                seen[ci] = 1;
                members.push_back(ci);
            }
        }
        std::sort(members.begin(), members.end());
        std::vector<Element> cls;
        cls.reserve(members.size());
        for (long long ci : members) cls.push_back(g.element_at(ci));
        classes.push_back(std::move(cls));
    }
    return classes;
}

inline std::vector<Element> conjugacy_class_representatives(const Group& g) {
    std::vector<Element> reps;
    for (const auto& cls : conjugacy_classes(g)) reps.push_back(cls.front());
    return reps;
}

}  // namespace symgenus
