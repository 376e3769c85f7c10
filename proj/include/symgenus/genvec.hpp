#pragma once

/**
 * @file genvec.hpp
 * @brief Surface-kernel generating vectors and minimal genus search.
 *
 * A group G acts conformally on genus g with quotient signature
 * (h; m1,...,mr) iff there is a vector (a1,b1,...,ah,bh, x1,...,xr) of
 * elements with ord(xi) = mi exactly, [a1,b1]...[ah,bh] x1...xr = 1, and
 * the whole list generating G. The search below enumerates such vectors
 * with exact order lists, conjugacy-class reduction of the first slot, and
 * incremental generated-subgroup tracking.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symgenus/errors.hpp"
#include "symgenus/metacyclic.hpp"
#include "symgenus/signature.hpp"

namespace symgenus {

struct GeneratingVector {
    std::vector<Element> hyperbolic;  // 2h entries a1,b1,...,ah,bh
    std::vector<Element> elliptic;    // r entries aligned with the sorted periods

    bool operator==(const GeneratingVector& o) const {
        return hyperbolic == o.hyperbolic && elliptic == o.elliptic;
    }
};

/// Distinct element orders >= 2, ascending.
inline std::set<long long> element_order_set(const Group& g) {
    std::set<long long> orders;
    for (long long idx = 0; idx < g.order(); ++idx) {
        long long o = g.element_order(g.element_at(idx));
        if (o >= 2) orders.insert(o);
    }
    return orders;
}

inline bool is_surface_kernel_vector(const Group& g, const Signature& sig,
                                     const GeneratingVector& vec) {
    if (vec.elliptic.size() != sig.num_periods() ||
        vec.hyperbolic.size() != static_cast<std::size_t>(2 * sig.h))
        throw ShapeMismatch("is_surface_kernel_vector: vector shape does not match " + sig.str());
    for (const Element& x : vec.hyperbolic)
        if (!g.contains(x)) return false;
    for (std::size_t i = 0; i < vec.elliptic.size(); ++i) {
        if (!g.contains(vec.elliptic[i])) return false;
        if (g.element_order(vec.elliptic[i]) != sig.periods[i]) return false;
    }
    Element w = g.identity();
    for (std::size_t l = 0; l + 1 < vec.hyperbolic.size(); l += 2)
        w = g.mul(w, g.commutator(vec.hyperbolic[l], vec.hyperbolic[l + 1]));
    for (const Element& x : vec.elliptic) w = g.mul(w, x);
    if (!(w == g.identity())) return false;

    std::vector<Element> gens = vec.hyperbolic;
    gens.insert(gens.end(), vec.elliptic.begin(), vec.elliptic.end());
    return static_cast<long long>(subgroup_closure(g, gens).size()) == g.order();
}

namespace detail {

/// Per-group data shared across the signature searches of one scan.
struct SearchContext {
    explicit SearchContext(const Group& group) : g(group), size(group.order()) {
        for (long long idx = 0; idx < size; ++idx) {
            Element x = g.element_at(idx);
            by_order[g.element_order(x)].push_back(x);
        }
    }

    const std::vector<Element>& class_reps() {
        if (reps.empty()) reps = conjugacy_class_representatives(g);
        return reps;
    }

    const std::vector<Element>& elements_of_order(long long o) {
        static const std::vector<Element> kEmpty;
        auto it = by_order.find(o);
        return it == by_order.end() ? kEmpty : it->second;
    }

    /// Indicator of {[x,y] : x,y in G}; built on demand (h >= 1 only).
    const std::vector<char>& commutator_set() {
        if (comm_set.empty()) {
            comm_set.assign(size, 0);
            for (long long xi = 0; xi < size; ++xi)
                for (long long yi = 0; yi < size; ++yi)
                    comm_set[g.index_of(
                        g.commutator(g.element_at(xi), g.element_at(yi)))] = 1;
        }
        return comm_set;
    }

    const Group& g;
    long long size;
    std::map<long long, std::vector<Element>> by_order;
    std::vector<Element> reps;
    std::vector<char> comm_set;
};

/// Subgroup generated so far, extended one generator at a time.
struct ClosureState {
    std::vector<char> seen;
    std::vector<long long> members;
    std::vector<Element> gens;
    bool full = false;

    static ClosureState trivial(const Group& g) {
        ClosureState st;
        st.seen.assign(g.order(), 0);
        long long id = g.index_of(g.identity());
        st.seen[id] = 1;
        st.members.push_back(id);
        st.full = g.order() == 1;
        return st;
    }

    ClosureState extended(const Group& g, const Element& x) const {
        if (full) return *this;
        ClosureState st = *this;
        st.gens.push_back(x);
        // Old members are closed under the old generators: multiply them by
        // the new one only; fresh members get the full generator set.
        const std::size_t old_count = st.members.size();
        for (std::size_t head = 0; head < st.members.size(); ++head) {
            Element e = g.element_at(st.members[head]);
            if (head < old_count) {
                long long idx = g.index_of(g.mul(e, x));
                if (!st.seen[idx]) {
                    st.seen[idx] = 1;
                    st.members.push_back(idx);
                }
            } else {
                for (const Element& gen : st.gens) {
                    long long idx = g.index_of(g.mul(e, gen));
                    if (!st.seen[idx]) {
                        st.seen[idx] = 1;
                        st.members.push_back(idx);
                    }
                }
            }
        }
        st.full = static_cast<long long>(st.members.size()) == g.order();
        return st;
    }
};

/// DFS over the search word Y1...Yr [a1,b1]...[ah,bh] = 1 with the
/// elliptic slots ordered by descending period. The returned canonical
/// vector is the inverse word, which realigns the elliptics ascending.
struct VectorSearch {
    SearchContext& ctx;
    const Signature& sig;
    std::vector<long long> search_periods;  // descending
    long long h = 0;

    std::vector<Element> elliptic;  // chosen, parallel to search_periods
    std::vector<Element> pairs;     // a1,b1,...

    explicit VectorSearch(SearchContext& c, const Signature& s) : ctx(c), sig(s) {
        h = sig.h;
        search_periods.assign(sig.periods.rbegin(), sig.periods.rend());
    }

    std::optional<GeneratingVector> run() {
        // Every period must be an element order, and the pool of usable
        // elements must generate (for h = 0; hyperbolic slots are free).
        for (long long p : search_periods)
            if (ctx.elements_of_order(p).empty()) return std::nullopt;
        if (h == 0) {
            std::vector<Element> pool;
            for (long long p : std::set<long long>(search_periods.begin(), search_periods.end()))
                for (const Element& x : ctx.elements_of_order(p)) pool.push_back(x);
            if (static_cast<long long>(subgroup_closure(ctx.g, pool).size()) != ctx.size)
                return std::nullopt;
            if (search_periods.empty())
                return ctx.size == 1 ? std::make_optional(GeneratingVector{}) : std::nullopt;
        }
        elliptic.clear();
        pairs.clear();
        return elliptic_slot(0, ctx.g.identity(), ClosureState::trivial(ctx.g));
    }

    std::optional<GeneratingVector> elliptic_slot(std::size_t slot, const Element& product,
                                                  const ClosureState& closure) {
        const std::size_t r = search_periods.size();
        if (h == 0 && r > 0 && slot == r - 1) {
            // Last slot is forced by the product condition.
            Element y = ctx.g.inverse(product);
            if (ctx.g.element_order(y) != search_periods[slot]) return std::nullopt;
            if (!closure.full && !closure.extended(ctx.g, y).full) return std::nullopt;
            elliptic.push_back(y);
            auto vec = canonical_vector();
            elliptic.pop_back();
            return vec;
        }
        if (slot == r) return hyperbolic_pair(0, product, closure);

        const auto& candidates =
            slot == 0 ? ctx.class_reps() : ctx.elements_of_order(search_periods[slot]);
        for (const Element& y : candidates) {
            if (slot == 0 && ctx.g.element_order(y) != search_periods[0]) continue;
            elliptic.push_back(y);
            auto found = elliptic_slot(slot + 1, ctx.g.mul(product, y),
                                       closure.full ? closure : closure.extended(ctx.g, y));
            elliptic.pop_back();
            if (found) return found;
        }
        return std::nullopt;
    }

    std::optional<GeneratingVector> hyperbolic_pair(long long pair, const Element& product,
                                                    const ClosureState& closure) {
        if (pair == h) {
            if (!(product == ctx.g.identity())) return std::nullopt;
            if (!closure.full) return std::nullopt;
            return canonical_vector();
        }
        if (pair == h - 1) return last_hyperbolic_pair(product, closure);
        for (long long ai = 0; ai < ctx.size; ++ai) {
            Element a = ctx.g.element_at(ai);
            for (long long bi = 0; bi < ctx.size; ++bi) {
                Element b = ctx.g.element_at(bi);
                pairs.push_back(a);
                pairs.push_back(b);
                ClosureState next = closure.full ? closure : closure.extended(ctx.g, a);
                if (!next.full) next = next.extended(ctx.g, b);
                auto found = hyperbolic_pair(
                    pair + 1, ctx.g.mul(product, ctx.g.commutator(a, b)), next);
                pairs.pop_back();
                pairs.pop_back();
                if (found) return found;
            }
        }
        return std::nullopt;
    }

    std::optional<GeneratingVector> last_hyperbolic_pair(const Element& product,
                                                         const ClosureState& closure) {
        Element target = ctx.g.inverse(product);  // need [a,b] = target
        if (!ctx.commutator_set()[ctx.g.index_of(target)]) return std::nullopt;
        for (long long ai = 0; ai < ctx.size; ++ai) {
            Element a = ctx.g.element_at(ai);
            for (long long bi = 0; bi < ctx.size; ++bi) {
                Element b = ctx.g.element_at(bi);
                if (!(ctx.g.commutator(a, b) == target)) continue;
                ClosureState next = closure.full ? closure : closure.extended(ctx.g, a);
                if (!next.full) next = next.extended(ctx.g, b);
                if (!next.full) continue;
                pairs.push_back(a);
                pairs.push_back(b);
                auto vec = canonical_vector();
                pairs.pop_back();
                pairs.pop_back();
                return vec;
            }
        }
        return std::nullopt;
    }

    /// Invert the search word: Y1...Yr C1...Ch = 1 becomes
    /// [b_h,a_h]...[b_1,a_1] Yr^-1 ... Y1^-1 = 1, whose elliptic part is
    /// aligned with the ascending period order of the signature.
    std::optional<GeneratingVector> canonical_vector() const {
        GeneratingVector vec;
        for (long long pair = h - 1; pair >= 0; --pair) {
            vec.hyperbolic.push_back(pairs[2 * pair + 1]);
            vec.hyperbolic.push_back(pairs[2 * pair]);
        }
        for (auto it = elliptic.rbegin(); it != elliptic.rend(); ++it)
            vec.elliptic.push_back(ctx.g.inverse(*it));
        if (!is_surface_kernel_vector(ctx.g, sig, vec)) return std::nullopt;
        return vec;
    }
};

inline std::optional<GeneratingVector> find_vector_with_context(SearchContext& ctx,
                                                                const Signature& sig) {
    VectorSearch search(ctx, sig);
    return search.run();
}

}  // namespace detail

/// First valid vector in canonical search order, if any.
inline std::optional<GeneratingVector> find_generating_vector(const Group& g,
                                                              const Signature& sig) {
    detail::SearchContext ctx(g);
    return detail::find_vector_with_context(ctx, sig);
}

/// First witness (signature, vector) over all signatures compatible with
/// |G|, the genus, and the element orders of G.
inline std::optional<std::pair<Signature, GeneratingVector>> acts_on_genus(const Group& g,
                                                                           long long genus) {
    if (genus < 2) throw Error("acts_on_genus: genus must be >= 2");
    detail::SearchContext ctx(g);
    for (const Signature& sig : enumerate_signatures_for(g.order(), genus, element_order_set(g))) {
        auto vec = detail::find_vector_with_context(ctx, sig);
        if (vec) return std::make_pair(sig, std::move(*vec));
    }
    return std::nullopt;
}

struct MinGenusRecord {
    MetacyclicParams params;
    long long min_genus = 0;
    Signature witness_signature;
    GeneratingVector witness_vector;
    long long search_cap = 0;
};

/// Least genus in [2, genus_cap] admitting an action, with witness.
inline std::optional<MinGenusRecord> min_genus(const Group& g, long long genus_cap) {
    if (genus_cap < 2) throw Error("min_genus: genus cap must be >= 2");
    detail::SearchContext ctx(g);
    std::set<long long> orders = element_order_set(g);
    for (long long genus = 2; genus <= genus_cap; ++genus) {
        for (const Signature& sig : enumerate_signatures_for(g.order(), genus, orders)) {
            auto vec = detail::find_vector_with_context(ctx, sig);
            if (vec)
                return MinGenusRecord{g.params(), genus, sig, std::move(*vec), genus_cap};
        }
    }
    return std::nullopt;
}

}  // namespace symgenus
