#pragma once

/**
 * @file abelian.hpp
 * @brief Abelianization of signature groups and derived-subgroup signatures.
 *
 * The group of a signature (h; m1,...,mr) abelianizes to the quotient of
 * Z^r (one generator per period, plus 2h free hyperbolic generators) by
 * the relation lattice spanned by mi*ei and e1 + ... + er. Everything
 * here is Smith-normal-form arithmetic on that lattice.
 */

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "symgenus/errors.hpp"
#include "symgenus/rational.hpp"
#include "symgenus/signature.hpp"
#include "symgenus/smith.hpp"

namespace symgenus {

namespace detail {

inline Matrix signature_relation_matrix(const Signature& sig) {
    const std::size_t r = sig.num_periods();
    Matrix m;
    if (r == 0) return m;
    m.assign(r + 1, std::vector<Int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) m[i][i] = sig.periods[i];
    for (std::size_t j = 0; j < r; ++j) m[r][j] = 1;
    return m;
}

}  // namespace detail

/// Invariant factors of the abelianized signature group; free rank is 2h.
inline AbelianInvariants abelianization(const Signature& sig) {
    return abelian_invariants_of(detail::signature_relation_matrix(sig), 2 * sig.h);
}

/// Order of the image of the i-th period generator in the abelianization:
/// the least t > 0 with t*ei in the relation lattice.
inline Int image_order_in_abelianization(const Signature& sig, std::size_t period_index) {
    const std::size_t r = sig.num_periods();
    if (period_index >= r) throw Error("image_order_in_abelianization: period index out of range");
    SmithResult snf = smith_decompose(detail::signature_relation_matrix(sig));
    // w lies in the lattice iff every coordinate of w*V is divisible by the
    // matching diagonal entry. Here w = t*ei, so w*V is t times row i of V.
    const auto& v = snf.col_transform;
    Int order = 1;
    for (std::size_t j = 0; j < r; ++j) {
        const Int& d = snf.diagonal[j];
        if (d == 0) {
            if (v[period_index][j] != 0)
                throw Error("image_order_in_abelianization: generator has infinite order");
            continue;
        }
        Int g = boost::multiprecision::gcd(detail::abs_int(v[period_index][j]), d);
        order = boost::multiprecision::lcm(order, Int(d / g));
    }
    return order;
}

/// True iff the signature group surjects onto the cyclic group of order d:
/// positive free rank, or d divides the largest invariant factor.
inline bool admits_cyclic_quotient(const Signature& sig, const Int& d) {
    if (d < 2) throw Error("admits_cyclic_quotient: d must be >= 2");
    if (sig.h > 0) return true;
    AbelianInvariants inv = abelianization(sig);
    if (inv.free_rank > 0) return true;
    return !inv.torsion.empty() && inv.torsion.back() % d == 0;
}

/**
 * Signature of the kernel of an epimorphism from sig onto a group of order
 * quotient_order in which the i-th period generator has image of order
 * image_orders[i]. Each period mi contributes quotient_order/oi periods of
 * value mi/oi (values 1 dropped); the kernel genus solves
 * mu(kernel) = quotient_order * mu(sig) and must be a non-negative integer.
 */
inline Signature kernel_signature(const Signature& sig, const Int& quotient_order,
                                  const std::vector<Int>& image_orders) {
    const std::size_t r = sig.num_periods();
    if (image_orders.size() != r)
        throw Error("kernel_signature: need one image order per period");
    if (quotient_order < 1) throw Error("kernel_signature: quotient order must be positive");

    std::vector<long long> kernel_periods;
    for (std::size_t i = 0; i < r; ++i) {
        const Int& o = image_orders[i];
        if (o < 1 || sig.periods[i] % o != 0)
            throw Error("kernel_signature: image order " + o.str() + " does not divide period " +
                        std::to_string(sig.periods[i]));
        if (quotient_order % o != 0)
            throw Error("kernel_signature: image order " + o.str() +
                        " does not divide quotient order " + quotient_order.str());
        Int copies = quotient_order / o;
        Int value = sig.periods[i] / o;
        if (value == 1) continue;
        for (Int c = 0; c < copies; ++c)
            kernel_periods.push_back(static_cast<long long>(value));
    }

    // 2h' - 2 + sum(1 - 1/m') = quotient_order * mu(sig)
    Rational target = Rational(quotient_order) * measure(sig);
    Rational period_part(0);
    for (long long p : kernel_periods) period_part += Rational(Int(p - 1), Int(p));
    Rational twice_h = target + Rational(2) - period_part;
    if (!twice_h.is_integer() || twice_h.numerator() < 0 || twice_h.numerator() % 2 != 0)
        throw InconsistentData("kernel_signature: kernel genus solves to " +
                               (twice_h / Rational(2)).str());
    return Signature(static_cast<long long>(Int(twice_h.numerator() / 2)), kernel_periods);
}

/// One derived-series step: the kernel of the abelianization map. Only
/// defined when the abelianization is finite (h = 0).
struct DerivedStep {
    AbelianInvariants quotient;
    Signature kernel;
};

inline DerivedStep derived_subgroup_signature(const Signature& sig) {
    if (sig.h > 0)
        throw Error("derived_subgroup_signature: abelianization is infinite for h > 0");
    AbelianInvariants inv = abelianization(sig);
    Int n = inv.torsion_order();
    std::vector<Int> orders;
    orders.reserve(sig.num_periods());
    for (std::size_t i = 0; i < sig.num_periods(); ++i)
        orders.push_back(image_order_in_abelianization(sig, i));
    return DerivedStep{std::move(inv), kernel_signature(sig, n, orders)};
}

}  // namespace symgenus
