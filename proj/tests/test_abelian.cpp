#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "symgenus/abelian.hpp"

using symgenus::AbelianInvariants;
using symgenus::Int;
using symgenus::Rational;
using symgenus::Signature;

namespace {

std::vector<Int> torsion_of(const Signature& sig) { return symgenus::abelianization(sig).torsion; }

}  // namespace

TEST_CASE("abelianization fixtures") {
    CHECK(torsion_of(Signature(0, {2, 4, 8})) == std::vector<Int>{Int(2), Int(4)});
    CHECK(torsion_of(Signature(0, {2, 3, 12})) == std::vector<Int>{Int(6)});
    for (long long k = 2; k <= 5; ++k)
        CHECK(torsion_of(Signature(0, {2, 3, 6 * k})) == std::vector<Int>{Int(6)});
    CHECK(torsion_of(Signature(0, {2, 3, 10})) == std::vector<Int>{Int(2)});
    CHECK(torsion_of(Signature(0, {5, 5, 5})) == std::vector<Int>{Int(5), Int(5)});
    CHECK(torsion_of(Signature(0, {7, 7, 7})) == std::vector<Int>{Int(7), Int(7)});
    CHECK(torsion_of(Signature(0, {2, 8, 8})) == std::vector<Int>{Int(2), Int(8)});
    CHECK(symgenus::abelianization(Signature(2, {3, 3})).free_rank == 4);
    CHECK(symgenus::abelianization(Signature(1, {})).free_rank == 2);
}

TEST_CASE("torsion order equals the lattice index") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> rgen(1, 5);
    std::uniform_int_distribution<long long> pgen(2, 16);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<long long> periods;
        for (int i = rgen(rng); i > 0; --i) periods.push_back(pgen(rng));
        Signature sig(0, periods);
        AbelianInvariants inv = symgenus::abelianization(sig);
        CHECK(inv.free_rank == 0);
        // The index of the relation lattice is the gcd of the maximal minors.
        auto factors = oracles::smith_by_minors(symgenus::detail::signature_relation_matrix(sig));
        Int index = 1;
        for (const Int& d : factors) index *= d;
        CHECK(inv.torsion_order() == index);
    }
}

TEST_CASE("image orders of period generators") {
    Signature s(0, {2, 3, 10});
    // canonical period order: index 0 -> 2, 1 -> 3, 2 -> 10
    CHECK(symgenus::image_order_in_abelianization(s, 1) == 1);
    CHECK(symgenus::image_order_in_abelianization(s, 0) == 2);
    Signature sevens(0, {7, 7, 7});
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(symgenus::image_order_in_abelianization(sevens, i) == 7);
    CHECK_THROWS_AS(symgenus::image_order_in_abelianization(s, 3), symgenus::Error);
}

TEST_CASE("image orders match the gcd/lcm closed form") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> rgen(1, 5);
    std::uniform_int_distribution<long long> pgen(2, 18);
    std::uniform_int_distribution<long long> hgen(0, 1);
    for (int iter = 0; iter < 150; ++iter) {
        std::vector<long long> periods;
        for (int i = rgen(rng); i > 0; --i) periods.push_back(pgen(rng));
        Signature sig(hgen(rng), periods);
        for (std::size_t i = 0; i < sig.num_periods(); ++i)
            CHECK(symgenus::image_order_in_abelianization(sig, i) ==
                  oracles::image_order_closed_form(sig, i));
    }
}

TEST_CASE("kernel signature fixtures") {
    CHECK(symgenus::kernel_signature(Signature(0, {2, 3, 10}), 2, {Int(2), Int(1), Int(2)}) ==
          Signature(0, {3, 3, 5}));
    CHECK(symgenus::kernel_signature(Signature(0, {3, 3, 5}), 3, {Int(3), Int(3), Int(1)}) ==
          Signature(0, {5, 5, 5}));
    CHECK(symgenus::kernel_signature(Signature(0, {2, 3, 14}), 2, {Int(2), Int(1), Int(2)}) ==
          Signature(0, {3, 3, 7}));
    CHECK_THROWS_AS(
        symgenus::kernel_signature(Signature(0, {2, 3, 10}), 2, {Int(2), Int(1), Int(1)}),
        symgenus::InconsistentData);
    CHECK_THROWS_AS(symgenus::kernel_signature(Signature(0, {2, 3, 10}), 2, {Int(2), Int(2)}),
                    symgenus::Error);
}

TEST_CASE("measure multiplies by the quotient order along derived steps") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> rgen(3, 5);
    std::uniform_int_distribution<long long> pgen(2, 12);
    int checked = 0;
    while (checked < 60) {
        std::vector<long long> periods;
        for (int i = rgen(rng); i > 0; --i) periods.push_back(pgen(rng));
        Signature sig(0, periods);
        if (!symgenus::is_hyperbolic(sig)) continue;
        AbelianInvariants inv = symgenus::abelianization(sig);
        if (inv.torsion_order() == 1 || inv.torsion_order() > 64) continue;
        auto step = symgenus::derived_subgroup_signature(sig);
        CHECK(symgenus::measure(step.kernel) ==
              Rational(inv.torsion_order()) * symgenus::measure(sig));
        ++checked;
    }
}

TEST_CASE("cyclic quotient admissibility") {
    CHECK(symgenus::admits_cyclic_quotient(Signature(0, {2, 8, 8}), 8));
    CHECK_FALSE(symgenus::admits_cyclic_quotient(Signature(0, {2, 3, 10}), 4));
    CHECK(symgenus::admits_cyclic_quotient(Signature(1, {5}), 9));
    CHECK(symgenus::admits_cyclic_quotient(Signature(1, {5}), 1000));
    CHECK_FALSE(symgenus::admits_cyclic_quotient(Signature(0, {2, 4, 8}), 8));
}

TEST_CASE("cyclic quotient admissibility agrees with homomorphism enumeration") {
    std::mt19937_64 rng(11011);
    std::uniform_int_distribution<int> rgen(1, 4);
    std::uniform_int_distribution<long long> pgen(2, 16);
    std::uniform_int_distribution<long long> hgen(0, 1);
    std::uniform_int_distribution<long long> dgen(2, 12);
    for (int iter = 0; iter < 120; ++iter) {
        std::vector<long long> periods;
        for (int i = rgen(rng); i > 0; --i) periods.push_back(pgen(rng));
        Signature sig(hgen(rng), periods);
        long long d = dgen(rng);
        CHECK(symgenus::admits_cyclic_quotient(sig, Int(d)) ==
              oracles::admits_quotient_bruteforce(sig, d));
    }
}
