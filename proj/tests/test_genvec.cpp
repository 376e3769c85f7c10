#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "symgenus/genvec.hpp"

using symgenus::Element;
using symgenus::GeneratingVector;
using symgenus::Group;
using symgenus::MetacyclicParams;
using symgenus::Signature;

TEST_CASE("surface kernel vector validation") {
    Group g({8, 2, 3, 0});
    Signature sig(0, {2, 4, 8});
    auto vec = symgenus::find_generating_vector(g, sig);
    REQUIRE(vec.has_value());
    CHECK(symgenus::is_surface_kernel_vector(g, sig, *vec));

    // identity entries fail the exact-order requirement
    GeneratingVector ids;
    ids.elliptic.assign(4, g.identity());
    CHECK_FALSE(symgenus::is_surface_kernel_vector(g, Signature(0, {2, 2, 2, 2}), ids));

    // wrong shape throws
    CHECK_THROWS_AS(symgenus::is_surface_kernel_vector(g, sig, ids), symgenus::ShapeMismatch);

    // an order-correct vector whose product misses the identity fails
    GeneratingVector bad = *vec;
    bad.elliptic[2] = g.power(bad.elliptic[2], 3);  // still order 8
    CHECK(g.element_order(bad.elliptic[2]) == 8);
    CHECK_FALSE(symgenus::is_surface_kernel_vector(g, sig, bad));
}

TEST_CASE("find generating vector fixtures") {
    CHECK(symgenus::find_generating_vector(Group({8, 2, 3, 0}), Signature(0, {2, 4, 8})));
    // C3:C4 has element orders {1,2,3,4,6}: no order-12 entry exists
    CHECK_FALSE(symgenus::find_generating_vector(Group({3, 4, 2, 0}), Signature(0, {2, 4, 12})));
    CHECK(symgenus::find_generating_vector(Group({10, 1, 1, 0}), Signature(0, {2, 5, 10})));
    CHECK(symgenus::find_generating_vector(Group({7, 3, 2, 0}), Signature(0, {3, 3, 7})));
    CHECK(symgenus::find_generating_vector(Group({3, 4, 2, 0}), Signature(0, {3, 4, 4})));
}

TEST_CASE("acts on genus") {
    auto w = symgenus::acts_on_genus(Group({7, 3, 2, 0}), 3);
    REQUIRE(w.has_value());
    CHECK(w->first == Signature(0, {3, 3, 7}));
    CHECK_FALSE(symgenus::acts_on_genus(Group({7, 3, 2, 0}), 2));
    CHECK(symgenus::acts_on_genus(Group({8, 2, 3, 0}), 2));
}

TEST_CASE("acts_on_genus only proposes feasible periods") {
    Group g({3, 4, 2, 0});
    auto orders = symgenus::element_order_set(g);
    for (long long genus = 2; genus <= 6; ++genus) {
        auto w = symgenus::acts_on_genus(g, genus);
        if (!w) continue;
        for (long long p : w->first.periods) CHECK(orders.count(p) == 1);
    }
}

TEST_CASE("minimal genus fixtures") {
    auto rec = symgenus::min_genus(Group({15, 2, 4, 0}), 10);
    REQUIRE(rec.has_value());
    CHECK(rec->min_genus == 5);
    CHECK(symgenus::is_surface_kernel_vector(Group({15, 2, 4, 0}), rec->witness_signature,
                                             rec->witness_vector));
    CHECK(symgenus::genus_of_action(rec->witness_signature, symgenus::Int(30)) == 5);

    auto rec16 = symgenus::min_genus(Group({8, 2, 3, 0}), 5);
    REQUIRE(rec16.has_value());
    CHECK(rec16->min_genus == 2);
    CHECK(rec16->witness_signature == Signature(0, {2, 4, 8}));

    auto rec21 = symgenus::min_genus(Group({7, 3, 2, 0}), 5);
    REQUIRE(rec21.has_value());
    CHECK(rec21->min_genus == 3);
    CHECK(rec21->witness_signature == Signature(0, {3, 3, 7}));

    // out-of-cap search reports nothing
    CHECK_FALSE(symgenus::min_genus(Group({7, 3, 2, 0}), 2).has_value());
}

TEST_CASE("minimal genus of small cyclic groups") {
    for (long long g = 2; g <= 4; ++g) {
        auto rec = symgenus::min_genus(Group({4 * g + 2, 1, 1, 0}), 10);
        REQUIRE(rec.has_value());
        CHECK(rec->min_genus == g);
    }
}

TEST_CASE("trivial and tiny groups act through hyperbolic generators") {
    auto rec = symgenus::min_genus(Group({1, 1, 1, 0}), 4);
    REQUIRE(rec.has_value());
    CHECK(rec->min_genus == 2);
    CHECK(rec->witness_signature == Signature(2, {}));

    // C2 on the torus-with-two-branch-points signature
    Group c2({2, 1, 1, 0});
    auto vec = symgenus::find_generating_vector(c2, Signature(1, {2, 2}));
    REQUIRE(vec.has_value());
    CHECK(symgenus::is_surface_kernel_vector(c2, Signature(1, {2, 2}), *vec));
    CHECK(vec->hyperbolic.size() == 2);
}

TEST_CASE("conjugation moves valid vectors to valid vectors") {
    std::mt19937_64 rng(909090);
    std::vector<std::pair<MetacyclicParams, Signature>> cases = {
        {{8, 2, 3, 0}, Signature(0, {2, 4, 8})},
        {{7, 3, 2, 0}, Signature(0, {3, 3, 7})},
        {{3, 4, 2, 0}, Signature(0, {3, 4, 4})},
        {{2, 1, 1, 0}, Signature(1, {2, 2})},
    };
    for (const auto& [params, sig] : cases) {
        Group g(params);
        auto vec = symgenus::find_generating_vector(g, sig);
        REQUIRE(vec.has_value());
        std::uniform_int_distribution<long long> pick(0, g.order() - 1);
        for (int iter = 0; iter < 10; ++iter) {
            Element c = g.element_at(pick(rng));
            GeneratingVector moved;
            for (const Element& x : vec->hyperbolic) moved.hyperbolic.push_back(g.conjugate(c, x));
            for (const Element& x : vec->elliptic) moved.elliptic.push_back(g.conjugate(c, x));
            CHECK(symgenus::is_surface_kernel_vector(g, sig, moved));
        }
    }
}

TEST_CASE("search agrees with the unpruned oracle on small groups") {
    for (const MetacyclicParams& p : symgenus::enumerate_metacyclic(1, 24)) {
        Group g(p);
        auto orders = symgenus::element_order_set(g);
        for (long long genus = 2; genus <= 4; ++genus) {
            for (const Signature& sig : symgenus::enumerate_signatures_for(g.order(), genus,
                                                                           orders)) {
                bool pruned = symgenus::find_generating_vector(g, sig).has_value();
                bool brute = oracles::vector_exists_bruteforce(g, sig);
                INFO(p.str() << " " << sig.str());
                CHECK(pruned == brute);
            }
        }
    }
}
