#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "domenum/oracles.hpp"
#include "domenum/recognition.hpp"
#include "test_helpers.hpp"

using namespace domenum;
namespace dt = domenum::testing;

TEST_CASE("weak simplicial vertices") {
    Graph c4 = dt::c4_named();
    CHECK(is_weak_simplicial(c4, "v1"));

    Graph c6 = dt::cycle(6);
    for (int v = 0; v < 6; ++v) {
        WsViolation w;
        CHECK_FALSE(is_weak_simplicial(c6, c6.id_of(v), &w));
        // certificate names two neighbors of v with incomparable neighborhoods
        CHECK(c6.adjacent(v, w.x));
        CHECK(c6.adjacent(v, w.y));
        CHECK_FALSE(w.adjacent);
        Bitset nx = c6.neighbors(w.x), ny = c6.neighbors(w.y);
        CHECK_FALSE(nx.subset_of(ny));
        CHECK_FALSE(ny.subset_of(nx));
    }

    // a leaf of any tree is weak-simplicial
    Graph star = dt::make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(is_weak_simplicial(star, "b"));
    // triangle vertices fail on independence
    Graph c3 = dt::cycle(3);
    WsViolation w;
    CHECK_FALSE(is_weak_simplicial(c3, "a", &w));
    CHECK(w.adjacent);
}

TEST_CASE("weak simplicial elimination ordering") {
    Graph c4 = dt::c4_named();
    auto order = weak_simplicial_ordering(c4);
    REQUIRE(order.has_value());
    CHECK(verify_elimination_ordering(c4, *order));
    // deterministic: smallest-first peeling read back to front
    std::vector<std::string> names;
    for (int v : *order) names.push_back(c4.id_of(v));
    CHECK(names == std::vector<std::string>{"v4", "v3", "v2", "v1"});

    CHECK_FALSE(weak_simplicial_ordering(dt::cycle(6)).has_value());

    Graph k23 = dt::make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    auto k23_order = weak_simplicial_ordering(k23);
    REQUIRE(k23_order.has_value());
    CHECK(verify_elimination_ordering(k23, *k23_order));
}

TEST_CASE("is_chordal_bipartite basics") {
    CHECK(is_chordal_bipartite(dt::c4_named()));
    CHECK_FALSE(is_chordal_bipartite(dt::cycle(6)));
    CHECK_FALSE(is_chordal_bipartite(dt::cycle(5)));
    CHECK(is_chordal_bipartite(dt::path(7)));
    // any tree
    Graph spider = dt::make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
    CHECK(is_chordal_bipartite(spider));
}

TEST_CASE("recognition agrees with the definition oracle") {
    std::mt19937_64 rng(17);
    int chordal_bipartite_seen = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 2 + int(rng() % 7);
        Graph g = dt::random_graph(n, 0.15 + (trial % 5) * 0.15, rng);
        bool by_ordering = is_chordal_bipartite(g);
        bool by_definition = is_chordal_bipartite_by_definition(g);
        REQUIRE_MESSAGE(by_ordering == by_definition, "disagreement on a random graph");
        if (by_ordering) {
            ++chordal_bipartite_seen;
            auto order = weak_simplicial_ordering(g);
            CHECK(verify_elimination_ordering(g, *order));
        }
    }
    CHECK(chordal_bipartite_seen > 500);  // the sweep exercised real positives
}

TEST_CASE("chain orders") {
    // x = {a,b}, y = {c}, edges ac, bc: tie broken by id
    Graph g1 = dt::make_graph(3, {{0, 2}, {1, 2}});
    auto co1 = std::get<ChainOrders>(
        chain_orders(g1, Bitset::of(3, {0, 1}), Bitset::of(3, {2})));
    CHECK(co1.x_order == std::vector<int>{0, 1});
    CHECK(co1.y_order == std::vector<int>{2});

    Graph c4 = dt::c4_named();
    Bitset x = c4.set_of({"v1", "v3"}), y = c4.set_of({"v2", "v4"});
    CHECK(std::holds_alternative<ChainOrders>(chain_orders(c4, x, y)));

    // P5 sides are not a chain: the two leaves' parents are incomparable
    Graph p5 = dt::path(5);
    Bitset odd = p5.set_of({"a", "c", "e"}), even = p5.set_of({"b", "d"});
    auto res = chain_orders(p5, even, odd);
    REQUIRE(std::holds_alternative<NotChainWitness>(res));
    auto w = std::get<NotChainWitness>(res);
    CHECK(w.u != w.v);
}

TEST_CASE("chain orders inclusion chains hold literally") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = dt::random_graph(8, 0.4, rng);
        auto bp = bipartition(g);
        if (!std::holds_alternative<Bipartition>(bp)) continue;
        auto& sides = std::get<Bipartition>(bp);
        auto res = chain_orders(g, sides.side_a, sides.side_b);
        if (auto* co = std::get_if<ChainOrders>(&res)) {
            for (std::size_t i = 0; i + 1 < co->x_order.size(); ++i)
                CHECK((g.neighbors(co->x_order[i]) & sides.side_b)
                          .subset_of(g.neighbors(co->x_order[i + 1]) & sides.side_b));
            for (std::size_t i = 0; i + 1 < co->y_order.size(); ++i)
                CHECK((g.neighbors(co->y_order[i + 1]) & sides.side_a)
                          .subset_of(g.neighbors(co->y_order[i]) & sides.side_a));
        } else {
            auto w = std::get<NotChainWitness>(res);
            Bitset other = sides.side_a.test(w.u) ? sides.side_b : sides.side_a;
            Bitset nu = g.neighbors(w.u) & other, nv = g.neighbors(w.v) & other;
            CHECK_FALSE(nu.subset_of(nv));
            CHECK_FALSE(nv.subset_of(nu));
        }
    }
}
