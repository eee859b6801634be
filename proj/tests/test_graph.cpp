#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "domenum/errors.hpp"
#include "domenum/graph.hpp"
#include "test_helpers.hpp"

using namespace domenum;
namespace dt = domenum::testing;

TEST_CASE("builder normalizes and validates") {
    Graph g = dt::make_graph(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_THROWS_AS(Graph::Builder().add_edge("a", "a"), InvalidEdgeError);
    CHECK_THROWS_AS(g.index_of("zz"), UnknownVertexError);
}

TEST_CASE("components of P4 and C4") {
    Graph p4 = dt::path(4);
    auto comps = components_of(p4, {"b"});
    REQUIRE(comps.size() == 2);
    CHECK(p4.ids_of(comps[0]) == std::vector<std::string>{"a"});
    CHECK(p4.ids_of(comps[1]) == std::vector<std::string>{"c", "d"});

    Graph c4 = dt::c4_named();
    CHECK(components_of(c4, {}).size() == 1);
    auto split = components_of(c4, {"v1", "v3"});
    REQUIRE(split.size() == 2);
    CHECK(c4.ids_of(split[0]) == std::vector<std::string>{"v2"});
    CHECK(c4.ids_of(split[1]) == std::vector<std::string>{"v4"});
    CHECK_THROWS_AS(components_of(c4, {"nope"}), UnknownVertexError);
}

TEST_CASE("components form a partition and coarsen when merged back") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = dt::random_graph(8, 0.3, rng);
        Bitset removed(8);
        std::uniform_int_distribution<int> pick(0, 7);
        for (int i = 0; i < 3; ++i) removed.set(pick(rng));
        auto comps = components(g, removed);
        Bitset seen(8);
        for (const auto& c : comps) {
            CHECK_FALSE((c & seen).any());
            CHECK_FALSE((c & removed).any());
            seen |= c;
        }
        CHECK((seen | removed) == Bitset::full(8));
        // every removed-run component sits inside one full-graph component
        auto whole = components(g, Bitset(8));
        for (const auto& c : comps) {
            int within = 0;
            for (const auto& w : whole)
                if (c.subset_of(w)) ++within;
            CHECK(within == 1);
        }
    }
}

TEST_CASE("bipartition anchors and odd cycle witness") {
    Graph c4 = dt::c4_named();
    auto bp = std::get<Bipartition>(bipartition(c4));
    CHECK(c4.ids_of(bp.side_a) == std::vector<std::string>{"v1", "v3"});
    CHECK(c4.ids_of(bp.side_b) == std::vector<std::string>{"v2", "v4"});

    Graph p4 = dt::path(4);
    auto bp2 = std::get<Bipartition>(bipartition(p4));
    CHECK(p4.ids_of(bp2.side_a) == std::vector<std::string>{"a", "c"});
    CHECK(p4.ids_of(bp2.side_b) == std::vector<std::string>{"b", "d"});

    Graph c3 = dt::cycle(3);
    auto odd = std::get<OddCycle>(bipartition(c3));
    CHECK(odd.cycle.size() == 3);
    // witness really is a cycle
    for (std::size_t i = 0; i < odd.cycle.size(); ++i)
        CHECK(c3.adjacent(odd.cycle[i], odd.cycle[(i + 1) % odd.cycle.size()]));
}

TEST_CASE("odd cycle witness on random non-bipartite graphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = dt::random_graph(9, 0.35, rng);
        auto res = bipartition(g);
        if (auto* odd = std::get_if<OddCycle>(&res)) {
            CHECK(odd->cycle.size() % 2 == 1);
            for (std::size_t i = 0; i < odd->cycle.size(); ++i)
                CHECK(g.adjacent(odd->cycle[i], odd->cycle[(i + 1) % odd->cycle.size()]));
        } else {
            auto& bp = std::get<Bipartition>(res);
            bp.side_a.for_each([&](int u) { CHECK_FALSE((g.neighbors(u) & bp.side_a).any()); });
            bp.side_b.for_each([&](int u) { CHECK_FALSE((g.neighbors(u) & bp.side_b).any()); });
        }
    }
}

TEST_CASE("second neighborhood") {
    Graph p4 = dt::path(4);
    Bitset all = p4.vertex_set();
    CHECK(p4.ids_of(p4.second_neighborhood(p4.index_of("a"), all)) ==
          std::vector<std::string>{"c"});
    Bitset no_c = all;
    no_c.reset(p4.index_of("c"));
    CHECK(p4.second_neighborhood(p4.index_of("a"), no_c).none());
}
