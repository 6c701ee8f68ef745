#include "helpers.hpp"

#include <dismantle/cliques.hpp>
#include <dismantle/dismantling.hpp>
#include <dismantle/generators.hpp>
#include <dismantle/transitivity.hpp>

#include <doctest.h>

#include <set>

using namespace dismantle;
using namespace testing_support;

TEST_CASE("automorphism group orders") {
    CHECK(automorphisms(cycle_graph(5)).order == 10);
    CHECK(automorphisms(complete_graph(4)).order == 24);
    CHECK(automorphisms(kneser(5, 2)).order == 120);
    CHECK(automorphisms(circulant(8, {1, 2})).order == 16);
    CHECK(automorphisms(circulant(6, {1, 2})).order == 48);
    CHECK(automorphisms(path_graph(4)).order == 2);
    CHECK(automorphisms(cubion(2)).order == 8);
    CHECK(automorphisms(complete_graph(12)).order == 479001600);
    auto big = automorphisms(complete_graph(21));
    CHECK(big.order_saturated);
    CHECK_THROWS(automorphisms(complete_graph(33)));
}

TEST_CASE("listed automorphisms are distinct and preserve adjacency") {
    for (auto g : {cycle_graph(6), kneser(5, 2), cubion(2), hypercube(3)}) {
        auto a = automorphisms(g);
        REQUIRE(a.elements.size() == a.order);
        std::set<std::vector<int>> seen(a.elements.begin(), a.elements.end());
        CHECK(seen.size() == a.order);
        for (auto & s : a.elements)
            CHECK(is_automorphism(g, s));
        for (auto & s : a.generators)
            CHECK(is_automorphism(g, s));
    }
    CHECK(automorphisms(complete_graph(8)).elements.empty());  // 40320 is over the listing limit
    CHECK_FALSE(is_automorphism(cycle_graph(4), {0, 2, 1, 3}));
}

TEST_CASE("orbits") {
    auto p4 = automorphisms(path_graph(4));
    CHECK(p4.orbits == std::vector<std::vector<int>>{{0, 3}, {1, 2}});
    auto q2 = automorphisms(cubion(2));
    CHECK(q2.orbits.size() == 2);
    auto w = automorphisms(wheel(5));
    CHECK(w.orbits.size() == 2);
    CHECK(w.orbit_of[5] != w.orbit_of[0]);
}

TEST_CASE("vertex-transitivity") {
    for (int n = 3; n <= 10; ++n)
        CHECK(is_vertex_transitive(cycle_graph(n)));
    CHECK_FALSE(is_vertex_transitive(path_graph(4)));
    CHECK(is_vertex_transitive(kneser(5, 2)));
    CHECK_FALSE(is_vertex_transitive(wheel(6)));
    CHECK(is_vertex_transitive(hypercube(3)));
    CHECK(is_vertex_transitive(from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("complete-transitivity") {
    for (int n = 1; n <= 6; ++n)
        for (int i = 1; i <= n; ++i)
            CHECK(is_i_complete_transitive(complete_graph(n), i));
    CHECK(is_i_complete_transitive(kneser(5, 2), 2));
    CHECK(is_i_complete_transitive(cycle_graph(6), 2));
    // the octahedron is transitive on ordered triangles
    CHECK(is_i_complete_transitive(circulant(6, {1, 2}), 3));
    // vertex-transitive, but edges at distance 1 and 2 lie in different orbits
    CHECK(is_i_complete_transitive(circulant(8, {1, 2}), 1));
    CHECK_FALSE(is_i_complete_transitive(circulant(8, {1, 2}), 2));
    // the Wagner graph: transitive on vertices, not on edges
    CHECK_FALSE(is_i_complete_transitive(circulant(8, {1, 4}), 2));
    CHECK_FALSE(is_i_complete_transitive(path_graph(3), 1));
    CHECK_THROWS(is_i_complete_transitive(cycle_graph(4), 0));
}

TEST_CASE("1-complete-transitivity is vertex-transitivity") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        auto g = random_graph(2 + i % 7, 0.5, rng);
        CHECK(is_i_complete_transitive(g, 1) == is_vertex_transitive(g));
    }
    for (int n = 3; n <= 12; ++n)
        for (int mask = 1; mask < (1 << (n / 2)); ++mask) {
            std::vector<int> d;
            for (int j = 0; j < n / 2; ++j)
                if ((mask >> j) & 1)
                    d.push_back(j + 1);
            auto g = circulant(n, d);
            CHECK(is_i_complete_transitive(g, 1) == is_vertex_transitive(g));
        }
}

TEST_CASE("transitive graph with a clique neighbourhood: that clique is a component") {
    std::vector<Graph> corpus{from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}), circulant(6, {3}),
                              complete_graph(5), circulant(9, {3})};
    for (auto & g : corpus) {
        REQUIRE(is_vertex_transitive(g));
        for (int x = 0; x < g.order(); ++x) {
            auto closed = g.closed_neighbours(x);
            if (!is_clique(g, closed))
                continue;
            for (auto comp : components(g, g.vertices()))
                if (comp.contains(x))
                    CHECK(comp == closed);
        }
    }
}

TEST_CASE("transitive graphs in D_0 or D_1 are complete") {
    std::vector<Graph> corpus{kneser(5, 2), hypercube(3), circulant(6, {1, 2}), circulant(8, {1, 2})};
    for (int n = 1; n <= 8; ++n) {
        corpus.push_back(complete_graph(n));
        if (n >= 3)
            corpus.push_back(cycle_graph(n));
    }
    for (auto & g : corpus) {
        bool complete = is_complete(g);
        if (is_vertex_transitive(g) && is_k_dismantlable(g, 0).status == Status::yes)
            CHECK(complete);
        if (clique_number(g) >= 2 && is_i_complete_transitive(g, 2) &&
            is_k_dismantlable(g, 1).status == Status::yes)
            CHECK(complete);
    }
}
