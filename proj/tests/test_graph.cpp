#include "helpers.hpp"

#include <dismantle/generators.hpp>
#include <dismantle/oracles.hpp>
#include <dismantle/transitivity.hpp>

#include <doctest.h>

#include <set>

using namespace dismantle;
using namespace testing_support;

TEST_CASE("vertex sets") {
    auto s = VertexSet::of({3, 1, 63});
    CHECK(s.size() == 3);
    CHECK(s.first() == 1);
    CHECK(s.to_vector() == std::vector<int>{1, 3, 63});
    CHECK(s.without(3).with(0) == VertexSet::of({0, 1, 63}));
    CHECK(VertexSet::full(64).size() == 64);
    CHECK(VertexSet::of({1, 2}).is_subset_of(VertexSet::full(3)));
    CHECK(VertexSet::lex_less(VertexSet::of({0, 5}), VertexSet::of({1, 2})));
    CHECK(VertexSet::lex_less(VertexSet::of({0, 1}), VertexSet::of({0, 1, 2})));
}

TEST_CASE("builder rejects loops and bad labels") {
    GraphBuilder b(3);
    CHECK(b.add_edge(0, 1));
    CHECK_FALSE(b.add_edge(1, 0));
    CHECK_THROWS(b.add_edge(2, 2));
    CHECK_THROWS(b.add_edge(0, 3));
    b.set_label(0, "a");
    CHECK_THROWS(b.build());  // labels must be total
    b.set_label(1, "a");
    b.set_label(2, "c");
    CHECK_THROWS(b.build());  // and unique
}

TEST_CASE("open neighbourhoods") {
    CHECK(open_neighbourhood(complete_graph(4), 0) == VertexSet::of({1, 2, 3}));
    auto c5 = cycle_graph(5);
    for (int v = 0; v < 5; ++v) {
        auto nb = open_neighbourhood(c5, v);
        CHECK(nb.size() == 2);
        CHECK_FALSE(c5.adjacent(nb.first(), nb.without(nb.first()).first()));
    }
    // in Q_2 the apex alpha_1_0 sees the other two apexes and the tuples with x_1 = 0
    auto q2 = cubion(2);
    int a = q2.at("alpha_1_0");
    auto nb = open_neighbourhood(q2, a);
    CHECK(nb == VertexSet::of({q2.at("alpha_2_0"), q2.at("alpha_2_1"), q2.at("x00"), q2.at("x01")}));
    CHECK(are_isomorphic(q2.induced(nb), path_graph(4)));
    CHECK_THROWS(open_neighbourhood(c5, 5));
}

TEST_CASE("cones") {
    CHECK(cone_apexes(complete_graph(1)) == VertexSet::of({0}));
    CHECK(cone_apexes(wheel(12)) == VertexSet::of({12}));
    CHECK(cone_apexes(cycle_graph(4)).empty());
    CHECK_FALSE(is_cone(cycle_graph(4)));
}

TEST_CASE("domination") {
    CHECK(dominated_vertices(cubion(2)).empty());
    // u - x - v plus y adjacent to all three: x (and u, v) dominated by y
    auto g = from_edges(4, {{0, 1}, {1, 2}, {3, 0}, {3, 1}, {3, 2}});
    auto d = dominated_vertices(g);
    CHECK(std::find(d.begin(), d.end(), Domination{1, 3}) != d.end());
    auto k4 = dominated_vertices(complete_graph(4));
    CHECK(k4.size() == 4);
    CHECK(k4[0] == Domination{0, 1});
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto r = random_graph(7, 0.5, rng);
        for (auto [x, a] : dominated_vertices(r))
            CHECK(r.closed_neighbours(x).is_subset_of(r.closed_neighbours(a)));
    }
}

TEST_CASE("twin quotient") {
    auto k5 = twin_quotient(complete_graph(5));
    CHECK(k5.quotient.order() == 1);
    CHECK(k5.partition.blocks.size() == 1);
    CHECK(k5.partition.blocks[0].size() == 5);

    auto c4 = twin_quotient(cycle_graph(4));
    CHECK(c4.quotient == cycle_graph(4));
    CHECK(c4.partition.blocks.size() == 4);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        auto g = random_graph(8, 0.6, rng);
        auto q = twin_quotient(g);
        auto qq = twin_quotient(q.quotient);
        // the quotient has no twins left
        CHECK(qq.quotient.order() == q.quotient.order());
        CHECK(qq.quotient == q.quotient);
        // one representative per block induces a copy of the quotient
        VertexSet reps;
        for (auto b : q.partition.blocks)
            reps.insert(b.first());
        CHECK(are_isomorphic(g.induced(reps), q.quotient));
        // isomorphic graphs have isomorphic quotients
        auto h = g.permuted(random_perm(8, rng));
        CHECK(are_isomorphic(twin_quotient(h).quotient, q.quotient));
    }
}

TEST_CASE("isomorphism") {
    CHECK(are_isomorphic(cubion(1), path_graph(4)));
    CHECK_FALSE(are_isomorphic(cycle_graph(4), cycle_graph(5)));
    CHECK_FALSE(are_isomorphic(cycle_graph(6), circulant(6, {1, 3})));
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        int n = 3 + i % 10;
        auto g = random_graph(n, 0.4, rng);
        auto p = random_perm(n, rng);
        auto h = g.permuted(p);
        auto f = are_isomorphic(g, h);
        REQUIRE(f);
        for (auto [u, v] : g.edges())
            CHECK(h.adjacent((*f)[u], (*f)[v]));
    }
}

TEST_CASE("canonical keys") {
    auto c5 = cycle_graph(5);
    auto relabelled = c5.permuted({1, 3, 0, 2, 4});
    CHECK(canonical_key(c5) == canonical_key(relabelled));
    CHECK(canonical_key(cycle_graph(4)) != canonical_key(path_graph(4)));

    std::set<std::string> keys;
    enumerate_labeled_graphs(4, [&](const Graph & g) { keys.insert(canonical_key(g)); });
    CHECK(keys.size() == 11);

    // 156 isomorphism classes on 6 vertices
    std::set<std::string> six;
    enumerate_labeled_graphs(6, [&](const Graph & g) { six.insert(canonical_key(g)); });
    CHECK(six.size() == 156);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto g = random_graph(16, 0.5, rng);
        auto h = g.permuted(random_perm(16, rng));
        CHECK(canonical_key(g) == canonical_key(h));
        CHECK(canonical_form(g).order.size() == 16);
    }
    CHECK_THROWS(canonical_key(complete_graph(33)));
}

TEST_CASE("hash ignores labels") {
    CHECK(graph_hash(cubion(2)) == graph_hash(cubion(2).without_labels()));
    CHECK(graph_hash(cycle_graph(5)) != graph_hash(path_graph(5)));
    CHECK(graph_hash(cycle_graph(5)).size() == 16);
}

TEST_CASE("transitive graphs: dominated vertices are exactly the twins") {
    std::vector<Graph> corpus{kneser(5, 2), kneser(6, 2)};
    for (int n = 3; n <= 12; ++n)
        for (int mask = 1; mask < (1 << (n / 2)); ++mask) {
            std::vector<int> d;
            for (int i = 0; i < n / 2; ++i)
                if ((mask >> i) & 1)
                    d.push_back(i + 1);
            corpus.push_back(circulant(n, d));
        }
    for (auto & g : corpus) {
        REQUIRE(is_vertex_transitive(g));
        std::set<int> dominated, twins;
        for (auto d : dominated_vertices(g))
            dominated.insert(d.x);
        for (int x = 0; x < g.order(); ++x)
            for (int y = 0; y < g.order(); ++y)
                if (x != y && g.closed_neighbours(x) == g.closed_neighbours(y))
                    twins.insert(x);
        CHECK(dominated == twins);
        CHECK(is_vertex_transitive(twin_quotient(g).quotient));
    }
}
