#include "helpers.hpp"

#include <dismantle/cliques.hpp>
#include <dismantle/dismantling.hpp>
#include <dismantle/generators.hpp>
#include <dismantle/graph_io.hpp>

#include <doctest.h>

using namespace dismantle;
using namespace testing_support;

TEST_CASE("family specs") {
    auto s = FamilySpec::parse("kneser:5,2");
    CHECK(s.family == "kneser");
    CHECK(s.params == std::vector<int>{5, 2});
    CHECK(s.to_string() == "kneser:5,2");
    CHECK(FamilySpec::parse("parasol").params.empty());
    CHECK(generate(FamilySpec::parse("cycle:7")) == cycle_graph(7));
    CHECK_THROWS(generate(FamilySpec::parse("cycle:2")));
    CHECK_THROWS(generate(FamilySpec::parse("kneser:4,2")));
    CHECK_THROWS(generate(FamilySpec::parse("cubion:0")));
    CHECK_THROWS(generate(FamilySpec::parse("nosuch:3")));
    CHECK_THROWS(FamilySpec::parse("cycle:x"));
}

TEST_CASE("standard families") {
    CHECK(complete_graph(6).size() == 15);
    CHECK(path_graph(5).size() == 4);
    auto w = wheel(12);
    CHECK(w.order() == 13);
    CHECK(w.degree(12) == 12);
    auto pet = kneser(5, 2);
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    CHECK(clique_number(pet) == 2);
    CHECK(hypercube(3).size() == 12);
    CHECK(are_isomorphic(hypercube(2), cycle_graph(4)));
    CHECK(circulant(8, {1, 2}).size() == 16);
    CHECK(circulant(6, {3}).size() == 3);
}

TEST_CASE("octahedron") {
    auto o = octahedron(3);
    CHECK(o.order() == 6);
    for (int v = 0; v < 6; ++v)
        CHECK(o.degree(v) == 4);
    CHECK(o.complement().size() == 3);
    CHECK(are_isomorphic(o, circulant(6, {1, 2})));
}

TEST_CASE("cubion sizes") {
    // counts from an independent construction
    const int edges[] = {0, 3, 18, 64};
    for (int n = 1; n <= 5; ++n) {
        auto q = cubion(n);
        CHECK(q.order() == (1 << n) + 2 * n);
        if (n <= 3)
            CHECK(q.size() == edges[n]);
        CHECK(clique_number(q) >= (1 << n));
        if (q.order() <= kMaxIsoVertices)
            CHECK(are_isomorphic(q, attach_cubion_apexes(hypercube_clique(n), n)));
    }
    CHECK(maximal_cliques(cubion(2)).size() == 9);
    CHECK(maximal_cliques(cubion(3)).size() == 27);
}

TEST_CASE("cubion recursion: apex neighbourhoods are smaller cubions") {
    for (int n = 2; n <= 4; ++n) {
        auto q = cubion(n);
        auto smaller = cubion(n - 1);
        for (int i = 1; i <= n; ++i)
            for (int e = 0; e < 2; ++e) {
                int a = q.at("alpha_" + std::to_string(i) + "_" + std::to_string(e));
                CHECK(are_isomorphic(q.induced(q.neighbours(a)), smaller));
            }
    }
}

TEST_CASE("cubion tuple neighbourhoods 0-dismantle to the octahedron") {
    for (int n = 1; n <= 4; ++n) {
        auto q = cubion(n);
        for (int t = 0; t < (1 << n); ++t) {
            auto nb = q.induced(q.neighbours(t));
            auto core = stiff_core(nb, 0);
            CHECK(are_isomorphic(core.core, octahedron(n)));
        }
    }
}

TEST_CASE("parasol") {
    auto p = parasol();
    CHECK(p.order() == 15);
    CHECK(are_isomorphic(p.induced(p.neighbours(p.at("I"))), cycle_graph(7)));
    // C_4 with pendant edges at two adjacent corners
    auto c4_pendants = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}});
    for (int i = 1; i <= 7; ++i) {
        auto a = p.at("A" + std::to_string(i));
        auto b = p.at("B" + std::to_string(i));
        CHECK(are_isomorphic(p.induced(p.neighbours(a)), cycle_graph(5)));
        auto nb = p.induced(p.neighbours(b));
        CHECK(are_isomorphic(nb, c4_pendants));
        CHECK(stiff_core(nb, 0).core.order() == 4);
    }
    auto b1 = p.neighbours(p.at("B1"));
    CHECK(b1.contains(p.at("B3")));
    CHECK(b1.contains(p.at("B6")));

    auto pb = parasol_plus();
    CHECK(pb.order() == 16);
    int bp = pb.at("B'");
    auto want = (p.neighbours(p.at("B1")) - VertexSet::of({p.at("B3"), p.at("B6")})).with(p.at("B1"));
    CHECK(pb.neighbours(bp) == want);
    CHECK(pb.induced(VertexSet::full(15)) == p);
}

TEST_CASE("bundled parasol file matches the generator") {
    auto g = read_graph_file(data_path("parasol.txt"));
    CHECK(g == parasol());
    CHECK(g.labels() == parasol().labels());
}
