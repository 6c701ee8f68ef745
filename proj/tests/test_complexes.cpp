// Bundled dunce hat and Bing's house data, their expansion certificates,
// and the constructed cubion certificate.

#include <dismantle/cliques.hpp>
#include <dismantle/dismantling.hpp>
#include <dismantle/generators.hpp>
#include <dismantle/graph_io.hpp>
#include <dismantle/suite.hpp>
#include <dismantle/transitivity.hpp>

#include <doctest.h>

#include <map>
#include <set>

using namespace dismantle;

namespace {

// vertex names along a certificate, including the added vertices
std::map<int, std::string> names_with_additions(const Graph & g, const Certificate & c) {
    std::map<int, std::string> out;
    for (int v = 0; v < g.order(); ++v)
        out[v] = g.name(v);
    for (auto & m : c.moves)
        if (m.kind == Move::Kind::add)
            out[m.v] = m.label;
    return out;
}

std::vector<std::string> deleted_names(const Graph & g, const Certificate & c) {
    auto names = names_with_additions(g, c);
    std::vector<std::string> out;
    for (auto & m : c.moves)
        if (m.kind == Move::Kind::remove)
            out.push_back(names[m.v]);
    return out;
}

std::vector<std::string> added_names(const Certificate & c) {
    std::vector<std::string> out;
    for (auto & m : c.moves)
        if (m.kind == Move::Kind::add)
            out.push_back(m.label);
    return out;
}

bool is_cycle(const Graph & g) {
    if (g.order() < 4 || !is_connected(g))
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

} // namespace

TEST_CASE("dunce hat data") {
    auto dh = dunce_hat();
    CHECK(dh.order() == 17);
    std::set<std::string> labels(dh.labels().begin(), dh.labels().end());
    std::set<std::string> want{"1", "2", "3", "4", "z"};
    for (char c = 'a'; c <= 'l'; ++c)
        want.insert(std::string(1, c));
    CHECK(labels == want);
    CHECK(graph_hash(dh) == graph_hash(read_graph_file(data_path("dunce_hat.txt"))));
    // a..l around z is a 12-wheel
    VertexSet rim;
    for (char c = 'a'; c <= 'l'; ++c)
        rim.insert(dh.at(std::string(1, c)));
    CHECK(are_isomorphic(dh.induced(rim.with(dh.at("z"))), wheel(12)));
    // no vertex link is a cone, so nothing can be deleted at any level
    for (int k = 0; k <= 3; ++k)
        CHECK(k_dismantlable_vertices(dh, k).vertices.empty());
    CHECK(is_non_evasive(dh).status == Status::no);
}

TEST_CASE("dunce hat expansion certificate") {
    auto dh = dunce_hat();
    auto cert = read_certificate_file(data_path("dunce_hat.cert.json"));
    CHECK(cert.graph_hash == graph_hash(dh));
    CHECK(added_names(cert) == std::vector<std::string>{"1'", "1''", "2'", "3'"});
    auto rep = verify_move_sequence(dh, cert);
    CHECK(rep.valid);
    CHECK(rep.final_vertices.size() == 1);
    for (auto & m : cert.moves)
        if (m.kind == Move::Kind::add)
            CHECK(m.k == 0);
    // after the level-1 deletions what is left is the 12-wheel
    std::size_t last = 0;
    for (std::size_t i = 0; i < cert.moves.size(); ++i)
        if (cert.moves[i].kind == Move::Kind::remove && cert.moves[i].k == 1)
            last = i + 1;
    auto [h, present] = apply_moves(dh, {cert.moves.begin(), cert.moves.begin() + static_cast<long>(last)});
    CHECK(are_isomorphic(h.induced(present), wheel(12)));
    auto names = deleted_names(dh, cert);
    REQUIRE(names.size() >= 4);
    CHECK(std::vector<std::string>(names.begin(), names.begin() + 4) == std::vector<std::string>{"1", "2", "3", "4"});
}

TEST_CASE("dunce hat alternating sequence") {
    auto dh = dunce_hat();
    auto cert = read_certificate_file(data_path("dunce_hat_alternating.cert.json"));
    CHECK(added_names(cert) == std::vector<std::string>{"1'", "1''"});
    CHECK(deleted_names(dh, cert) == std::vector<std::string>{"1", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j",
                                                              "k", "z", "l", "1'", "2", "4", "3"});
    auto rep = verify_move_sequence(dh, cert);
    CHECK(rep.valid);
    REQUIRE(rep.final_vertices.size() == 1);
    CHECK(names_with_additions(dh, cert)[rep.final_vertices[0]] == "1''");
    for (auto & m : cert.moves)
        if (m.kind == Move::Kind::remove)
            CHECK(m.k == 1);
}

TEST_CASE("Bing's house data and expansion certificate") {
    auto bh = bings_house();
    CHECK(bh.order() == 21);
    for (int k = 0; k <= 3; ++k)
        CHECK(k_dismantlable_vertices(bh, k).vertices.empty());
    CHECK(is_non_evasive(bh).status == Status::no);
    auto cert = read_certificate_file(data_path("bings_house.cert.json"));
    CHECK(added_names(cert) == std::vector<std::string>{"u1'", "u1''", "v1'", "v1''", "w6'", "w6''", "v6'", "v6''"});
    for (auto & m : cert.moves)
        if (m.kind == Move::Kind::add)
            CHECK(m.k == 0);
    auto rep = verify_move_sequence(bh, cert);
    CHECK(rep.valid);
    CHECK(rep.final_vertices.size() == 1);
    // no deletion above level 1
    for (auto & m : cert.moves)
        CHECK(m.k <= 1);
}

TEST_CASE("dunce hat links are cycles or thetas") {
    auto dh = dunce_hat();
    for (int v = 0; v < dh.order(); ++v) {
        auto link = dh.induced(dh.neighbours(v));
        int branch = 0;
        for (int u = 0; u < link.order(); ++u)
            branch += link.degree(u) == 3;
        bool theta = is_connected(link) && branch == 2 && link.size() == link.order() + 1;
        CHECK((is_cycle(link) || theta));
    }
}

TEST_CASE("both complexes are 2-dimensional without free edges") {
    for (auto g : {dunce_hat(), bings_house()}) {
        CHECK(clique_number(g) == 3);
        int triangles = 0;
        for (auto [u, v] : g.edges()) {
            int on = (g.neighbours(u) & g.neighbours(v)).size();
            CHECK(on >= 2);
            triangles += on;
        }
        // contractible, so V - E + F = 1
        CHECK(g.order() - g.size() + triangles / 3 == 1);
    }
}

TEST_CASE("Bing's house symmetry") {
    auto bh = bings_house();
    auto t = [](int i) { return i == 1 ? 6 : i == 6 ? 1 : i; };
    std::vector<int> perm(bh.order());
    for (int i = 1; i <= 7; ++i) {
        perm[bh.at("u" + std::to_string(i))] = bh.at("w" + std::to_string(t(i)));
        perm[bh.at("w" + std::to_string(i))] = bh.at("u" + std::to_string(t(i)));
        perm[bh.at("v" + std::to_string(i))] = bh.at("v" + std::to_string(t(i)));
    }
    CHECK(is_automorphism(bh, perm));
}

TEST_CASE("a tampered dunce hat certificate is rejected") {
    auto dh = dunce_hat();
    auto cert = read_certificate_file(data_path("dunce_hat.cert.json"));
    // drop the first addition: some later step must fail
    auto broken = cert;
    broken.moves.erase(broken.moves.begin());
    CHECK_FALSE(verify_move_sequence(dh, broken).valid);
    auto wrong_graph = cert;
    CHECK_FALSE(verify_move_sequence(bings_house(), wrong_graph).valid);
}

TEST_CASE("cubion certificates follow the twin collapse") {
    for (int n = 1; n <= 4; ++n) {
        auto q = cubion(n);
        auto rep = verify_move_sequence(q, cubion_certificate(n));
        CHECK(rep.valid);
        CHECK(rep.final_vertices.size() == 1);
    }
    CHECK(is_k_dismantlable(cubion(4), 2).status == Status::no);
}
