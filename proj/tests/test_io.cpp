#include <dismantle/certificate.hpp>
#include <dismantle/generators.hpp>
#include <dismantle/graph_io.hpp>

#include <doctest.h>

using namespace dismantle;

TEST_CASE("reading edge lists") {
    auto p3 = read_graph("3 2\n0 1\n1 2");
    CHECK(p3 == path_graph(3));
    auto labelled = read_graph("# a comment\n2 1\n0 1\n# label 0 left\n# label 1 right\n");
    CHECK(labelled.name(1) == "right");
    CHECK(read_graph("0 0\n").order() == 0);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char * text) {
        try {
            read_graph(text);
        } catch (const ParseError & e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("3 2\n0 1\n1 1\n") == 3);   // loop
    CHECK(line_of("3 2\n0 1\n0 1\n") == 3);   // duplicate
    CHECK(line_of("3 2\n0 1\n1 5\n") == 3);   // out of range
    CHECK(line_of("3 2\n1 0\n1 2\n") == 2);   // u > v
    CHECK(line_of("3 1\n0 1\n1 2\n") == 3);   // too many edges
    CHECK(line_of("x y\n") == 1);
    CHECK(line_of("3 2\n0 1\n") > 0);         // too few edges
    CHECK(line_of("2 1\n0 1\n# label 0 a\n") > 0);  // labels not total
}

TEST_CASE("round trips") {
    for (auto g : {cubion(3), parasol(), kneser(5, 2), complete_graph(1)}) {
        auto back = read_graph(write_graph(g));
        CHECK(back == g);
        CHECK(back.labels() == g.labels());
    }
}

TEST_CASE("dot export") {
    auto dot = write_graph(cycle_graph(4), GraphFormat::dot);
    CHECK(dot.find("graph") != std::string::npos);
    int edges = 0;
    for (std::size_t at = dot.find("--"); at != std::string::npos; at = dot.find("--", at + 2))
        ++edges;
    CHECK(edges == 4);
}

TEST_CASE("certificate json") {
    Certificate c;
    c.graph_hash = "0123456789abcdef";
    c.moves = {Move::deletion(3, 1), Move::addition(7, 0, {2, 1}, "y"), Move::edge_deletion(5, 4)};
    c.final_vertices = std::vector<int>{2, 1};
    auto back = parse_certificate(certificate_to_json(c));
    CHECK(back.graph_hash == c.graph_hash);
    REQUIRE(back.moves.size() == 3);
    CHECK(back.moves[1].nbrs == std::vector<int>{1, 2});
    CHECK(back.moves[1].label == "y");
    CHECK(back.moves[2].u == 4);
    CHECK(back.moves[2].v == 5);
    CHECK(back.final_vertices == std::vector<int>{1, 2});
    CHECK(certificate_to_json(back) == certificate_to_json(parse_certificate(certificate_to_json(back))));

    auto point = parse_certificate(R"({"moves": [], "final": "point"})");
    CHECK_FALSE(point.final_vertices);
    CHECK_THROWS_AS(parse_certificate("{"), CertificateError);
    CHECK_THROWS_AS(parse_certificate(R"({"final": "point"})"), CertificateError);
    CHECK_THROWS_AS(parse_certificate(R"({"moves": [{"op": "jump"}], "final": "point"})"), CertificateError);
    CHECK_THROWS_AS(parse_certificate(R"({"version": "cert_v2", "moves": [], "final": "point"})"), CertificateError);
    CHECK_THROWS_AS(parse_certificate(R"({"moves": [{"op": "delete", "v": 1}], "final": "point"})"),
                    CertificateError);
}
