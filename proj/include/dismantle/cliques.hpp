#pragma once

#include <dismantle/certificate.hpp>
#include <dismantle/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace dismantle {

// All maximal cliques of g[s] (pivoting Bron-Kerbosch), each sorted set
// listed once, in lexicographic order.
std::vector<VertexSet> maximal_cliques(const Graph & g, VertexSet s);
std::vector<VertexSet> maximal_cliques(const Graph & g);

int clique_number(const Graph & g, VertexSet s);
int clique_number(const Graph & g);

// A clique meeting every maximal clique.
bool is_star_cluster_clique(const Graph & g, VertexSet a);

// Smallest star-cluster clique, lexicographically least among those of that
// size; nullopt if there is none or `budget` cliques were tried without
// finishing (see `exhausted`).
std::optional<VertexSet> star_cluster_clique(const Graph & g, std::uint64_t budget = 50'000'000,
                                             bool * exhausted = nullptr);

struct CliqueReport {
    std::vector<VertexSet> maximal;
    int omega = 0;
    std::optional<VertexSet> star_cluster;
};

CliqueReport clique_report(const Graph & g);

// Deletion sequence reducing g to g[a] for a star-cluster clique a. Vertices
// are deleted at level max(|a| - 2, 0), or at level 0 when every vertex of a
// is an apex; |a| = 1 (a cone) gives a 0-dismantling onto the apex.
// Throws std::invalid_argument if a is not a star-cluster clique.
Certificate dismantle_to_star_clique(const Graph & g, VertexSet a);

} // namespace dismantle
