#pragma once

#include <dismantle/certificate.hpp>
#include <dismantle/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace dismantle {

// The query game has 3^n states; 15 vertices is about 14 million of them.
inline constexpr int kMaxGameVertices = 15;

// Optimal worst-case number of membership queries needed to decide whether
// a hidden vertex set is a clique of g (the empty set and singletons count
// as cliques). Throws std::invalid_argument above kMaxGameVertices.
int evasiveness_game_depth(const Graph & g);

// Graph on n vertices whose edges are the set bits of `mask`, numbering the
// pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... from bit 0.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// Every labelled graph on n <= 7 vertices, in increasing mask order.
void enumerate_labeled_graphs(int n, const std::function<void(const Graph &)> & visit);

// `count` seeded G(n, p) samples.
std::vector<Graph> sample_graphs(int n, std::size_t count, std::uint64_t seed, double p = 0.5);

// Every labelled triangle-free graph on n <= 10 vertices.
void enumerate_triangle_free_graphs(int n, const std::function<void(const Graph &)> & visit);

struct OrderWitness {
    Graph graph;
    Certificate first, second;  // 1-dismantlings onto the two cores
    Graph first_core, second_core;
};

// Smallest graph (fewest vertices, then fewest edges, then smallest edge
// mask) that 1-dismantles onto two non-isomorphic 1-stiff graphs.
std::optional<OrderWitness> find_order_sensitivity_witness(int max_n);

} // namespace dismantle
