#pragma once

#include <dismantle/graph.hpp>

#include <cstdint>
#include <vector>

namespace dismantle {

// Aut(g) described by a stabilizer chain: fixing base[0], ..., base[j-1]
// pointwise leaves a group whose orbit on base[j] is basic_orbits[j]. The
// pointwise stabilizer of the whole base is trivial, so |Aut| is the product
// of the basic orbit sizes.
struct AutomorphismSet {
    Graph root;
    std::vector<int> base;
    std::vector<std::vector<int>> basic_orbits;
    std::vector<std::vector<int>> generators;  // one witness per non-base orbit point
    std::vector<int> orbit_of;                 // vertex -> index of its Aut-orbit
    std::vector<std::vector<int>> orbits;      // sorted, ordered by smallest member
    std::uint64_t order = 1;
    bool order_saturated = false;              // order > 2^64 - 1; `order` is then the max value
    std::vector<std::vector<int>> elements;    // every automorphism, filled only when order <= list limit
};

inline constexpr std::uint64_t kDefaultListLimit = 1024;

// Throws std::invalid_argument above kMaxIsoVertices.
AutomorphismSet automorphisms(const Graph & g, std::uint64_t list_limit = kDefaultListLimit);

bool is_automorphism(const Graph & g, const std::vector<int> & perm);

bool is_vertex_transitive(const Graph & g);

// Aut(g) is transitive on ordered k-cliques for every 1 <= k <= i. Levels
// beyond the clique number have no tuples and hold vacuously.
bool is_i_complete_transitive(const Graph & g, int i);

} // namespace dismantle
