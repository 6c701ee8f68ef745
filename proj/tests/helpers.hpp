#pragma once

#include <dismantle/graph.hpp>

#include <algorithm>
#include <numeric>
#include <random>

namespace testing_support {

using dismantle::Graph;

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return Graph(n, std::vector<dismantle::Edge>(edges));
}

inline Graph random_graph(int n, double p, std::mt19937_64 & rng) {
    std::bernoulli_distribution coin(p);
    dismantle::GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                b.add_edge(u, v);
    return b.build();
}

inline std::vector<int> random_perm(int n, std::mt19937_64 & rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace testing_support
