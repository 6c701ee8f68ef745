#include <dismantle/dismantling.hpp>
#include <dismantle/oracles.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace dismantle {

int evasiveness_game_depth(const Graph & g) {
    int n = g.order();
    if (n > kMaxGameVertices)
        throw std::invalid_argument("evasiveness game limited to " + std::to_string(kMaxGameVertices) + " vertices");
    std::vector<std::uint32_t> pow3(n + 1, 1);
    for (int i = 1; i <= n; ++i)
        pow3[i] = pow3[i - 1] * 3;
    std::vector<std::int8_t> memo(pow3[n], -1);
    auto all = g.vertices();

    // code: base-3 digits, 1 = answered in, 2 = answered out
    auto value = [&](auto & self, VertexSet in, VertexSet out, std::uint32_t code) -> int {
        auto & slot = memo[code];
        if (slot >= 0)
            return slot;
        auto rest = all - in - out;
        int best;
        if (!is_clique(g, in) || is_clique(g, in | rest)) {
            best = 0;
        } else {
            best = n + 1;
            for (int x : rest) {
                int yes = self(self, in.with(x), out, code + pow3[x]);
                int no = self(self, in, out.with(x), code + 2 * pow3[x]);
                best = std::min(best, 1 + std::max(yes, no));
                if (best == 1)
                    break;
            }
        }
        slot = static_cast<std::int8_t>(best);
        return best;
    };
    return value(value, {}, {}, 0);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    GraphBuilder b(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1)
                b.add_edge(u, v);
    return b.build();
}

void enumerate_labeled_graphs(int n, const std::function<void(const Graph &)> & visit) {
    if (n < 0 || n > 7)
        throw std::invalid_argument("exhaustive enumeration limited to n <= 7");
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
        visit(graph_from_edge_mask(n, mask));
}

std::vector<Graph> sample_graphs(int n, std::size_t count, std::uint64_t seed, double p) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    b.add_edge(u, v);
        out.push_back(b.build());
    }
    return out;
}

void enumerate_triangle_free_graphs(int n, const std::function<void(const Graph &)> & visit) {
    if (n < 0 || n > 10)
        throw std::invalid_argument("triangle-free enumeration limited to n <= 10");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::vector<VertexSet> rows(n);
    auto rec = [&](auto & self, std::size_t i) -> void {
        if (i == pairs.size()) {
            GraphBuilder b(n);
            for (int u = 0; u < n; ++u)
                for (int v : rows[u])
                    if (u < v)
                        b.add_edge(u, v);
            visit(b.build());
            return;
        }
        self(self, i + 1);
        auto [u, v] = pairs[i];
        if ((rows[u] & rows[v]).empty()) {
            rows[u].insert(v);
            rows[v].insert(u);
            self(self, i + 1);
            rows[u].erase(v);
            rows[v].erase(u);
        }
    };
    rec(rec, 0);
}

namespace {

// Explores every 1-dismantling of g; returns the 1-stiff end states together
// with a predecessor map for reading back the sequences.
struct CoreExplorer {
    const Graph & g;
    Engine engine;
    std::map<std::uint64_t, int> parent;  // subset -> vertex deleted to reach it (-1 for the root)
    std::vector<VertexSet> cores;

    explicit CoreExplorer(const Graph & graph) : g(graph), engine(graph) {}

    void run() {
        std::vector<VertexSet> stack{g.vertices()};
        parent[g.vertices().bits()] = -1;
        while (!stack.empty()) {
            auto s = stack.back();
            stack.pop_back();
            auto ds = engine.dismantlable_vertices(s, 1);
            if (!ds)
                throw std::runtime_error("order-sensitivity search exhausted its budget");
            if (ds->empty()) {
                cores.push_back(s);
                continue;
            }
            for (int x : *ds) {
                auto t = s.without(x);
                if (parent.emplace(t.bits(), x).second)
                    stack.push_back(t);
            }
        }
        std::sort(cores.begin(), cores.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    }

    Certificate certificate_for(VertexSet core) const {
        std::vector<int> order;
        auto s = core;
        while (s != g.vertices()) {
            int x = parent.at(s.bits());
            order.push_back(x);
            s.insert(x);
        }
        std::reverse(order.begin(), order.end());
        return deletion_certificate(g, order, 1);
    }
};

} // namespace

std::optional<OrderWitness> find_order_sensitivity_witness(int max_n) {
    if (max_n > 9)
        throw std::invalid_argument("find_order_sensitivity_witness: max_n must be <= 9");
    for (int n = 1; n <= max_n; ++n) {
        int pairs = n * (n - 1) / 2;
        for (int m = 0; m <= pairs; ++m) {
            if (m == 0) {
                // only the edgeless graph, whose single core is itself
                continue;
            }
            // masks with exactly m bits, ascending
            std::uint64_t mask = (std::uint64_t{1} << m) - 1;
            std::uint64_t limit = std::uint64_t{1} << pairs;
            while (mask < limit) {
                auto g = graph_from_edge_mask(n, mask);
                CoreExplorer ex(g);
                ex.run();
                if (ex.cores.size() >= 2) {
                    auto first = ex.cores.front();
                    auto first_graph = g.induced(first);
                    for (std::size_t i = 1; i < ex.cores.size(); ++i) {
                        auto other = g.induced(ex.cores[i]);
                        if (!are_isomorphic(first_graph, other))
                            return OrderWitness{g, ex.certificate_for(first), ex.certificate_for(ex.cores[i]),
                                                first_graph, other};
                    }
                }
                std::uint64_t c = mask & -mask, r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
    }
    return std::nullopt;
}

} // namespace dismantle
