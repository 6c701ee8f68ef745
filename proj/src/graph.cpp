#include <dismantle/graph.hpp>

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace dismantle {

Graph::Graph(int n, const std::vector<Edge> & edges, std::vector<std::string> labels) {
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw std::invalid_argument("label count does not match vertex count");
        for (int v = 0; v < n; ++v)
            b.set_label(v, std::move(labels[v]));
    }
    *this = b.build();
}

int Graph::size() const {
    int twice = 0;
    for (auto r : rows_)
        twice += r.size();
    return twice / 2;
}

std::string Graph::name(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<int> Graph::find(const std::string & label) const {
    for (int v = 0; v < order(); ++v)
        if (labels_.empty() ? std::to_string(v) == label : labels_[v] == label)
            return v;
    return std::nullopt;
}

int Graph::at(const std::string & label) const {
    auto v = find(label);
    if (!v)
        throw std::out_of_range("no vertex labelled '" + label + "'");
    return *v;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (int v : rows_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(VertexSet s) const {
    std::vector<int> index(order(), -1);
    int m = 0;
    for (int v : s)
        index[v] = m++;
    GraphBuilder b(m);
    for (int u : s) {
        if (has_labels())
            b.set_label(index[u], labels_[u]);
        for (int v : rows_[u] & s)
            if (u < v)
                b.add_edge(index[u], index[v]);
    }
    return b.build();
}

Graph Graph::permuted(const std::vector<int> & perm) const {
    if (static_cast<int>(perm.size()) != order())
        throw std::invalid_argument("permutation size mismatch");
    GraphBuilder b(order());
    for (auto [u, v] : edges())
        b.add_edge(perm[u], perm[v]);
    if (has_labels())
        for (int v = 0; v < order(); ++v)
            b.set_label(perm[v], labels_[v]);
    return b.build();
}

Graph Graph::complement() const {
    Graph c = *this;
    auto all = vertices();
    for (int v = 0; v < order(); ++v)
        c.rows_[v] = all - rows_[v] - VertexSet::single(v);
    return c;
}

Graph Graph::without_labels() const {
    Graph c = *this;
    c.labels_.clear();
    return c;
}

GraphBuilder::GraphBuilder(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    rows_.resize(n);
}

void GraphBuilder::check(int v) const {
    if (v < 0 || v >= order())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool GraphBuilder::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (rows_[u].contains(v))
        return false;
    rows_[u].insert(v);
    rows_[v].insert(u);
    return true;
}

int GraphBuilder::index_of(const std::string & label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw std::out_of_range("no vertex labelled '" + label + "'");
    return static_cast<int>(it - labels_.begin());
}

bool GraphBuilder::add_edge(const std::string & u, const std::string & v) {
    return add_edge(index_of(u), index_of(v));
}

void GraphBuilder::remove_edge(int u, int v) {
    check(u);
    check(v);
    rows_[u].erase(v);
    rows_[v].erase(u);
}

void GraphBuilder::set_label(int v, std::string label) {
    check(v);
    if (labels_.empty())
        labels_.resize(rows_.size());
    labels_[v] = std::move(label);
}

int GraphBuilder::add_vertex(std::string label) {
    if (order() == kMaxVertices)
        throw std::invalid_argument("too many vertices");
    rows_.emplace_back();
    if (!labels_.empty() || !label.empty()) {
        labels_.resize(rows_.size());
        labels_.back() = std::move(label);
    }
    return order() - 1;
}

Graph GraphBuilder::build() const {
    if (!labels_.empty()) {
        std::unordered_set<std::string> seen;
        for (auto & l : labels_) {
            if (l.empty())
                throw std::invalid_argument("labels must be total: some vertex is unlabelled");
            if (!seen.insert(l).second)
                throw std::invalid_argument("duplicate label '" + l + "'");
        }
    }
    Graph g;
    g.rows_ = rows_;
    g.labels_ = labels_;
    return g;
}

VertexSet open_neighbourhood(const Graph & g, int v) {
    if (v < 0 || v >= g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return g.neighbours(v);
}

VertexSet cone_apexes(const Graph & g, VertexSet s) {
    VertexSet out;
    for (int v : s)
        if (s.is_subset_of(g.closed_neighbours(v)))
            out.insert(v);
    return out;
}

VertexSet cone_apexes(const Graph & g) { return cone_apexes(g, g.vertices()); }

bool is_cone(const Graph & g) { return !cone_apexes(g).empty(); }

std::vector<Domination> dominated_vertices(const Graph & g) {
    std::vector<Domination> out;
    for (int x = 0; x < g.order(); ++x) {
        auto nx = g.closed_neighbours(x);
        // a dominating vertex is adjacent to x, so only neighbours need checking
        for (int a : g.neighbours(x))
            if (nx.is_subset_of(g.closed_neighbours(a))) {
                out.push_back({x, a});
                break;
            }
    }
    return out;
}

int first_dominated(const Graph & g, VertexSet s) {
    for (int x : s) {
        auto nx = g.closed_neighbours(x) & s;
        for (int a : g.neighbours(x) & s)
            if (nx.is_subset_of(g.closed_neighbours(a)))
                return x;
    }
    return -1;
}

bool is_connected(const Graph & g, VertexSet s) {
    if (s.empty())
        return false;
    auto seen = VertexSet::single(s.first());
    auto frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier)
            next |= g.neighbours(v);
        next = (next & s) - seen;
        seen |= next;
        frontier = next;
    }
    return seen == s;
}

std::vector<VertexSet> components(const Graph & g, VertexSet s) {
    std::vector<VertexSet> out;
    auto rest = s;
    while (!rest.empty()) {
        auto seen = VertexSet::single(rest.first());
        auto frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier)
                next |= g.neighbours(v);
            next = (next & rest) - seen;
            seen |= next;
            frontier = next;
        }
        out.push_back(seen);
        rest -= seen;
    }
    return out;
}

bool is_triangle_free(const Graph & g, VertexSet s) {
    for (int u : s)
        for (int v : g.neighbours(u) & s)
            if (u < v && !(g.neighbours(u) & g.neighbours(v) & s).empty())
                return false;
    return true;
}

int edge_count(const Graph & g, VertexSet s) {
    int twice = 0;
    for (int v : s)
        twice += (g.neighbours(v) & s).size();
    return twice / 2;
}

bool is_clique(const Graph & g, VertexSet s) {
    for (int v : s)
        if (!s.is_subset_of(g.closed_neighbours(v)))
            return false;
    return true;
}

bool is_connected(const Graph & g) { return is_connected(g, g.vertices()); }

bool is_complete(const Graph & g) { return is_clique(g, g.vertices()); }

bool is_tree(const Graph & g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

int VertexPartition::block_of(int v) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].contains(v))
            return static_cast<int>(i);
    throw std::out_of_range("vertex not covered by partition");
}

TwinQuotient twin_quotient(const Graph & g) {
    TwinQuotient out;
    auto rest = g.vertices();
    while (!rest.empty()) {
        int v = rest.first();
        VertexSet block;
        for (int u : rest)
            if (g.closed_neighbours(u) == g.closed_neighbours(v))
                block.insert(u);
        out.partition.blocks.push_back(block);
        rest -= block;
    }
    int m = static_cast<int>(out.partition.blocks.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i) {
        int x = out.partition.blocks[i].first();
        if (g.has_labels())
            b.set_label(i, g.labels()[x]);
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(x, out.partition.blocks[j].first()))
                b.add_edge(i, j);
    }
    out.quotient = b.build();
    return out;
}

std::string graph_hash(const Graph & g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](const std::string & s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    auto es = g.edges();
    feed(std::to_string(g.order()) + " " + std::to_string(es.size()) + "\n");
    for (auto [u, v] : es)
        feed(std::to_string(u) + " " + std::to_string(v) + "\n");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace dismantle
