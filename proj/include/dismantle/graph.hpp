#pragma once

#include <dismantle/vertex_set.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dismantle {

using Edge = std::pair<int, int>;

// Finite simple undirected graph on vertices 0..n-1, one adjacency bit row
// per vertex. Immutable once built; use GraphBuilder to make one.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge> & edges, std::vector<std::string> labels = {});

    int order() const { return static_cast<int>(rows_.size()); }
    int size() const;
    bool empty() const { return rows_.empty(); }

    bool adjacent(int u, int v) const { return rows_[u].contains(v); }
    VertexSet neighbours(int v) const { return rows_[v]; }
    VertexSet closed_neighbours(int v) const { return rows_[v].with(v); }
    VertexSet vertices() const { return VertexSet::full(order()); }
    int degree(int v) const { return rows_[v].size(); }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string> & labels() const { return labels_; }
    // the label if present, else the decimal index
    std::string name(int v) const;
    std::optional<int> find(const std::string & label) const;
    // like find(), but throws std::out_of_range for unknown labels
    int at(const std::string & label) const;

    std::vector<Edge> edges() const;

    // X[S], renumbered 0..|S|-1 in increasing order of original index; labels kept.
    Graph induced(VertexSet s) const;
    // relabelled copy: vertex v of *this becomes perm[v]
    Graph permuted(const std::vector<int> & perm) const;
    Graph complement() const;
    Graph without_labels() const;

    // adjacency only; labels are ignored
    friend bool operator==(const Graph & a, const Graph & b) { return a.rows_ == b.rows_; }

private:
    friend class GraphBuilder;
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    // returns false if the edge was already present
    bool add_edge(int u, int v);
    bool add_edge(const std::string & u, const std::string & v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return rows_.at(u).contains(v); }
    void set_label(int v, std::string label);
    int order() const { return static_cast<int>(rows_.size()); }
    // appends a vertex, returns its index
    int add_vertex(std::string label = {});
    Graph build() const;

private:
    int index_of(const std::string & label) const;
    void check(int v) const;
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

// ---- basic queries -------------------------------------------------------

VertexSet open_neighbourhood(const Graph & g, int v);

// All v with N[v] = V(g); nonempty iff g is a cone.
VertexSet cone_apexes(const Graph & g);
bool is_cone(const Graph & g);

struct Domination {
    int x;
    int by;
    friend bool operator==(const Domination &, const Domination &) = default;
};

// x is listed iff some a != x has N[x] within N[a]; the witness is the smallest such a.
std::vector<Domination> dominated_vertices(const Graph & g);

// ---- subset views ----------------------------------------------------------
// The same questions asked of the induced subgraph g[s], without building it.

VertexSet cone_apexes(const Graph & g, VertexSet s);
bool is_connected(const Graph & g, VertexSet s);
bool is_triangle_free(const Graph & g, VertexSet s);
int edge_count(const Graph & g, VertexSet s);
// a vertex of s dominated inside g[s] (smallest index), or -1
int first_dominated(const Graph & g, VertexSet s);
bool is_clique(const Graph & g, VertexSet s);
std::vector<VertexSet> components(const Graph & g, VertexSet s);

bool is_connected(const Graph & g);
bool is_complete(const Graph & g);
bool is_tree(const Graph & g);

// ---- twins ---------------------------------------------------------------

struct VertexPartition {
    std::vector<VertexSet> blocks;
    int block_of(int v) const;
};

struct TwinQuotient {
    Graph quotient;
    VertexPartition partition;
};

// Blocks are N[.]-equality classes, listed by smallest member.
TwinQuotient twin_quotient(const Graph & g);

// ---- isomorphism ---------------------------------------------------------

// Limit for are_isomorphic / canonical_key.
inline constexpr int kMaxIsoVertices = 32;

// An edge-preserving bijection f (f[v] is the image in h of vertex v of g), if any.
std::optional<std::vector<int>> are_isomorphic(const Graph & g, const Graph & h);

struct CanonicalForm {
    std::string key;
    std::vector<int> order;  // order[i] = vertex placed at canonical position i
};

CanonicalForm canonical_form(const Graph & g);
std::string canonical_key(const Graph & g);

// ---- automorphism search (shared with isomorphism and transitivity) -------

// Some automorphism of g extending the partial map fixed[i].first -> fixed[i].second,
// found by refinement and backtracking. Exact.
std::optional<std::vector<int>> find_automorphism(const Graph & g, const std::vector<std::pair<int, int>> & fixed);

// 64-bit FNV-1a of the edge list, as 16 hex digits. Labels are ignored.
std::string graph_hash(const Graph & g);

} // namespace dismantle
