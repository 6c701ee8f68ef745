#include <dismantle/generators.hpp>
#include <dismantle/graph_io.hpp>

#include <bit>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#ifndef DISMANTLE_DATA_DIR_DEFAULT
#define DISMANTLE_DATA_DIR_DEFAULT "data"
#endif

namespace dismantle {

namespace {

void require(bool ok, const std::string & what) {
    if (!ok)
        throw std::invalid_argument(what);
}

std::string tuple_label(int bits, int n) {
    std::string s = "x";
    for (int i = 1; i <= n; ++i)
        s.push_back(((bits >> (n - i)) & 1) ? '1' : '0');
    return s;
}

} // namespace

FamilySpec FamilySpec::parse(const std::string & text) {
    FamilySpec spec;
    auto colon = text.find(':');
    spec.family = text.substr(0, colon);
    if (colon != std::string::npos) {
        std::istringstream in(text.substr(colon + 1));
        std::string item;
        while (std::getline(in, item, ',')) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(item, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            require(used == item.size() && !item.empty(), "bad parameter '" + item + "' in '" + text + "'");
            spec.params.push_back(value);
        }
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string s = family;
    for (std::size_t i = 0; i < params.size(); ++i)
        s += (i ? "," : ":") + std::to_string(params[i]);
    return s;
}

std::vector<std::string> family_names() {
    return {"complete", "cycle", "path", "octahedron", "cubion", "parasol", "parasol_plus", "dunce_hat",
            "bings_house", "kneser", "wheel", "hypercube_clique", "circulant", "hypercube"};
}

Graph generate(const FamilySpec & spec) {
    auto & p = spec.params;
    auto arity = [&](std::size_t k) {
        require(p.size() == k, spec.family + " takes " + std::to_string(k) + " parameter(s)");
    };
    const auto & f = spec.family;
    if (f == "complete") { arity(1); return complete_graph(p[0]); }
    if (f == "cycle") { arity(1); return cycle_graph(p[0]); }
    if (f == "path") { arity(1); return path_graph(p[0]); }
    if (f == "octahedron") { arity(1); return octahedron(p[0]); }
    if (f == "cubion") { arity(1); return cubion(p[0]); }
    if (f == "parasol") { arity(0); return parasol(); }
    if (f == "parasol_plus") { arity(0); return parasol_plus(); }
    if (f == "dunce_hat") { arity(0); return dunce_hat(); }
    if (f == "bings_house") { arity(0); return bings_house(); }
    if (f == "kneser") { arity(2); return kneser(p[0], p[1]); }
    if (f == "wheel") { arity(1); return wheel(p[0]); }
    if (f == "hypercube_clique") { arity(1); return hypercube_clique(p[0]); }
    if (f == "hypercube") { arity(1); return hypercube(p[0]); }
    if (f == "circulant") {
        require(!p.empty(), "circulant takes n followed by distances");
        return circulant(p[0], std::vector<int>(p.begin() + 1, p.end()));
    }
    throw std::invalid_argument("unknown family '" + f + "'");
}

Graph complete_graph(int n) {
    require(n >= 1 && n <= kMaxVertices, "complete: need 1 <= n <= 64");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

Graph cycle_graph(int n) {
    require(n >= 3 && n <= kMaxVertices, "cycle: need 3 <= n <= 64");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph path_graph(int n) {
    require(n >= 1 && n <= kMaxVertices, "path: need 1 <= n <= 64");
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.build();
}

Graph octahedron(int n) {
    require(n >= 1 && 2 * n <= kMaxVertices, "octahedron: need 1 <= n <= 32");
    GraphBuilder b(2 * n);
    for (int u = 0; u < 2 * n; ++u)
        for (int v = u + 1; v < 2 * n; ++v)
            if (u / 2 != v / 2)
                b.add_edge(u, v);
    return b.build();
}

Graph hypercube_clique(int n) {
    require(n >= 0 && n <= 6, "hypercube_clique: need 0 <= n <= 6");
    int m = 1 << n;
    GraphBuilder b(m);
    for (int t = 0; t < m; ++t) {
        b.set_label(t, tuple_label(t, n));
        for (int s = t + 1; s < m; ++s)
            b.add_edge(t, s);
    }
    return b.build();
}

Graph attach_cubion_apexes(const Graph & clique, int n) {
    require(clique.order() == (1 << n) && is_complete(clique), "attach_cubion_apexes: expected K_{2^n}");
    int m = 1 << n;
    require(m + 2 * n <= kMaxVertices, "cubion: too many vertices");
    GraphBuilder b(m + 2 * n);
    for (auto [u, v] : clique.edges())
        b.add_edge(u, v);
    for (int t = 0; t < m; ++t)
        b.set_label(t, tuple_label(t, n));
    auto alpha = [&](int i, int e) { return m + 2 * (i - 1) + e; };
    for (int i = 1; i <= n; ++i)
        for (int e = 0; e < 2; ++e) {
            int a = alpha(i, e);
            b.set_label(a, "alpha_" + std::to_string(i) + "_" + std::to_string(e));
            for (int j = 1; j <= n; ++j)
                if (j != i)
                    for (int e2 = 0; e2 < 2; ++e2)
                        b.add_edge(a, alpha(j, e2));
            for (int t = 0; t < m; ++t)
                if (((t >> (n - i)) & 1) == e)
                    b.add_edge(a, t);
        }
    return b.build();
}

Graph cubion(int n) {
    require(n >= 1 && n <= 5, "cubion: need 1 <= n <= 5");
    return attach_cubion_apexes(hypercube_clique(n), n);
}

Graph parasol() {
    GraphBuilder b(15);
    b.set_label(0, "I");
    auto A = [](int i) { return 1 + ((i - 1) % 7 + 7) % 7; };
    auto B = [](int i) { return 8 + ((i - 1) % 7 + 7) % 7; };
    for (int i = 1; i <= 7; ++i) {
        b.set_label(A(i), "A" + std::to_string(i));
        b.set_label(B(i), "B" + std::to_string(i));
    }
    for (int i = 1; i <= 7; ++i) {
        b.add_edge(0, A(i));
        b.add_edge(A(i), A(i + 1));
        b.add_edge(B(i), B(i + 1));
        b.add_edge(B(i), B(i + 2));
        b.add_edge(A(i), B(i));
        b.add_edge(A(i), B(i + 1));
    }
    return b.build();
}

Graph parasol_plus() {
    auto p = parasol();
    GraphBuilder b(p.order());
    for (auto [u, v] : p.edges())
        b.add_edge(u, v);
    for (int v = 0; v < p.order(); ++v)
        b.set_label(v, p.labels()[v]);
    int bp = b.add_vertex("B'");
    int b1 = p.at("B1");
    auto nbrs = p.neighbours(b1).with(b1);
    nbrs.erase(p.at("B3"));
    nbrs.erase(p.at("B6"));
    for (int v : nbrs)
        b.add_edge(bp, v);
    return b.build();
}

Graph dunce_hat() { return read_graph_file(data_path("dunce_hat.txt")); }

Graph bings_house() { return read_graph_file(data_path("bings_house.txt")); }

Graph kneser(int n, int k) {
    require(k >= 1 && n > 2 * k && n <= 20, "kneser: need k >= 1, n > 2k and n <= 20");
    std::vector<unsigned> sets;
    for (unsigned s = 0; s < (1u << n); ++s)
        if (std::popcount(s) == k)
            sets.push_back(s);
    require(sets.size() <= static_cast<std::size_t>(kMaxVertices), "kneser: more than 64 vertices");
    // colexicographic order of the k-subsets
    GraphBuilder b(static_cast<int>(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::string label;
        for (int e = 0; e < n; ++e)
            if ((sets[i] >> e) & 1)
                label += (label.empty() ? "" : "_") + std::to_string(e);
        b.set_label(static_cast<int>(i), label);
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if ((sets[i] & sets[j]) == 0)
                b.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return b.build();
}

Graph wheel(int m) {
    require(m >= 3 && m < kMaxVertices, "wheel: need 3 <= m <= 63");
    GraphBuilder b(m + 1);
    for (int v = 0; v < m; ++v) {
        b.add_edge(v, (v + 1) % m);
        b.add_edge(v, m);
    }
    return b.build();
}

Graph circulant(int n, const std::vector<int> & distances) {
    require(n >= 1 && n <= kMaxVertices, "circulant: need 1 <= n <= 64");
    GraphBuilder b(n);
    for (int d : distances) {
        require(d >= 1 && 2 * d <= n, "circulant: distances must lie in 1..n/2");
        for (int v = 0; v < n; ++v)
            b.add_edge(v, (v + d) % n);
    }
    return b.build();
}

Graph hypercube(int n) {
    require(n >= 0 && n <= 6, "hypercube: need 0 <= n <= 6");
    GraphBuilder b(1 << n);
    for (int t = 0; t < (1 << n); ++t)
        for (int i = 0; i < n; ++i)
            if (!((t >> i) & 1))
                b.add_edge(t, t | (1 << i));
    return b.build();
}

std::string data_dir() {
    if (const char * env = std::getenv("DISMANTLE_DATA_DIR"); env && *env)
        return env;
    return DISMANTLE_DATA_DIR_DEFAULT;
}

std::string data_path(const std::string & file) { return data_dir() + "/" + file; }

} // namespace dismantle
