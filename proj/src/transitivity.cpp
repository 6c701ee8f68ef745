#include <dismantle/transitivity.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dismantle {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

void check_size(const Graph & g) {
    if (g.order() > kMaxIsoVertices)
        throw std::invalid_argument("automorphism search limited to " + std::to_string(kMaxIsoVertices) + " vertices");
}

Pairs fixing(const std::vector<int> & pts) {
    Pairs p;
    for (int v : pts)
        p.emplace_back(v, v);
    return p;
}

// orbit of v under the pointwise stabilizer of `fixed`, with a witness per point
std::vector<int> stabilizer_orbit(const Graph & g, const std::vector<int> & fixed, int v,
                                  std::vector<std::vector<int>> * witnesses) {
    std::vector<int> orbit{v};
    std::vector<bool> seen(g.order());
    seen[v] = true;
    for (int w : fixed)
        seen[w] = true;  // fixed points are their own orbits
    auto pairs = fixing(fixed);
    for (int w = 0; w < g.order(); ++w) {
        if (seen[w] || g.degree(w) != g.degree(v))
            continue;
        pairs.emplace_back(v, w);
        auto sigma = find_automorphism(g, pairs);
        pairs.pop_back();
        if (!sigma)
            continue;
        // everything reachable from v by sigma's cycle is in the orbit too
        for (int x = (*sigma)[v]; !seen[x]; x = (*sigma)[x]) {
            seen[x] = true;
            orbit.push_back(x);
        }
        if (witnesses)
            witnesses->push_back(std::move(*sigma));
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

void list_elements(const Graph & g, const AutomorphismSet & a, Pairs & images, std::size_t level,
                   std::vector<std::vector<int>> & out) {
    if (level == a.base.size()) {
        if (auto s = find_automorphism(g, images))
            out.push_back(std::move(*s));
        return;
    }
    for (int w = 0; w < g.order(); ++w) {
        images.emplace_back(a.base[level], w);
        if (find_automorphism(g, images))
            list_elements(g, a, images, level + 1, out);
        images.pop_back();
    }
}

} // namespace

bool is_automorphism(const Graph & g, const std::vector<int> & perm) {
    int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        return false;
    std::vector<bool> hit(n);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[v])
            return false;
        hit[v] = true;
    }
    for (auto [u, v] : g.edges())
        if (!g.adjacent(perm[u], perm[v]))
            return false;
    return true;
}

AutomorphismSet automorphisms(const Graph & g, std::uint64_t list_limit) {
    check_size(g);
    AutomorphismSet a;
    a.root = g;
    int n = g.order();

    for (int v = 0; v < n; ++v) {
        auto orbit = stabilizer_orbit(g, a.base, v, &a.generators);
        if (orbit.size() == 1)
            continue;
        a.base.push_back(v);
        std::uint64_t sz = orbit.size();
        if (a.order > std::numeric_limits<std::uint64_t>::max() / sz) {
            a.order_saturated = true;
            a.order = std::numeric_limits<std::uint64_t>::max();
        } else if (!a.order_saturated) {
            a.order *= sz;
        }
        a.basic_orbits.push_back(std::move(orbit));
    }

    // Aut-orbits: union-find over the generators
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto & s : a.generators)
        for (int v = 0; v < n; ++v) {
            int r1 = find(v), r2 = find(s[v]);
            if (r1 != r2)
                parent[std::max(r1, r2)] = std::min(r1, r2);
        }
    a.orbit_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (a.orbit_of[r] < 0) {
            a.orbit_of[r] = static_cast<int>(a.orbits.size());
            a.orbits.emplace_back();
        }
        a.orbit_of[v] = a.orbit_of[r];
        a.orbits[a.orbit_of[v]].push_back(v);
    }

    if (!a.order_saturated && a.order <= list_limit) {
        Pairs images;
        list_elements(g, a, images, 0, a.elements);
    }
    return a;
}

bool is_vertex_transitive(const Graph & g) {
    check_size(g);
    if (g.order() <= 1)
        return true;
    for (int w = 1; w < g.order(); ++w)
        if (g.degree(w) != g.degree(0) || !find_automorphism(g, {{0, w}}))
            return false;
    return true;
}

// Transitivity on ordered (k-1)-cliques makes any one of them a valid
// representative, so level k only asks whether the stabilizer of the
// representative acts transitively on its common neighbours.
bool is_i_complete_transitive(const Graph & g, int i) {
    if (i < 1)
        throw std::invalid_argument("is_i_complete_transitive: i must be >= 1");
    check_size(g);
    if (g.order() == 0)
        return true;
    if (!is_vertex_transitive(g))
        return false;
    std::vector<int> prefix{0};
    for (int k = 2; k <= i; ++k) {
        auto common = g.vertices();
        for (int p : prefix)
            common = common & g.neighbours(p);
        if (common.empty())
            return true;
        auto pairs = fixing(prefix);
        int c0 = common.first();
        for (int w : common) {
            if (w == c0)
                continue;
            pairs.emplace_back(c0, w);
            bool ok = find_automorphism(g, pairs).has_value();
            pairs.pop_back();
            if (!ok)
                return false;
        }
        prefix.push_back(c0);
    }
    return true;
}

} // namespace dismantle
