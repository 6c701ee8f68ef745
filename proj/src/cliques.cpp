#include <dismantle/cliques.hpp>

#include <algorithm>
#include <stdexcept>

namespace dismantle {

namespace {

void bron_kerbosch(const Graph & g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet> & out) {
    if (p.empty()) {
        if (x.empty())
            out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    for (int u : p | x) {
        int c = (p & g.neighbours(u)).size();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (int v : p - g.neighbours(pivot)) {
        bron_kerbosch(g, r.with(v), p & g.neighbours(v), x & g.neighbours(v), out);
        p.erase(v);
        x.insert(v);
    }
}

void max_clique(const Graph & g, int size, VertexSet p, int & best) {
    if (p.empty()) {
        best = std::max(best, size);
        return;
    }
    while (!p.empty()) {
        if (size + p.size() <= best)
            return;
        int v = p.first();
        max_clique(g, size + 1, p & g.neighbours(v), best);
        p.erase(v);
    }
}

} // namespace

std::vector<VertexSet> maximal_cliques(const Graph & g, VertexSet s) {
    std::vector<VertexSet> out;
    if (!s.empty())
        bron_kerbosch(g, {}, s, {}, out);
    std::sort(out.begin(), out.end(), VertexSet::lex_less);
    return out;
}

std::vector<VertexSet> maximal_cliques(const Graph & g) { return maximal_cliques(g, g.vertices()); }

int clique_number(const Graph & g, VertexSet s) {
    int best = 0;
    max_clique(g, 0, s, best);
    return best;
}

int clique_number(const Graph & g) { return clique_number(g, g.vertices()); }

bool is_star_cluster_clique(const Graph & g, VertexSet a) {
    if (a.empty() || !a.is_subset_of(g.vertices()) || !is_clique(g, a))
        return false;
    for (auto k : maximal_cliques(g))
        if (!k.intersects(a))
            return false;
    return true;
}

std::optional<VertexSet> star_cluster_clique(const Graph & g, std::uint64_t budget, bool * exhausted) {
    if (exhausted)
        *exhausted = false;
    if (g.order() == 0)
        return std::nullopt;
    auto maximal = maximal_cliques(g);
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::optional<VertexSet> found;

    auto hits_all = [&](VertexSet a) {
        for (auto k : maximal)
            if (!k.intersects(a))
                return false;
        return true;
    };
    // cliques of exactly `need` more vertices drawn from cand, in lexicographic order
    auto rec = [&](auto & self, VertexSet cur, VertexSet cand, int need) -> bool {
        if (++nodes > budget) {
            out_of_budget = true;
            return true;
        }
        if (need == 0) {
            if (hits_all(cur)) {
                found = cur;
                return true;
            }
            return false;
        }
        while (cand.size() >= need) {
            int v = cand.first();
            cand.erase(v);
            auto above = cand & g.neighbours(v);
            if (self(self, cur.with(v), above, need - 1))
                return true;
        }
        return false;
    };
    int omega = clique_number(g);
    for (int size = 1; size <= omega; ++size)
        if (rec(rec, {}, g.vertices(), size))
            break;
    if (out_of_budget) {
        if (exhausted)
            *exhausted = true;
        return std::nullopt;
    }
    return found;
}

CliqueReport clique_report(const Graph & g) {
    CliqueReport r;
    r.maximal = maximal_cliques(g);
    r.omega = clique_number(g);
    r.star_cluster = star_cluster_clique(g);
    return r;
}

Certificate dismantle_to_star_clique(const Graph & g, VertexSet a) {
    if (!is_star_cluster_clique(g, a))
        throw std::invalid_argument("dismantle_to_star_clique: not a clique meeting every maximal clique");
    Certificate cert;
    cert.graph_hash = graph_hash(g);
    int size = a.size();
    auto cur = g.vertices();

    auto dominated_in = [&](VertexSet s, int x) {
        auto nx = g.closed_neighbours(x) & s;
        for (int w : a)
            if (nx.is_subset_of(g.closed_neighbours(w)))
                return true;
        return false;
    };

    while (cur != a) {
        auto outside = cur - a;
        bool all_apex = true;
        for (int x : outside)
            if (!a.is_subset_of(g.neighbours(x))) {
                all_apex = false;
                break;
            }
        if (size <= 2 || all_apex) {
            // every outside vertex is dominated by a vertex of a
            int pick = -1;
            for (int x : outside)
                if (dominated_in(cur, x)) {
                    pick = x;
                    break;
                }
            if (pick < 0)
                throw std::logic_error("dismantle_to_star_clique: no vertex dominated by the clique");
            cert.moves.push_back(Move::deletion(pick, 0));
            cur.erase(pick);
            continue;
        }
        // a vertex missing part of a; its neighbourhood dismantles onto the
        // smaller star-cluster clique a & N(x), so it is (size-2)-dismantlable
        int pick = -1;
        for (int x : outside)
            if (!a.is_subset_of(g.neighbours(x))) {
                pick = x;
                break;
            }
        cert.moves.push_back(Move::deletion(pick, size - 2));
        cur.erase(pick);
    }
    if (size > 1)
        cert.final_vertices = a.to_vector();
    return cert;
}

} // namespace dismantle
