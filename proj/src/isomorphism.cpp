// Isomorphism, automorphism search and canonical forms by equitable
// refinement of ordered partitions plus individualisation.

#include <dismantle/graph.hpp>

#include <algorithm>
#include <stdexcept>

namespace dismantle {

namespace {

using Cells = std::vector<std::vector<int>>;

void check_size(const Graph & g) {
    if (g.order() > kMaxIsoVertices)
        throw std::invalid_argument("isomorphism routines are limited to " + std::to_string(kMaxIsoVertices) +
                                    " vertices, got " + std::to_string(g.order()));
}

VertexSet mask(const std::vector<int> & cell) {
    VertexSet s;
    for (int v : cell)
        s.insert(v);
    return s;
}

// Splits cell `ci` by neighbour counts into the splitter mask. Returns the
// groups in ascending count order together with their counts.
void split_by(const Graph & g, const std::vector<int> & cell, VertexSet splitter,
              std::vector<std::pair<int, int>> & keyed) {
    keyed.clear();
    for (int v : cell)
        keyed.emplace_back((g.neighbours(v) & splitter).size(), v);
    std::sort(keyed.begin(), keyed.end());
}

// Refines both ordered partitions in lock step to the coarsest equitable
// refinement. Returns false as soon as the two sides stop corresponding.
// With h == nullptr only the left side is refined.
bool refine(const Graph & g, Cells & left, const Graph * h, Cells * right) {
    std::vector<std::pair<int, int>> kl, kr;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t si = 0; si < left.size() && !changed; ++si) {
            auto sl = mask(left[si]);
            auto sr = h ? mask((*right)[si]) : VertexSet{};
            for (std::size_t ci = 0; ci < left.size(); ++ci) {
                if (left[ci].size() == 1)
                    continue;
                split_by(g, left[ci], sl, kl);
                if (h) {
                    split_by(*h, (*right)[ci], sr, kr);
                    for (std::size_t t = 0; t < kl.size(); ++t)
                        if (kl[t].first != kr[t].first)
                            return false;
                }
                if (kl.front().first == kl.back().first)
                    continue;
                auto explode = [](const std::vector<std::pair<int, int>> & keyed) {
                    Cells parts;
                    for (std::size_t t = 0; t < keyed.size(); ++t) {
                        if (t == 0 || keyed[t].first != keyed[t - 1].first)
                            parts.emplace_back();
                        parts.back().push_back(keyed[t].second);
                    }
                    return parts;
                };
                auto pl = explode(kl);
                left.erase(left.begin() + ci);
                left.insert(left.begin() + ci, pl.begin(), pl.end());
                if (h) {
                    auto pr = explode(kr);
                    right->erase(right->begin() + ci);
                    right->insert(right->begin() + ci, pr.begin(), pr.end());
                }
                changed = true;
                break;
            }
        }
    }
    return true;
}

int find_cell(const Cells & cells, int v) {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (std::find(cells[i].begin(), cells[i].end(), v) != cells[i].end())
            return static_cast<int>(i);
    return -1;
}

void individualise(Cells & cells, int ci, int v) {
    auto & c = cells[ci];
    c.erase(std::find(c.begin(), c.end(), v));
    cells.insert(cells.begin() + ci, std::vector<int>{v});
}

int first_nonsingleton(const Cells & cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].size() > 1)
            return static_cast<int>(i);
    return -1;
}

bool search_iso(const Graph & g, Cells left, const Graph & h, Cells right, std::vector<int> & f) {
    if (!refine(g, left, &h, &right))
        return false;
    int ci = first_nonsingleton(left);
    if (ci < 0) {
        for (std::size_t i = 0; i < left.size(); ++i)
            f[left[i][0]] = right[i][0];
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (g.adjacent(u, v) != h.adjacent(f[u], f[v]))
                    return false;
        return true;
    }
    int u = left[ci][0];
    for (int w : right[ci]) {
        auto l2 = left, r2 = right;
        individualise(l2, ci, u);
        individualise(r2, ci, w);
        if (search_iso(g, std::move(l2), h, std::move(r2), f))
            return true;
    }
    return false;
}

std::optional<std::vector<int>> find_isomorphism(const Graph & g, const Graph & h,
                                                 const std::vector<std::pair<int, int>> & fixed) {
    if (g.order() != h.order() || g.size() != h.size())
        return std::nullopt;
    int n = g.order();
    if (n == 0)
        return std::vector<int>{};
    Cells left{g.vertices().to_vector()}, right{h.vertices().to_vector()};
    for (auto [a, b] : fixed) {
        int ci = find_cell(left, a);
        if (ci < 0 || find_cell(right, b) != ci)
            return std::nullopt;
        if (left[ci].size() == 1)
            continue;
        individualise(left, ci, a);
        individualise(right, ci, b);
    }
    std::vector<int> f(n, -1);
    if (!search_iso(g, std::move(left), h, std::move(right), f))
        return std::nullopt;
    return f;
}

std::string encode(const Graph & g, const std::vector<int> & order) {
    int n = g.order();
    std::string key;
    key.push_back(static_cast<char>(n));
    unsigned char byte = 0;
    int nbits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            byte = static_cast<unsigned char>((byte << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0));
            if (++nbits == 8) {
                key.push_back(static_cast<char>(byte));
                byte = 0;
                nbits = 0;
            }
        }
    if (nbits)
        key.push_back(static_cast<char>(byte << (8 - nbits)));
    return key;
}

struct CanonSearch {
    const Graph & g;
    CanonicalForm best;
    bool found = false;

    void run(Cells cells, std::vector<int> & prefix) {
        refine(g, cells, nullptr, nullptr);
        int ci = first_nonsingleton(cells);
        if (ci < 0) {
            std::vector<int> order;
            for (auto & c : cells)
                order.push_back(c[0]);
            auto key = encode(g, order);
            if (!found || key < best.key) {
                best = {std::move(key), std::move(order)};
                found = true;
            }
            return;
        }
        std::vector<int> tried;
        auto cell = cells[ci];
        std::sort(cell.begin(), cell.end());
        for (int v : cell) {
            // skip v when an automorphism fixing the prefix maps an explored sibling onto it
            bool equivalent = false;
            for (int e : tried) {
                std::vector<std::pair<int, int>> fixed;
                for (int p : prefix)
                    fixed.emplace_back(p, p);
                fixed.emplace_back(e, v);
                if (find_isomorphism(g, g, fixed)) {
                    equivalent = true;
                    break;
                }
            }
            if (equivalent)
                continue;
            auto next = cells;
            individualise(next, ci, v);
            prefix.push_back(v);
            run(std::move(next), prefix);
            prefix.pop_back();
            tried.push_back(v);
        }
    }
};

} // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph & g, const Graph & h) {
    check_size(g);
    check_size(h);
    return find_isomorphism(g, h, {});
}

std::optional<std::vector<int>> find_automorphism(const Graph & g, const std::vector<std::pair<int, int>> & fixed) {
    check_size(g);
    for (auto [a, b] : fixed)
        if (a < 0 || a >= g.order() || b < 0 || b >= g.order())
            throw std::out_of_range("automorphism constraint out of range");
    return find_isomorphism(g, g, fixed);
}

CanonicalForm canonical_form(const Graph & g) {
    check_size(g);
    if (g.order() == 0)
        return {std::string(1, '\0'), {}};
    CanonSearch s{g, {}, false};
    std::vector<int> prefix;
    s.run(Cells{g.vertices().to_vector()}, prefix);
    return s.best;
}

std::string canonical_key(const Graph & g) { return canonical_form(g).key; }

} // namespace dismantle
