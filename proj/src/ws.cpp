// ws-dismantlability (vertex and edge moves) and derivability under a
// predicate on neighbourhoods.

#include <dismantle/dismantling.hpp>

#include <chrono>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dismantle {

namespace {

struct Exhausted {};

struct WsSearch {
    int n;
    SearchOptions options;
    std::uint64_t nodes = 0;
    std::uint64_t inner_nodes = 0;
    std::uint64_t hits = 0;
    std::unordered_set<std::string> dead;
    std::vector<Move> path;

    Graph snapshot(const std::vector<VertexSet> & rows) const {
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v : rows[u])
                if (u < v)
                    b.add_edge(u, v);
        return b.build();
    }

    static std::string key(const std::vector<VertexSet> & rows, VertexSet present) {
        std::string k(reinterpret_cast<const char *>(&present), sizeof present);
        for (int v : present) {
            auto r = (rows[v] & present).bits();
            k.append(reinterpret_cast<const char *>(&r), sizeof r);
        }
        return k;
    }

    Status must(Status s) {
        if (s == Status::indeterminate)
            throw Exhausted{};
        return s;
    }

    bool dfs(std::vector<VertexSet> & rows, VertexSet present) {
        if (present.size() == 1)
            return true;
        if (++nodes > options.budget)
            throw Exhausted{};
        auto k = key(rows, present);
        if (dead.count(k)) {
            ++hits;
            return false;
        }
        auto g = snapshot(rows);
        // deleting vertices or edges never reconnects a graph
        if (!is_connected(g, present)) {
            dead.insert(k);
            return false;
        }
        Engine e(g, options);
        auto finish = [&] { inner_nodes += e.stats().nodes; };
        if (must(e.in_class(present, 1)) == Status::yes) {
            auto order = e.dismantling_order(present, 1);
            for (int x : *order)
                path.push_back(Move::deletion(x, 1));
            finish();
            return true;
        }
        for (int x : present)
            if (must(e.vertex_dismantlable(present, x, 1)) == Status::yes) {
                path.push_back(Move::deletion(x, 1));
                if (dfs(rows, present.without(x))) {
                    finish();
                    return true;
                }
                path.pop_back();
            }
        for (int u : present)
            for (int v : rows[u] & present) {
                if (v < u)
                    continue;
                auto common = rows[u] & rows[v] & present;
                if (common.empty() || must(e.in_class(common, 0)) != Status::yes)
                    continue;
                rows[u].erase(v);
                rows[v].erase(u);
                path.push_back(Move::edge_deletion(u, v));
                bool ok = dfs(rows, present);
                rows[u].insert(v);
                rows[v].insert(u);
                if (ok) {
                    finish();
                    return true;
                }
                path.pop_back();
            }
        finish();
        dead.insert(k);
        return false;
    }
};

} // namespace

DismantleResult ws_dismantlable(const Graph & g, const SearchOptions & options, const std::vector<Move> & prefix) {
    if (g.order() == 0)
        throw std::invalid_argument("the empty graph belongs to no dismantlability class");
    auto t0 = std::chrono::steady_clock::now();
    DismantleResult out;
    out.budget = options.budget;

    WsSearch s;
    s.n = g.order();
    s.options = options;
    std::vector<VertexSet> rows(g.order());
    for (int v = 0; v < g.order(); ++v)
        rows[v] = g.neighbours(v);
    auto present = g.vertices();

    // replay the forced prefix, checking each move as the verifier would
    for (const auto & m : prefix) {
        if (m.kind == Move::Kind::add)
            throw std::invalid_argument("ws_dismantlable: prefix may not add vertices");
        Engine e(s.snapshot(rows), options);
        bool ok = false;
        if (m.kind == Move::Kind::remove) {
            ok = present.contains(m.v) && present.size() > 1 && m.k >= 0 && m.k <= 1 &&
                 e.vertex_dismantlable(present, m.v, m.k) == Status::yes;
            if (ok)
                present.erase(m.v);
        } else {
            ok = present.contains(m.u) && present.contains(m.v) && rows[m.u].contains(m.v);
            if (ok) {
                auto common = rows[m.u] & rows[m.v] & present;
                ok = !common.empty() && e.in_class(common, 0) == Status::yes;
            }
            if (ok) {
                rows[m.u].erase(m.v);
                rows[m.v].erase(m.u);
            }
        }
        if (!ok)
            throw std::invalid_argument("ws_dismantlable: prefix move '" + describe(m, g) + "' is not a legal ws-move");
        s.path.push_back(m);
    }

    try {
        out.status = s.dfs(rows, present) ? Status::yes : Status::no;
    } catch (const Exhausted &) {
        out.status = Status::indeterminate;
    }
    if (out.status == Status::yes) {
        Certificate c;
        c.graph_hash = graph_hash(g);
        c.moves = s.path;
        out.certificate = std::move(c);
    }
    out.stats.nodes = s.nodes + s.inner_nodes;
    out.stats.memo_hits = s.hits;
    out.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

DismantleResult derivable(const Graph & g, const GraphPredicate & pred, const SearchOptions & options) {
    if (g.order() == 0)
        throw std::invalid_argument("the empty graph belongs to no dismantlability class");
    auto t0 = std::chrono::steady_clock::now();
    std::unordered_map<std::uint64_t, bool> memo, pred_memo;
    std::uint64_t nodes = 0, hits = 0;

    auto holds = [&](VertexSet nb) {
        auto [it, fresh] = pred_memo.try_emplace(nb.bits(), false);
        if (fresh)
            it->second = pred(g.induced(nb));
        return it->second;
    };
    auto rec = [&](auto & self, VertexSet s) -> bool {
        if (s.size() == 1)
            return true;
        if (auto it = memo.find(s.bits()); it != memo.end()) {
            ++hits;
            return it->second;
        }
        if (++nodes > options.budget)
            throw Exhausted{};
        bool r = false;
        for (int x : s) {
            auto nb = g.neighbours(x) & s;
            if (!nb.empty() && holds(nb) && self(self, s.without(x))) {
                r = true;
                break;
            }
        }
        memo[s.bits()] = r;
        return r;
    };

    DismantleResult out;
    out.budget = options.budget;
    try {
        out.status = rec(rec, g.vertices()) ? Status::yes : Status::no;
    } catch (const Exhausted &) {
        out.status = Status::indeterminate;
    }
    out.stats.nodes = nodes;
    out.stats.memo_hits = hits;
    out.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace dismantle
