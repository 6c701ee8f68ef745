#include <dismantle/dismantling.hpp>

#include <algorithm>
#include <bit>

namespace dismantle {

namespace {

// Mutable replay state over vertex ids 0..63.
struct Replay {
    std::vector<VertexSet> rows = std::vector<VertexSet>(kMaxVertices);
    VertexSet present, used;
    std::unique_ptr<Engine> engine;
    SearchOptions options;

    Replay(const Graph & g, const SearchOptions & opts) : options(opts) {
        for (int v = 0; v < g.order(); ++v)
            rows[v] = g.neighbours(v);
        present = used = g.vertices();
    }

    Engine & current() {
        if (!engine) {
            int order = 64 - std::countl_zero(used.bits());
            GraphBuilder b(order);
            for (int u = 0; u < order; ++u)
                for (int v : rows[u])
                    if (u < v)
                        b.add_edge(u, v);
            engine = std::make_unique<Engine>(b.build(), options);
        }
        return *engine;
    }

    void touched() { engine.reset(); }
};

std::string level_name(int k) { return "D_" + std::to_string(k); }

} // namespace

VerifyReport verify_move_sequence(const Graph & g, const Certificate & cert, const SearchOptions & options) {
    VerifyReport report;
    if (g.order() == 0) {
        report.reason = "empty starting graph";
        return report;
    }
    if (!cert.graph_hash.empty() && cert.graph_hash != graph_hash(g)) {
        report.reason = "graph hash " + cert.graph_hash + " does not match the graph (" + graph_hash(g) + ")";
        return report;
    }
    Replay st(g, options);
    auto fail = [&](std::size_t i, std::string why) {
        report.valid = false;
        report.failing_move = static_cast<int>(i);
        report.reason = std::move(why);
        report.final_vertices = st.present.to_vector();
        return report;
    };
    auto in_range = [](int v) { return v >= 0 && v < kMaxVertices; };
    // checks g[s] in D_k on the current replay graph
    auto check = [&](VertexSet s, int k, std::string & why) {
        auto r = st.current().in_class(s, k);
        if (r == Status::yes)
            return true;
        why = r == Status::no ? "is not in " + level_name(k) : "could not be decided within the budget";
        return false;
    };

    for (std::size_t i = 0; i < cert.moves.size(); ++i) {
        const auto & m = cert.moves[i];
        std::string why;
        switch (m.kind) {
        case Move::Kind::remove: {
            if (!in_range(m.v) || !st.present.contains(m.v))
                return fail(i, "vertex " + std::to_string(m.v) + " is not present");
            if (m.k < 0)
                return fail(i, "deletion level must be >= 0");
            if (st.present.size() == 1)
                return fail(i, "cannot delete the last vertex");
            auto nb = st.rows[m.v] & st.present;
            if (nb.empty())
                return fail(i, "vertex " + std::to_string(m.v) + " has an empty neighbourhood");
            if (!check(nb, m.k - 1, why))
                return fail(i, "neighbourhood of " + std::to_string(m.v) + " " + why);
            st.present.erase(m.v);
            break;
        }
        case Move::Kind::add: {
            if (!in_range(m.v) || st.used.contains(m.v))
                return fail(i, "added vertex id " + std::to_string(m.v) + " is not fresh");
            if (m.k < 0)
                return fail(i, "addition level must be >= 0");
            VertexSet nb;
            for (int u : m.nbrs) {
                if (!in_range(u) || !st.present.contains(u))
                    return fail(i, "declared neighbour " + std::to_string(u) + " is not present");
                if (nb.contains(u))
                    return fail(i, "declared neighbour " + std::to_string(u) + " repeated");
                nb.insert(u);
            }
            if (nb.empty())
                return fail(i, "declared neighbourhood is empty");
            if (!check(nb, m.k - 1, why))
                return fail(i, "declared neighbourhood " + why);
            st.rows[m.v] = nb;
            for (int u : nb)
                st.rows[u].insert(m.v);
            st.present.insert(m.v);
            st.used.insert(m.v);
            st.touched();
            break;
        }
        case Move::Kind::remove_edge: {
            if (!in_range(m.u) || !in_range(m.v) || !st.present.contains(m.u) || !st.present.contains(m.v) ||
                !st.rows[m.u].contains(m.v))
                return fail(i, "edge {" + std::to_string(m.u) + "," + std::to_string(m.v) + "} is not present");
            auto common = st.rows[m.u] & st.rows[m.v] & st.present;
            if (common.empty())
                return fail(i, "common neighbourhood of the edge is empty");
            if (!check(common, 0, why))
                return fail(i, "common neighbourhood of the edge " + why);
            st.rows[m.u].erase(m.v);
            st.rows[m.v].erase(m.u);
            st.touched();
            break;
        }
        }
    }

    report.final_vertices = st.present.to_vector();
    if (!cert.final_vertices) {
        if (st.present.size() != 1) {
            report.reason = "replay ends with " + std::to_string(st.present.size()) + " vertices, not a point";
            return report;
        }
    } else {
        auto want = *cert.final_vertices;
        std::sort(want.begin(), want.end());
        if (want != report.final_vertices) {
            report.reason = "replay does not end at the declared vertex set";
            return report;
        }
    }
    report.valid = true;
    return report;
}

} // namespace dismantle
