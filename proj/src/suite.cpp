#include <dismantle/cliques.hpp>
#include <dismantle/generators.hpp>
#include <dismantle/oracles.hpp>
#include <dismantle/suite.hpp>
#include <dismantle/transitivity.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace dismantle {

std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::pass:
        return "pass";
    case Outcome::fail:
        return "fail";
    case Outcome::indeterminate:
        return "indeterminate";
    }
    return "?";
}

bool suite_passed(const std::vector<SuiteRow> & rows) {
    for (auto & r : rows)
        if (r.outcome == Outcome::fail || (!r.extended && r.outcome != Outcome::pass))
            return false;
    return true;
}

Certificate cubion_certificate(int n) {
    auto g = cubion(n);
    Certificate c;
    c.graph_hash = graph_hash(g);
    for (int m = n; m >= 1; --m) {
        c.moves.push_back(Move::deletion(g.at("alpha_" + std::to_string(m) + "_0"), m - 1));
        c.moves.push_back(Move::deletion(g.at("alpha_" + std::to_string(m) + "_1"), m - 1));
        for (int t = 0; t < (1 << n); ++t) {
            // present tuples have x_{m+1..n} = 0; drop the x_m = 1 half
            bool high_clear = (t & ((1 << (n - m)) - 1)) == 0;
            if (high_clear && ((t >> (n - m)) & 1))
                c.moves.push_back(Move::deletion(t, 0));
        }
    }
    return c;
}

std::pair<Graph, VertexSet> planted_star_cluster(int a, std::mt19937_64 & rng) {
    if (a < 1 || a > 8)
        throw std::invalid_argument("planted_star_cluster: need 1 <= a <= 8");
    std::uniform_int_distribution<int> outside_count(2, 8);
    std::uniform_real_distribution<double> density(0.2, 0.6);
    for (;;) {
        int m = outside_count(rng);
        int n = a + m;
        double p = density(rng);
        std::bernoulli_distribution coin(p);
        GraphBuilder b(n);
        for (int u = 0; u < a; ++u)
            for (int v = u + 1; v < a; ++v)
                b.add_edge(u, v);
        for (int u = a; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    b.add_edge(u, v);
        std::uniform_int_distribution<std::uint32_t> subset(1, (1u << a) - 1);
        for (int x = a; x < n; ++x) {
            auto s = subset(rng);
            for (int i = 0; i < a; ++i)
                if ((s >> i) & 1)
                    b.add_edge(x, i);
        }
        auto g = b.build();
        if (!is_star_cluster_clique(g, VertexSet::full(a)))
            continue;
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        VertexSet A;
        for (int i = 0; i < a; ++i)
            A.insert(perm[i]);
        return {g.permuted(perm), A};
    }
}

std::pair<Graph, VertexSet> apply_moves(const Graph & g, const std::vector<Move> & moves) {
    std::vector<VertexSet> rows(kMaxVertices);
    for (int v = 0; v < g.order(); ++v)
        rows[v] = g.neighbours(v);
    auto present = g.vertices();
    auto used = present;
    for (auto & m : moves) {
        switch (m.kind) {
        case Move::Kind::remove:
            present.erase(m.v);
            break;
        case Move::Kind::add:
            for (int u : m.nbrs) {
                rows[m.v].insert(u);
                rows[u].insert(m.v);
            }
            present.insert(m.v);
            used.insert(m.v);
            break;
        case Move::Kind::remove_edge:
            rows[m.u].erase(m.v);
            rows[m.v].erase(m.u);
            break;
        }
    }
    int order = 64 - std::countl_zero(used.bits());
    GraphBuilder b(order);
    for (int u = 0; u < order; ++u)
        for (int v : rows[u])
            if (u < v)
                b.add_edge(u, v);
    return {b.build(), present};
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failures for one row; the first few are kept for the report.
struct Tally {
    std::ostringstream notes;
    int failures = 0;
    bool undecided = false;

    void fail(const std::string & what) {
        if (failures++ < 3)
            notes << (notes.tellp() > 0 ? "; " : "") << what;
    }
    void check(bool ok, const std::string & what) {
        if (!ok)
            fail(what);
    }
    // a Status that should be decided; Indeterminate is recorded, not failed
    bool decided(Status s, const std::string & what) {
        if (s == Status::indeterminate) {
            undecided = true;
            if (failures < 3)
                notes << (notes.tellp() > 0 ? "; " : "") << what << " undecided within budget";
            return false;
        }
        return true;
    }
};

void finish(SuiteRow & row, Tally & t, const std::string & summary, double limit_s, Clock::time_point t0) {
    row.seconds = since(t0);
    if (limit_s > 0 && row.seconds > limit_s)
        t.fail("took " + std::to_string(row.seconds) + " s, limit " + std::to_string(limit_s) + " s");
    row.outcome = t.failures ? Outcome::fail : t.undecided ? Outcome::indeterminate : Outcome::pass;
    row.detail = summary;
    auto extra = t.notes.str();
    if (!extra.empty())
        row.detail += " [" + extra + "]";
}

std::string failures_summary(int failures, long long cases, const std::string & unit) {
    return std::to_string(failures) + " violations in " + std::to_string(cases) + " " + unit;
}

SuiteRow make_row(std::string id, std::string title, bool extended = false) {
    SuiteRow r;
    r.id = std::move(id);
    r.title = std::move(title);
    r.extended = extended;
    return r;
}

// ---- criteria ------------------------------------------------------------------

constexpr double kCubionLimit = 10;         // Q_1..Q_3 exact indices
constexpr double kCubionCertLimit = 1;      // Q_4 certificate replay
constexpr double kParasolLimit = 30;
constexpr double kAgreementLimit = 300;
constexpr int kAgreementSamples = 500;
constexpr int kCoreSamples = 300;
constexpr int kPlantedPerSize = 50;

SuiteRow cubion_row(const SuiteOptions & o) {
    auto row = make_row("1", "cubion Q_n has minimal index n-1 (n = 1, 2, 3)");
    auto t0 = Clock::now();
    Tally t;
    SearchOptions so{o.budget, o.threads};
    std::ostringstream s;
    for (int n = 1; n <= 3; ++n) {
        auto g = cubion(n);
        auto r = min_dismantling_index(g, so);
        if (r.kind == MinIndexResult::Kind::indeterminate) {
            t.decided(Status::indeterminate, "Q_" + std::to_string(n));
            continue;
        }
        bool ok = r.kind == MinIndexResult::Kind::index && r.k == n - 1;
        s << "Q_" << n << "=" << (r.kind == MinIndexResult::Kind::index ? std::to_string(r.k) : "none") << " ";
        t.check(ok, "Q_" + std::to_string(n) + " index wrong");
        if (ok && r.certificate)
            t.check(verify_move_sequence(g, *r.certificate, so).valid, "Q_" + std::to_string(n) + " certificate");
    }
    finish(row, t, s.str() + "(expected 0 1 2)", kCubionLimit, t0);
    return row;
}

SuiteRow cubion_extended_row(const SuiteOptions & o) {
    auto row = make_row("1x", "Q_4 in D_3 by construction, Q_4 not in D_2 by search", true);
    auto t0 = Clock::now();
    Tally t;
    SearchOptions so{o.budget, o.threads};
    auto g = cubion(4);
    auto c0 = Clock::now();
    auto rep = verify_move_sequence(g, cubion_certificate(4), so);
    double cert_s = since(c0);
    t.check(rep.valid, "Q_4 certificate: " + rep.reason);
    t.check(cert_s < kCubionCertLimit, "certificate replay over " + std::to_string(kCubionCertLimit) + " s");
    auto r = is_k_dismantlable(g, 2, so);
    if (t.decided(r.status, "Q_4 in D_2"))
        t.check(r.status == Status::no, "Q_4 reported in D_2");
    std::ostringstream s;
    s << "certificate " << (rep.valid ? "valid" : "invalid") << " in " << cert_s << " s; Q_4 in D_2: "
      << to_string(r.status) << " after " << r.stats.nodes << " nodes";
    finish(row, t, s.str(), 0, t0);
    return row;
}

SuiteRow parasol_row(const SuiteOptions & o) {
    auto row = make_row("2", "parasol: evasive, one 0-addition away from D_1, ws-dismantlable");
    auto t0 = Clock::now();
    Tally t;
    SearchOptions so{o.budget, o.threads};
    auto P = parasol();
    auto PB = parasol_plus();

    auto ne = is_non_evasive(P, so);
    if (t.decided(ne.status, "non-evasiveness of P"))
        t.check(ne.status == Status::no, "P reported non-evasive");
    for (int k = 0; k <= 3; ++k) {
        auto d = k_dismantlable_vertices(P, k, so);
        if (t.decided(d.status, "D_" + std::to_string(k) + "(P)"))
            t.check(d.vertices.empty(), "D_" + std::to_string(k) + "(P) nonempty");
    }

    // P + B' built by a 0-addition, then B' 0-deleted again
    int b1 = P.at("B1");
    std::vector<int> nb{b1};
    for (int v : P.neighbours(b1))
        if (P.name(v) != "B3" && P.name(v) != "B6")
            nb.push_back(v);
    Certificate round;
    round.graph_hash = graph_hash(P);
    round.moves = {Move::addition(P.order(), 0, nb, "B'"), Move::deletion(P.order(), 0)};
    round.final_vertices = P.vertices().to_vector();
    auto rr = verify_move_sequence(P, round, so);
    t.check(rr.valid, "add/delete B' round trip: " + rr.reason);
    auto [built, present] = apply_moves(P, {round.moves[0]});
    t.check(built == PB.without_labels(), "0-addition of B' does not give parasol_plus");

    auto d1 = is_k_dismantlable(PB, 1, so);
    if (t.decided(d1.status, "P+B' in D_1")) {
        t.check(d1.status == Status::yes, "P+B' not in D_1");
        if (d1.certificate) {
            auto & mv = d1.certificate->moves;
            t.check(!mv.empty() && mv[0].kind == Move::Kind::remove && mv[0].v == PB.at("B1") && mv[0].k == 1,
                    "P+B' certificate does not start by 1-deleting B1");
            t.check(verify_move_sequence(PB, *d1.certificate, so).valid, "P+B' certificate invalid");
        }
    }

    auto ws = ws_dismantlable(P, so, {Move::edge_deletion(P.at("B2"), P.at("B7"))});
    if (t.decided(ws.status, "ws-dismantlability of P")) {
        t.check(ws.status == Status::yes, "P not ws-dismantlable");
        if (ws.certificate) {
            auto & mv = ws.certificate->moves;
            t.check(!mv.empty() && mv[0].kind == Move::Kind::remove_edge && mv[0].u == P.at("B2") &&
                        mv[0].v == P.at("B7"),
                    "ws certificate does not start with edge {B2,B7}");
            t.check(verify_move_sequence(P, *ws.certificate, so).valid, "ws certificate invalid");
        }
    }
    std::ostringstream s;
    s << "P non-evasive: " << to_string(ne.status) << "; P+B' in D_1: " << to_string(d1.status)
      << "; ws: " << to_string(ws.status) << " with " << (ws.certificate ? ws.certificate->moves.size() : 0)
      << " moves";
    finish(row, t, s.str(), kParasolLimit, t0);
    return row;
}

// present vertices right after the last move of level 1 or higher
Graph after_last_high_deletion(const Graph & g, const Certificate & c) {
    std::size_t last = 0;
    for (std::size_t i = 0; i < c.moves.size(); ++i)
        if (c.moves[i].kind == Move::Kind::remove && c.moves[i].k >= 1)
            last = i + 1;
    auto [h, present] = apply_moves(g, {c.moves.begin(), c.moves.begin() + static_cast<long>(last)});
    return h.induced(present);
}

std::vector<std::string> added_labels(const Certificate & c) {
    std::vector<std::string> out;
    for (auto & m : c.moves)
        if (m.kind == Move::Kind::add)
            out.push_back(m.label);
    return out;
}

SuiteRow dh_bh_row(const SuiteOptions & o) {
    auto row = make_row("3", "dunce hat and Bing's house expansion certificates");
    auto t0 = Clock::now();
    Tally t;
    SearchOptions so{o.budget, o.threads};
    auto dh = dunce_hat();
    auto bh = bings_house();
    std::ostringstream s;

    auto cert = read_certificate_file(data_path("dunce_hat.cert.json"));
    auto rep = verify_move_sequence(dh, cert, so);
    t.check(rep.valid, "DH certificate: " + rep.reason);
    t.check(added_labels(cert) == std::vector<std::string>{"1'", "1''", "2'", "3'"}, "DH additions differ");
    t.check(are_isomorphic(after_last_high_deletion(dh, cert), wheel(12)).has_value(),
            "DH certificate does not pass through the 12-wheel");

    auto alt = read_certificate_file(data_path("dunce_hat_alternating.cert.json"));
    auto alt_rep = verify_move_sequence(dh, alt, so);
    t.check(alt_rep.valid, "DH alternating sequence: " + alt_rep.reason);

    auto bcert = read_certificate_file(data_path("bings_house.cert.json"));
    auto brep = verify_move_sequence(bh, bcert, so);
    t.check(brep.valid, "BH certificate: " + brep.reason);
    t.check(added_labels(bcert) ==
                std::vector<std::string>{"u1'", "u1''", "v1'", "v1''", "w6'", "w6''", "v6'", "v6''"},
            "BH additions differ");

    auto ne = is_non_evasive(dh, so);
    if (t.decided(ne.status, "non-evasiveness of DH"))
        t.check(ne.status == Status::no, "DH reported non-evasive");
    s << "DH " << (rep.valid ? "valid" : "invalid") << ", DH alternating " << (alt_rep.valid ? "valid" : "invalid")
      << ", BH " << (brep.valid ? "valid" : "invalid") << "; DH non-evasive: " << to_string(ne.status);
    finish(row, t, s.str(), 0, t0);
    return row;
}

SuiteRow bh_extended_row(const SuiteOptions & o) {
    auto row = make_row("3x", "Bing's house is evasive", true);
    auto t0 = Clock::now();
    Tally t;
    auto ne = is_non_evasive(bings_house(), {o.budget, o.threads});
    if (t.decided(ne.status, "non-evasiveness of BH"))
        t.check(ne.status == Status::no, "BH reported non-evasive");
    finish(row, t, "BH non-evasive: " + to_string(ne.status) + " after " + std::to_string(ne.stats.nodes) + " nodes",
           0, t0);
    return row;
}

SuiteRow agreement_row(const SuiteOptions & o) {
    auto row = make_row("4", "game depth <= n-1, non-evasive and D_k (k <= omega-2) agree");
    auto t0 = Clock::now();
    Tally t;
    long long cases = 0, non_evasive = 0;
    SearchOptions plain{o.budget, 1};
    SearchOptions raw{o.budget, 1, false};

    auto one = [&](const Graph & g, const std::string & tag) {
        ++cases;
        int n = g.order();
        int depth = evasiveness_game_depth(g);
        auto ne = is_non_evasive(g, plain);
        auto mi = min_dismantling_index(g, raw);
        if (!t.decided(ne.status, tag) || mi.kind == MinIndexResult::Kind::indeterminate) {
            t.undecided = true;
            return;
        }
        bool a = depth <= n - 1;
        bool b = ne.status == Status::yes;
        bool c = mi.kind == MinIndexResult::Kind::index;
        non_evasive += b;
        t.check(a == b && b == c, tag + ": game " + std::to_string(depth) + ", non-evasive " + to_string(ne.status) +
                                      ", index " + (c ? std::to_string(mi.k) : "none"));
        t.check(depth <= n && (a || depth == n), tag + ": game depth " + std::to_string(depth));
    };
    enumerate_labeled_graphs(5, [&](const Graph & g) { one(g, "n=5 graph #" + std::to_string(cases)); });
    std::mt19937_64 rng(20240501);
    for (int i = 0; i < kAgreementSamples; ++i) {
        int n = 6 + i % 3;
        auto g = sample_graphs(n, 1, rng(), 0.5).front();
        one(g, "sample " + std::to_string(i));
    }
    finish(row, t,
           failures_summary(t.failures, cases, "graphs") + " (" + std::to_string(non_evasive) + " non-evasive)",
           kAgreementLimit, t0);
    return row;
}

SuiteRow critical_row(const SuiteOptions & o) {
    auto row = make_row("5", "x in D_k \\ D_{k-1} lies in a (k+2)-clique, k = 1, 2, n <= 7");
    auto t0 = Clock::now();
    Tally t;
    long long graphs = 0, critical[3] = {0, 0, 0};
    SearchOptions raw{o.budget, 1, false};
    for (int n = 1; n <= 7; ++n)
        enumerate_labeled_graphs(n, [&](const Graph & g) {
            ++graphs;
            Engine e(g, raw);
            auto all = g.vertices();
            for (int x = 0; x < n; ++x) {
                Status at[3];
                for (int k = 0; k <= 2; ++k)
                    at[k] = e.vertex_dismantlable(all, x, k);
                for (int k = 1; k <= 2; ++k) {
                    if (!t.decided(at[k], "vertex test") || !t.decided(at[k - 1], "vertex test"))
                        continue;
                    if (at[k] == Status::yes && at[k - 1] == Status::no) {
                        ++critical[k];
                        // a (k+2)-clique through x is a (k+1)-clique in N(x)
                        t.check(clique_number(g, g.neighbours(x)) >= k + 1,
                                "vertex " + std::to_string(x) + " of a " + std::to_string(n) + "-vertex graph at k=" +
                                    std::to_string(k));
                    }
                }
            }
        });
    std::ostringstream s;
    s << failures_summary(t.failures, graphs, "graphs") << " (critical vertices: " << critical[1] << " at k=1, "
      << critical[2] << " at k=2)";
    finish(row, t, s.str(), 0, t0);
    return row;
}

SuiteRow core_row(const SuiteOptions & o) {
    auto row = make_row("6", "0-stiff cores agree up to isomorphism for random orders");
    auto t0 = Clock::now();
    Tally t;
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> order(2, 9);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    SearchOptions so{o.budget, 1};
    int nontrivial = 0;
    for (int i = 0; i < kCoreSamples; ++i) {
        auto g = sample_graphs(order(rng), 1, rng(), density(rng)).front();
        auto a = stiff_core(g, 0, Order::random, rng(), so);
        auto b = stiff_core(g, 0, Order::random, rng(), so);
        nontrivial += a.core.order() > 1;
        t.check(are_isomorphic(a.core, b.core).has_value(), "sample " + std::to_string(i));
    }
    finish(row, t,
           failures_summary(t.failures, kCoreSamples, "graphs") + " (" + std::to_string(nontrivial) +
               " with a core larger than a point)",
           0, t0);
    return row;
}

SuiteRow star_cluster_row(const SuiteOptions & o) {
    auto row = make_row("7", "planted star-cluster clique of size a gives an (a-2)-dismantling");
    auto t0 = Clock::now();
    Tally t;
    std::mt19937_64 rng(4242);
    SearchOptions so{o.budget, 1};
    int cases = 0;
    for (int a = 1; a <= 4; ++a)
        for (int i = 0; i < kPlantedPerSize; ++i, ++cases) {
            auto [g, A] = planted_star_cluster(a, rng);
            std::string tag = "a=" + std::to_string(a) + " #" + std::to_string(i);
            auto cert = dismantle_to_star_clique(g, A);
            auto rep = verify_move_sequence(g, cert, so);
            t.check(rep.valid, tag + " certificate: " + rep.reason);
            auto want = a > 1 ? A.to_vector() : rep.final_vertices;
            t.check(rep.final_vertices == want && (a > 1 || rep.final_vertices.size() == 1),
                    tag + " does not end at A");
            auto r = is_k_dismantlable(g, std::max(a - 2, -1), so);
            if (t.decided(r.status, tag))
                t.check(r.status == Status::yes, tag + " not in D_" + std::to_string(std::max(a - 2, -1)));
        }
    finish(row, t, failures_summary(t.failures, cases, "instances"), 0, t0);
    return row;
}

SuiteRow triangle_free_row(const SuiteOptions & o) {
    auto row = make_row("8", "connected triangle-free graphs (n <= 8): non-evasive iff tree");
    auto t0 = Clock::now();
    Tally t;
    SearchOptions raw{o.budget, 1, false};
    long long connected = 0, trees = 0;
    for (int n = 1; n <= 8; ++n)
        enumerate_triangle_free_graphs(n, [&](const Graph & g) {
            if (!is_connected(g))
                return;
            ++connected;
            bool tree = is_tree(g);
            trees += tree;
            Engine e(g, raw);
            auto ne = e.non_evasive(g.vertices());
            if (t.decided(ne, "graph"))
                t.check((ne == Status::yes) == tree, std::to_string(n) + "-vertex graph with " +
                                                         std::to_string(g.size()) + " edges");
        });
    finish(row, t,
           failures_summary(t.failures, connected, "connected graphs") + " (" + std::to_string(trees) + " trees)", 0,
           t0);
    return row;
}

std::vector<std::pair<std::string, Graph>> transitive_corpus() {
    std::vector<std::pair<std::string, Graph>> out;
    for (int n = 1; n <= 12; ++n)
        out.emplace_back("K_" + std::to_string(n), complete_graph(n));
    for (int n = 3; n <= 12; ++n)
        out.emplace_back("C_" + std::to_string(n), cycle_graph(n));
    for (int n = 2; n <= 12; ++n) {
        int half = n / 2;
        for (int mask = 0; mask < (1 << half); ++mask) {
            std::vector<int> d;
            std::string name = "circulant(" + std::to_string(n) + ";";
            for (int i = 0; i < half; ++i)
                if ((mask >> i) & 1) {
                    d.push_back(i + 1);
                    name += " " + std::to_string(i + 1);
                }
            out.emplace_back(name + ")", circulant(n, d));
        }
    }
    out.emplace_back("kneser(5,2)", kneser(5, 2));
    out.emplace_back("Q2 skeleton", hypercube(2));
    out.emplace_back("Q3 skeleton", hypercube(3));
    return out;
}

SuiteRow transitivity_row(const SuiteOptions & o) {
    auto row = make_row("9", "transitive graphs in D_0 / D_1 are complete; derivability matches D_k");
    auto t0 = Clock::now();
    Tally t;
    SearchOptions so{o.budget, 1};
    int graphs = 0, vt = 0, ict2 = 0;
    for (auto & [name, g] : transitive_corpus()) {
        ++graphs;
        bool transitive = is_vertex_transitive(g);
        vt += transitive;
        t.check(transitive == is_i_complete_transitive(g, 1), name + ": 1-complete-transitive != vertex-transitive");
        if (!transitive)
            continue;
        int omega = clique_number(g);
        for (int k = 0; k <= 1; ++k) {
            if (k + 1 > omega || !is_i_complete_transitive(g, k + 1))
                continue;
            ict2 += k == 1;
            auto r = is_k_dismantlable(g, k, so);
            if (t.decided(r.status, name))
                t.check(r.status == Status::no || is_complete(g),
                        name + " is in D_" + std::to_string(k) + " but not complete");
        }
    }
    long long derived = 0;
    for (int n = 1; n <= 5; ++n)
        enumerate_labeled_graphs(n, [&](const Graph & g) {
            for (int k = 0; k <= 1; ++k) {
                ++derived;
                auto in_lower = [&](const Graph & h) { return is_k_dismantlable(h, k - 1, so).status == Status::yes; };
                auto d = derivable(g, in_lower, so);
                auto r = is_k_dismantlable(g, k, so);
                if (t.decided(d.status, "derivability") && t.decided(r.status, "membership"))
                    t.check(d.status == r.status, std::to_string(n) + "-vertex graph at k=" + std::to_string(k));
            }
        });
    std::ostringstream s;
    s << t.failures << " violations: " << graphs << " corpus graphs (" << vt << " vertex-transitive, " << ict2
      << " 2-complete-transitive), " << derived << " derivability checks";
    finish(row, t, s.str(), 0, t0);
    return row;
}

} // namespace

std::vector<SuiteRow> run_suite(const SuiteOptions & options) {
    using Fn = SuiteRow (*)(const SuiteOptions &);
    const std::vector<std::tuple<std::string, bool, Fn>> rows = {
        {"1", false, cubion_row},        {"1x", true, cubion_extended_row}, {"2", false, parasol_row},
        {"3", false, dh_bh_row},         {"3x", true, bh_extended_row},     {"4", false, agreement_row},
        {"5", false, critical_row},      {"6", false, core_row},            {"7", false, star_cluster_row},
        {"8", false, triangle_free_row}, {"9", false, transitivity_row},
    };
    std::vector<SuiteRow> out;
    for (auto & [id, extended, fn] : rows) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
            continue;
        if (extended && !options.extended && options.only.empty())
            continue;
        SuiteRow row;
        try {
            row = fn(options);
        } catch (const std::exception & e) {
            row.id = id;
            row.extended = extended;
            row.outcome = Outcome::fail;
            row.detail = std::string("exception: ") + e.what();
        }
        if (options.on_row)
            options.on_row(row);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace dismantle
