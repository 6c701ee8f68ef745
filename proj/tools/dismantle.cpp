// Command-line front end.
//
// Exit codes: 0 decided yes / valid, 1 decided no / invalid, 2 budget ran
// out, 3 usage or I/O error.

#include <dismantle/cliques.hpp>
#include <dismantle/dismantling.hpp>
#include <dismantle/generators.hpp>
#include <dismantle/graph_io.hpp>
#include <dismantle/oracles.hpp>
#include <dismantle/suite.hpp>
#include <dismantle/transitivity.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace dismantle;
using nlohmann::json;

namespace {

enum Exit { kYes = 0, kNo = 1, kUndecided = 2, kUsage = 3 };

struct Common {
    std::uint64_t budget = kDefaultBudget;
    int threads = 1;
    bool deterministic = false;
    bool json_out = false;

    SearchOptions search() const {
        SearchOptions o;
        o.budget = budget;
        o.threads = threads;
        return o;
    }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A file path, or a family spec such as "cubion:3".
Graph load_graph(const std::string & arg) {
    if (std::filesystem::exists(arg))
        return read_graph_file(arg);
    try {
        return generate(FamilySpec::parse(arg));
    } catch (const std::invalid_argument & e) {
        throw UsageError("'" + arg + "' is neither a readable file nor a family spec (" + e.what() + ")");
    }
}

int exit_for(Status s) { return s == Status::yes ? kYes : s == Status::no ? kNo : kUndecided; }

json stats_json(const SearchStats & s, const Common & c) {
    json j{{"nodes", s.nodes}, {"memo_hits", s.memo_hits}};
    if (!c.deterministic)
        j["elapsed_ms"] = s.elapsed_ms;
    return j;
}

json cert_json(const Certificate & cert) { return json::parse(certificate_to_json(cert)); }

json names(const Graph & g, VertexSet s) {
    json a = json::array();
    for (int v : s)
        a.push_back(g.name(v));
    return a;
}

std::string set_text(const Graph & g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        out += (first ? "" : ", ") + g.name(v);
        first = false;
    }
    return out + "}";
}

void print_certificate(const Graph & g, const Certificate & cert) {
    for (auto & m : cert.moves)
        std::cout << "  " << describe(m, g) << "\n";
}

void emit(const json & j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommands -------------------------------------------------------------

int cmd_gen(const std::string & spec, const std::string & out, const std::string & format) {
    auto g = generate(FamilySpec::parse(spec));
    auto text = write_graph(g, format == "dot" ? GraphFormat::dot : GraphFormat::edge_list);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f)
            throw UsageError("cannot write '" + out + "'");
        f << text;
    }
    return kYes;
}

struct DecideArgs {
    std::string graph;
    std::optional<int> k;
    bool min_k = false;
    bool non_evasive = false;
    bool ws = false;
    bool vertices = false;
    std::string cert_out;
};

int cmd_decide(const DecideArgs & a, const Common & c) {
    auto g = load_graph(a.graph);
    int modes = a.k.has_value() + a.min_k + a.non_evasive + a.ws;
    if (modes != 1)
        throw UsageError("decide needs exactly one of --k, --min-k, --non-evasive, --ws");
    if (a.vertices && !a.k)
        throw UsageError("--vertices needs --k");
    auto save = [&](const std::optional<Certificate> & cert) {
        if (!a.cert_out.empty() && cert) {
            std::ofstream f(a.cert_out);
            if (!f)
                throw UsageError("cannot write '" + a.cert_out + "'");
            f << certificate_to_json(*cert, 2) << "\n";
        }
    };

    if (a.vertices) {
        auto r = k_dismantlable_vertices(g, *a.k, c.search());
        if (c.json_out)
            emit({{"command", "vertices"},
                  {"k", *a.k},
                  {"status", r.status == Status::yes ? "decided" : "indeterminate"},
                  {"vertices", names(g, r.vertices)},
                  {"stats", stats_json(r.stats, c)}});
        else if (r.status == Status::yes)
            std::cout << "D_" << *a.k << " = " << set_text(g, r.vertices) << "\n";
        else
            std::cout << "indeterminate (budget " << c.budget << " exhausted)\n";
        return r.status == Status::yes ? kYes : kUndecided;
    }

    if (a.min_k) {
        auto r = min_dismantling_index(g, c.search());
        save(r.certificate);
        std::string kind = r.kind == MinIndexResult::Kind::index               ? "index"
                           : r.kind == MinIndexResult::Kind::not_in_d_infinity ? "not_in_d_infinity"
                                                                                : "indeterminate";
        if (c.json_out) {
            json j{{"command", "min-k"}, {"result", kind}, {"stats", stats_json(r.stats, c)}, {"budget", c.budget}};
            if (r.kind == MinIndexResult::Kind::index)
                j["k"] = r.k;
            if (r.certificate)
                j["certificate"] = cert_json(*r.certificate);
            emit(j);
        } else if (r.kind == MinIndexResult::Kind::index) {
            std::cout << "minimal index: " << r.k << "\n";
            if (r.certificate)
                print_certificate(g, *r.certificate);
        } else if (r.kind == MinIndexResult::Kind::not_in_d_infinity) {
            std::cout << "not in D_infinity\n";
        } else {
            std::cout << "indeterminate (budget " << c.budget << " exhausted)\n";
        }
        return r.kind == MinIndexResult::Kind::index ? kYes
               : r.kind == MinIndexResult::Kind::indeterminate ? kUndecided
                                                                : kNo;
    }

    DismantleResult r;
    std::string what;
    if (a.k) {
        r = is_k_dismantlable(g, *a.k, c.search());
        what = "D_" + std::to_string(*a.k);
    } else if (a.non_evasive) {
        r = is_non_evasive(g, c.search());
        what = "non-evasive";
    } else {
        r = ws_dismantlable(g, c.search());
        what = "ws-dismantlable";
    }
    save(r.certificate);
    if (c.json_out) {
        json j{{"command", "decide"},
               {"question", what},
               {"status", to_string(r.status)},
               {"stats", stats_json(r.stats, c)},
               {"budget", r.budget}};
        if (r.certificate)
            j["certificate"] = cert_json(*r.certificate);
        emit(j);
    } else {
        std::cout << what << ": " << to_string(r.status);
        if (r.status == Status::indeterminate)
            std::cout << " (budget " << c.budget << " exhausted)";
        std::cout << "\n";
        if (r.certificate)
            print_certificate(g, *r.certificate);
    }
    return exit_for(r.status);
}

int cmd_certify(const std::string & graph, const std::string & cert_path, const Common & c) {
    auto g = load_graph(graph);
    Certificate cert;
    try {
        cert = read_certificate_file(cert_path);
    } catch (const CertificateError & e) {
        throw UsageError(e.what());
    }
    auto rep = verify_move_sequence(g, cert, c.search());
    if (c.json_out) {
        json j{{"command", "certify"}, {"valid", rep.valid}, {"final_vertices", rep.final_vertices}};
        if (!rep.valid) {
            j["failing_move"] = rep.failing_move;
            j["reason"] = rep.reason;
        }
        emit(j);
    } else if (rep.valid) {
        std::cout << "valid: " << cert.moves.size() << " moves, ends with " << rep.final_vertices.size()
                  << " vertices\n";
    } else {
        std::cout << "invalid";
        if (rep.failing_move >= 0)
            std::cout << " at move " << rep.failing_move << " (" << describe(cert.moves[rep.failing_move], g) << ")";
        std::cout << ": " << rep.reason << "\n";
    }
    return rep.valid ? kYes : kNo;
}

int cmd_stiff(const std::string & graph, int k, std::optional<std::uint64_t> seed, const Common & c) {
    auto g = load_graph(graph);
    auto order = seed ? Order::random : Order::deterministic;
    StiffCore core;
    try {
        core = stiff_core(g, k, order, seed.value_or(0), c.search());
    } catch (const std::runtime_error & e) {
        std::cerr << "dismantle: " << e.what() << "\n";
        return kUndecided;
    }
    if (c.json_out) {
        emit({{"command", "stiff"},
              {"k", k},
              {"core_vertices", names(g, core.remaining)},
              {"core_order", core.core.order()},
              {"core_edges", core.core.size()},
              {"certificate", cert_json(core.certificate)}});
    } else {
        std::cout << k << "-stiff core on " << core.core.order() << " vertices, " << core.core.size()
                  << " edges: " << set_text(g, core.remaining) << "\n";
        print_certificate(g, core.certificate);
    }
    return kYes;
}

int cmd_cliques(const std::string & graph, const Common & c) {
    auto g = load_graph(graph);
    auto rep = clique_report(g);
    if (c.json_out) {
        json j{{"command", "cliques"}, {"omega", rep.omega}, {"maximal", json::array()}};
        for (auto s : rep.maximal)
            j["maximal"].push_back(names(g, s));
        j["star_cluster"] = rep.star_cluster ? names(g, *rep.star_cluster) : json(nullptr);
        emit(j);
    } else {
        std::cout << "clique number: " << rep.omega << "\n" << rep.maximal.size() << " maximal cliques\n";
        for (auto s : rep.maximal)
            std::cout << "  " << set_text(g, s) << "\n";
        if (rep.star_cluster)
            std::cout << "star-cluster clique: " << set_text(g, *rep.star_cluster) << " (so g is in D_"
                      << std::max(rep.star_cluster->size() - 2, -1) << ")\n";
        else
            std::cout << "no star-cluster clique\n";
    }
    return kYes;
}

int cmd_aut(const std::string & graph, std::optional<int> i, const Common & c) {
    auto g = load_graph(graph);
    auto a = automorphisms(g);
    bool vt = is_vertex_transitive(g);
    std::optional<bool> ict;
    if (i)
        ict = is_i_complete_transitive(g, *i);
    if (c.json_out) {
        json j{{"command", "aut"}, {"vertex_transitive", vt}, {"orbits", json::array()}, {"base", a.base}};
        j["order"] = a.order_saturated ? json("overflow") : json(a.order);
        for (auto & o : a.orbits)
            j["orbits"].push_back(o);
        if (ict) {
            j["i"] = *i;
            j["i_complete_transitive"] = *ict;
        }
        emit(j);
    } else {
        std::cout << "|Aut| = " << (a.order_saturated ? std::string("> 2^64") : std::to_string(a.order)) << "\n"
                  << a.orbits.size() << " vertex orbit(s); vertex-transitive: " << (vt ? "yes" : "no") << "\n";
        if (ict)
            std::cout << *i << "-complete-transitive: " << (*ict ? "yes" : "no") << "\n";
    }
    return ict && !*ict ? kNo : kYes;
}

int cmd_game(const std::string & graph, const Common & c) {
    auto g = load_graph(graph);
    int depth = evasiveness_game_depth(g);
    bool ne = depth <= g.order() - 1;
    if (c.json_out)
        emit({{"command", "game"}, {"n", g.order()}, {"depth", depth}, {"non_evasive", ne}});
    else
        std::cout << "game depth " << depth << " on " << g.order() << " vertices: "
                  << (ne ? "non-evasive" : "evasive") << "\n";
    return kYes;
}

int cmd_witness(int max_n, const Common & c) {
    auto w = find_order_sensitivity_witness(max_n);
    if (!w) {
        if (c.json_out)
            emit({{"command", "witness"}, {"found", false}});
        else
            std::cout << "no witness with at most " << max_n << " vertices\n";
        return kNo;
    }
    if (c.json_out) {
        emit({{"command", "witness"},
              {"found", true},
              {"graph", write_graph(w->graph)},
              {"first", cert_json(w->first)},
              {"second", cert_json(w->second)}});
    } else {
        std::cout << write_graph(w->graph) << "first core: " << w->first_core.order() << " vertices, "
                  << w->first_core.size() << " edges\n";
        print_certificate(w->graph, w->first);
        std::cout << "second core: " << w->second_core.order() << " vertices, " << w->second_core.size() << " edges\n";
        print_certificate(w->graph, w->second);
    }
    return kYes;
}

int cmd_suite(bool extended, const std::vector<std::string> & only, const Common & c) {
    SuiteOptions o;
    o.extended = extended;
    o.budget = c.budget;
    o.threads = c.threads;
    o.only = only;
    if (!c.json_out)
        o.on_row = [&](const SuiteRow & r) {
            std::cout << (r.id.size() < 2 ? " " : "") << r.id << "  " << to_string(r.outcome);
            if (!c.deterministic)
                std::cout << "  " << std::fixed << std::setprecision(2) << r.seconds << "s";
            std::cout << "  " << r.title << "\n      " << r.detail << "\n" << std::flush;
        };
    auto rows = run_suite(o);
    bool ok = suite_passed(rows);
    if (c.json_out) {
        json j{{"command", "suite"}, {"passed", ok}, {"rows", json::array()}};
        for (auto & r : rows) {
            json row{{"id", r.id}, {"title", r.title}, {"extended", r.extended}, {"outcome", to_string(r.outcome)},
                     {"detail", r.detail}};
            if (!c.deterministic)
                row["seconds"] = r.seconds;
            j["rows"].push_back(row);
        }
        emit(j);
    } else {
        std::cout << (ok ? "all required rows pass" : "some rows failed") << "\n";
    }
    return ok ? kYes : kNo;
}

} // namespace

int main(int argc, char ** argv) {
    CLI::App app{"Decide and certify k-dismantlability of finite graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_option("--budget", c.budget, "search-node budget")->check(CLI::PositiveNumber);
    app.add_option("--threads", c.threads, "worker threads for the top search level")->check(CLI::Range(1, 256));
    app.add_flag("--deterministic", c.deterministic, "omit timings so output is byte-identical across runs");
    app.add_flag("--json", c.json_out, "machine-readable output");

    std::function<int()> run;

    auto gen = app.add_subcommand("gen", "write a named graph");
    std::string spec, out, format = "edge";
    gen->add_option("spec", spec, "family spec, e.g. cubion:3 or kneser:5,2")->required();
    gen->add_option("-o,--out", out, "output file (default stdout)");
    gen->add_option("--format", format, "edge or dot")->check(CLI::IsMember({"edge", "dot"}));
    gen->callback([&] { run = [&] { return cmd_gen(spec, out, format); }; });

    auto decide = app.add_subcommand("decide", "decide a dismantlability question");
    DecideArgs da;
    decide->add_option("graph", da.graph, "graph file or family spec")->required();
    decide->add_option("--k", da.k, "decide membership in D_k")->check(CLI::Range(-1, 63));
    decide->add_flag("--min-k", da.min_k, "smallest k with the graph in D_k");
    decide->add_flag("--non-evasive", da.non_evasive, "decide membership in D_infinity");
    decide->add_flag("--ws", da.ws, "decide ws-dismantlability");
    decide->add_flag("--vertices", da.vertices, "list the k-dismantlable vertices instead (with --k)");
    decide->add_option("--cert-out", da.cert_out, "write the certificate here");
    decide->callback([&] { run = [&] { return cmd_decide(da, c); }; });

    auto certify = app.add_subcommand("certify", "replay and check a certificate");
    std::string graph, cert;
    certify->add_option("graph", graph, "graph file or family spec")->required();
    certify->add_option("certificate", cert, "certificate JSON file")->required();
    certify->callback([&] { run = [&] { return cmd_certify(graph, cert, c); }; });

    auto stiff = app.add_subcommand("stiff", "greedy k-stiff core");
    int stiff_k = 0;
    std::optional<std::uint64_t> seed;
    stiff->add_option("graph", graph, "graph file or family spec")->required();
    stiff->add_option("--k", stiff_k, "level")->check(CLI::Range(0, 63));
    stiff->add_option("--seed", seed, "random deletion order with this seed");
    stiff->callback([&] { run = [&] { return cmd_stiff(graph, stiff_k, seed, c); }; });

    auto cliques = app.add_subcommand("cliques", "maximal cliques, clique number, star-cluster clique");
    cliques->add_option("graph", graph, "graph file or family spec")->required();
    cliques->callback([&] { run = [&] { return cmd_cliques(graph, c); }; });

    auto aut = app.add_subcommand("aut", "automorphism group, vertex- and i-complete-transitivity");
    std::optional<int> aut_i;
    aut->add_option("graph", graph, "graph file or family spec")->required();
    aut->add_option("--i", aut_i, "also test i-complete-transitivity")->check(CLI::PositiveNumber);
    aut->callback([&] { run = [&] { return cmd_aut(graph, aut_i, c); }; });

    auto game = app.add_subcommand("game", "optimal depth of the clique query game");
    game->add_option("graph", graph, "graph file or family spec")->required();
    game->callback([&] { run = [&] { return cmd_game(graph, c); }; });

    auto witness = app.add_subcommand("witness", "smallest graph with two non-isomorphic 1-stiff cores");
    int max_n = 7;
    witness->add_option("--max-n", max_n, "largest order searched")->check(CLI::Range(1, 9));
    witness->callback([&] { run = [&] { return cmd_witness(max_n, c); }; });

    auto suite = app.add_subcommand("suite", "run the reproduction suite");
    bool extended = false;
    std::vector<std::string> only;
    suite->add_flag("--extended", extended, "include the slower rows");
    suite->add_option("--only", only, "run only these row ids");
    suite->callback([&] { run = [&] { return cmd_suite(extended, only, c); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    try {
        return run();
    } catch (const UsageError & e) {
        std::cerr << "dismantle: " << e.what() << "\n";
    } catch (const ParseError & e) {
        std::cerr << "dismantle: " << e.what() << "\n";
    } catch (const std::invalid_argument & e) {
        std::cerr << "dismantle: " << e.what() << "\n";
    } catch (const std::exception & e) {
        std::cerr << "dismantle: " << e.what() << "\n";
    }
    return kUsage;
}
