#pragma once

#include <dismantle/certificate.hpp>
#include <dismantle/dismantling.hpp>
#include <dismantle/graph.hpp>

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace dismantle {

// Reproduction suite: one row per acceptance criterion, plus the
// flag-gated extended rows.

enum class Outcome { pass, fail, indeterminate };
std::string to_string(Outcome o);

struct SuiteRow {
    std::string id;  // "1" .. "9", extended rows "1x", "3x"
    std::string title;
    bool extended = false;
    Outcome outcome = Outcome::fail;
    std::string detail;
    double seconds = 0;
};

struct SuiteOptions {
    bool extended = false;
    std::uint64_t budget = kDefaultBudget;
    int threads = 1;
    std::function<void(const SuiteRow &)> on_row;  // called as each row finishes
    std::vector<std::string> only;                 // row ids to run; empty = all
};

std::vector<SuiteRow> run_suite(const SuiteOptions & options);

// Core rows must pass; extended rows may be indeterminate but not fail.
bool suite_passed(const std::vector<SuiteRow> & rows);

// Q_n -> Q_{n-1} -> ... -> Q_1 -> point: delete alpha_{m,0}, alpha_{m,1} at
// level m-1, then 0-delete each tuple with x_m = 1 (a twin of its x_m = 0
// partner once the alphas are gone).
Certificate cubion_certificate(int n);

// Random graph with a clique A of size a meeting every maximal clique; the
// vertex ids are shuffled. Returns the graph and A.
std::pair<Graph, VertexSet> planted_star_cluster(int a, std::mt19937_64 & rng);

// Graph and present ids after applying moves without checking them.
std::pair<Graph, VertexSet> apply_moves(const Graph & g, const std::vector<Move> & moves);

} // namespace dismantle
