#pragma once

#include <dismantle/certificate.hpp>
#include <dismantle/graph.hpp>

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dismantle {

enum class Status { yes, no, indeterminate };
std::string to_string(Status s);

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

struct SearchOptions {
    std::uint64_t budget = kDefaultBudget;  // search-node expansions
    int threads = 1;
    // Structural shortcuts: disconnected => No, triangle-free => tree test,
    // level capped at clique number - 2 and at order - 2. Turned off to
    // cross-check them.
    bool prunes = true;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_hits = 0;
    double elapsed_ms = 0;
};

struct DismantleResult {
    Status status = Status::indeterminate;
    std::optional<Certificate> certificate;
    SearchStats stats;
    std::uint64_t budget = 0;
};

// Memo table over subsets of a root graph: dense array for small roots,
// sharded hash maps otherwise. Safe for concurrent use.
class SubsetMemo {
public:
    enum : std::uint8_t { unknown = 0, no = 1, yes = 2 };

    explicit SubsetMemo(int n);
    std::uint8_t get(VertexSet s) const;
    void put(VertexSet s, std::uint8_t value);

private:
    static constexpr int kDenseLimit = 20;
    static constexpr int kShards = 64;
    struct Shard {
        mutable std::mutex mutex;
        std::unordered_map<std::uint64_t, std::uint8_t> map;
    };
    std::unique_ptr<std::atomic<std::uint8_t>[]> dense_;
    std::unique_ptr<Shard[]> shards_;
};

// Exact search for membership in D_k and in D_infinity on induced subgraphs
// of one root graph. Results are memoised per (subset, level) for the
// lifetime of the engine; the node budget is shared by all queries.
class Engine {
public:
    explicit Engine(const Graph & root, SearchOptions options = {});
    ~Engine();
    Engine(const Engine &) = delete;
    Engine & operator=(const Engine &) = delete;

    const Graph & root() const { return root_; }

    // g[s] in D_k, for k >= -1 and s nonempty
    Status in_class(VertexSet s, int k);
    // x in D_k(g[s]): its neighbourhood inside s is nonempty and in D_{k-1}
    Status vertex_dismantlable(VertexSet s, int x, int k);
    // D_k(g[s])
    std::optional<VertexSet> dismantlable_vertices(VertexSet s, int k);
    Status non_evasive(VertexSet s);

    // Deletion order reducing g[s] to a point, smallest index first at each
    // step. Requires in_class(s, k) == yes (or non_evasive(s) == yes).
    std::optional<std::vector<int>> dismantling_order(VertexSet s, int k);
    std::optional<std::vector<int>> non_evasive_order(VertexSet s);

    SearchStats stats() const;
    std::uint64_t budget() const { return options_.budget; }
    void add_budget(std::uint64_t extra) { options_.budget += extra; }

private:
    struct Exhausted {};

    bool decide(VertexSet s, int k);
    std::optional<bool> shortcut(VertexSet s, int k);
    bool expand(VertexSet s, int k);
    bool vertex_ok(VertexSet s, int x, int k);
    int clamp_level(VertexSet s, int k) const;
    bool ne(VertexSet s);
    bool parallel_expand(VertexSet s, int k);
    void tick();
    SubsetMemo & memo(int k);

    Graph root_;
    SearchOptions options_;
    int n_;
    std::vector<std::unique_ptr<SubsetMemo>> levels_;  // index k + 1
    std::vector<std::once_flag> level_init_;
    std::unique_ptr<SubsetMemo> ne_memo_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<std::uint64_t> hits_{0};
    double elapsed_ms_ = 0;
};

// ---- whole-graph operations ------------------------------------------------

struct VertexSetResult {
    Status status = Status::indeterminate;  // yes once the set is known
    VertexSet vertices;
    SearchStats stats;
};

VertexSetResult k_dismantlable_vertices(const Graph & g, int k, const SearchOptions & options = {});
DismantleResult is_k_dismantlable(const Graph & g, int k, const SearchOptions & options = {});
DismantleResult is_non_evasive(const Graph & g, const SearchOptions & options = {});

struct MinIndexResult {
    enum class Kind { index, not_in_d_infinity, indeterminate };
    Kind kind = Kind::indeterminate;
    int k = 0;  // meaningful for Kind::index
    std::optional<Certificate> certificate;
    SearchStats stats;
};

MinIndexResult min_dismantling_index(const Graph & g, const SearchOptions & options = {});

enum class Order { deterministic, random };

struct StiffCore {
    Graph core;
    VertexSet remaining;
    Certificate certificate;
};

// Repeatedly deletes a k-dismantlable vertex until none is left.
StiffCore stiff_core(const Graph & g, int k, Order order = Order::deterministic, std::uint64_t seed = 0,
                     const SearchOptions & options = {});

struct VerifyReport {
    bool valid = false;
    int failing_move = -1;  // -1 with !valid: header or final-state problem
    std::string reason;
    std::vector<int> final_vertices;  // present ids after replay
};

VerifyReport verify_move_sequence(const Graph & g, const Certificate & cert, const SearchOptions & options = {});

// Reduction to a point by 0/1-dismantlable vertex deletions and deletions of
// edges {a,b} with N(a) & N(b) in D_0. `prefix` moves are replayed first and
// kept at the head of the certificate.
DismantleResult ws_dismantlable(const Graph & g, const SearchOptions & options = {},
                                const std::vector<Move> & prefix = {});

using GraphPredicate = std::function<bool(const Graph &)>;

// Smallest class closed under the step "pred(N(x)) and X - x derivable
// implies X derivable", started from the point.
DismantleResult derivable(const Graph & g, const GraphPredicate & pred, const SearchOptions & options = {});

Certificate deletion_certificate(const Graph & g, const std::vector<int> & order, int k);

} // namespace dismantle
