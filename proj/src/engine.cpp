#include <dismantle/cliques.hpp>
#include <dismantle/dismantling.hpp>

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace dismantle {

std::string to_string(Status s) {
    switch (s) {
    case Status::yes: return "yes";
    case Status::no: return "no";
    case Status::indeterminate: return "indeterminate";
    }
    return "?";
}

SubsetMemo::SubsetMemo(int n) {
    if (n <= kDenseLimit) {
        std::size_t size = std::size_t{1} << n;
        dense_ = std::make_unique<std::atomic<std::uint8_t>[]>(size);
        for (std::size_t i = 0; i < size; ++i)
            dense_[i].store(unknown, std::memory_order_relaxed);
    } else {
        shards_ = std::make_unique<Shard[]>(kShards);
    }
}

std::uint8_t SubsetMemo::get(VertexSet s) const {
    if (dense_)
        return dense_[s.bits()].load(std::memory_order_relaxed);
    auto & shard = shards_[(s.bits() * 0x9e3779b97f4a7c15ULL) >> 58];
    std::lock_guard lock(shard.mutex);
    auto it = shard.map.find(s.bits());
    return it == shard.map.end() ? std::uint8_t{unknown} : it->second;
}

void SubsetMemo::put(VertexSet s, std::uint8_t value) {
    if (dense_) {
        dense_[s.bits()].store(value, std::memory_order_relaxed);
        return;
    }
    auto & shard = shards_[(s.bits() * 0x9e3779b97f4a7c15ULL) >> 58];
    std::lock_guard lock(shard.mutex);
    shard.map[s.bits()] = value;
}

namespace {

class Stopwatch {
public:
    explicit Stopwatch(double & sink) : sink_(sink), start_(std::chrono::steady_clock::now()) {}
    ~Stopwatch() {
        sink_ += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    double & sink_;
    std::chrono::steady_clock::time_point start_;
};

void require_nonempty(const Graph & g) {
    if (g.order() == 0)
        throw std::invalid_argument("the empty graph belongs to no dismantlability class");
}

} // namespace

Engine::Engine(const Graph & root, SearchOptions options)
    : root_(root), options_(options), n_(root.order()), level_init_(kMaxVertices + 1) {
    require_nonempty(root_);
    if (options_.threads < 1)
        options_.threads = 1;
    levels_.resize(kMaxVertices + 1);
    ne_memo_ = std::make_unique<SubsetMemo>(n_);
}

Engine::~Engine() = default;

SubsetMemo & Engine::memo(int k) {
    std::call_once(level_init_[k + 1], [&] { levels_[k + 1] = std::make_unique<SubsetMemo>(n_); });
    return *levels_[k + 1];
}

void Engine::tick() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > options_.budget)
        throw Exhausted{};
}

SearchStats Engine::stats() const {
    return {nodes_.load(), hits_.load(), elapsed_ms_};
}

std::optional<bool> Engine::shortcut(VertexSet s, int k) {
    if (s.size() == 1)
        return true;
    if (!cone_apexes(root_, s).empty())
        return true;
    if (k < 0)
        return false;
    if (s.size() == 2)
        return false;  // two isolated vertices
    if (options_.prunes) {
        if (!is_connected(root_, s))
            return false;
        // a triangle-free member of any D_k is a tree, and trees are in D_0
        if (is_triangle_free(root_, s))
            return edge_count(root_, s) == s.size() - 1;
    }
    return std::nullopt;
}

// A member of D_infinity on m vertices is in D_{m-2}. Without prunes the
// level is only bounded by the memo's range.
int Engine::clamp_level(VertexSet s, int k) const {
    return std::min(k, options_.prunes ? s.size() - 2 : kMaxVertices - 1);
}

bool Engine::vertex_ok(VertexSet s, int x, int k) {
    auto nb = root_.neighbours(x) & s;
    return !nb.empty() && decide(nb, k - 1);
}

bool Engine::decide(VertexSet s, int k) {
    if (auto r = shortcut(s, k))
        return *r;
    k = clamp_level(s, k);
    auto & m = memo(k);
    if (auto v = m.get(s)) {
        hits_.fetch_add(1, std::memory_order_relaxed);
        return v == SubsetMemo::yes;
    }
    tick();
    bool r;
    int cap = options_.prunes ? std::max(0, clique_number(root_, s) - 2) : k;
    if (cap < k)
        r = decide(s, cap);
    else
        r = expand(s, k);
    m.put(s, r ? SubsetMemo::yes : SubsetMemo::no);
    return r;
}

bool Engine::expand(VertexSet s, int k) {
    if (k == 0) {
        // 0-dismantlability does not depend on the deletion order
        std::vector<VertexSet> chain;
        auto cur = s;
        while (cur.size() > 1) {
            int x = first_dominated(root_, cur);
            if (x < 0)
                break;
            chain.push_back(cur);
            cur.erase(x);
        }
        bool r = cur.size() == 1;
        auto & m = memo(0);
        for (std::size_t i = 1; i < chain.size(); ++i)
            if (chain[i].size() >= 2)
                m.put(chain[i], r ? SubsetMemo::yes : SubsetMemo::no);
        return r;
    }
    for (int x : s)
        if (vertex_ok(s, x, k) && decide(s.without(x), k))
            return true;
    return false;
}

bool Engine::parallel_expand(VertexSet s, int k) {
    if (auto r = shortcut(s, k))
        return *r;
    k = clamp_level(s, k);
    auto & m = memo(k);
    if (auto v = m.get(s))
        return v == SubsetMemo::yes;
    int cap = options_.prunes ? std::max(0, clique_number(root_, s) - 2) : k;
    if (cap < k || k == 0)
        return decide(s, k);
    tick();
    auto candidates = s.to_vector();
    std::atomic<std::size_t> next{0};
    std::atomic<bool> found{false}, exhausted{false};
    auto work = [&] {
        while (!found.load() && !exhausted.load()) {
            auto i = next.fetch_add(1);
            if (i >= candidates.size())
                return;
            int x = candidates[i];
            try {
                if (vertex_ok(s, x, k) && decide(s.without(x), k))
                    found.store(true);
            } catch (const Exhausted &) {
                exhausted.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < options_.threads; ++t)
        pool.emplace_back(work);
    work();
    for (auto & t : pool)
        t.join();
    if (found.load()) {
        m.put(s, SubsetMemo::yes);
        return true;
    }
    if (exhausted.load())
        throw Exhausted{};
    m.put(s, SubsetMemo::no);
    return false;
}

Status Engine::in_class(VertexSet s, int k) {
    if (s.empty() || !s.is_subset_of(root_.vertices()))
        throw std::invalid_argument("in_class: subset must be nonempty and inside the root graph");
    if (k < -1)
        throw std::invalid_argument("in_class: level must be >= -1");
    Stopwatch sw(elapsed_ms_);
    try {
        bool r = options_.threads > 1 && k >= 1 ? parallel_expand(s, k) : decide(s, k);
        return r ? Status::yes : Status::no;
    } catch (const Exhausted &) {
        return Status::indeterminate;
    }
}

Status Engine::vertex_dismantlable(VertexSet s, int x, int k) {
    if (!s.contains(x))
        throw std::invalid_argument("vertex_dismantlable: vertex not in subset");
    auto nb = root_.neighbours(x) & s;
    if (nb.empty())
        return Status::no;
    return in_class(nb, k - 1);
}

std::optional<VertexSet> Engine::dismantlable_vertices(VertexSet s, int k) {
    VertexSet out;
    for (int x : s) {
        auto st = vertex_dismantlable(s, x, k);
        if (st == Status::indeterminate)
            return std::nullopt;
        if (st == Status::yes)
            out.insert(x);
    }
    return out;
}

bool Engine::ne(VertexSet s) {
    if (s.size() == 1 || !cone_apexes(root_, s).empty())
        return true;
    if (s.size() == 2)
        return false;
    if (options_.prunes) {
        if (!is_connected(root_, s))
            return false;
        if (is_triangle_free(root_, s))
            return edge_count(root_, s) == s.size() - 1;
    }
    if (auto v = ne_memo_->get(s)) {
        hits_.fetch_add(1, std::memory_order_relaxed);
        return v == SubsetMemo::yes;
    }
    tick();
    bool r = false;
    for (int x : s) {
        auto nb = root_.neighbours(x) & s;
        if (!nb.empty() && ne(nb) && ne(s.without(x))) {
            r = true;
            break;
        }
    }
    ne_memo_->put(s, r ? SubsetMemo::yes : SubsetMemo::no);
    return r;
}

Status Engine::non_evasive(VertexSet s) {
    if (s.empty() || !s.is_subset_of(root_.vertices()))
        throw std::invalid_argument("non_evasive: subset must be nonempty and inside the root graph");
    Stopwatch sw(elapsed_ms_);
    try {
        return ne(s) ? Status::yes : Status::no;
    } catch (const Exhausted &) {
        return Status::indeterminate;
    }
}

namespace {

// Lifts the budget while a certificate is read back out of the memo.
struct Unlimited {
    SearchOptions & o;
    std::uint64_t saved;
    explicit Unlimited(SearchOptions & opts) : o(opts), saved(opts.budget) {
        o.budget = std::numeric_limits<std::uint64_t>::max();
    }
    ~Unlimited() { o.budget = saved; }
};

} // namespace

std::optional<std::vector<int>> Engine::dismantling_order(VertexSet s, int k) {
    Stopwatch sw(elapsed_ms_);
    Unlimited lift(options_);
    k = std::max(k, 0);
    if (!decide(s, k))
        return std::nullopt;
    std::vector<int> order;
    auto cur = s;
    while (cur.size() > 1) {
        int pick = -1;
        for (int x : cur)
            if (vertex_ok(cur, x, k) && decide(cur.without(x), k)) {
                pick = x;
                break;
            }
        if (pick < 0)
            throw std::logic_error("dismantling_order: memo inconsistent");
        order.push_back(pick);
        cur.erase(pick);
    }
    return order;
}

std::optional<std::vector<int>> Engine::non_evasive_order(VertexSet s) {
    Stopwatch sw(elapsed_ms_);
    Unlimited lift(options_);
    if (!ne(s))
        return std::nullopt;
    std::vector<int> order;
    auto cur = s;
    while (cur.size() > 1) {
        int pick = -1;
        for (int x : cur) {
            auto nb = root_.neighbours(x) & cur;
            if (!nb.empty() && ne(nb) && ne(cur.without(x))) {
                pick = x;
                break;
            }
        }
        if (pick < 0)
            throw std::logic_error("non_evasive_order: memo inconsistent");
        order.push_back(pick);
        cur.erase(pick);
    }
    return order;
}

// ---- whole-graph operations ----------------------------------------------------

Certificate deletion_certificate(const Graph & g, const std::vector<int> & order, int k) {
    Certificate c;
    c.graph_hash = graph_hash(g);
    auto rest = g.vertices();
    for (int v : order) {
        c.moves.push_back(Move::deletion(v, k));
        rest.erase(v);
    }
    if (rest.size() != 1)
        c.final_vertices = rest.to_vector();
    return c;
}

VertexSetResult k_dismantlable_vertices(const Graph & g, int k, const SearchOptions & options) {
    if (k < 0)
        throw std::invalid_argument("k_dismantlable_vertices: k must be >= 0");
    Engine e(g, options);
    VertexSetResult out;
    auto vs = e.dismantlable_vertices(g.vertices(), k);
    out.stats = e.stats();
    if (vs) {
        out.status = Status::yes;
        out.vertices = *vs;
    }
    return out;
}

DismantleResult is_k_dismantlable(const Graph & g, int k, const SearchOptions & options) {
    Engine e(g, options);
    DismantleResult out;
    out.budget = options.budget;
    out.status = e.in_class(g.vertices(), k);
    if (out.status == Status::yes) {
        int level = std::max(k, 0);
        out.certificate = deletion_certificate(g, *e.dismantling_order(g.vertices(), level), level);
    }
    out.stats = e.stats();
    return out;
}

DismantleResult is_non_evasive(const Graph & g, const SearchOptions & options) {
    Engine e(g, options);
    DismantleResult out;
    out.budget = options.budget;
    out.status = e.non_evasive(g.vertices());
    if (out.status == Status::yes) {
        auto order = *e.non_evasive_order(g.vertices());
        // N(x) is in D_{|N(x)|-2}, so level |N(x)|-1 is always justified
        auto cert = deletion_certificate(g, order, 0);
        auto cur = g.vertices();
        for (auto & m : cert.moves) {
            m.k = std::max(0, (g.neighbours(m.v) & cur).size() - 1);
            cur.erase(m.v);
        }
        out.certificate = std::move(cert);
    }
    out.stats = e.stats();
    return out;
}

MinIndexResult min_dismantling_index(const Graph & g, const SearchOptions & options) {
    Engine e(g, options);
    MinIndexResult out;
    int cap = std::min(g.order() - 2, clique_number(g) - 2);
    cap = std::max(cap, -1);
    for (int k = -1; k <= cap; ++k) {
        auto st = e.in_class(g.vertices(), k);
        if (st == Status::indeterminate) {
            out.kind = MinIndexResult::Kind::indeterminate;
            out.stats = e.stats();
            return out;
        }
        if (st == Status::yes) {
            out.kind = MinIndexResult::Kind::index;
            out.k = k;
            int level = std::max(k, 0);
            out.certificate = deletion_certificate(g, *e.dismantling_order(g.vertices(), level), level);
            out.stats = e.stats();
            return out;
        }
    }
    out.kind = MinIndexResult::Kind::not_in_d_infinity;
    out.stats = e.stats();
    return out;
}

StiffCore stiff_core(const Graph & g, int k, Order order, std::uint64_t seed, const SearchOptions & options) {
    if (k < 0)
        throw std::invalid_argument("stiff_core: k must be >= 0");
    Engine e(g, options);
    std::mt19937_64 rng(seed);
    auto cur = g.vertices();
    std::vector<int> deleted;
    for (;;) {
        auto ds = e.dismantlable_vertices(cur, k);
        if (!ds)
            throw std::runtime_error("stiff_core: search budget exhausted");
        if (ds->empty())
            break;
        int pick = ds->first();
        if (order == Order::random) {
            auto vs = ds->to_vector();
            pick = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
        }
        deleted.push_back(pick);
        cur.erase(pick);
    }
    StiffCore out;
    out.core = g.induced(cur);
    out.remaining = cur;
    out.certificate = deletion_certificate(g, deleted, k);
    return out;
}

} // namespace dismantle
