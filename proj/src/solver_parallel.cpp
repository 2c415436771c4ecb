// OpenMP driver: split the search tree into prefixes of the branching order,
// then solve the subtrees independently.

#include <omp.h>

#include <atomic>
#include <exception>
#include <limits>
#include <mutex>

#include "colour_lab/solver.hpp"
#include "search_kernel.hpp"

namespace colour_lab {

namespace detail {
std::vector<VertexId> enumeration_prefix(const Graph& g, const EnumerateOptions& opts, int& proj_len);
}

using detail::Clock;
using detail::Kernel;
using detail::seconds_since;
using detail::Step;

namespace {

int resolve_threads(int requested) { return requested > 0 ? requested : omp_get_max_threads(); }

struct Frontier {
    int depth = 0;
    std::vector<std::vector<int>> prefixes;
    std::uint64_t nodes = 0;
};

void collect(Kernel& kernel, int depth, int target_depth, Frontier& out) {
    if (depth == target_depth) {
        std::vector<int> p(target_depth);
        for (int d = 0; d < target_depth; ++d) p[d] = kernel.colours()[kernel.order()[d]];
        out.prefixes.push_back(std::move(p));
        return;
    }
    const VertexId v = kernel.order()[depth];
    for (int c = 0, lim = kernel.limit(depth); c < lim; ++c) {
        if (!kernel.feasible(v, c)) continue;
        ++out.nodes;
        kernel.assign(depth, v, c);
        collect(kernel, depth + 1, target_depth, out);
        kernel.unassign(v);
    }
}

// Deepen until there are enough prefixes or max_depth is reached.
Frontier build_frontier(Kernel& kernel, int max_depth, std::size_t target) {
    Frontier f;
    for (int d = 1; d <= max_depth; ++d) {
        Frontier next;
        next.depth = d;
        collect(kernel, 0, d, next);
        f = std::move(next);
        if (f.prefixes.size() >= target || f.prefixes.empty()) break;
    }
    return f;
}

void replay(Kernel& kernel, const std::vector<int>& prefix) {
    for (int d = 0; d < static_cast<int>(prefix.size()); ++d) kernel.assign(d, kernel.order()[d], prefix[d]);
}

// Node budget shared across threads; local counts are flushed every 1024 nodes.
struct SharedBudget {
    const Budget& budget;
    Clock::time_point start;
    std::atomic<std::uint64_t> nodes;
    std::atomic<bool> exceeded{false};

    SharedBudget(const Budget& b, Clock::time_point t0, std::uint64_t base) : budget(b), start(t0), nodes(base) {}

    bool poll(std::uint64_t local) {
        if ((local & 1023) != 0) return false;
        std::uint64_t total = nodes.fetch_add(1024) + 1024;
        if (total > budget.nodes || (budget.seconds > 0 && seconds_since(start) > budget.seconds)) {
            exceeded = true;
            return true;
        }
        return exceeded.load(std::memory_order_relaxed);
    }

    void flush(std::uint64_t local) { nodes.fetch_add(local & 1023); }
};

}  // namespace

SolveOutcome decide(const Graph& g, const SolveParams& p) {
    const int threads = resolve_threads(p.threads);
    if (threads <= 1 || g.n() < 2) return decide_serial(g, p);
    if (p.k < 1) throw std::invalid_argument("palette size k must be at least 1");

    const auto start = Clock::now();
    const auto order = branching_order(g);
    Kernel root(g, p.kind, p.k, order, p.canonical);
    Frontier fr = build_frontier(root, g.n() - 1, 16 * static_cast<std::size_t>(threads));
    const long tasks = static_cast<long>(fr.prefixes.size());

    SharedBudget shared(p.budget, start, fr.nodes);
    std::atomic<long> best{std::numeric_limits<long>::max()};
    std::vector<std::optional<Colouring>> found(tasks);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < tasks; ++i) {
        if (best.load() < i || shared.exceeded.load()) continue;
        Kernel kernel(g, p.kind, p.k, order, p.canonical);
        replay(kernel, fr.prefixes[i]);
        std::uint64_t local = 0;
        Step r = kernel.dfs(
            fr.depth, 0, local,
            [&] {
                found[i] = kernel.snapshot();
                return true;
            },
            [&](std::uint64_t n) { return best.load(std::memory_order_relaxed) < i || shared.poll(n); });
        shared.flush(local);
        if (r == Step::found) {
            long cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    }

    SolveOutcome out;
    out.nodes = shared.nodes.load();
    if (best.load() != std::numeric_limits<long>::max()) {
        out.status = Status::sat;
        out.colouring = found[best.load()];
    } else if (shared.exceeded.load()) {
        out.status = Status::budget_exceeded;
    } else {
        out.status = Status::unsat;
    }
    out.seconds = seconds_since(start);
    return out;
}

EnumerateResult enumerate(const Graph& g, const SolveParams& p, const Visitor& visit, const EnumerateOptions& opts) {
    const int threads = resolve_threads(p.threads);
    if (threads <= 1 || g.n() < 2) return enumerate_serial(g, p, visit, opts);
    if (p.k < 1) throw std::invalid_argument("palette size k must be at least 1");

    const auto start = Clock::now();
    int proj_len = 0;
    auto first = detail::enumeration_prefix(g, opts, proj_len);
    const auto order = branching_order(g, first);
    const int max_depth = opts.project.empty() ? g.n() - 1 : std::min(proj_len, g.n() - 1);
    EnumerateResult out;
    if (max_depth < 1) return enumerate_serial(g, p, visit, opts);

    Kernel root(g, p.kind, p.k, order, p.canonical);
    Frontier fr = build_frontier(root, max_depth, 16 * static_cast<std::size_t>(threads));
    const long tasks = static_cast<long>(fr.prefixes.size());

    SharedBudget shared(p.budget, start, fr.nodes);
    std::mutex visit_mutex;
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> count{0};
    std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < tasks; ++i) {
        if (stop.load() || shared.exceeded.load()) continue;
        try {
            Kernel kernel(g, p.kind, p.k, order, p.canonical);
            replay(kernel, fr.prefixes[i]);
            std::uint64_t local = 0;
            kernel.dfs(
                fr.depth, proj_len, local,
                [&] {
                    std::lock_guard<std::mutex> lock(visit_mutex);
                    if (stop.load()) return false;
                    ++count;
                    if (!visit(kernel.snapshot())) stop = true;
                    return !stop.load();
                },
                [&](std::uint64_t n) { return stop.load(std::memory_order_relaxed) || shared.poll(n); });
            shared.flush(local);
        } catch (...) {
            std::lock_guard<std::mutex> lock(visit_mutex);
            if (!error) error = std::current_exception();
            stop = true;
        }
    }
    if (error) std::rethrow_exception(error);

    out.count = count.load();
    out.nodes = shared.nodes.load();
    if (stop.load()) out.status = EnumStatus::stopped;
    else if (shared.exceeded.load()) out.status = EnumStatus::budget_exceeded;
    out.seconds = seconds_since(start);
    return out;
}

}  // namespace colour_lab
