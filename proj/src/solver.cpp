#include "colour_lab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "search_kernel.hpp"

namespace colour_lab {

using detail::Clock;
using detail::Kernel;
using detail::seconds_since;
using detail::Step;

Budget default_budget() {
    Budget b;
    if (const char* env = std::getenv("COLOUR_LAB_BUDGET_SECS")) {
        char* end = nullptr;
        double s = std::strtod(env, &end);
        if (end != env && s > 0) b.seconds = s;
    }
    return b;
}

const char* to_string(Status s) {
    switch (s) {
        case Status::sat: return "sat";
        case Status::unsat: return "unsat";
        case Status::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

const char* to_string(EnumStatus s) {
    switch (s) {
        case EnumStatus::complete: return "complete";
        case EnumStatus::stopped: return "stopped";
        case EnumStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

std::vector<VertexId> branching_order(const Graph& g, const std::vector<VertexId>& first) {
    const int n = g.n();
    // Smallest-last: repeatedly remove a vertex of minimum remaining degree,
    // lower original degree first, then reverse.
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<VertexId> removal;
    removal.reserve(n);
    for (int step = 0; step < n; ++step) {
        VertexId best = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (removed[v]) continue;
            if (best < 0 || deg[v] < deg[best] || (deg[v] == deg[best] && g.degree(v) < g.degree(best)))
                best = v;
        }
        removed[best] = true;
        removal.push_back(best);
        for (VertexId y : g.neighbours(best))
            if (!removed[y]) --deg[y];
    }
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[removal[n - 1 - i]] = i;

    std::vector<VertexId> order;
    order.reserve(n);
    std::vector<bool> placed(n, false);
    std::vector<int> back(n, 0);
    auto place = [&](VertexId v) {
        placed[v] = true;
        order.push_back(v);
        for (VertexId y : g.neighbours(v)) ++back[y];
    };
    for (VertexId v : first) {
        g.neighbours(v);
        if (!placed[v]) place(v);
    }
    while (static_cast<int>(order.size()) < n) {
        VertexId best = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (best < 0 || back[v] > back[best] || (back[v] == back[best] && rank[v] < rank[best])) best = v;
        }
        place(best);
    }
    return order;
}

namespace {

void check_params(const SolveParams& p) {
    if (p.k < 1) throw std::invalid_argument("palette size k must be at least 1");
}

struct Poller {
    const Budget& budget;
    Clock::time_point start;
    bool exceeded = false;

    bool operator()(std::uint64_t nodes) {
        if (nodes > budget.nodes) return exceeded = true;
        if ((nodes & 1023) == 0 && budget.seconds > 0 && seconds_since(start) > budget.seconds)
            return exceeded = true;
        return false;
    }
};

}  // namespace

SolveOutcome decide_serial(const Graph& g, const SolveParams& p) {
    check_params(p);
    const auto start = Clock::now();
    Kernel kernel(g, p.kind, p.k, branching_order(g), p.canonical);
    SolveOutcome out;
    Poller poll{p.budget, start};
    Step r = kernel.dfs(
        0, 0, out.nodes,
        [&] {
            out.colouring = kernel.snapshot();
            return true;
        },
        poll);
    out.status = r == Step::found ? Status::sat : (r == Step::abort ? Status::budget_exceeded : Status::unsat);
    out.seconds = seconds_since(start);
    return out;
}

namespace detail {

std::vector<VertexId> enumeration_prefix(const Graph& g, const EnumerateOptions& opts, int& proj_len) {
    std::vector<VertexId> first;
    std::vector<bool> seen(g.n(), false);
    for (VertexId v : opts.project) {
        g.neighbours(v);
        if (!seen[v]) first.push_back(v), seen[v] = true;
    }
    proj_len = opts.project.empty() ? g.n() : static_cast<int>(first.size());
    for (VertexId v : opts.priority) {
        g.neighbours(v);
        if (!seen[v]) first.push_back(v), seen[v] = true;
    }
    return first;
}

}  // namespace detail

EnumerateResult enumerate_serial(const Graph& g, const SolveParams& p, const Visitor& visit,
                                 const EnumerateOptions& opts) {
    check_params(p);
    const auto start = Clock::now();
    int proj_len = 0;
    auto first = detail::enumeration_prefix(g, opts, proj_len);
    Kernel kernel(g, p.kind, p.k, branching_order(g, first), p.canonical);
    EnumerateResult out;
    bool stopped = false;
    Poller poll{p.budget, start};
    Step r = kernel.dfs(
        0, proj_len, out.nodes,
        [&] {
            ++out.count;
            if (!visit(kernel.snapshot())) stopped = true;
            return !stopped;
        },
        poll);
    if (r == Step::abort) out.status = stopped ? EnumStatus::stopped : EnumStatus::budget_exceeded;
    out.seconds = seconds_since(start);
    return out;
}

std::uint64_t orbit_factor(const Colouring& c, Kind kind) {
    if (kind == Kind::rs) return 1;
    const int used = colours_used(c);
    std::uint64_t f = 1;
    for (int i = 0; i < used; ++i) f *= static_cast<std::uint64_t>(c.k - i);
    return f;
}

ChromaticOutcome chromatic(const Graph& g, Kind kind, const SolveParams& base) {
    const auto start = Clock::now();
    ChromaticOutcome out;
    if (g.n() == 0) {
        out.value = 0;
        out.colouring = Colouring{0, {}};
        return out;
    }
    SolveParams p = base;
    p.kind = kind;
    p.canonical = kind != Kind::rs;
    for (int k = g.m() == 0 ? 1 : 2; k <= g.n(); ++k) {
        p.k = k;
        SolveOutcome o = decide(g, p);
        out.nodes += o.nodes;
        if (o.status == Status::budget_exceeded) break;
        if (o.status == Status::sat) {
            out.value = k;
            out.colouring = o.colouring;
            break;
        }
    }
    out.seconds = seconds_since(start);
    return out;
}

SolveOutcome oracle_decide(const Graph& g, const SolveParams& p, std::uint64_t cap) {
    check_params(p);
    const auto start = Clock::now();
    const double total = std::pow(static_cast<double>(p.k), g.n());
    if (total > static_cast<double>(cap))
        throw CapExceeded(std::to_string(p.k) + "^" + std::to_string(g.n()) + " assignments exceed the cap of " +
                          std::to_string(cap));
    SolveOutcome out;
    Colouring c{p.k, std::vector<int>(g.n(), 0)};
    while (true) {
        ++out.nodes;
        if (!validate(g, c, p.kind)) {
            out.status = Status::sat;
            out.colouring = c;
            break;
        }
        int i = 0;
        while (i < g.n() && ++c.colours[i] == p.k) c.colours[i++] = 0;
        if (i == g.n()) break;
    }
    out.seconds = seconds_since(start);
    return out;
}

SolveOutcome edge_decide(const Graph& g, int k, const SolveParams& base) {
    SolveParams p = base;
    p.kind = Kind::proper;
    p.k = k;
    p.canonical = true;
    return decide(line_graph(g), p);
}

Colouring distance_two_rs(const Graph& g) {
    Graph sq = square(g);
    std::vector<int> col(g.n(), -1);
    int used = 0;
    std::vector<int> mark;
    for (VertexId v = 0; v < g.n(); ++v) {
        mark.assign(sq.degree(v) + 2, 0);
        for (VertexId y : sq.neighbours(v))
            if (col[y] >= 0 && col[y] < static_cast<int>(mark.size())) mark[col[y]] = 1;
        int c = 0;
        while (mark[c]) ++c;
        col[v] = c;
        used = std::max(used, c + 1);
    }
    return Colouring{used, col};
}

}  // namespace colour_lab
