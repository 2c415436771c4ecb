#pragma once

// Backtracking kernel shared by the serial reference and the OpenMP driver.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "colour_lab/colouring.hpp"
#include "colour_lab/graph.hpp"

namespace colour_lab::detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

enum class Step { none, found, abort };

class Kernel {
public:
    Kernel(const Graph& g, Kind kind, int k, const std::vector<VertexId>& order, bool canonical)
        : g_(g), kind_(kind), k_(k), order_(order), canonical_(canonical && kind != Kind::rs),
          col_(g.n(), -1), cnt_(static_cast<std::size_t>(g.n()) * std::max(k, 1), 0),
          max_used_(g.n() + 1, -1) {}

    int n() const { return g_.n(); }
    int k() const { return k_; }
    const std::vector<int>& colours() const { return col_; }
    const std::vector<VertexId>& order() const { return order_; }

    // Colours worth trying at `depth` given the symmetry rule.
    int limit(int depth) const { return canonical_ ? std::min(k_, max_used_[depth] + 2) : k_; }

    bool feasible(VertexId v, int c) const {
        const int* cv = &cnt_[static_cast<std::size_t>(v) * k_];
        if (cv[c] != 0) return false;
        if (kind_ == Kind::rs) {
            for (int a = 0; a < c; ++a)
                if (cv[a] >= 2) return false;
            for (VertexId y : g_.neighbours(v)) {
                int cy = col_[y];
                if (cy > c && cnt_[static_cast<std::size_t>(y) * k_ + c] >= 1) return false;
            }
        } else if (kind_ == Kind::star) {
            for (VertexId w : g_.neighbours(v)) {
                int b = col_[w];
                if (b < 0) continue;
                if (cv[b] >= 2 && cnt_[static_cast<std::size_t>(w) * k_ + c] >= 1) return false;
                for (VertexId x : g_.neighbours(w))
                    if (col_[x] == c && cnt_[static_cast<std::size_t>(x) * k_ + b] >= 2) return false;
            }
        }
        return true;
    }

    void assign(int depth, VertexId v, int c) {
        col_[v] = c;
        for (VertexId y : g_.neighbours(v)) ++cnt_[static_cast<std::size_t>(y) * k_ + c];
        max_used_[depth + 1] = std::max(max_used_[depth], c);
    }

    void unassign(VertexId v) {
        int c = col_[v];
        for (VertexId y : g_.neighbours(v)) --cnt_[static_cast<std::size_t>(y) * k_ + c];
        col_[v] = -1;
    }

    // Depth-first search from `depth`. Below `proj_len` the search stops after the
    // first extension, so each restriction to order[0..proj_len) is reported once.
    // on_leaf returns false to abort; should_abort(nodes) is polled on every node.
    template <class Leaf, class Poll>
    Step dfs(int depth, int proj_len, std::uint64_t& nodes, Leaf&& on_leaf, Poll&& should_abort) {
        if (depth == n()) return on_leaf() ? Step::found : Step::abort;
        const VertexId v = order_[depth];
        const int lim = limit(depth);
        bool found = false;
        for (int c = 0; c < lim; ++c) {
            if (!feasible(v, c)) continue;
            ++nodes;
            if (should_abort(nodes)) return Step::abort;
            assign(depth, v, c);
            Step r = dfs(depth + 1, proj_len, nodes, on_leaf, should_abort);
            unassign(v);
            if (r == Step::abort) return Step::abort;
            if (r == Step::found) {
                if (depth >= proj_len) return Step::found;
                found = true;
            }
        }
        return found ? Step::found : Step::none;
    }

    Colouring snapshot() const { return Colouring{k_, col_}; }

private:
    const Graph& g_;
    Kind kind_;
    int k_;
    std::vector<VertexId> order_;
    bool canonical_;
    std::vector<int> col_;
    std::vector<int> cnt_;
    std::vector<int> max_used_;
};

}  // namespace colour_lab::detail
