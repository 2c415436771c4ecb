#pragma once

// Brute-force definitions, written straight from the colouring definitions and
// sharing no code with the library's validators or search.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "colour_lab/colouring.hpp"
#include "colour_lab/graph.hpp"

namespace colour_lab::oracle {

inline bool proper(const Graph& g, const std::vector<int>& f) {
    for (auto [u, v] : g.edges())
        if (f[u] == f[v]) return false;
    return true;
}

// No path a,b,c,d (distinct, consecutive adjacent) with f(a)=f(c) and f(b)=f(d).
inline bool star(const Graph& g, const std::vector<int>& f) {
    if (!proper(g, f)) return false;
    for (VertexId a = 0; a < g.n(); ++a)
        for (VertexId b : g.neighbours(a))
            for (VertexId c : g.neighbours(b)) {
                if (c == a || f[c] != f[a]) continue;
                for (VertexId d : g.neighbours(c))
                    if (d != b && d != a && f[d] == f[b]) return false;
            }
    return true;
}

// No path a,b,c with f(b) > f(a) = f(c).
inline bool rs(const Graph& g, const std::vector<int>& f) {
    if (!proper(g, f)) return false;
    for (VertexId b = 0; b < g.n(); ++b)
        for (VertexId a : g.neighbours(b))
            for (VertexId c : g.neighbours(b))
                if (a < c && f[a] == f[c] && f[b] > f[a]) return false;
    return true;
}

inline bool valid(const Graph& g, const std::vector<int>& f, Kind kind) {
    switch (kind) {
        case Kind::proper: return proper(g, f);
        case Kind::star: return star(g, f);
        case Kind::rs: return rs(g, f);
    }
    return false;
}

// Calls visit on every assignment V -> [0,k), in odometer order.
inline void all_assignments(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> f(n, 0);
    while (true) {
        visit(f);
        int i = 0;
        while (i < n && ++f[i] == k) f[i++] = 0;
        if (i == n) return;
    }
}

inline std::uint64_t count_valid(const Graph& g, int k, Kind kind) {
    std::uint64_t count = 0;
    all_assignments(g.n(), k, [&](const std::vector<int>& f) { count += valid(g, f, kind); });
    return count;
}

inline bool colourable(const Graph& g, int k, Kind kind) {
    bool found = false;
    all_assignments(g.n(), k, [&](const std::vector<int>& f) { found = found || valid(g, f, kind); });
    return found;
}

inline int chromatic(const Graph& g, Kind kind) {
    for (int k = 1;; ++k)
        if (g.n() == 0 || colourable(g, k, kind)) return g.n() == 0 ? 0 : k;
}

}  // namespace colour_lab::oracle
