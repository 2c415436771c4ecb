#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "colour_lab/graph.hpp"

namespace colour_lab::testing {

// Adjacency bitmasks, n <= 12.
struct SmallGraph {
    int n = 0;
    std::vector<std::uint16_t> adj;
};

// Canonical certificate: the largest upper-triangle bit string over all
// labellings reached by refinement and individualisation.
std::uint64_t certificate(const SmallGraph& g);
SmallGraph from_certificate(int n, std::uint64_t cert);

// One representative per isomorphism class on exactly n vertices (n <= 10).
std::vector<SmallGraph> graphs_on(int n);
// All isomorphism classes of connected 3-regular graphs on n vertices.
std::vector<SmallGraph> connected_cubic(int n);

SmallGraph to_small(const Graph& g);
Graph to_graph(const SmallGraph& g);

}  // namespace colour_lab::testing
