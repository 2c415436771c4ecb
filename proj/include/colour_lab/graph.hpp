#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace colour_lab {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AdjacentIdentification : GraphError {
    AdjacentIdentification(VertexId u, VertexId v);
    VertexId u, v;
};

struct UnknownVertex : GraphError {
    explicit UnknownVertex(const std::string& what);
};

// Simple undirected graph. Ids are dense in [0, n); every vertex also carries a
// stable name, and names of vertices merged away by identification survive as
// aliases of the kept vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, std::span<const Edge> edges);

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t m() const { return m_; }

    const std::vector<VertexId>& neighbours(VertexId v) const { return adj_[check(v)]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[check(v)].size()); }
    bool adjacent(VertexId u, VertexId v) const;
    int max_degree() const;
    // Lexicographic, u < v.
    std::vector<Edge> edges() const;

    VertexId add_vertex(std::string name = {});
    // Idempotent for an existing edge; throws on a self-loop.
    void add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);

    const std::string& name(VertexId v) const { return names_[check(v)]; }
    // The previous name becomes an alias.
    void rename(VertexId v, std::string name);
    void add_alias(const std::string& name, VertexId v);
    std::optional<VertexId> find(const std::string& name) const;
    VertexId at(const std::string& name) const;
    const std::unordered_map<std::string, VertexId>& aliases() const { return aliases_; }

    // Adjacency equality; names are ignored.
    bool same_adjacency(const Graph& other) const { return adj_ == other.adj_; }

    friend Graph identify_vertices(const Graph& g, VertexId u, VertexId v);

private:
    VertexId check(VertexId v) const;
    void index_name(VertexId v);

    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> by_name_;
    std::unordered_map<std::string, VertexId> aliases_;
    std::size_t m_ = 0;
};

struct StructureReport {
    int n = 0;
    std::size_t m = 0;
    int max_degree = 0;
    bool is_regular = false;
    int regular_degree = -1;
    bool is_bipartite = false;
    bool is_triangle_free = false;
    std::optional<int> girth;  // nullopt: acyclic
    bool is_connected = false;
};

// Merges u and v into the smaller id; the larger id's name becomes an alias and
// ids above it shift down by one.
Graph identify_vertices(const Graph& g, VertexId u, VertexId v);
Graph subdivide_all_edges(const Graph& g);
// Names are prefixed "<index>:" unless prefixes are given.
Graph disjoint_union(std::span<const Graph> gs);
Graph disjoint_union(std::span<const Graph> gs, std::span<const std::string> prefixes);
StructureReport structure_report(const Graph& g);
Graph square(const Graph& g);
// Vertices follow g.edges() order.
Graph line_graph(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);
std::vector<int> bfs_distances(const Graph& g, VertexId source, int limit = -1);
bool is_connected(const Graph& g);

// Named graphs.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph hypercube(int d);
Graph octahedron();

// Seeded samplers.
Graph random_gnp(int n, double p, std::mt19937_64& rng);
// Pairing model with rejection; throws if n*d is odd or d >= n.
Graph random_regular(int n, int d, std::mt19937_64& rng);

}  // namespace colour_lab
