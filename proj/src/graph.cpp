#include "colour_lab/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace colour_lab {

AdjacentIdentification::AdjacentIdentification(VertexId a, VertexId b)
    : GraphError("cannot identify adjacent vertices " + std::to_string(a) + " and " +
                 std::to_string(b)),
      u(a), v(b) {}

UnknownVertex::UnknownVertex(const std::string& what) : GraphError("unknown vertex: " + what) {}

Graph::Graph(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    adj_.resize(n);
    names_.reserve(n);
    for (int i = 0; i < n; ++i) {
        names_.push_back(std::to_string(i));
        by_name_.emplace(names_.back(), i);
    }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

VertexId Graph::check(VertexId v) const {
    if (v < 0 || v >= n()) throw UnknownVertex(std::to_string(v));
    return v;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& a = adj_[check(u)];
    check(v);
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::index_name(VertexId v) {
    auto [it, fresh] = by_name_.emplace(names_[v], v);
    if (!fresh && it->second != v) throw GraphError("duplicate vertex name: " + names_[v]);
}

VertexId Graph::add_vertex(std::string name) {
    VertexId v = n();
    if (name.empty()) name = std::to_string(v);
    if (by_name_.count(name) || aliases_.count(name))
        throw GraphError("duplicate vertex name: " + name);
    adj_.emplace_back();
    names_.push_back(std::move(name));
    index_name(v);
    return v;
}

void Graph::add_edge(VertexId u, VertexId v) {
    check(u);
    check(v);
    if (u == v) throw GraphError("self-loop at " + std::to_string(u));
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v) return;
    a.insert(it, v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++m_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
    check(u);
    check(v);
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) return;
    a.erase(it);
    auto& b = adj_[v];
    b.erase(std::lower_bound(b.begin(), b.end(), u));
    --m_;
}

void Graph::rename(VertexId v, std::string name) {
    check(v);
    if (name == names_[v]) return;
    if (by_name_.count(name)) throw GraphError("duplicate vertex name: " + name);
    aliases_.erase(name);
    by_name_.erase(names_[v]);
    aliases_[names_[v]] = v;
    names_[v] = std::move(name);
    index_name(v);
}

void Graph::add_alias(const std::string& name, VertexId v) {
    check(v);
    if (by_name_.count(name)) throw GraphError("alias collides with a vertex name: " + name);
    aliases_[name] = v;
}

std::optional<VertexId> Graph::find(const std::string& name) const {
    if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
    if (auto it = aliases_.find(name); it != aliases_.end()) return it->second;
    return std::nullopt;
}

VertexId Graph::at(const std::string& name) const {
    if (auto v = find(name)) return *v;
    throw UnknownVertex(name);
}

Graph identify_vertices(const Graph& g, VertexId u, VertexId v) {
    g.check(u);
    g.check(v);
    if (u == v) throw GraphError("identify_vertices needs two distinct vertices");
    if (g.adjacent(u, v)) throw AdjacentIdentification(u, v);
    const VertexId keep = std::min(u, v), gone = std::max(u, v);
    auto remap = [&](VertexId x) { return x == gone ? keep : (x > gone ? x - 1 : x); };

    Graph out;
    const int n = g.n() - 1;
    out.adj_.resize(n);
    out.names_.reserve(n);
    for (VertexId x = 0; x < g.n(); ++x) {
        if (x == gone) continue;
        out.names_.push_back(g.names_[x]);
    }
    for (VertexId x = 0; x < g.n(); ++x) {
        VertexId rx = remap(x);
        for (VertexId y : g.adj_[x]) out.adj_[rx].push_back(remap(y));
    }
    for (auto& a : out.adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    std::size_t deg = 0;
    for (const auto& a : out.adj_) deg += a.size();
    out.m_ = deg / 2;
    for (VertexId x = 0; x < n; ++x) out.by_name_.emplace(out.names_[x], x);
    for (const auto& [name, target] : g.aliases_) out.aliases_[name] = remap(target);
    out.aliases_[g.names_[gone]] = keep;
    return out;
}

Graph subdivide_all_edges(const Graph& g) {
    Graph out = g;
    for (auto [u, v] : g.edges()) {
        out.remove_edge(u, v);
        VertexId s = out.add_vertex("s(" + g.name(u) + "," + g.name(v) + ")");
        out.add_edge(u, s);
        out.add_edge(s, v);
    }
    return out;
}

Graph disjoint_union(std::span<const Graph> gs) {
    std::vector<std::string> prefixes;
    for (std::size_t i = 0; i < gs.size(); ++i) prefixes.push_back(std::to_string(i) + ":");
    return disjoint_union(gs, prefixes);
}

Graph disjoint_union(std::span<const Graph> gs, std::span<const std::string> prefixes) {
    if (prefixes.size() != gs.size()) throw GraphError("one prefix per graph required");
    Graph out;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const Graph& h = gs[i];
        const int base = out.n();
        for (VertexId v = 0; v < h.n(); ++v) out.add_vertex(prefixes[i] + h.name(v));
        for (auto [u, v] : h.edges()) out.add_edge(base + u, base + v);
        for (const auto& [name, target] : h.aliases()) out.add_alias(prefixes[i] + name, base + target);
    }
    return out;
}

std::vector<int> bfs_distances(const Graph& g, VertexId source, int limit) {
    std::vector<int> dist(g.n(), -1);
    std::deque<VertexId> q{source};
    dist[source] = 0;
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop_front();
        if (limit >= 0 && dist[x] >= limit) continue;
        for (VertexId y : g.neighbours(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    auto d = bfs_distances(g, 0);
    return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

namespace {

std::optional<int> girth_of(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(g.n()), parent(g.n());
    std::deque<VertexId> q;
    for (VertexId r = 0; r < g.n(); ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[r] = 0;
        parent[r] = -1;
        q.assign(1, r);
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop_front();
            if (2 * dist[x] + 1 >= best) break;
            for (VertexId y : g.neighbours(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool bipartite(const Graph& g) {
    std::vector<int> side(g.n(), -1);
    for (VertexId s = 0; s < g.n(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<VertexId> q{s};
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop_front();
            for (VertexId y : g.neighbours(x)) {
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    q.push_back(y);
                } else if (side[y] == side[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

StructureReport structure_report(const Graph& g) {
    StructureReport r;
    r.n = g.n();
    r.m = g.m();
    r.max_degree = g.max_degree();
    r.is_regular = true;
    for (VertexId v = 0; v < g.n(); ++v)
        if (g.degree(v) != r.max_degree) r.is_regular = false;
    r.regular_degree = r.is_regular ? r.max_degree : -1;
    r.is_bipartite = bipartite(g);
    r.girth = girth_of(g);
    r.is_triangle_free = !r.girth || *r.girth >= 4;
    r.is_connected = is_connected(g);
    return r;
}

Graph square(const Graph& g) {
    Graph out = g;
    for (VertexId v = 0; v < g.n(); ++v)
        for (VertexId x : g.neighbours(v))
            for (VertexId y : g.neighbours(x))
                if (y != v) out.add_edge(v, y);
    return out;
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    Graph out(static_cast<int>(es.size()));
    std::vector<std::vector<int>> incident(g.n());
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        incident[es[i].first].push_back(i);
        incident[es[i].second].push_back(i);
    }
    for (const auto& inc : incident)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) out.add_edge(inc[a], inc[b]);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
    std::vector<int> where(g.n(), -1);
    Graph out;
    for (VertexId v : vertices) {
        g.neighbours(v);
        if (where[v] >= 0) throw GraphError("repeated vertex in induced_subgraph");
        where[v] = out.add_vertex(g.name(v));
    }
    for (VertexId v : vertices)
        for (VertexId y : g.neighbours(v))
            if (where[y] >= 0) out.add_edge(where[v], where[y]);
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph hypercube(int d) {
    if (d < 0 || d > 20) throw GraphError("hypercube dimension out of range");
    Graph g(1 << d);
    for (int v = 0; v < (1 << d); ++v)
        for (int b = 0; b < d; ++b)
            if (int w = v ^ (1 << b); v < w) g.add_edge(v, w);
    return g;
}

Graph octahedron() {
    Graph g = complete_graph(6);
    g.remove_edge(0, 1);
    g.remove_edge(2, 3);
    g.remove_edge(4, 5);
    return g;
}

Graph random_gnp(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

Graph random_regular(int n, int d, std::mt19937_64& rng) {
    if (d < 0 || (n > 0 && d >= n) || (n * d) % 2 != 0)
        throw GraphError("no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                         " vertices");
    std::vector<int> points(static_cast<std::size_t>(n) * d);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i) / d;
        std::shuffle(points.begin(), points.end(), rng);
        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; i < points.size() && ok; i += 2) {
            int a = points[i], b = points[i + 1];
            if (a == b || g.adjacent(a, b)) ok = false;
            else g.add_edge(a, b);
        }
        if (ok) return g;
    }
    throw GraphError("random_regular: pairing model kept failing");
}

}  // namespace colour_lab
