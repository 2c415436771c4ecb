#include "colour_lab/colouring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace colour_lab {

void require_total(const Graph& g, const Colouring& c) {
    if (c.k < 0) throw PartialColouring("negative palette size");
    if (static_cast<int>(c.colours.size()) != g.n())
        throw PartialColouring("colouring has " + std::to_string(c.colours.size()) + " entries for " +
                               std::to_string(g.n()) + " vertices");
    for (VertexId v = 0; v < g.n(); ++v)
        if (c.colours[v] < 0 || c.colours[v] >= c.k)
            throw PartialColouring("vertex " + std::to_string(v) + " has no colour in [0, " +
                                   std::to_string(c.k) + ")");
}

namespace {

std::optional<PathWitness> first_improper_edge(const Graph& g, const std::vector<int>& f) {
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.neighbours(u))
            if (u < v && f[u] == f[v]) return PathWitness{WitnessKind::improper_edge, {u, v}};
    return std::nullopt;
}

std::optional<PathWitness> first_bicoloured_p4(const Graph& g, const std::vector<int>& f) {
    for (VertexId a = 0; a < g.n(); ++a)
        for (VertexId b : g.neighbours(a))
            for (VertexId c : g.neighbours(b)) {
                if (c == a || f[c] != f[a]) continue;
                for (VertexId d : g.neighbours(c))
                    if (d != b && f[d] == f[b]) return PathWitness{WitnessKind::bicoloured_p4, {a, b, c, d}};
            }
    return std::nullopt;
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

// Each two-coloured component must be a star.
bool star_by_colour_pairs(const Graph& g, const std::vector<int>& f) {
    std::map<std::pair<int, int>, std::vector<Edge>> buckets;
    for (auto [u, v] : g.edges()) buckets[std::minmax(f[u], f[v])].emplace_back(u, v);

    std::vector<int> degree(g.n(), 0), parent(g.n()), hubs(g.n(), 0);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [pair, es] : buckets) {
        for (auto [u, v] : es) {
            ++degree[u];
            ++degree[v];
            int ru = find_root(parent, u), rv = find_root(parent, v);
            if (ru != rv) parent[ru] = rv;
        }
        bool ok = true;
        for (auto [u, v] : es)
            for (VertexId x : {u, v})
                if (degree[x] >= 2) {
                    degree[x] = -degree[x];  // count each vertex once
                    if (++hubs[find_root(parent, x)] >= 2) ok = false;
                }
        for (auto [u, v] : es)
            for (VertexId x : {u, v}) {
                degree[x] = 0;
                hubs[x] = 0;
                parent[x] = x;
            }
        if (!ok) return false;
    }
    return true;
}

std::optional<PathWitness> first_rs_violation(const Graph& g, const std::vector<int>& f, int k) {
    std::vector<VertexId> seen(std::max(k, 1), -1);
    for (VertexId v = 0; v < g.n(); ++v) {
        std::fill(seen.begin(), seen.end(), -1);
        for (VertexId u : g.neighbours(v)) {
            if (f[u] >= f[v]) continue;
            if (seen[f[u]] >= 0) return PathWitness{WitnessKind::rs_violation, {seen[f[u]], v, u}};
            seen[f[u]] = u;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PathWitness> validate(const Graph& g, const Colouring& c, Kind kind) {
    require_total(g, c);
    if (auto w = first_improper_edge(g, c.colours)) return w;
    switch (kind) {
        case Kind::proper:
            return std::nullopt;
        case Kind::star:
            if (star_by_colour_pairs(g, c.colours)) return std::nullopt;
            return first_bicoloured_p4(g, c.colours);
        case Kind::rs:
            return first_rs_violation(g, c.colours, c.k);
    }
    return std::nullopt;
}

std::vector<std::vector<VertexId>> OrientedGraph::in_neighbours() const {
    std::vector<std::vector<VertexId>> in(underlying.n());
    for (auto [t, h] : arcs) in[h].push_back(t);
    for (auto& a : in) std::sort(a.begin(), a.end());
    return in;
}

OrientedGraph orientation_from_colouring(const Graph& g, const Colouring& c) {
    require_total(g, c);
    OrientedGraph og{g, {}};
    og.arcs.reserve(g.m());
    for (auto [u, v] : g.edges()) {
        if (c.colours[u] == c.colours[v])
            throw ImproperInput("edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic");
        if (c.colours[u] < c.colours[v]) og.arcs.emplace_back(u, v);
        else og.arcs.emplace_back(v, u);
    }
    return og;
}

bool is_inn_injective_hom_to_tournament(const OrientedGraph& og, const Colouring& c) {
    require_total(og.underlying, c);
    const auto& f = c.colours;
    std::vector<std::vector<int>> in_colours(og.underlying.n());
    for (auto [t, h] : og.arcs) {
        if (f[t] >= f[h]) return false;
        in_colours[h].push_back(f[t]);
    }
    for (auto& cs : in_colours) {
        std::sort(cs.begin(), cs.end());
        if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
    }
    return true;
}

std::vector<std::pair<VertexId, VertexId>> zero_pair_scan(const Graph& g, const Colouring& c) {
    require_total(g, c);
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < g.n(); ++u) {
        if (c.colours[u] != 0) continue;
        std::vector<VertexId> near;
        for (VertexId x : g.neighbours(u)) {
            near.push_back(x);
            for (VertexId y : g.neighbours(x)) near.push_back(y);
        }
        std::sort(near.begin(), near.end());
        near.erase(std::unique(near.begin(), near.end()), near.end());
        for (VertexId v : near)
            if (v > u && c.colours[v] == 0) out.emplace_back(u, v);
    }
    return out;
}

const char* to_string(Kind kind) {
    switch (kind) {
        case Kind::proper: return "proper";
        case Kind::star: return "star";
        case Kind::rs: return "rs";
    }
    return "?";
}

Kind kind_from_string(const std::string& s) {
    if (s == "proper") return Kind::proper;
    if (s == "star") return Kind::star;
    if (s == "rs") return Kind::rs;
    throw std::invalid_argument("unknown colouring kind: " + s);
}

const char* to_string(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::improper_edge: return "improper-edge";
        case WitnessKind::bicoloured_p4: return "bicoloured-P4";
        case WitnessKind::rs_violation: return "rs-violation";
    }
    return "?";
}

WitnessKind witness_kind_from_string(const std::string& s) {
    if (s == "improper-edge") return WitnessKind::improper_edge;
    if (s == "bicoloured-P4") return WitnessKind::bicoloured_p4;
    if (s == "rs-violation") return WitnessKind::rs_violation;
    throw std::invalid_argument("unknown witness kind: " + s);
}

int colours_used(const Colouring& c) {
    std::vector<int> cs = c.colours;
    std::sort(cs.begin(), cs.end());
    return static_cast<int>(std::unique(cs.begin(), cs.end()) - cs.begin());
}

}  // namespace colour_lab
