#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "colour_lab/graph.hpp"

namespace colour_lab {

enum class Kind { proper, star, rs };

struct Colouring {
    int k = 0;
    std::vector<int> colours;

    bool operator==(const Colouring&) const = default;
};

enum class WitnessKind { improper_edge, bicoloured_p4, rs_violation };

// Vertices in path order. For rs violations the middle vertex is the higher one.
struct PathWitness {
    WitnessKind kind;
    std::vector<VertexId> path;

    bool operator==(const PathWitness&) const = default;
};

struct PartialColouring : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ImproperInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// nullopt means valid.
std::optional<PathWitness> validate(const Graph& g, const Colouring& c, Kind kind);
inline bool is_valid(const Graph& g, const Colouring& c, Kind kind) { return !validate(g, c, kind); }

// Throws PartialColouring unless c assigns every vertex of g a colour in [0, k).
void require_total(const Graph& g, const Colouring& c);

struct OrientedGraph {
    Graph underlying;
    std::vector<std::pair<VertexId, VertexId>> arcs;  // (tail, head), one per edge

    std::vector<std::vector<VertexId>> in_neighbours() const;
};

OrientedGraph orientation_from_colouring(const Graph& g, const Colouring& c);
bool is_inn_injective_hom_to_tournament(const OrientedGraph& og, const Colouring& c);

// Pairs u < v, both coloured 0, at distance 1 or 2. Sorted.
std::vector<std::pair<VertexId, VertexId>> zero_pair_scan(const Graph& g, const Colouring& c);

const char* to_string(Kind kind);
Kind kind_from_string(const std::string& s);
const char* to_string(WitnessKind kind);
WitnessKind witness_kind_from_string(const std::string& s);

// Number of distinct colours appearing in c.
int colours_used(const Colouring& c);

}  // namespace colour_lab
