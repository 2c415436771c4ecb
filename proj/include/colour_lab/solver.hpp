#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "colour_lab/colouring.hpp"
#include "colour_lab/graph.hpp"

namespace colour_lab {

struct Budget {
    std::uint64_t nodes = 1'000'000'000;
    double seconds = 0;  // 0: unlimited
};

// Budget with seconds taken from COLOUR_LAB_BUDGET_SECS when set.
Budget default_budget();

struct SolveParams {
    Kind kind = Kind::proper;
    int k = 1;
    // Quotient by colour permutations. rs colourings are not closed under
    // permutation, so for rs this is the trivial group (plain search).
    bool canonical = false;
    Budget budget = default_budget();
    int threads = 0;  // 0: omp_get_max_threads()
};

enum class Status { sat, unsat, budget_exceeded };
const char* to_string(Status s);

struct SolveOutcome {
    Status status = Status::unsat;
    std::optional<Colouring> colouring;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

SolveOutcome decide(const Graph& g, const SolveParams& p);
SolveOutcome decide_serial(const Graph& g, const SolveParams& p);

struct EnumerateOptions {
    // When non-empty: one visit per distinct restriction to these vertices
    // (each visit carries one full extension). Branched first.
    std::vector<VertexId> project;
    // Branched right after `project`.
    std::vector<VertexId> priority;
};

enum class EnumStatus { complete, stopped, budget_exceeded };
const char* to_string(EnumStatus s);

struct EnumerateResult {
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    double seconds = 0;
    EnumStatus status = EnumStatus::complete;
};

// Return false to stop. Calls are serialized.
using Visitor = std::function<bool(const Colouring&)>;

EnumerateResult enumerate(const Graph& g, const SolveParams& p, const Visitor& visit,
                          const EnumerateOptions& opts = {});
EnumerateResult enumerate_serial(const Graph& g, const SolveParams& p, const Visitor& visit,
                                 const EnumerateOptions& opts = {});

// Number of colourings a canonical representative stands for.
std::uint64_t orbit_factor(const Colouring& c, Kind kind);

struct ChromaticOutcome {
    std::optional<int> value;  // nullopt on budget exhaustion
    std::optional<Colouring> colouring;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

ChromaticOutcome chromatic(const Graph& g, Kind kind, const SolveParams& base = {});

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Plain k^n odometer with validate(); no pruning, no symmetry.
SolveOutcome oracle_decide(const Graph& g, const SolveParams& p, std::uint64_t cap = 100'000'000);

// Proper k-edge-colouring via the line graph; colours are indexed by g.edges().
SolveOutcome edge_decide(const Graph& g, int k, const SolveParams& base = {});

// Greedy proper colouring of square(g) in id order.
Colouring distance_two_rs(const Graph& g);

// Branching order used by the kernel: `first` in the given order, then the
// remaining vertices by most already-ordered neighbours, ties broken by the
// smallest-last order (higher degree earlier).
std::vector<VertexId> branching_order(const Graph& g, const std::vector<VertexId>& first = {});

}  // namespace colour_lab
