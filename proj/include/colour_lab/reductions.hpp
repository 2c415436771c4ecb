#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colour_lab/colouring.hpp"
#include "colour_lab/gadgets.hpp"
#include "colour_lab/graph.hpp"
#include "colour_lab/solver.hpp"

namespace colour_lab {

enum class ConstructionId { c1, c2, c3, c45, c6, c7, c8, c910 };

const char* to_string(ConstructionId id);
ConstructionId construction_from_string(const std::string& s);
const std::vector<ConstructionId>& all_constructions();

struct Formula1in3 {
    std::vector<std::string> vars;
    std::vector<std::array<int, 3>> clauses;  // indices into vars
};

// Throws std::invalid_argument unless every clause has three distinct variables.
void check_formula(const Formula1in3& b);
Formula1in3 fig6_formula();
// Bipartite incidence graph: variables 0..|X|-1, then clauses.
Graph formula_graph(const Formula1in3& b);

struct PreconditionViolated : std::invalid_argument {
    PreconditionViolated(const std::string& check, const std::string& detail);
    std::string check;
};

struct NoForwardScheme : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoBackwardScheme : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidOutputColouring : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Role {
    std::string tag;  // input-vertex, input-edge, input-variable, clause-vertex, subdivision, terminal, gadget, copy
    std::string ref;
    bool operator==(const Role&) const = default;
};

struct GadgetInstance {
    GadgetId id;
    GadgetParams params;
    std::string label;
    std::vector<VertexId> embed;  // gadget vertex -> output vertex
};

struct ReductionTrace {
    ConstructionId construction;
    int k = 0;
    int d = 0;
    Graph input;                         // empty for c6/c7
    std::optional<Formula1in3> formula;  // c6/c7 only
    int output_n = 0;
    std::size_t output_m = 0;
    std::vector<Role> roles;  // per output vertex
    std::vector<GadgetInstance> gadgets;
    std::map<std::string, VertexId> anchors;  // named output vertices used by witness translation
};

struct ReductionParams {
    int k = 0;
    int d = 0;
    bool strict = true;  // check the input class
};

struct Reduction {
    Graph graph;
    ReductionTrace trace;
};

Reduction build_reduction(ConstructionId cid, const Graph& input, const ReductionParams& p = {});
Reduction build_reduction(ConstructionId cid, const Formula1in3& b, const ReductionParams& p = {});

// Kind and palette of the target problem.
std::pair<Kind, int> output_problem(const ReductionTrace& t);

// Rebuilds the output graph from the trace's input and parameters.
Graph output_graph(const ReductionTrace& t);

// The problem an input witness solves. For c1 the colouring is of the line graph.
struct InputProblem {
    Kind kind;
    int k;
    bool on_edges;
};
// Throws std::invalid_argument for c6/c7.
InputProblem input_problem(const ReductionTrace& t);
bool input_witness_valid(const ReductionTrace& t, const Colouring& w);
// Solver search for an input witness.
SolveOutcome solve_input(const ReductionTrace& t, const SolveParams& base = {});

// Input witnesses: c1 an edge colouring indexed by input.edges() with k-2
// colours; c2/c3 a proper 3-colouring; c45/c910 a k-star / k-rs colouring;
// c8 a (k-2)-rs colouring.
Colouring witness_forward(const ReductionTrace& t, const Colouring& input_witness);
// Throws InvalidOutputColouring unless `output` validates on output_graph(t).
Colouring witness_backward(const ReductionTrace& t, const Colouring& output);

// Exhaustive. Bit i of the result is variable i; the smallest satisfying
// assignment read as an integer is returned. Throws CapExceeded above max_vars.
std::optional<std::vector<bool>> sat_1in3(const Formula1in3& b, int max_vars = 30);

}  // namespace colour_lab
