#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "colour_lab/colouring.hpp"
#include "colour_lab/graph.hpp"

namespace colour_lab {

enum class GadgetId {
    star_component,
    star_chain,
    petersen_minus,
    c2_vertex,
    c2_chain,
    grotzsch_minus,
    two_in_two_out,
    not_equal,
    c3_tree,
    star_filler,
    rs_component,
    rs_forcing_h,
    rs_forcing,
    rs_blocking,
    rs_filler,
};

const char* to_string(GadgetId id);
GadgetId gadget_from_string(const std::string& s);
const std::vector<GadgetId>& all_gadgets();

struct ParamOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoSchemeRecorded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unused fields stay 0 / empty. `shape` selects a variant wiring:
// star-component "full" | "subgraph", c3-tree "triangular" | "linear".
struct GadgetParams {
    int k = 0;
    int t = 0;
    int d = 0;
    int T = 0;
    int n = 0;
    std::string shape;
};

struct Gadget {
    GadgetId id;
    GadgetParams params;
    Graph graph;
    std::vector<std::pair<std::string, VertexId>> terminals;  // in role order
    Kind kind;
    int k;  // palette the gadget is meant for

    VertexId terminal(const std::string& role) const;
    std::vector<VertexId> terminal_ids() const;
};

// Fills defaults for unset fields, then range-checks.
GadgetParams normalized(GadgetId id, GadgetParams p);

Gadget build(GadgetId id, const GadgetParams& p = {});

// A reference colouring: figure name plus its swap arguments.
//   star-component "fig3b"; star-chain "fig4"
//   petersen-minus, c2-vertex, c2-chain "fig8" {c}: terminals coloured c
//   grotzsch-minus "fig7b" | "fig7c"; two-in-two-out "fig9c"
//   not-equal "fig10" {cy, cz}; c3-tree "fig9c" {c}: terminals coloured c
//   star-filler "swap" {fv, c}: terminals fv, hubs c
//   rs-component "fig12b"; rs-forcing-H, rs-forcing "derived"
//   rs-blocking "fig15" {c}, 0 < c < k-1
//   rs-filler "filler" {fv} or {k-1, j}: terminals fv
struct SchemeVariant {
    std::string figure;
    std::vector<int> args;
};

SchemeVariant default_variant(GadgetId id, const GadgetParams& p);
Colouring scheme(const Gadget& g, const SchemeVariant& v);
Colouring scheme(GadgetId id, const GadgetParams& p, const SchemeVariant& v);

struct GadgetInfo {
    GadgetId id;
    std::string params;     // legal ranges
    std::string terminals;  // role names
    Kind kind;
    std::string source;
};

std::vector<GadgetInfo> gadget_catalogue();

// The 4-rs colouring of the full colour-forcing gadget found by the solver.
const std::vector<int>& rs_forcing_derived_colours();

// Small example graphs with reference colourings (prism, pendant triangle).
std::pair<Graph, Colouring> fig1a_prism();
std::pair<Graph, Colouring> fig1b_pendant_triangle();

}  // namespace colour_lab
