#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "colour_lab/colouring.hpp"
#include "colour_lab/gadgets.hpp"
#include "colour_lab/lemmas.hpp"
#include "colour_lab/reductions.hpp"
#include "colour_lab/solver.hpp"

namespace colour_lab {

using json = nlohmann::ordered_json;

struct MalformedJson : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const Colouring& c);
Colouring colouring_from_json(const json& j);

json to_json(const PathWitness& w);
PathWitness witness_from_json(const json& j);

// Variables by name.
json to_json(const Formula1in3& b);
Formula1in3 formula_from_json(const json& j);

// The input graph is stored as graph6; vertex names are not kept.
json to_json(const ReductionTrace& t);
ReductionTrace trace_from_json(const json& j);

json to_json(const SolveOutcome& o, bool timing = true);
json to_json(const EnumerateResult& r, bool timing = true);
json to_json(const LemmaReport& r, bool timing = true);
LemmaReport report_from_json(const json& j);

// {"gadget", "params", "kind", "k", "terminals": {role: id}}
json terminals_json(const Gadget& g);

json to_json(const StructureReport& s);

// Wraps parse errors as MalformedJson.
json parse_json(const std::string& text);

}  // namespace colour_lab
