#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colour_lab/colouring.hpp"
#include "colour_lab/gadgets.hpp"
#include "colour_lab/graph.hpp"
#include "colour_lab/solver.hpp"

namespace colour_lab {

enum class LemmaId {
    star_subgraph_bicolour,
    star_component_bicolour,
    star_chain_bicolour,
    petersen_deg2_equal,
    grotzsch_deg2_distinct,
    two_in_two_out_pattern,
    not_equal_terminals,
    c3_terminals_equal,
    rs_component_zero,
    rs_forcing_h_zero,
    rs_forcing_full_zero,
    rs_blocking_nonzero,
    obs_distance2,
};

const char* to_string(LemmaId id);
LemmaId lemma_from_string(const std::string& s);
const std::vector<LemmaId>& all_lemmas();

enum class Tier { fast, standard, extended };
const char* to_string(Tier t);

struct LemmaInfo {
    LemmaId id;
    std::string binding;  // gadget or instance
    Kind kind;
    std::string defaults;
    std::string assertion;
    Tier tier;
};

std::vector<LemmaInfo> lemma_catalogue();

// 0 selects the default. `graph` replaces the default instance for obs-distance2.
struct LemmaParams {
    int k = 0;
    int t = 0;
    std::optional<Graph> graph;
};

struct VerifyOptions {
    Budget budget = default_budget();
    int threads = 0;
};

enum class LemmaStatus { verified, refuted, budget_exceeded, vacuous };
const char* to_string(LemmaStatus s);

struct LemmaReport {
    LemmaId lemma;
    std::vector<std::pair<std::string, std::string>> params;
    Kind kind;
    int k = 0;
    LemmaStatus status = LemmaStatus::verified;
    std::uint64_t colourings_examined = 0;
    std::optional<Colouring> counterexample;
    std::string mode;  // canonical | plain, with "/projection" when restricted
    std::uint64_t nodes = 0;
    double seconds = 0;
};

LemmaReport verify(LemmaId id, const LemmaParams& p = {}, const VerifyOptions& opts = {});

}  // namespace colour_lab
