#include <gtest/gtest.h>

#include <set>

#include "colour_lab/lemmas.hpp"
#include "support/oracle.hpp"
#include "support/prop.hpp"

using namespace colour_lab;
using namespace colour_lab::testing;

namespace {

VerifyOptions serial() {
    VerifyOptions o;
    o.threads = 1;
    return o;
}

}  // namespace

TEST(Lemmas, Catalogue) {
    auto cat = lemma_catalogue();
    EXPECT_EQ(cat.size(), 13u);
    std::set<std::string> names;
    for (const auto& e : cat) {
        names.insert(to_string(e.id));
        EXPECT_EQ(lemma_from_string(to_string(e.id)), e.id);
        EXPECT_FALSE(e.assertion.empty());
    }
    EXPECT_EQ(names.size(), 13u);
    EXPECT_THROW(lemma_from_string("fermat"), std::invalid_argument);
}

TEST(Lemmas, FastAndStandardTiersVerify) {
    for (const auto& e : lemma_catalogue()) {
        if (e.tier == Tier::extended) continue;
        LemmaReport r = verify(e.id, {}, serial());
        EXPECT_EQ(r.status, LemmaStatus::verified) << to_string(e.id);
        EXPECT_GT(r.colourings_examined, 0u) << to_string(e.id);
        EXPECT_FALSE(r.counterexample);
        EXPECT_EQ(r.kind, e.kind);
    }
}

TEST(Lemmas, ParallelAgreesWithSerial) {
    VerifyOptions par;
    par.threads = 3;
    for (LemmaId id : {LemmaId::petersen_deg2_equal, LemmaId::rs_component_zero, LemmaId::rs_blocking_nonzero}) {
        auto a = verify(id, {}, serial());
        auto b = verify(id, {}, par);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.colourings_examined, b.colourings_examined) << to_string(id);
    }
}

TEST(Lemmas, PetersenCountMatchesOracle) {
    // canonical count times 4! equals the number of plain 4-star colourings
    auto r = verify(LemmaId::petersen_deg2_equal, {}, serial());
    Graph g = build(GadgetId::petersen_minus).graph;
    EXPECT_EQ(r.colourings_examined * 24, oracle::count_valid(g, 4, Kind::star));
    EXPECT_EQ(r.mode, "canonical");
}

TEST(Lemmas, RsComponentCountMatchesOracle) {
    auto r = verify(LemmaId::rs_component_zero, {}, serial());
    EXPECT_EQ(r.colourings_examined, oracle::count_valid(build(GadgetId::rs_component).graph, 4, Kind::rs));
    EXPECT_EQ(r.mode, "plain");
}

TEST(Lemmas, BlockingAtLargerK) {
    LemmaParams p;
    p.k = 6;
    auto r = verify(LemmaId::rs_blocking_nonzero, p, serial());
    EXPECT_EQ(r.status, LemmaStatus::verified);
    EXPECT_EQ(r.k, 6);
}

TEST(Lemmas, ObservationOnCustomGraphs) {
    Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        LemmaParams p;
        p.graph = random_graph(rng, 2, 8);
        p.k = uniform(rng, 2, 4);
        auto r = verify(LemmaId::obs_distance2, p, serial());
        const auto truth = oracle::count_valid(*p.graph, p.k, Kind::rs);
        if (truth == 0) {
            EXPECT_EQ(r.status, LemmaStatus::vacuous);
        } else {
            EXPECT_EQ(r.status, LemmaStatus::verified);
            EXPECT_EQ(r.colourings_examined, truth);
        }
    }
}

TEST(Lemmas, Vacuous) {
    LemmaParams p;
    p.graph = path_graph(2);
    p.k = 1;
    auto r = verify(LemmaId::obs_distance2, p, serial());
    EXPECT_EQ(r.status, LemmaStatus::vacuous);
    EXPECT_EQ(r.colourings_examined, 0u);
}

TEST(Lemmas, Budget) {
    VerifyOptions o = serial();
    o.budget.nodes = 5;
    auto r = verify(LemmaId::two_in_two_out_pattern, {}, o);
    EXPECT_EQ(r.status, LemmaStatus::budget_exceeded);
}

TEST(Lemmas, ParamRange) {
    LemmaParams p;
    p.k = 4;
    EXPECT_THROW(verify(LemmaId::rs_blocking_nonzero, p), ParamOutOfRange);
}
