#include <gtest/gtest.h>

#include <set>

#include "colour_lab/gadgets.hpp"
#include "colour_lab/solver.hpp"
#include "support/oracle.hpp"

using namespace colour_lab;

namespace {

void expect_scheme_valid(const Gadget& g, const SchemeVariant& v, const std::string& label) {
    Colouring c = scheme(g, v);
    ASSERT_EQ(c.colours.size(), static_cast<std::size_t>(g.graph.n())) << label;
    EXPECT_EQ(c.k, g.k) << label;
    EXPECT_TRUE(oracle::valid(g.graph, c.colours, g.kind)) << label;
}

int colour_of(const Gadget& g, const Colouring& c, const std::string& name) { return c.colours[g.graph.at(name)]; }

}  // namespace

TEST(Build, StarComponent) {
    for (int k = 7; k <= 10; ++k) {
        Gadget g = build(GadgetId::star_component, {.k = k});
        EXPECT_EQ(g.graph.n(), 4 * k - 12);
        EXPECT_EQ(g.graph.m(), static_cast<std::size_t>(k * k - 2 * k - 1));
        EXPECT_TRUE(g.terminals.empty());
    }
}

TEST(Build, StarChainSizes) {
    for (int k = 7; k <= 9; ++k)
        for (int t = 1; t <= 4; ++t) {
            Gadget g = build(GadgetId::star_chain, {.k = k, .t = t});
            EXPECT_EQ(g.graph.n(), (4 * k - 14) * t + 2) << k << "," << t;
            EXPECT_EQ(g.graph.m(), static_cast<std::size_t>((k * k - 2 * k - 2) * t + 1)) << k << "," << t;
            EXPECT_EQ(g.terminals.size(), static_cast<std::size_t>((k - 6) * t));
        }
    Gadget g = build(GadgetId::star_chain, {.k = 7, .t = 3});
    EXPECT_EQ(g.graph.n(), 44);
    EXPECT_EQ(g.graph.m(), 100u);
}

TEST(Build, PetersenMinus) {
    Gadget g = build(GadgetId::petersen_minus);
    EXPECT_EQ(g.graph.n(), 9);
    EXPECT_EQ(g.graph.m(), 12u);
    EXPECT_EQ(structure_report(g.graph).girth, 5);
    std::set<std::string> deg2;
    for (VertexId v = 0; v < g.graph.n(); ++v)
        if (g.graph.degree(v) == 2) deg2.insert(g.graph.name(v));
    EXPECT_EQ(deg2, (std::set<std::string>{"w1", "w4", "v5"}));
}

TEST(Build, C2Gadgets) {
    EXPECT_EQ(build(GadgetId::c2_vertex).graph.n(), 33);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(build(GadgetId::c2_chain, {.n = n}).graph.n(), 8 * n + 1);
    // 33 per vertex gadget plus 8 per chain position
    EXPECT_EQ(33 + 8, 41);
}

TEST(Build, TwoInTwoOutAndNotEqual) {
    Gadget a = build(GadgetId::two_in_two_out);
    EXPECT_EQ(a.graph.n(), 26);
    EXPECT_EQ(a.graph.m(), 46u);
    auto ra = structure_report(a.graph);
    EXPECT_EQ(ra.max_degree, 4);
    EXPECT_TRUE(ra.is_triangle_free);
    for (const char* t : {"y1*", "y2*", "z1*", "z2*"}) EXPECT_EQ(a.graph.degree(a.terminal(t)), 1) << t;

    Gadget b = build(GadgetId::not_equal);
    EXPECT_EQ(b.graph.n(), 24);
    EXPECT_EQ(b.graph.m(), 46u);
    EXPECT_EQ(b.graph.degree(b.terminal("y")), 2);
    EXPECT_EQ(b.graph.degree(b.terminal("z")), 2);
}

TEST(Build, RsForcing) {
    Gadget g = build(GadgetId::rs_forcing);
    const VertexId t = g.terminal("u5''");
    EXPECT_EQ(g.graph.degree(t), 2);
    for (VertexId v = 0; v < g.graph.n(); ++v)
        if (v != t) EXPECT_EQ(g.graph.degree(v), 3) << g.graph.name(v);
    EXPECT_EQ(structure_report(g.graph).girth, 5);
    SolveParams p;
    p.kind = Kind::rs;
    p.k = 4;
    EXPECT_EQ(decide(g.graph, p).status, Status::sat);
}

TEST(Build, RsBlocking) {
    for (int k = 5; k <= 8; ++k) {
        Gadget g = build(GadgetId::rs_blocking, {.k = k});
        EXPECT_EQ(g.graph.n() - 1, 2 * k + 3);
        EXPECT_EQ(g.graph.m(), static_cast<std::size_t>((k - 1) * (k - 2) + 2 * (k - 3) + 8));
    }
    Gadget g = build(GadgetId::rs_blocking, {.k = 5});
    EXPECT_EQ(g.graph.n(), 14);
    EXPECT_EQ(g.graph.m(), 24u);
}

TEST(Build, Fillers) {
    for (int k = 4; k <= 7; ++k)
        for (int d = 1; d <= k - 1; ++d) {
            Gadget rs = build(GadgetId::rs_filler, {.k = k, .d = d});
            EXPECT_EQ(rs.graph.n() - static_cast<int>(rs.terminals.size()), 6 * d);
            EXPECT_EQ(rs.graph.m(), static_cast<std::size_t>(3 * (d * d - 1) + 4));
            if (d > 1) EXPECT_NE(rs.graph.m(), static_cast<std::size_t>(3 * d * (d - 1) + 4));

            Gadget st = build(GadgetId::star_filler, {.k = k, .d = d});
            EXPECT_EQ(st.graph.n(), 2 * (d - 1) + 4);
            EXPECT_EQ(st.graph.m(), static_cast<std::size_t>((d - 1) * (d - 1) + 2 * (d - 1) + 2));
        }
    Gadget f = build(GadgetId::rs_filler, {.k = 4, .d = 3});
    EXPECT_EQ(f.graph.n() - 2, 18);
    EXPECT_EQ(f.graph.m(), 28u);
}

TEST(Build, TerminalsExist) {
    for (GadgetId id : all_gadgets()) {
        Gadget g = build(id);
        for (const auto& [role, v] : g.terminals) {
            EXPECT_GE(v, 0);
            EXPECT_LT(v, g.graph.n());
            EXPECT_EQ(g.terminal(role), v);
        }
        EXPECT_EQ(gadget_from_string(to_string(id)), id);
    }
    EXPECT_EQ(gadget_catalogue().size(), all_gadgets().size());
}

TEST(Build, ParamOutOfRange) {
    EXPECT_THROW(build(GadgetId::star_component, {.k = 6}), ParamOutOfRange);
    EXPECT_THROW(build(GadgetId::star_chain, {.k = 7, .t = -1}), ParamOutOfRange);
    EXPECT_THROW(build(GadgetId::rs_blocking, {.k = 4}), ParamOutOfRange);
    EXPECT_THROW(build(GadgetId::rs_filler, {.k = 5, .d = 5}), ParamOutOfRange);
    EXPECT_THROW(build(GadgetId::star_filler, {.k = 2}), ParamOutOfRange);
    EXPECT_THROW(build(GadgetId::c3_tree, {.T = 2, .shape = "star"}), ParamOutOfRange);
    EXPECT_THROW(gadget_from_string("nope"), std::invalid_argument);
}

TEST(Scheme, RsComponentReference) {
    Gadget g = build(GadgetId::rs_component);
    Colouring c = scheme(g, {"fig12b", {}});
    const int expect[] = {3, 1, 2, 3, 0, 0, 1, 2};
    for (int i = 1; i <= 8; ++i) EXPECT_EQ(colour_of(g, c, "u" + std::to_string(i)), expect[i - 1]);
    EXPECT_TRUE(oracle::rs(g.graph, c.colours));
}

TEST(Scheme, TwoInTwoOutReference) {
    Gadget g = build(GadgetId::two_in_two_out);
    Colouring c = scheme(g, {"fig9c", {}});
    for (const char* n : {"y1", "y2", "z1*", "z2*"}) EXPECT_EQ(colour_of(g, c, n), 4) << n;
    for (const char* n : {"y1*", "y2*", "z1", "z2"}) EXPECT_EQ(colour_of(g, c, n), 3) << n;
    EXPECT_TRUE(oracle::star(g.graph, c.colours));
}

TEST(Scheme, StarFillerSwap) {
    Gadget g = build(GadgetId::star_filler, {.k = 4, .d = 3});
    Colouring c = scheme(g, {"swap", {0, 3}});
    EXPECT_TRUE(oracle::star(g.graph, c.colours));
    EXPECT_EQ(colour_of(g, c, "v1"), 0);
}

TEST(Scheme, EveryDefaultVariantValidates) {
    for (GadgetId id : all_gadgets()) {
        Gadget g = build(id);
        expect_scheme_valid(g, default_variant(id, g.params), to_string(id));
    }
}

TEST(Scheme, ParameterSweep) {
    for (int k = 7; k <= 9; ++k) {
        expect_scheme_valid(build(GadgetId::star_component, {.k = k}), {"fig3b", {}}, "fig3b");
        for (int t = 1; t <= 3; ++t)
            expect_scheme_valid(build(GadgetId::star_chain, {.k = k, .t = t}), {"fig4", {}}, "fig4");
    }
    for (int c = 0; c < 4; ++c) {
        expect_scheme_valid(build(GadgetId::petersen_minus), {"fig8", {c}}, "fig8");
        expect_scheme_valid(build(GadgetId::c2_vertex), {"fig8", {c}}, "fig8 vertex");
        expect_scheme_valid(build(GadgetId::c2_chain, {.n = 3}), {"fig8", {c}}, "fig8 chain");
    }
    expect_scheme_valid(build(GadgetId::grotzsch_minus), {"fig7b", {}}, "fig7b");
    expect_scheme_valid(build(GadgetId::grotzsch_minus), {"fig7c", {}}, "fig7c");
    Gadget ne = build(GadgetId::not_equal);
    for (int cy = 0; cy < 5; ++cy)
        for (int cz = 0; cz < 5; ++cz) {
            if (cy == cz) continue;
            Colouring c = scheme(ne, {"fig10", {cy, cz}});
            EXPECT_TRUE(oracle::star(ne.graph, c.colours)) << cy << cz;
            EXPECT_EQ(colour_of(ne, c, "y"), cy);
            EXPECT_EQ(colour_of(ne, c, "z"), cz);
        }
    for (const char* shape : {"triangular", "linear"})
        for (int T = 1; T <= 3; ++T)
            for (int c = 0; c < 5; ++c) {
                Gadget g = build(GadgetId::c3_tree, {.T = T, .shape = shape});
                Colouring col = scheme(g, {"fig9c", {c}});
                EXPECT_TRUE(oracle::star(g.graph, col.colours)) << shape << T << c;
                for (const auto& [role, v] : g.terminals) EXPECT_EQ(col.colours[v], c) << role;
            }
    for (int k = 3; k <= 6; ++k)
        for (int d = 1; d <= k - 1; ++d)
            for (int fv = 0; fv < k; ++fv)
                for (int c = 0; c < k; ++c) {
                    if (fv == c) continue;
                    Gadget g = build(GadgetId::star_filler, {.k = k, .d = d});
                    Colouring col = scheme(g, {"swap", {fv, c}});
                    EXPECT_TRUE(oracle::star(g.graph, col.colours));
                    EXPECT_EQ(colour_of(g, col, "v1"), fv);
                }
    for (int k = 5; k <= 8; ++k)
        for (int c = 1; c < k - 1; ++c) {
            Gadget g = build(GadgetId::rs_blocking, {.k = k});
            Colouring col = scheme(g, {"fig15", {c}});
            EXPECT_TRUE(oracle::rs(g.graph, col.colours)) << k << "," << c;
            EXPECT_EQ(colour_of(g, col, "u3"), c);
        }
    for (int k = 4; k <= 7; ++k)
        for (int d = 1; d <= k - 1; ++d) {
            Gadget g = build(GadgetId::rs_filler, {.k = k, .d = d});
            for (int fv = 0; fv < k - 1; ++fv) {
                Colouring col = scheme(g, {"filler", {fv}});
                EXPECT_TRUE(oracle::rs(g.graph, col.colours)) << k << d << fv;
                EXPECT_EQ(colour_of(g, col, "v1"), fv);
            }
            for (int j = 0; j < k - 1; ++j) {
                Colouring col = scheme(g, {"filler", {k - 1, j}});
                EXPECT_TRUE(oracle::rs(g.graph, col.colours)) << k << d << "top" << j;
            }
        }
    expect_scheme_valid(build(GadgetId::rs_forcing_h), {"derived", {}}, "H");
    EXPECT_EQ(rs_forcing_derived_colours().size(), static_cast<std::size_t>(build(GadgetId::rs_forcing).graph.n()));
}

TEST(Scheme, InjectedFaultIsCaught) {
    // Negative control: the validating oracle must notice a single recoloured vertex.
    for (GadgetId id : all_gadgets()) {
        Gadget g = build(id);
        Colouring c = scheme(g, default_variant(id, g.params));
        VertexId v = 0;
        while (g.graph.degree(v) == 0) ++v;
        c.colours[v] = c.colours[g.graph.neighbours(v)[0]];
        EXPECT_FALSE(oracle::valid(g.graph, c.colours, g.kind)) << to_string(id);
        EXPECT_FALSE(is_valid(g.graph, c, g.kind)) << to_string(id);
    }
}

TEST(Scheme, Errors) {
    Gadget pm = build(GadgetId::petersen_minus);
    EXPECT_THROW(scheme(pm, {"fig12b", {}}), NoSchemeRecorded);
    EXPECT_THROW(scheme(pm, {"fig8", {7}}), std::invalid_argument);
    EXPECT_THROW(scheme(build(GadgetId::star_component, {.k = 7, .shape = "subgraph"}), {"fig3b", {}}),
                 NoSchemeRecorded);
    EXPECT_THROW(scheme(build(GadgetId::rs_blocking, {.k = 5}), {"fig15", {4}}), std::invalid_argument);
    EXPECT_THROW(scheme(build(GadgetId::rs_filler, {.k = 5, .d = 2}), {"filler", {4}}), std::invalid_argument);
}
