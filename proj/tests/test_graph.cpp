#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "colour_lab/gadgets.hpp"
#include "colour_lab/graph.hpp"
#include "colour_lab/io.hpp"
#include "support/prop.hpp"

using namespace colour_lab;
using namespace colour_lab::testing;

namespace {

// Independent of bfs_distances.
bool within_two(const Graph& g, VertexId u, VertexId v) {
    if (g.adjacent(u, v)) return true;
    for (VertexId w : g.neighbours(u))
        if (g.adjacent(w, v)) return true;
    return false;
}

bool two_colourable(const Graph& g) {
    std::vector<int> side(g.n(), -1);
    for (VertexId s = 0; s < g.n(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbours(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

TEST(Identify, PathEndpointsBecomeOneEdge) {
    Graph g;
    g.add_vertex("u");
    g.add_vertex("x");
    g.add_vertex("v");
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    Graph h = identify_vertices(g, g.at("u"), g.at("v"));
    EXPECT_EQ(h.n(), 2);
    EXPECT_EQ(h.m(), 1u);
    EXPECT_EQ(h.at("u"), h.at("v"));
    EXPECT_EQ(h.at("u"), 0);
}

TEST(Identify, IsolatedPair) {
    Graph g(2);
    Graph h = identify_vertices(g, 0, 1);
    EXPECT_EQ(h.n(), 1);
    EXPECT_EQ(h.m(), 0u);
}

TEST(Identify, Errors) {
    Graph g = path_graph(3);
    EXPECT_THROW(identify_vertices(g, 0, 1), AdjacentIdentification);
    EXPECT_THROW(identify_vertices(g, 0, 7), UnknownVertex);
    EXPECT_THROW(g.at("nope"), UnknownVertex);
}

TEST(Identify, ChainGadgetGluing) {
    // three 16-vertex components, four identifications
    Gadget chain = build(GadgetId::star_chain, {.k = 7, .t = 3});
    EXPECT_EQ(chain.graph.n(), 44);
    EXPECT_EQ(chain.graph.at("c1.w3"), chain.graph.at("c2.u1"));
    EXPECT_EQ(chain.graph.at("c2.u3"), chain.graph.at("c3.w1"));
}

TEST(Identify, NeighbourhoodIsUnion) {
    Rng rng(11);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(rng, 2, 12);
        const int u = uniform(rng, 0, g.n() - 1), v = uniform(rng, 0, g.n() - 1);
        if (u == v || g.adjacent(u, v)) continue;
        const int lo = std::min(u, v), hi = std::max(u, v);
        auto map = [&](VertexId x) { return x == hi ? lo : x > hi ? x - 1 : x; };
        Graph h = identify_vertices(g, u, v);
        ASSERT_EQ(h.n(), g.n() - 1);
        std::set<VertexId> expect;
        for (VertexId x : g.neighbours(u)) expect.insert(map(x));
        for (VertexId x : g.neighbours(v)) expect.insert(map(x));
        const auto& got = h.neighbours(lo);
        EXPECT_EQ(std::set<VertexId>(got.begin(), got.end()), expect) << "trial " << trial;
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(Subdivide, TriangleBecomesHexagon) {
    Graph h = subdivide_all_edges(complete_graph(3));
    auto r = structure_report(h);
    EXPECT_EQ(h.n(), 6);
    EXPECT_EQ(h.m(), 6u);
    EXPECT_TRUE(r.is_regular);
    EXPECT_EQ(r.regular_degree, 2);
    EXPECT_EQ(r.girth, 6);
    EXPECT_TRUE(r.is_connected);
}

TEST(Subdivide, EdgelessUnchanged) {
    Graph g(4);
    Graph h = subdivide_all_edges(g);
    EXPECT_EQ(h.n(), 4);
    EXPECT_EQ(h.m(), 0u);
}

TEST(Subdivide, OutputBipartiteTriangleFree) {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(rng, 1, 12);
        Graph h = subdivide_all_edges(g);
        EXPECT_EQ(h.n(), g.n() + static_cast<int>(g.m()));
        EXPECT_EQ(h.m(), 2 * g.m());
        EXPECT_TRUE(two_colourable(h));
        auto r = structure_report(h);
        EXPECT_TRUE(r.is_bipartite);
        EXPECT_TRUE(r.is_triangle_free);
    }
}

TEST(Union, Counts) {
    std::vector<Graph> k1{Graph(1), Graph(1)};
    Graph a = disjoint_union(k1);
    EXPECT_EQ(a.n(), 2);
    EXPECT_EQ(a.m(), 0u);

    std::vector<Graph> c5{cycle_graph(5), cycle_graph(5)};
    Graph b = disjoint_union(c5);
    EXPECT_EQ(b.n(), 10);
    EXPECT_EQ(b.m(), 10u);
    EXPECT_FALSE(is_connected(b));

    std::vector<Graph> pm(4, build(GadgetId::petersen_minus).graph);
    Graph c = disjoint_union(pm);
    EXPECT_EQ(c.n(), 4 * 9);
    EXPECT_EQ(c.m(), 4u * 12u);
}

TEST(Structure, Octahedron) {
    auto r = structure_report(octahedron());
    EXPECT_EQ(r.n, 6);
    EXPECT_TRUE(r.is_regular);
    EXPECT_EQ(r.regular_degree, 4);
    EXPECT_EQ(r.girth, 3);
    EXPECT_TRUE(r.is_connected);
    EXPECT_FALSE(r.is_triangle_free);
}

TEST(Structure, BlockingGadget) {
    auto r = structure_report(build(GadgetId::rs_blocking, {.k = 5}).graph);
    EXPECT_EQ(r.max_degree, 4);
    EXPECT_TRUE(r.is_triangle_free);
}

TEST(Structure, ForestIsAcyclic) {
    auto r = structure_report(star_graph(4));
    EXPECT_FALSE(r.girth.has_value());
    EXPECT_TRUE(r.is_triangle_free);
    EXPECT_TRUE(r.is_bipartite);
}

TEST(Structure, TriangleFreeIffGirthAtLeastFour) {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, 1, 11);
        auto r = structure_report(g);
        if (r.girth) EXPECT_GE(*r.girth, 3);
        EXPECT_EQ(r.is_triangle_free, !r.girth || *r.girth >= 4);
        EXPECT_EQ(r.is_bipartite, two_colourable(g));
    }
}

TEST(Square, Examples) {
    Graph sq = square(star_graph(3));
    EXPECT_EQ(sq.n(), 4);
    EXPECT_EQ(sq.m(), 6u);

    Graph p4 = square(path_graph(4));
    EXPECT_EQ(p4.m(), 3u + 2u);
    EXPECT_TRUE(p4.adjacent(0, 2));
    EXPECT_TRUE(p4.adjacent(1, 3));
    EXPECT_FALSE(p4.adjacent(0, 3));

    Graph pet = petersen_graph();
    for (VertexId u = 0; u < 10; ++u)
        for (VertexId v = u + 1; v < 10; ++v) ASSERT_TRUE(within_two(pet, u, v));
    EXPECT_EQ(square(pet).m(), 45u);
}

TEST(Square, MatchesDistanceAndDegreeBound) {
    Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(rng, 1, 12);
        Graph sq = square(g);
        const int d = g.max_degree();
        EXPECT_LE(sq.max_degree(), d * d);
        for (VertexId u = 0; u < g.n(); ++u)
            for (VertexId v = u + 1; v < g.n(); ++v) EXPECT_EQ(sq.adjacent(u, v), within_two(g, u, v));
    }
}

TEST(Graph6, KnownEncodings) {
    EXPECT_EQ(encode_graph6(Graph(1)), "@");
    EXPECT_EQ(encode_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(encode_graph6(petersen_graph()), "IheA@GUAo");
}

TEST(Graph6, RoundTrip) {
    EXPECT_TRUE(decode_graph6(encode_graph6(Graph(1))).same_adjacency(Graph(1)));
    Graph pet = petersen_graph();
    Graph back = decode_graph6(encode_graph6(pet));
    EXPECT_TRUE(back.same_adjacency(pet));

    Rng rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_gnp(uniform(rng, 0, 62), 0.3, rng);
        ASSERT_TRUE(decode_graph6(encode_graph6(g)).same_adjacency(g)) << trial;
    }
    for (int n : {63, 64, 100, 258, 300}) {
        Graph g = random_gnp(n, 0.05, rng);
        EXPECT_TRUE(decode_graph6(encode_graph6(g)).same_adjacency(g)) << n;
    }
}

TEST(Graph6, Malformed) {
    const std::string pet = encode_graph6(petersen_graph());
    try {
        decode_graph6(pet.substr(0, 4));
        FAIL() << "truncated payload accepted";
    } catch (const MalformedGraph6& e) {
        EXPECT_EQ(e.offset, 4u);
    }
    EXPECT_THROW(decode_graph6(""), MalformedGraph6);
    EXPECT_THROW(decode_graph6("I\x01"), MalformedGraph6);
}

TEST(EdgeList, RoundTripAndErrors) {
    Graph g = petersen_graph();
    const std::string text = write_edge_list(g);
    EXPECT_EQ(text.substr(0, 6), "10 15\n");
    EXPECT_TRUE(read_edge_list(text).same_adjacency(g));
    EXPECT_TRUE(parse_graph(text).same_adjacency(g));
    EXPECT_EQ(sniff_format(encode_graph6(g)), GraphFormat::graph6);
    EXPECT_EQ(sniff_format(text), GraphFormat::edge_list);
    EXPECT_THROW(read_edge_list("3 1\n0 0\n"), MalformedEdgeList);
    EXPECT_THROW(read_edge_list("3 2\n0 1\n"), MalformedEdgeList);
    EXPECT_THROW(read_edge_list("2 1\n0 5\n"), MalformedEdgeList);
}

TEST(Dot, MarksTerminals) {
    Gadget b = build(GadgetId::rs_blocking, {.k = 5});
    DotStyle style;
    style.terminals["u3"] = b.terminal("u3");
    const std::string dot = to_dot(b.graph, style);
    EXPECT_NE(dot.find("graph"), std::string::npos);
    EXPECT_NE(dot.find("u3"), std::string::npos);
}
