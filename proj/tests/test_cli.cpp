#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "colour_lab/cli.hpp"
#include "colour_lab/io.hpp"
#include "colour_lab/json_io.hpp"

using namespace colour_lab;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() / ("colour_lab_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }

    fs::path dir;
};

}  // namespace

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, cli::usage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::usage);
    auto bad = run({"solve", "--graph", "petersen", "--kind", "star", "--k", "abc"});
    EXPECT_EQ(bad.code, cli::usage);
    EXPECT_NE(bad.err.find("--k"), std::string::npos);
    auto kind = run({"solve", "--graph", "petersen", "--kind", "acyclic", "--k", "3"});
    EXPECT_EQ(kind.code, cli::usage);
    EXPECT_NE(kind.err.find("--kind"), std::string::npos);
    EXPECT_EQ(run({"solve", "--graph", "gnp:5,0.5", "--kind", "star", "--k", "3"}).code, cli::usage);
    EXPECT_EQ(run({"gadget", "--id", "rs-blocking", "--k", "3"}).code, cli::usage);
    auto pre = run({"reduce", "--construction", "c2-3col-to-4star", "--graph", "petersen"});
    EXPECT_EQ(pre.code, cli::usage);
    EXPECT_NE(pre.err.find("regular"), std::string::npos);
}

TEST_F(Cli, SolveExitCodes) {
    auto no = run({"solve", "--graph", "cycle:5", "--kind", "star", "--k", "3"});
    EXPECT_EQ(no.code, cli::negative);
    EXPECT_EQ(parse_json(no.out)["status"], "unsat");
    EXPECT_EQ(run({"solve", "--graph", "petersen", "--kind", "star", "--k", "4", "--budget-nodes", "5",
                   "--threads", "1"})
                  .code,
              cli::budget);

    ASSERT_EQ(run({"solve", "--graph", "cycle:5", "--kind", "star", "--k", "4", "--out", path("c.json")}).code,
              cli::ok);
    json j = parse_json(read_file(path("c.json")));
    Colouring c = colouring_from_json(j["colouring"]);
    EXPECT_TRUE(is_valid(cycle_graph(5), c, Kind::star));
    for (const char* engine : {"serial", "oracle"})
        EXPECT_EQ(run({"solve", "--graph", "cycle:5", "--kind", "star", "--k", "4", "--engine", engine}).code,
                  cli::ok);
}

TEST_F(Cli, GadgetArtifactsReparse) {
    ASSERT_EQ(run({"gadget", "--id", "rs-blocking", "--k", "5", "--out", path("b.g6"), "--terminals-out",
                   path("t.json"), "--scheme", "default", "--scheme-out", path("s.json")})
                  .code,
              cli::ok);
    Graph g = parse_graph(read_file(path("b.g6")));
    EXPECT_EQ(g.n(), 14);
    json t = parse_json(read_file(path("t.json")));
    EXPECT_EQ(t["terminals"]["u3"], 10);
    Colouring s = colouring_from_json(parse_json(read_file(path("s.json"))));
    EXPECT_TRUE(is_valid(g, s, Kind::rs));

    ASSERT_EQ(run({"gadget", "--id", "petersen-minus", "--format", "edge-list", "--out", path("p.txt")}).code,
              cli::ok);
    EXPECT_EQ(read_edge_list(read_file(path("p.txt"))).m(), 12u);
    auto dot = run({"gadget", "--id", "rs-component", "--format", "dot"});
    EXPECT_EQ(dot.code, cli::ok);
    EXPECT_NE(dot.out.find("u3"), std::string::npos);
}

TEST_F(Cli, VerifyReportsAreReproducible) {
    auto a = run({"verify-lemma", "--id", "rs-component-zero", "--no-timing", "--threads", "1"});
    auto b = run({"verify-lemma", "--id", "rs-component-zero", "--no-timing", "--threads", "1"});
    EXPECT_EQ(a.code, cli::ok);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("seconds"), std::string::npos);

    ASSERT_EQ(run({"verify-lemma", "--id", "all", "--tier", "fast", "--report", path("r.json"), "--no-timing"}).code,
              cli::ok);
    json r = parse_json(read_file(path("r.json")));
    ASSERT_TRUE(r.is_array());
    for (const auto& e : r) EXPECT_EQ(report_from_json(e).status, LemmaStatus::verified);

    write_file(path("k2.txt"), "2 1\n0 1\n");
    EXPECT_EQ(run({"verify-lemma", "--id", "obs-distance2", "--graph-in", path("k2.txt"), "--k", "1"}).code,
              cli::negative);
}

TEST_F(Cli, ReduceAndWitness) {
    ASSERT_EQ(run({"reduce", "--construction", "c2-3col-to-4star", "--graph", "octahedron", "--out", path("o.g6"),
                   "--trace", path("trace.json")})
                  .code,
              cli::ok);
    Graph out = parse_graph(read_file(path("o.g6")));
    EXPECT_EQ(out.n(), 247);
    const Graph oct = octahedron();
    Colouring w{3, std::vector<int>(6, -1)};
    for (int v = 0, next = 0; v < 6; ++v) {
        if (w.colours[v] >= 0) continue;
        for (VertexId u = v; u < 6; ++u)
            if (u == v || !oct.adjacent(u, v)) w.colours[u] = next;
        ++next;
    }
    ASSERT_TRUE(is_valid(oct, w, Kind::proper));
    write_file(path("w.json"), to_json(w).dump());
    auto fwd = run({"witness", "--direction", "forward", "--trace", path("trace.json"), "--colouring", path("w.json"),
                    "--out", path("f.json")});
    ASSERT_EQ(fwd.code, cli::ok);
    Colouring f = colouring_from_json(parse_json(read_file(path("f.json"))));
    EXPECT_TRUE(is_valid(out, f, Kind::star));
    auto back = run({"witness", "--direction", "backward", "--trace", path("trace.json"), "--colouring",
                     path("f.json")});
    ASSERT_EQ(back.code, cli::ok);
    EXPECT_TRUE(is_valid(oct, colouring_from_json(parse_json(back.out)), Kind::proper));
}

TEST_F(Cli, BackwardRejectsInvalidOutput) {
    ASSERT_EQ(run({"reduce", "--construction", "c45-star-regularize", "--graph", "path:3", "--k", "4", "--d", "3",
                   "--trace", path("trace.json")})
                  .code,
              cli::ok);
    write_file(path("bad.json"), to_json(Colouring{4, std::vector<int>(36, 0)}).dump());
    auto r = run({"witness", "--direction", "backward", "--trace", path("trace.json"), "--colouring",
                  path("bad.json")});
    EXPECT_EQ(r.code, cli::negative);
    EXPECT_NE(r.err.find("improper-edge"), std::string::npos);
}

TEST_F(Cli, Roundtrip) {
    auto c1 = run({"roundtrip", "--construction", "c1-edge-to-star", "--graph", "complete:6", "--k", "7"});
    ASSERT_EQ(c1.code, cli::ok);
    json j = parse_json(c1.out);
    EXPECT_EQ(j["exact"], true);
    auto c6 = run({"roundtrip", "--construction", "c6-1in3-to-3rs", "--formula", "fig6"});
    ASSERT_EQ(c6.code, cli::ok);
    EXPECT_EQ(parse_json(c6.out)["equivalent"], true);
    EXPECT_EQ(run({"roundtrip", "--construction", "c8-rs-lift", "--graph", "petersen", "--k", "5"}).code,
              cli::negative);
}

TEST_F(Cli, ChromaticEnumerateCatalogue) {
    auto c = run({"chromatic", "--graph", "hypercube:3", "--kind", "rs"});
    ASSERT_EQ(c.code, cli::ok);
    EXPECT_EQ(parse_json(c.out)["value"], 4);
    auto e = run({"enumerate", "--graph", "complete:3", "--kind", "proper", "--k", "3", "--canonical"});
    ASSERT_EQ(e.code, cli::ok);
    EXPECT_EQ(parse_json(e.out)["count"], 1);
    auto cat = run({"catalogue"});
    ASSERT_EQ(cat.code, cli::ok);
    json all = parse_json(cat.out);
    EXPECT_EQ(all["gadgets"].size(), 15u);
    EXPECT_EQ(all["lemmas"].size(), 13u);
}
