#include "colour_lab/cli.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "colour_lab/gadgets.hpp"
#include "colour_lab/io.hpp"
#include "colour_lab/json_io.hpp"
#include "colour_lab/lemmas.hpp"
#include "colour_lab/reductions.hpp"
#include "colour_lab/solver.hpp"

namespace colour_lab::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
std::vector<std::string> names(const std::vector<T>& all) {
    std::vector<std::string> out;
    for (T t : all) out.push_back(to_string(t));
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(part);
    return out;
}

// ---- shared option groups ----

struct GraphSource {
    std::string in;
    std::string spec;
    std::optional<std::uint64_t> seed;

    void attach(CLI::App* app, bool required = true) {
        auto* a = app->add_option("--in", in, "graph file (graph6 or edge list)");
        auto* b = app->add_option("--graph", spec,
                                  "named graph: petersen, octahedron, complete:N, cycle:N, path:N, star:N, "
                                  "kbip:A,B, hypercube:D, gnp:N,P, regular:N,D");
        a->excludes(b);
        app->add_option("--seed", seed, "seed for random graphs");
        this->required = required;
    }

    bool given() const { return !in.empty() || !spec.empty(); }

    Graph load() const {
        if (!given()) {
            if (required) throw UsageError("--in or --graph is required");
            return {};
        }
        if (!in.empty()) return parse_graph(read_file(in));
        const auto colon = spec.find(':');
        const std::string name = spec.substr(0, colon);
        std::vector<std::string> args = colon == std::string::npos ? std::vector<std::string>{}
                                                                   : split(spec.substr(colon + 1), ',');
        auto arg = [&](std::size_t i) {
            if (i >= args.size()) throw UsageError("--graph " + spec + ": missing argument");
            try {
                return std::stod(args[i]);
            } catch (const std::exception&) {
                throw UsageError("--graph " + spec + ": bad argument '" + args[i] + "'");
            }
        };
        auto iarg = [&](std::size_t i) { return static_cast<int>(arg(i)); };
        if (name == "petersen") return petersen_graph();
        if (name == "octahedron") return octahedron();
        if (name == "complete") return complete_graph(iarg(0));
        if (name == "cycle") return cycle_graph(iarg(0));
        if (name == "path") return path_graph(iarg(0));
        if (name == "star") return star_graph(iarg(0));
        if (name == "kbip") return complete_bipartite(iarg(0), iarg(1));
        if (name == "hypercube") return hypercube(iarg(0));
        if (name == "gnp" || name == "regular") {
            if (!seed) throw UsageError("--seed is required for --graph " + name);
            std::mt19937_64 rng(*seed);
            return name == "gnp" ? random_gnp(iarg(0), arg(1), rng) : random_regular(iarg(0), iarg(1), rng);
        }
        throw UsageError("--graph: unknown graph '" + name + "'");
    }

    bool required = true;
};

struct SolverKnobs {
    int threads = 0;
    std::optional<std::uint64_t> nodes;
    std::optional<double> seconds;

    void attach(CLI::App* app) {
        app->add_option("--threads", threads, "worker threads (0: all available)")->check(CLI::NonNegativeNumber);
        app->add_option("--budget-nodes", nodes, "search-node budget")->check(CLI::PositiveNumber);
        app->add_option("--budget-secs", seconds, "wall-clock budget in seconds")->check(CLI::PositiveNumber);
    }

    Budget budget() const {
        Budget b = default_budget();
        if (nodes) b.nodes = *nodes;
        if (seconds) b.seconds = *seconds;
        return b;
    }
};

std::string format_graph(const Graph& g, const std::string& format, const DotStyle& style = {}) {
    if (format == "graph6") return encode_graph6(g) + "\n";
    if (format == "edge-list") return write_edge_list(g);
    if (format == "dot") return to_dot(g, style);
    throw UsageError("--format: unknown format '" + format + "'");
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Kind parse_kind(const std::string& s) { return kind_from_string(s); }

int status_code(Status s) {
    switch (s) {
        case Status::sat: return ok;
        case Status::unsat: return negative;
        case Status::budget_exceeded: return budget;
    }
    return usage;
}

// ---- subcommands ----

struct GadgetCmd {
    std::string id, shape, format = "graph6", out, terminals_out, scheme = "default", scheme_out;
    int k = 0, t = 0, d = 0, T = 0, n = 0;
    std::vector<int> scheme_args;

    void attach(CLI::App* app) {
        app->add_option("--id", id, "gadget id")->required()->check(CLI::IsMember(names(all_gadgets())));
        app->add_option("--k", k);
        app->add_option("--t", t);
        app->add_option("--d", d);
        app->add_option("--T", T);
        app->add_option("--n", n);
        app->add_option("--shape", shape);
        app->add_option("--format", format)->check(CLI::IsMember({"graph6", "edge-list", "dot", "json"}));
        app->add_option("--out", out, "graph output (default stdout)");
        app->add_option("--terminals-out", terminals_out, "terminal table (JSON)");
        app->add_option("--scheme", scheme, "reference colouring figure, or 'default'");
        app->add_option("--scheme-args", scheme_args, "swap arguments of the scheme");
        app->add_option("--scheme-out", scheme_out, "reference colouring output (JSON)");
    }

    int run(std::ostream& os) const {
        const GadgetId gid = gadget_from_string(id);
        const Gadget g = build(gid, {k, t, d, T, n, shape});
        std::optional<Colouring> col;
        if (!scheme_out.empty()) {
            const SchemeVariant v = scheme == "default" ? default_variant(gid, g.params) : SchemeVariant{scheme, scheme_args};
            col = colour_lab::scheme(g, v);
            write_file(scheme_out, dump(to_json(*col)));
        }
        if (!terminals_out.empty()) write_file(terminals_out, dump(terminals_json(g)));
        if (format == "json") {
            json j = terminals_json(g);
            j["graph6"] = encode_graph6(g.graph);
            emit(os, out, dump(j));
        } else {
            DotStyle style;
            for (const auto& [role, v] : g.terminals) style.terminals[role] = v;
            if (col) style.colours = col->colours;
            emit(os, out, format_graph(g.graph, format, style));
        }
        return ok;
    }
};

struct SolveCmd {
    GraphSource src;
    SolverKnobs knobs;
    std::string kind, engine = "search", out;
    int k = 0;
    bool canonical = false;

    void attach(CLI::App* app) {
        src.attach(app);
        knobs.attach(app);
        app->add_option("--kind", kind)->required()->check(CLI::IsMember({"proper", "star", "rs"}));
        app->add_option("--k", k)->required()->check(CLI::PositiveNumber);
        app->add_flag("--canonical", canonical, "quotient by colour permutations");
        app->add_option("--engine", engine)->check(CLI::IsMember({"search", "serial", "oracle"}));
        app->add_option("--out", out, "outcome JSON (default stdout)");
    }

    int run(std::ostream& os) const {
        const Graph g = src.load();
        const SolveParams p{parse_kind(kind), k, canonical, knobs.budget(), knobs.threads};
        SolveOutcome o;
        if (engine == "oracle")
            o = oracle_decide(g, p);
        else if (engine == "serial")
            o = decide_serial(g, p);
        else
            o = decide(g, p);
        emit(os, out, dump(to_json(o)));
        return status_code(o.status);
    }
};

struct ChromaticCmd {
    GraphSource src;
    SolverKnobs knobs;
    std::string kind, out;

    void attach(CLI::App* app) {
        src.attach(app);
        knobs.attach(app);
        app->add_option("--kind", kind)->required()->check(CLI::IsMember({"proper", "star", "rs"}));
        app->add_option("--out", out);
    }

    int run(std::ostream& os) const {
        const Graph g = src.load();
        SolveParams base;
        base.budget = knobs.budget();
        base.threads = knobs.threads;
        const ChromaticOutcome c = chromatic(g, parse_kind(kind), base);
        json j;
        j["kind"] = kind;
        j["value"] = c.value ? json(*c.value) : json(nullptr);
        j["colouring"] = c.colouring ? to_json(*c.colouring) : json(nullptr);
        j["nodes"] = c.nodes;
        j["seconds"] = c.seconds;
        emit(os, out, dump(j));
        return c.value ? ok : budget;
    }
};

struct EnumerateCmd {
    GraphSource src;
    SolverKnobs knobs;
    std::string kind;
    int k = 0;
    bool canonical = false, list = false;
    std::vector<VertexId> project;
    std::optional<std::uint64_t> max;

    void attach(CLI::App* app) {
        src.attach(app);
        knobs.attach(app);
        app->add_option("--kind", kind)->required()->check(CLI::IsMember({"proper", "star", "rs"}));
        app->add_option("--k", k)->required()->check(CLI::PositiveNumber);
        app->add_flag("--canonical", canonical);
        app->add_option("--project", project, "count distinct restrictions to these vertex ids");
        app->add_flag("--list", list, "print each colouring as a JSON line");
        app->add_option("--max", max, "stop after this many colourings")->check(CLI::PositiveNumber);
    }

    int run(std::ostream& os) const {
        const Graph g = src.load();
        for (VertexId v : project)
            if (v < 0 || v >= g.n()) throw UsageError("--project: vertex " + std::to_string(v) + " out of range");
        const SolveParams p{parse_kind(kind), k, canonical, knobs.budget(), knobs.threads};
        std::uint64_t seen = 0;
        const auto r = enumerate(
            g, p,
            [&](const Colouring& c) {
                if (list) os << to_json(c).dump() << "\n";
                return !max || ++seen < *max;
            },
            {project, {}});
        os << dump(to_json(r));
        return r.status == EnumStatus::budget_exceeded ? budget : ok;
    }
};

struct VerifyCmd {
    SolverKnobs knobs;
    std::string id, tier = "all", graph_in, report;
    int k = 0, t = 0;
    bool no_timing = false;

    void attach(CLI::App* app) {
        knobs.attach(app);
        std::vector<std::string> ids = names(all_lemmas());
        ids.push_back("all");
        app->add_option("--id", id, "lemma id, or 'all'")->required()->check(CLI::IsMember(ids));
        app->add_option("--tier", tier, "with --id all: run only this tier")
            ->check(CLI::IsMember({"fast", "standard", "extended", "all"}));
        app->add_option("--k", k);
        app->add_option("--t", t);
        app->add_option("--graph-in", graph_in, "instance for obs-distance2");
        app->add_option("--report", report, "report JSON (default stdout)");
        app->add_flag("--no-timing", no_timing, "omit seconds from reports");
    }

    int run(std::ostream& os) const {
        std::vector<LemmaId> todo;
        if (id == "all") {
            for (const auto& info : lemma_catalogue())
                if (tier == "all" || tier == to_string(info.tier)) todo.push_back(info.id);
        } else {
            todo.push_back(lemma_from_string(id));
        }
        LemmaParams lp{k, t, std::nullopt};
        if (!graph_in.empty()) lp.graph = parse_graph(read_file(graph_in));
        const VerifyOptions vo{knobs.budget(), knobs.threads};
        json all = json::array();
        bool refuted = false, exhausted = false;
        for (LemmaId l : todo) {
            const LemmaReport r = verify(l, lp, vo);
            refuted |= r.status == LemmaStatus::refuted || r.status == LemmaStatus::vacuous;
            exhausted |= r.status == LemmaStatus::budget_exceeded;
            all.push_back(to_json(r, !no_timing));
        }
        emit(os, report, dump(todo.size() == 1 && id != "all" ? all[0] : all));
        return refuted ? negative : exhausted ? budget : ok;
    }
};

struct ReductionInput {
    GraphSource src;
    std::string construction, formula;
    int k = 0, d = 0;
    bool no_strict = false;

    void attach(CLI::App* app) {
        app->add_option("--construction", construction)->required()->check(CLI::IsMember(names(all_constructions())));
        src.attach(app, false);
        app->add_option("--formula", formula, "formula JSON, or 'fig6'");
        app->add_option("--k", k);
        app->add_option("--d", d);
        app->add_flag("--no-strict", no_strict, "skip the input-class checks");
    }

    bool takes_formula() const {
        const ConstructionId c = construction_from_string(construction);
        return c == ConstructionId::c6 || c == ConstructionId::c7;
    }

    Reduction build() const {
        const ConstructionId c = construction_from_string(construction);
        const ReductionParams p{k, d, !no_strict};
        if (takes_formula()) {
            if (formula.empty()) throw UsageError("--formula is required for " + construction);
            if (src.given()) throw UsageError("--in/--graph: " + construction + " takes --formula");
            return build_reduction(c, load_formula(), p);
        }
        if (!formula.empty()) throw UsageError("--formula: " + construction + " takes a graph");
        if (!src.given()) throw UsageError("--in or --graph is required for " + construction);
        return build_reduction(c, src.load(), p);
    }

    Formula1in3 load_formula() const {
        if (formula == "fig6") return fig6_formula();
        return formula_from_json(parse_json(read_file(formula)));
    }
};

struct ReduceCmd {
    ReductionInput in;
    std::string out, format = "graph6", trace;

    void attach(CLI::App* app) {
        in.attach(app);
        app->add_option("--out", out, "output graph");
        app->add_option("--format", format)->check(CLI::IsMember({"graph6", "edge-list", "dot"}));
        app->add_option("--trace", trace, "trace JSON");
    }

    int run(std::ostream& os) const {
        const Reduction r = in.build();
        if (!out.empty()) write_file(out, format_graph(r.graph, format));
        if (!trace.empty()) write_file(trace, dump(to_json(r.trace)));
        const auto [kind, k] = output_problem(r.trace);
        json j;
        j["construction"] = in.construction;
        j["target"] = {{"kind", to_string(kind)}, {"k", k}};
        j["structure"] = to_json(structure_report(r.graph));
        j["gadgets"] = r.trace.gadgets.size();
        os << dump(j);
        return ok;
    }
};

struct WitnessCmd {
    std::string direction, trace, colouring, out;

    void attach(CLI::App* app) {
        app->add_option("--direction", direction)->required()->check(CLI::IsMember({"forward", "backward"}));
        app->add_option("--trace", trace, "trace JSON from reduce")->required();
        app->add_option("--colouring", colouring, "colouring JSON")->required();
        app->add_option("--out", out, "translated colouring JSON (default stdout)");
    }

    int run(std::ostream& os, std::ostream& err) const {
        const ReductionTrace t = trace_from_json(parse_json(read_file(trace)));
        const Colouring c = colouring_from_json(parse_json(read_file(colouring)));
        Colouring result;
        if (direction == "forward") {
            if (!input_witness_valid(t, c)) {
                err << "error: input witness is not valid for " << to_string(t.construction) << "\n";
                return negative;
            }
            result = witness_forward(t, c);
            const auto [kind, k] = output_problem(t);
            if (!is_valid(output_graph(t), result, kind)) {
                err << "error: translated colouring does not validate\n";
                return negative;
            }
        } else {
            try {
                result = witness_backward(t, c);
            } catch (const InvalidOutputColouring& e) {
                err << "error: " << e.what() << "\n";
                return negative;
            }
            if (!input_witness_valid(t, result)) {
                err << "error: recovered input witness does not validate\n";
                return negative;
            }
        }
        emit(os, out, dump(to_json(result)));
        return ok;
    }
};

struct RoundtripCmd {
    ReductionInput in;
    SolverKnobs knobs;

    void attach(CLI::App* app) {
        in.attach(app);
        knobs.attach(app);
    }

    int run(std::ostream& os) const {
        const Reduction r = in.build();
        SolveParams base;
        base.budget = knobs.budget();
        base.threads = knobs.threads;
        json j;
        j["construction"] = in.construction;
        j["output"] = {{"n", r.graph.n()}, {"m", r.graph.m()}};
        if (in.takes_formula()) {
            const auto sat = sat_1in3(*r.trace.formula);
            const auto [kind, k] = output_problem(r.trace);
            SolveParams p = base;
            p.kind = kind;
            p.k = k;
            const SolveOutcome o = decide(r.graph, p);
            j["formula_satisfiable"] = sat.has_value();
            j["output_colourable"] = to_string(o.status);
            if (o.status == Status::budget_exceeded) {
                os << dump(j);
                return budget;
            }
            const bool same = sat.has_value() == (o.status == Status::sat);
            j["equivalent"] = same;
            os << dump(j);
            return same ? ok : negative;
        }
        const SolveOutcome w = solve_input(r.trace, base);
        j["input_witness"] = to_string(w.status);
        if (w.status != Status::sat) {
            os << dump(j);
            return status_code(w.status);
        }
        const Colouring fwd = witness_forward(r.trace, *w.colouring);
        const auto [kind, k] = output_problem(r.trace);
        const bool fwd_ok = is_valid(r.graph, fwd, kind);
        const Colouring back = witness_backward(r.trace, fwd);
        const bool back_ok = input_witness_valid(r.trace, back);
        j["forward_valid"] = fwd_ok;
        j["backward_valid"] = back_ok;
        j["exact"] = back.colours == w.colouring->colours;
        os << dump(j);
        return fwd_ok && back_ok ? ok : negative;
    }
};

struct CatalogueCmd {
    std::string what = "all";

    void attach(CLI::App* app) {
        app->add_option("--what", what)->check(CLI::IsMember({"gadgets", "lemmas", "constructions", "all"}));
    }

    int run(std::ostream& os) const {
        json j;
        if (what == "gadgets" || what == "all") {
            json a = json::array();
            for (const auto& g : gadget_catalogue())
                a.push_back({{"id", to_string(g.id)},
                             {"params", g.params},
                             {"terminals", g.terminals},
                             {"kind", to_string(g.kind)},
                             {"source", g.source}});
            j["gadgets"] = a;
        }
        if (what == "lemmas" || what == "all") {
            json a = json::array();
            for (const auto& l : lemma_catalogue())
                a.push_back({{"id", to_string(l.id)},
                             {"binding", l.binding},
                             {"kind", to_string(l.kind)},
                             {"defaults", l.defaults},
                             {"assertion", l.assertion},
                             {"tier", to_string(l.tier)}});
            j["lemmas"] = a;
        }
        if (what == "constructions" || what == "all") j["constructions"] = names(all_constructions());
        os << dump(j);
        return ok;
    }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Star and restricted-star colouring gadgets, reductions and lemma checks", "colour-lab"};
    app.require_subcommand(1);

    GadgetCmd gadget;
    SolveCmd solve;
    ChromaticCmd chrom;
    EnumerateCmd enumerate_cmd;
    VerifyCmd verify_cmd;
    ReduceCmd reduce;
    WitnessCmd witness;
    RoundtripCmd roundtrip;
    CatalogueCmd catalogue;

    gadget.attach(app.add_subcommand("gadget", "build a gadget"));
    solve.attach(app.add_subcommand("solve", "decide k-colourability"));
    chrom.attach(app.add_subcommand("chromatic", "compute the chromatic number"));
    enumerate_cmd.attach(app.add_subcommand("enumerate", "count colourings"));
    verify_cmd.attach(app.add_subcommand("verify-lemma", "verify gadget lemmas by enumeration"));
    reduce.attach(app.add_subcommand("reduce", "run a construction"));
    witness.attach(app.add_subcommand("witness", "translate a witness through a trace"));
    roundtrip.attach(app.add_subcommand("roundtrip", "solve, translate forward and back"));
    catalogue.attach(app.add_subcommand("catalogue", "list gadgets, lemmas and constructions"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "gadget") return gadget.run(out);
        if (cmd == "solve") return solve.run(out);
        if (cmd == "chromatic") return chrom.run(out);
        if (cmd == "enumerate") return enumerate_cmd.run(out);
        if (cmd == "verify-lemma") return verify_cmd.run(out);
        if (cmd == "reduce") return reduce.run(out);
        if (cmd == "witness") return witness.run(out, err);
        if (cmd == "roundtrip") return roundtrip.run(out);
        if (cmd == "catalogue") return catalogue.run(out);
    } catch (const PreconditionViolated& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"colour-lab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace colour_lab::cli
