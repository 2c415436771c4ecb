#include "colour_lab/lemmas.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

namespace colour_lab {

namespace {

struct Entry {
    LemmaId id;
    const char* name;
    const char* binding;
    Kind kind;
    const char* defaults;
    const char* assertion;
    Tier tier;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {LemmaId::star_subgraph_bicolour, "star-subgraph-bicolour", "star-component shape=subgraph", Kind::star,
         "k=7", "no (k-1)-star colouring; every k-star colouring has |f(U+W)|<=2 or |f(X+Y)|<=2", Tier::extended},
        {LemmaId::star_component_bicolour, "star-component-bicolour", "star-component", Kind::star, "k=7",
         "|f(U+W)|<=2", Tier::extended},
        {LemmaId::star_chain_bicolour, "star-chain-bicolour", "star-chain", Kind::star, "k=7 t=2",
         "terminals and their gadget neighbours use at most 2 colours", Tier::extended},
        {LemmaId::petersen_deg2_equal, "petersen-deg2-equal", "petersen-minus", Kind::star, "k=4",
         "f(w1)=f(w4)=f(v5)", Tier::fast},
        {LemmaId::grotzsch_deg2_distinct, "grotzsch-deg2-distinct", "grotzsch-minus", Kind::star, "k=5",
         "w1..w5 pairwise distinct", Tier::fast},
        {LemmaId::two_in_two_out_pattern, "two-in-two-out-pattern", "two-in-two-out", Kind::star, "k=5",
         "f(y1)=f(y2)=f(z1*)=f(z2*)=c1, f(y1*)=f(y2*)=f(z1)=f(z2)=c2, c1!=c2; 3-paths through pendant edges "
         "tricoloured",
         Tier::standard},
        {LemmaId::not_equal_terminals, "not-equal-terminals", "not-equal", Kind::star, "k=5",
         "f(y)!=f(z); 3-paths with a terminal endpoint tricoloured", Tier::standard},
        {LemmaId::c3_terminals_equal, "c3-terminals-equal", "c3-tree shape=linear T=2", Kind::star, "k=5",
         "all terminals share one colour", Tier::extended},
        {LemmaId::rs_component_zero, "rs-component-zero", "rs-component", Kind::rs, "k=4",
         "no 3-rs colouring; f(u3)=0 or f(u5)=0; zero class is {u3,u8} or {u5,u6}", Tier::fast},
        {LemmaId::rs_forcing_h_zero, "rs-forcing-H-zero", "rs-forcing-H", Kind::rs, "k=4", "f(u5'')=0",
         Tier::standard},
        {LemmaId::rs_forcing_full_zero, "rs-forcing-full-zero", "rs-forcing", Kind::rs, "k=4", "f(u5'')=0",
         Tier::extended},
        {LemmaId::rs_blocking_nonzero, "rs-blocking-nonzero", "rs-blocking", Kind::rs, "k=5",
         "f(u2),f(u3),f(v2),f(v3) all non-zero", Tier::standard},
        {LemmaId::obs_distance2, "obs-distance2", "any graph (default rs-component)", Kind::rs, "k=4",
         "no two 0-coloured vertices within distance 2", Tier::fast},
    };
    return table;
}

const Entry& entry(LemmaId id) {
    for (const auto& e : entries())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown lemma");
}

using Assertion = std::function<bool(const Colouring&)>;

struct Binding {
    Graph g;
    Kind kind;
    int k;
    bool canonical;
    std::vector<VertexId> project;
    std::vector<VertexId> priority;
    Assertion holds;
    // Checked before enumeration: a palette that must admit no colouring.
    std::optional<int> unsat_palette;
};

std::vector<VertexId> ids(const Graph& g, const std::vector<std::string>& names) {
    std::vector<VertexId> out;
    for (const auto& n : names) out.push_back(g.at(n));
    return out;
}

std::string s(int i) { return std::to_string(i); }

Assertion at_most_two(std::vector<VertexId> vs) {
    return [vs](const Colouring& c) {
        std::set<int> seen;
        for (VertexId v : vs) seen.insert(c.colours[v]);
        return seen.size() <= 2;
    };
}

Assertion all_equal(std::vector<VertexId> vs) {
    return [vs](const Colouring& c) {
        for (VertexId v : vs)
            if (c.colours[v] != c.colours[vs[0]]) return false;
        return true;
    };
}

// Every path a-b-c starting at one of `ends` is tricoloured.
Assertion paths_tricoloured(const Graph& g, std::vector<VertexId> ends) {
    std::vector<std::array<VertexId, 3>> paths;
    for (VertexId a : ends)
        for (VertexId b : g.neighbours(a))
            for (VertexId c : g.neighbours(b))
                if (c != a) paths.push_back({a, b, c});
    return [paths](const Colouring& f) {
        for (const auto& [a, b, c] : paths)
            if (f.colours[a] == f.colours[c]) return false;  // proper colourings already separate neighbours
        return true;
    };
}

std::vector<VertexId> ball2(const Graph& g, const std::vector<VertexId>& centres) {
    std::vector<VertexId> out;
    std::set<VertexId> seen;
    auto add = [&](VertexId v) {
        if (seen.insert(v).second) out.push_back(v);
    };
    for (VertexId a : centres) add(a);
    for (VertexId a : centres)
        for (VertexId b : g.neighbours(a)) add(b);
    for (VertexId a : centres)
        for (VertexId b : g.neighbours(a))
            for (VertexId c : g.neighbours(b)) add(c);
    return out;
}

Binding bind(LemmaId id, const LemmaParams& p, std::vector<std::pair<std::string, std::string>>& params) {
    auto gadget = [&](GadgetId gid, GadgetParams gp) {
        Gadget gd = build(gid, gp);
        return Binding{gd.graph, gd.kind, gd.k, gd.kind != Kind::rs, {}, {}, nullptr, std::nullopt};
    };
    auto need_k = [&](int lo, int def) {
        const int k = p.k ? p.k : def;
        if (k < lo) throw ParamOutOfRange("k must be >= " + s(lo));
        params.emplace_back("k", s(k));
        return k;
    };
    switch (id) {
        case LemmaId::star_subgraph_bicolour: {
            const int k = need_k(7, 7);
            Binding b = gadget(GadgetId::star_component, {.k = k, .shape = "subgraph"});
            std::vector<std::string> uw, xy;
            for (int i = 1; i <= k - 4; ++i) uw.push_back("u" + s(i)), xy.push_back("y" + s(i));
            for (int i = 1; i <= k - 2; ++i) uw.push_back("w" + s(i)), xy.push_back("x" + s(i));
            auto left = at_most_two(ids(b.g, uw));
            auto right = at_most_two(ids(b.g, xy));
            b.holds = [left, right](const Colouring& c) { return left(c) || right(c); };
            b.unsat_palette = k - 1;
            return b;
        }
        case LemmaId::star_component_bicolour: {
            const int k = need_k(7, 7);
            Binding b = gadget(GadgetId::star_component, {.k = k});
            std::vector<std::string> uw;
            for (int i = 1; i <= k - 4; ++i) uw.push_back("u" + s(i));
            for (int i = 1; i <= k - 2; ++i) uw.push_back("w" + s(i));
            b.project = ids(b.g, uw);
            b.holds = at_most_two(b.project);
            return b;
        }
        case LemmaId::star_chain_bicolour: {
            const int k = need_k(7, 7);
            const int t = p.t ? p.t : 2;
            if (t < 1) throw ParamOutOfRange("t must be >= 1");
            params.emplace_back("t", s(t));
            Gadget gd = build(GadgetId::star_chain, {.k = k, .t = t});
            Binding b{gd.graph, gd.kind, gd.k, true, {}, {}, nullptr, std::nullopt};
            std::set<VertexId> seen;
            for (VertexId v : gd.terminal_ids()) {
                if (seen.insert(v).second) b.project.push_back(v);
                for (VertexId w : gd.graph.neighbours(v))
                    if (seen.insert(w).second) b.project.push_back(w);
            }
            b.holds = at_most_two(b.project);
            return b;
        }
        case LemmaId::petersen_deg2_equal: {
            Binding b = gadget(GadgetId::petersen_minus, {});
            b.holds = all_equal(ids(b.g, {"w1", "w4", "v5"}));
            return b;
        }
        case LemmaId::grotzsch_deg2_distinct: {
            Binding b = gadget(GadgetId::grotzsch_minus, {});
            const auto ws = ids(b.g, {"w1", "w2", "w3", "w4", "w5"});
            b.holds = [ws](const Colouring& c) {
                std::set<int> seen;
                for (VertexId v : ws) seen.insert(c.colours[v]);
                return seen.size() == ws.size();
            };
            return b;
        }
        case LemmaId::two_in_two_out_pattern: {
            Binding b = gadget(GadgetId::two_in_two_out, {});
            const auto one = ids(b.g, {"y1", "y2", "z1*", "z2*"});
            const auto two = ids(b.g, {"y1*", "y2*", "z1", "z2"});
            const auto pendants = ids(b.g, {"y1*", "y2*", "z1*", "z2*"});
            auto paths = paths_tricoloured(b.g, pendants);
            b.project = ball2(b.g, pendants);
            b.holds = [one, two, paths](const Colouring& c) {
                const int c1 = c.colours[one[0]], c2 = c.colours[two[0]];
                if (c1 == c2) return false;
                for (VertexId v : one)
                    if (c.colours[v] != c1) return false;
                for (VertexId v : two)
                    if (c.colours[v] != c2) return false;
                return paths(c);
            };
            return b;
        }
        case LemmaId::not_equal_terminals: {
            Binding b = gadget(GadgetId::not_equal, {});
            const VertexId y = b.g.at("y"), z = b.g.at("z");
            auto paths = paths_tricoloured(b.g, {y, z});
            b.project = ball2(b.g, {y, z});
            b.holds = [y, z, paths](const Colouring& c) { return c.colours[y] != c.colours[z] && paths(c); };
            return b;
        }
        case LemmaId::c3_terminals_equal: {
            Gadget gd = build(GadgetId::c3_tree, {.T = 2, .shape = "linear"});
            params.emplace_back("T", "2");
            params.emplace_back("shape", "linear");
            Binding b{gd.graph, gd.kind, gd.k, true, gd.terminal_ids(), {}, nullptr, std::nullopt};
            b.holds = all_equal(b.project);
            return b;
        }
        case LemmaId::rs_component_zero: {
            Binding b = gadget(GadgetId::rs_component, {});
            const VertexId u3 = b.g.at("u3"), u5 = b.g.at("u5");
            const std::set<VertexId> a{u3, b.g.at("u8")}, c{u5, b.g.at("u6")};
            b.holds = [u3, u5, a, c](const Colouring& f) {
                if (!(f.colours[u3] == 0 || f.colours[u5] == 0)) return false;
                std::set<VertexId> zero;
                for (VertexId v = 0; v < static_cast<VertexId>(f.colours.size()); ++v)
                    if (f.colours[v] == 0) zero.insert(v);
                return zero == a || zero == c;
            };
            b.unsat_palette = 3;
            return b;
        }
        case LemmaId::rs_forcing_h_zero:
        case LemmaId::rs_forcing_full_zero: {
            const bool full = id == LemmaId::rs_forcing_full_zero;
            Gadget gd = build(full ? GadgetId::rs_forcing : GadgetId::rs_forcing_h, {});
            const VertexId t = gd.terminal("u5''");
            Binding b{gd.graph, gd.kind, gd.k, false, {t}, {}, nullptr, std::nullopt};
            if (full) {
                const Graph h = build(GadgetId::rs_forcing_h, {}).graph;
                for (VertexId v = 0; v < h.n(); ++v)
                    if (v != t) b.priority.push_back(gd.graph.at(h.name(v)));
            }
            b.holds = [t](const Colouring& c) { return c.colours[t] == 0; };
            return b;
        }
        case LemmaId::rs_blocking_nonzero: {
            const int k = need_k(5, 5);
            Binding b = gadget(GadgetId::rs_blocking, {.k = k});
            b.project = ids(b.g, {"u3", "u2", "v3", "v2"});
            const auto vs = b.project;
            b.holds = [vs](const Colouring& c) {
                for (VertexId v : vs)
                    if (c.colours[v] == 0) return false;
                return true;
            };
            return b;
        }
        case LemmaId::obs_distance2: {
            const int k = need_k(1, 4);
            Binding b = gadget(GadgetId::rs_component, {});
            if (p.graph) {
                b.g = *p.graph;
                params.emplace_back("graph", "custom");
            } else {
                params.emplace_back("graph", "rs-component");
            }
            b.k = k;
            const Graph g = b.g;
            b.holds = [g](const Colouring& c) { return zero_pair_scan(g, c).empty(); };
            return b;
        }
    }
    throw std::invalid_argument("unknown lemma");
}

}  // namespace

const char* to_string(LemmaId id) { return entry(id).name; }

LemmaId lemma_from_string(const std::string& s) {
    for (const auto& e : entries())
        if (s == e.name) return e.id;
    throw std::invalid_argument("unknown lemma '" + s + "'");
}

const std::vector<LemmaId>& all_lemmas() {
    static const std::vector<LemmaId> ids = [] {
        std::vector<LemmaId> out;
        for (const auto& e : entries()) out.push_back(e.id);
        return out;
    }();
    return ids;
}

const char* to_string(Tier t) {
    switch (t) {
        case Tier::fast: return "fast";
        case Tier::standard: return "standard";
        case Tier::extended: return "extended";
    }
    return "?";
}

const char* to_string(LemmaStatus s) {
    switch (s) {
        case LemmaStatus::verified: return "verified";
        case LemmaStatus::refuted: return "refuted";
        case LemmaStatus::budget_exceeded: return "budget-exceeded";
        case LemmaStatus::vacuous: return "vacuous";
    }
    return "?";
}

std::vector<LemmaInfo> lemma_catalogue() {
    std::vector<LemmaInfo> out;
    for (const auto& e : entries()) out.push_back({e.id, e.binding, e.kind, e.defaults, e.assertion, e.tier});
    return out;
}

LemmaReport verify(LemmaId id, const LemmaParams& p, const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    LemmaReport r{id, {}, Kind::proper};
    Binding b = bind(id, p, r.params);
    r.kind = b.kind;
    r.k = b.k;
    r.mode = std::string(b.canonical ? "canonical" : "plain") + (b.project.empty() ? "" : "/projection");
    auto finish = [&] {
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    };

    SolveParams sp{b.kind, b.k, b.canonical, opts.budget, opts.threads};
    if (b.unsat_palette) {
        SolveParams lower = sp;
        lower.k = *b.unsat_palette;
        const SolveOutcome o = decide(b.g, lower);
        r.nodes += o.nodes;
        if (o.status == Status::budget_exceeded) {
            r.status = LemmaStatus::budget_exceeded;
            return finish();
        }
        if (o.status == Status::sat) {
            r.status = LemmaStatus::refuted;
            r.counterexample = o.colouring;
            return finish();
        }
    }

    const EnumerateOptions eo{b.project, b.priority};
    bool violated = false;
    const auto res = enumerate(
        b.g, sp,
        [&](const Colouring& c) {
            if (b.holds(c)) return true;
            violated = true;
            return false;
        },
        eo);
    r.nodes += res.nodes;
    r.colourings_examined = res.count;
    if (violated) {
        // Serial rerun so the reported counterexample does not depend on scheduling.
        std::optional<Colouring> first;
        enumerate_serial(
            b.g, sp,
            [&](const Colouring& c) {
                if (b.holds(c)) return true;
                first = c;
                return false;
            },
            eo);
        r.status = LemmaStatus::refuted;
        r.counterexample = first;
    } else if (res.status == EnumStatus::budget_exceeded) {
        r.status = LemmaStatus::budget_exceeded;
    } else {
        r.status = res.count ? LemmaStatus::verified : LemmaStatus::vacuous;
    }
    return finish();
}

}  // namespace colour_lab
