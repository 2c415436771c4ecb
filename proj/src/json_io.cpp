#include "colour_lab/json_io.hpp"

#include <algorithm>
#include <map>

#include "colour_lab/io.hpp"

namespace colour_lab {

namespace {

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw MalformedJson(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw MalformedJson(std::string("field '") + key + "': " + e.what());
    }
}

json params_json(const GadgetParams& p) {
    json j = json::object();
    if (p.k) j["k"] = p.k;
    if (p.t) j["t"] = p.t;
    if (p.d) j["d"] = p.d;
    if (p.T) j["T"] = p.T;
    if (p.n) j["n"] = p.n;
    if (!p.shape.empty()) j["shape"] = p.shape;
    return j;
}

GadgetParams params_from_json(const json& j) {
    GadgetParams p;
    p.k = j.value("k", 0);
    p.t = j.value("t", 0);
    p.d = j.value("d", 0);
    p.T = j.value("T", 0);
    p.n = j.value("n", 0);
    p.shape = j.value("shape", std::string{});
    return p;
}

template <class E>
E lookup(const std::string& s, std::initializer_list<E> all, const char* what) {
    for (E e : all)
        if (s == to_string(e)) return e;
    throw MalformedJson(std::string("unknown ") + what + " '" + s + "'");
}

}  // namespace

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedJson(e.what());
    }
}

json to_json(const Colouring& c) { return {{"k", c.k}, {"colours", c.colours}}; }

Colouring colouring_from_json(const json& j) {
    Colouring c{get<int>(j, "k"), get<std::vector<int>>(j, "colours")};
    if (c.k < 1) throw MalformedJson("k must be >= 1");
    return c;
}

json to_json(const PathWitness& w) { return {{"kind", to_string(w.kind)}, {"path", w.path}}; }

PathWitness witness_from_json(const json& j) {
    try {
        return {witness_kind_from_string(get<std::string>(j, "kind")), get<std::vector<VertexId>>(j, "path")};
    } catch (const std::invalid_argument& e) {
        throw MalformedJson(e.what());
    }
}

json to_json(const Formula1in3& b) {
    json clauses = json::array();
    for (const auto& c : b.clauses) clauses.push_back({b.vars[c[0]], b.vars[c[1]], b.vars[c[2]]});
    return {{"vars", b.vars}, {"clauses", clauses}};
}

Formula1in3 formula_from_json(const json& j) {
    Formula1in3 b;
    b.vars = get<std::vector<std::string>>(j, "vars");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < b.vars.size(); ++i)
        if (!index.emplace(b.vars[i], static_cast<int>(i)).second)
            throw MalformedJson("duplicate variable '" + b.vars[i] + "'");
    for (const auto& clause : get<std::vector<std::vector<std::string>>>(j, "clauses")) {
        if (clause.size() != 3) throw MalformedJson("clauses must have exactly 3 variables");
        std::array<int, 3> c{};
        for (int t = 0; t < 3; ++t) {
            auto it = index.find(clause[t]);
            if (it == index.end()) throw MalformedJson("unknown variable '" + clause[t] + "'");
            c[t] = it->second;
        }
        b.clauses.push_back(c);
    }
    try {
        check_formula(b);
    } catch (const std::invalid_argument& e) {
        throw MalformedJson(e.what());
    }
    return b;
}

json to_json(const ReductionTrace& t) {
    json j;
    j["construction"] = to_string(t.construction);
    j["params"] = {{"k", t.k}, {"d", t.d}};
    if (t.formula)
        j["formula"] = to_json(*t.formula);
    else
        j["input"] = encode_graph6(t.input);
    j["output"] = {{"n", t.output_n}, {"m", t.output_m}};
    json roles = json::object();
    for (std::size_t v = 0; v < t.roles.size(); ++v)
        roles[std::to_string(v)] = {{"tag", t.roles[v].tag}, {"ref", t.roles[v].ref}};
    j["roles"] = roles;
    json gadgets = json::array();
    for (const auto& g : t.gadgets)
        gadgets.push_back({{"id", to_string(g.id)}, {"params", params_json(g.params)}, {"label", g.label},
                           {"embed", g.embed}});
    j["gadgets"] = gadgets;
    json anchors = json::object();
    for (const auto& [name, v] : t.anchors) anchors[name] = v;
    j["anchors"] = anchors;
    return j;
}

ReductionTrace trace_from_json(const json& j) {
    ReductionTrace t;
    try {
        t.construction = construction_from_string(get<std::string>(j, "construction"));
        const json& p = j.at("params");
        t.k = get<int>(p, "k");
        t.d = get<int>(p, "d");
        if (j.contains("formula"))
            t.formula = formula_from_json(j.at("formula"));
        else
            t.input = decode_graph6(get<std::string>(j, "input"));
        const json& out = j.at("output");
        t.output_n = get<int>(out, "n");
        t.output_m = get<std::size_t>(out, "m");
        const json& roles = j.at("roles");
        t.roles.resize(t.output_n);
        std::vector<bool> seen(t.output_n, false);
        for (const auto& [key, r] : roles.items()) {
            const int v = std::stoi(key);
            if (v < 0 || v >= t.output_n || seen[v]) throw MalformedJson("bad role id " + key);
            seen[v] = true;
            t.roles[v] = {get<std::string>(r, "tag"), get<std::string>(r, "ref")};
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw MalformedJson("roles do not cover the output");
        for (const auto& g : j.at("gadgets"))
            t.gadgets.push_back({gadget_from_string(get<std::string>(g, "id")), params_from_json(g.at("params")),
                                 get<std::string>(g, "label"), get<std::vector<VertexId>>(g, "embed")});
        for (const auto& [name, v] : j.at("anchors").items()) t.anchors[name] = v.get<VertexId>();
    } catch (const json::exception& e) {
        throw MalformedJson(e.what());
    } catch (const std::invalid_argument& e) {
        throw MalformedJson(e.what());
    }
    return t;
}

json to_json(const SolveOutcome& o, bool timing) {
    json j;
    j["status"] = to_string(o.status);
    j["colouring"] = o.colouring ? to_json(*o.colouring) : json(nullptr);
    j["nodes"] = o.nodes;
    if (timing) j["seconds"] = o.seconds;
    return j;
}

json to_json(const EnumerateResult& r, bool timing) {
    json j;
    j["status"] = to_string(r.status);
    j["count"] = r.count;
    j["nodes"] = r.nodes;
    if (timing) j["seconds"] = r.seconds;
    return j;
}

json to_json(const LemmaReport& r, bool timing) {
    json j;
    j["lemma"] = to_string(r.lemma);
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["kind"] = to_string(r.kind);
    j["k"] = r.k;
    j["status"] = to_string(r.status);
    j["colourings_examined"] = r.colourings_examined;
    j["counterexample"] = r.counterexample ? to_json(*r.counterexample) : json(nullptr);
    j["mode"] = r.mode;
    j["nodes"] = r.nodes;
    if (timing) j["seconds"] = r.seconds;
    return j;
}

LemmaReport report_from_json(const json& j) {
    LemmaReport r{};
    try {
        r.lemma = lemma_from_string(get<std::string>(j, "lemma"));
        r.kind = kind_from_string(get<std::string>(j, "kind"));
    } catch (const std::invalid_argument& e) {
        throw MalformedJson(e.what());
    }
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
    r.k = get<int>(j, "k");
    r.status = lookup(get<std::string>(j, "status"),
                      {LemmaStatus::verified, LemmaStatus::refuted, LemmaStatus::budget_exceeded,
                       LemmaStatus::vacuous},
                      "status");
    r.colourings_examined = get<std::uint64_t>(j, "colourings_examined");
    if (!j.at("counterexample").is_null()) r.counterexample = colouring_from_json(j.at("counterexample"));
    r.mode = get<std::string>(j, "mode");
    r.nodes = get<std::uint64_t>(j, "nodes");
    r.seconds = j.value("seconds", 0.0);
    return r;
}

json terminals_json(const Gadget& g) {
    json terms = json::object();
    for (const auto& [role, v] : g.terminals) terms[role] = v;
    return {{"gadget", to_string(g.id)},
            {"params", params_json(g.params)},
            {"kind", to_string(g.kind)},
            {"k", g.k},
            {"n", g.graph.n()},
            {"m", g.graph.m()},
            {"terminals", terms}};
}

json to_json(const StructureReport& s) {
    return {{"n", s.n},
            {"m", s.m},
            {"max_degree", s.max_degree},
            {"regular", s.is_regular ? json(s.regular_degree) : json(nullptr)},
            {"bipartite", s.is_bipartite},
            {"triangle_free", s.is_triangle_free},
            {"girth", s.girth ? json(*s.girth) : json("acyclic")},
            {"connected", s.is_connected}};
}

}  // namespace colour_lab
