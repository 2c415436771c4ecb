#include "colour_lab/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace colour_lab {

namespace {

std::string s(int i) { return std::to_string(i); }

// Builds an output graph from handles that stay valid across identifications.
class Assembler {
public:
    int add_vertex(const std::string& name, Role role) {
        cur_.push_back(g_.add_vertex(name));
        roles_.push_back(std::move(role));
        return static_cast<int>(cur_.size()) - 1;
    }

    void add_edge(int a, int b) { g_.add_edge(cur_[a], cur_[b]); }

    // Copies the gadget in; returns one handle per gadget vertex.
    std::vector<int> add_gadget(const Gadget& gd, const std::string& label) {
        std::vector<bool> is_terminal(gd.graph.n(), false);
        std::vector<std::string> term_role(gd.graph.n());
        for (const auto& [role, v] : gd.terminals) {
            is_terminal[v] = true;
            term_role[v] = role;
        }
        std::vector<int> handles;
        for (VertexId v = 0; v < gd.graph.n(); ++v) {
            Role r = is_terminal[v] ? Role{"terminal", label + "." + term_role[v]} : Role{"gadget", label};
            handles.push_back(add_vertex(label + "/" + gd.graph.name(v), r));
        }
        for (auto [u, v] : gd.graph.edges()) add_edge(handles[u], handles[v]);
        instances_.push_back({gd.id, gd.params, label, {}});
        instance_handles_.push_back(handles);
        return handles;
    }

    // The later handle's vertex merges into the earlier one's.
    void identify(int a, int b) {
        VertexId u = cur_[a], v = cur_[b];
        g_ = identify_vertices(g_, u, v);
        const VertexId lo = std::min(u, v), hi = std::max(u, v);
        for (auto& c : cur_) {
            if (c == hi) c = lo;
            else if (c > hi) --c;
        }
    }

    VertexId id(int h) const { return cur_[h]; }

    Reduction finish(ReductionTrace t) {
        t.output_n = g_.n();
        t.output_m = g_.m();
        t.roles.assign(g_.n(), Role{});
        std::vector<bool> set(g_.n(), false);
        for (std::size_t h = 0; h < cur_.size(); ++h)
            if (!set[cur_[h]]) {
                set[cur_[h]] = true;
                t.roles[cur_[h]] = roles_[h];
            }
        for (std::size_t i = 0; i < instances_.size(); ++i) {
            GadgetInstance gi = instances_[i];
            for (int h : instance_handles_[i]) gi.embed.push_back(cur_[h]);
            t.gadgets.push_back(std::move(gi));
        }
        for (auto& [name, h] : anchor_handles_) t.anchors[name] = cur_[h];
        return Reduction{std::move(g_), std::move(t)};
    }

    void anchor(const std::string& name, int h) { anchor_handles_[name] = h; }

private:
    Graph g_;
    std::vector<VertexId> cur_;
    std::vector<Role> roles_;
    std::vector<GadgetInstance> instances_;
    std::vector<std::vector<int>> instance_handles_;
    std::map<std::string, int> anchor_handles_;
};

void precondition(bool ok, const std::string& check, const std::string& detail) {
    if (!ok) throw PreconditionViolated(check, detail);
}

void param(bool ok, const std::string& what) {
    if (!ok) throw ParamOutOfRange(what);
}

bool is_regular(const Graph& g, int d) {
    for (VertexId v = 0; v < g.n(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

std::vector<int> copy_graph(Assembler& a, const Graph& g, const std::string& tag, const std::string& prefix) {
    std::vector<int> h;
    for (VertexId v = 0; v < g.n(); ++v) h.push_back(a.add_vertex(prefix + s(v), Role{tag, prefix + s(v)}));
    for (auto [u, v] : g.edges()) a.add_edge(h[u], h[v]);
    return h;
}

// Port p (1-based) of vertex v faces its p-th smallest neighbour.
int port(const Graph& g, VertexId v, VertexId towards) {
    const auto& nb = g.neighbours(v);
    return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), towards) - nb.begin()) + 1;
}

Reduction build_c1(const Graph& g, const ReductionParams& p) {
    const int k = p.k;
    param(k >= 7, "c1 needs k >= 7");
    if (p.strict) precondition(is_regular(g, k - 2), "regular", "c1 input must be (k-2)-regular");
    const int n = g.n();
    const int q = std::max(1, (3 * n + (k - 7)) / (k - 6));
    Assembler a;
    Gadget chain = build(GadgetId::star_chain, {.k = k, .t = q});
    auto ch = a.add_gadget(chain, "chain");
    // Terminal j of vertex i is chain terminal 3i+j; anchors record it and its chain neighbour.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 3; ++j) {
            VertexId t = chain.terminals[3 * i + j].second;
            a.anchor("v" + s(i) + ".t" + s(j), ch[t]);
            a.anchor("v" + s(i) + ".t" + s(j) + ".nbr", ch[chain.graph.neighbours(t)[0]]);
        }
    const auto edges = g.edges();
    for (std::size_t l = 0; l < edges.size(); ++l) {
        auto [u, v] = edges[l];
        int e = a.add_vertex("e" + s(static_cast<int>(l)),
                             Role{"input-edge", "e" + s(static_cast<int>(l)) + "=" + s(u) + "-" + s(v)});
        a.anchor("e" + s(static_cast<int>(l)), e);
        for (VertexId x : {u, v})
            for (int j = 0; j < 3; ++j) a.add_edge(e, ch[chain.terminals[3 * x + j].second]);
    }
    return a.finish({ConstructionId::c1, k, 0, g});
}

Reduction build_c2(const Graph& g, const ReductionParams& p) {
    if (p.strict) precondition(is_regular(g, 4), "regular", "c2 input must be 4-regular");
    const int n = g.n();
    Assembler a;
    Gadget vg = build(GadgetId::c2_vertex);
    std::vector<std::vector<int>> term(n);
    for (int i = 0; i < n; ++i) {
        auto h = a.add_gadget(vg, "V" + s(i));
        for (int j = 0; j <= 4; ++j) {
            term[i].push_back(h[vg.terminal("v" + s(j))]);
            a.anchor("v_{" + s(i) + "," + s(j) + "}", term[i].back());
        }
    }
    Gadget chain = build(GadgetId::c2_chain, {.n = std::max(n, 1)});
    auto ch = a.add_gadget(chain, "chain");
    for (int i = 0; i < n; ++i) {
        int star = ch[chain.terminal("v*_" + s(i + 1))];
        a.anchor("v*_" + s(i), star);
        a.add_edge(term[i][0], star);
    }
    for (auto [u, v] : g.edges()) a.add_edge(term[u][port(g, u, v)], term[v][port(g, v, u)]);
    return a.finish({ConstructionId::c2, 4, 0, g});
}

Reduction build_c3(const Graph& g, const ReductionParams& p) {
    if (p.strict) precondition(is_regular(g, 4), "regular", "c3 input must be 4-regular");
    const int n = g.n();
    const int L = (n + 2) / 2;
    Assembler a;
    Gadget vg = build(GadgetId::c3_tree, {.T = 3});
    std::vector<std::vector<int>> term(n);
    for (int i = 0; i < n; ++i) {
        auto h = a.add_gadget(vg, "V" + s(i));
        for (int j = 0; j < 6; ++j) {
            term[i].push_back(h[vg.terminal("t" + s(j))]);
            a.anchor("v_{" + s(i) + "," + s(j) + "}", term[i].back());
        }
    }
    Gadget cg = build(GadgetId::c3_tree, {.T = L});
    std::vector<std::vector<int>> chain_term(2);
    for (int c = 0; c < 2; ++c) {
        auto h = a.add_gadget(cg, "chain" + s(c + 1));
        for (const auto& [role, v] : cg.terminals) chain_term[c].push_back(h[v]);
        a.anchor("x_{1," + s(c + 1) + "}", chain_term[c][0]);
        for (int i = 0; i < n; ++i) a.anchor("v*_{" + s(i) + "," + s(c + 1) + "}", chain_term[c][i + 1]);
    }
    Gadget ne = build(GadgetId::not_equal);
    int count = 0;
    auto not_equal = [&](int y_side, int z_side) {
        auto h = a.add_gadget(ne, "NE" + s(count++));
        a.identify(y_side, h[ne.terminal("y")]);
        a.identify(z_side, h[ne.terminal("z")]);
    };
    for (auto [u, v] : g.edges()) not_equal(term[u][port(g, u, v)], term[v][port(g, v, u)]);
    for (int i = 0; i < n; ++i) {
        not_equal(term[i][0], chain_term[0][i + 1]);
        not_equal(term[i][5], chain_term[1][i + 1]);
    }
    not_equal(chain_term[0][0], chain_term[1][0]);
    Reduction r = a.finish({ConstructionId::c3, 5, 0, g});

    const long B = 6L * n + static_cast<long>(g.m()) + static_cast<long>(L) * (L + 1) + 2L * n + 1;
    if (r.graph.n() > 26 * B + 16L * n + 8 || static_cast<long>(r.graph.m()) > 46 * B + 32L * n + 12)
        throw std::logic_error("c3 output exceeds its size bound");
    return r;
}

// Two copies of g joined by fillers at each vertex of degree below d.
Reduction build_regularizer(ConstructionId cid, const Graph& g, const ReductionParams& p) {
    const bool rs = cid == ConstructionId::c910;
    const int k = p.k, d = p.d;
    param(k >= (rs ? 4 : 3), rs ? "c910 needs k >= 4" : "c45 needs k >= 3");
    param(d >= 1 && d <= k - 1, "need 1 <= d <= k-1");
    precondition(g.max_degree() <= d, "max-degree", "input max degree exceeds d");
    Assembler a;
    auto c1 = copy_graph(a, g, "copy", "1:");
    auto c2 = copy_graph(a, g, "copy", "2:");
    for (VertexId v = 0; v < g.n(); ++v) {
        a.anchor("1:" + s(v), c1[v]);
        a.anchor("2:" + s(v), c2[v]);
    }
    Gadget f = build(rs ? GadgetId::rs_filler : GadgetId::star_filler, {.k = k, .d = d});
    for (VertexId v = 0; v < g.n(); ++v)
        for (int i = 0; i < d - g.degree(v); ++i) {
            auto h = a.add_gadget(f, "F" + s(v) + "." + s(i));
            a.identify(c1[v], h[f.terminal("v1")]);
            a.identify(c2[v], h[f.terminal("v2")]);
        }
    return a.finish({cid, k, d, g});
}

Reduction build_c8(const Graph& g, const ReductionParams& p) {
    const int k = p.k;
    param(k >= 5, "c8 needs k >= 5");
    if (p.strict) {
        precondition(structure_report(g).is_triangle_free, "triangle-free", "c8 input must be triangle-free");
        precondition(g.max_degree() <= k - 2, "max-degree", "c8 input max degree must be at most k-2");
    }
    Assembler a;
    auto in = copy_graph(a, g, "input-vertex", "v");
    for (VertexId v = 0; v < g.n(); ++v) a.anchor("v" + s(v), in[v]);
    Gadget bg = build(GadgetId::rs_blocking, {.k = k});
    for (VertexId w = 0; w < g.n(); ++w)
        for (int i = 0; i < k - 1 - g.degree(w); ++i) {
            auto h = a.add_gadget(bg, "B" + s(w) + "." + s(i));
            a.identify(in[w], h[bg.terminal("u3")]);
        }
    return a.finish({ConstructionId::c8, k, 0, g});
}

void check_cubic_formula(const Formula1in3& b) {
    check_formula(b);
    Graph gb = formula_graph(b);
    precondition(is_regular(gb, 3), "formula-graph", "the graph of the formula must be 3-regular");
}

Reduction build_c6(const Formula1in3& b, const ReductionParams& p) {
    if (p.strict) check_cubic_formula(b);
    else check_formula(b);
    // Before subdivision.
    Graph h;
    std::vector<Role> roles;
    for (const auto& x : b.vars) {
        h.add_vertex(x);
        roles.push_back({"input-variable", x});
    }
    for (std::size_t j = 0; j < b.clauses.size(); ++j) {
        auto vars = b.clauses[j];
        std::sort(vars.begin(), vars.end());
        VertexId first = h.n();
        for (int t = 0; t < 3; ++t) {
            std::string name = "c_{" + s(static_cast<int>(j)) + "," + s(t + 1) + "}";
            VertexId c = h.add_vertex(name);
            roles.push_back({"clause-vertex", name});
            h.add_edge(c, vars[t]);
        }
        h.add_edge(first, first + 1);
        h.add_edge(first + 1, first + 2);
        h.add_edge(first, first + 2);
    }
    Graph out = subdivide_all_edges(h);
    for (VertexId v = h.n(); v < out.n(); ++v) roles.push_back({"subdivision", out.name(v)});
    ReductionTrace t{ConstructionId::c6, 3, 0, Graph{}, b, out.n(), out.m(), roles};
    for (std::size_t i = 0; i < b.vars.size(); ++i) t.anchors[b.vars[i]] = static_cast<VertexId>(i);
    return Reduction{std::move(out), std::move(t)};
}

Reduction build_c7(const Formula1in3& b, const ReductionParams& p) {
    Reduction base = build_c6(b, p);
    Assembler a;
    const Graph& g = base.graph;
    std::vector<int> h;
    for (VertexId v = 0; v < g.n(); ++v) h.push_back(a.add_vertex(g.name(v), base.trace.roles[v]));
    for (auto [u, v] : g.edges()) a.add_edge(h[u], h[v]);
    for (const auto& [name, v] : base.trace.anchors) a.anchor(name, h[v]);
    Gadget fg = build(GadgetId::rs_forcing);
    for (VertexId v = 0; v < g.n(); ++v)
        if (g.degree(v) == 2) {
            auto gh = a.add_gadget(fg, "F" + s(v));
            a.add_edge(h[v], gh[fg.terminal("u5''")]);
        }
    ReductionTrace t{ConstructionId::c7, 4, 0, Graph{}, b};
    return a.finish(std::move(t));
}

Colouring gadget_scheme(const GadgetInstance& gi, const SchemeVariant& v) {
    return scheme(build(gi.id, gi.params), v);
}

// Writes a gadget colouring through its embedding, checking agreement on shared vertices.
void paint(std::vector<int>& out, const GadgetInstance& gi, const Colouring& c) {
    for (std::size_t i = 0; i < gi.embed.size(); ++i) {
        int& slot = out[gi.embed[i]];
        if (slot >= 0 && slot != c.colours[i])
            throw std::logic_error("gadget " + gi.label + " disagrees with a shared vertex");
        slot = c.colours[i];
    }
}

void require_witness(const Graph& g, const Colouring& w, Kind kind, int k, const std::string& what) {
    if (w.k > k) throw std::invalid_argument(what + " uses a palette larger than " + s(k));
    Colouring c{k, w.colours};
    if (auto bad = validate(g, c, kind)) throw std::invalid_argument(what + " is not valid");
}

Colouring finish_colouring(std::vector<int> col, int k) {
    for (int c : col)
        if (c < 0) throw std::logic_error("witness translation left a vertex uncoloured");
    return Colouring{k, std::move(col)};
}

// Permutation of Z_k sending the listed colours to 0, 1, ... and the rest ascending.
std::vector<int> normalise(int k, const std::vector<int>& first) {
    std::vector<int> p(k, -1);
    int next = 0;
    for (int c : first) {
        if (p[c] >= 0) throw InvalidOutputColouring("colours expected distinct coincide");
        p[c] = next++;
    }
    for (int c = 0; c < k; ++c)
        if (p[c] < 0) p[c] = next++;
    return p;
}

const GadgetInstance& instance(const ReductionTrace& t, const std::string& label) {
    for (const auto& gi : t.gadgets)
        if (gi.label == label) return gi;
    throw std::logic_error("trace has no gadget " + label);
}

// Fillers at v in order: label F<v>.<i>.
std::vector<const GadgetInstance*> fillers_at(const ReductionTrace& t, VertexId v) {
    std::vector<const GadgetInstance*> out;
    const std::string prefix = "F" + s(v) + ".";
    for (const auto& gi : t.gadgets)
        if (gi.label.rfind(prefix, 0) == 0) out.push_back(&gi);
    return out;
}

}  // namespace

PreconditionViolated::PreconditionViolated(const std::string& c, const std::string& detail)
    : std::invalid_argument("precondition " + c + " failed: " + detail), check(c) {}

const char* to_string(ConstructionId id) {
    switch (id) {
        case ConstructionId::c1: return "c1-edge-to-star";
        case ConstructionId::c2: return "c2-3col-to-4star";
        case ConstructionId::c3: return "c3-3col-to-5star";
        case ConstructionId::c45: return "c45-star-regularize";
        case ConstructionId::c6: return "c6-1in3-to-3rs";
        case ConstructionId::c7: return "c7-1in3-to-4rs";
        case ConstructionId::c8: return "c8-rs-lift";
        case ConstructionId::c910: return "c910-rs-regularize";
    }
    return "?";
}

const std::vector<ConstructionId>& all_constructions() {
    static const std::vector<ConstructionId> ids = {ConstructionId::c1,  ConstructionId::c2, ConstructionId::c3,
                                                    ConstructionId::c45, ConstructionId::c6, ConstructionId::c7,
                                                    ConstructionId::c8,  ConstructionId::c910};
    return ids;
}

ConstructionId construction_from_string(const std::string& name) {
    for (ConstructionId id : all_constructions())
        if (name == to_string(id)) return id;
    throw std::invalid_argument("unknown construction: " + name);
}

void check_formula(const Formula1in3& b) {
    const int nv = static_cast<int>(b.vars.size());
    for (const auto& c : b.clauses) {
        for (int x : c)
            if (x < 0 || x >= nv) throw std::invalid_argument("clause refers to an unknown variable");
        if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2])
            throw std::invalid_argument("clause variables must be distinct");
    }
}

Formula1in3 fig6_formula() { return {{"x1", "x2", "x3", "x4"}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}}; }

Graph formula_graph(const Formula1in3& b) {
    check_formula(b);
    Graph g;
    for (const auto& x : b.vars) g.add_vertex(x);
    for (std::size_t j = 0; j < b.clauses.size(); ++j) {
        VertexId c = g.add_vertex("c" + s(static_cast<int>(j)));
        for (int x : b.clauses[j]) g.add_edge(c, x);
    }
    return g;
}

Reduction build_reduction(ConstructionId cid, const Graph& input, const ReductionParams& p) {
    switch (cid) {
        case ConstructionId::c1: return build_c1(input, p);
        case ConstructionId::c2: return build_c2(input, p);
        case ConstructionId::c3: return build_c3(input, p);
        case ConstructionId::c45:
        case ConstructionId::c910: return build_regularizer(cid, input, p);
        case ConstructionId::c8: return build_c8(input, p);
        case ConstructionId::c6:
        case ConstructionId::c7: throw std::invalid_argument(std::string(to_string(cid)) + " takes a formula");
    }
    throw std::invalid_argument("unknown construction");
}

Reduction build_reduction(ConstructionId cid, const Formula1in3& b, const ReductionParams& p) {
    if (cid == ConstructionId::c6) return build_c6(b, p);
    if (cid == ConstructionId::c7) return build_c7(b, p);
    throw std::invalid_argument(std::string(to_string(cid)) + " takes a graph");
}

std::pair<Kind, int> output_problem(const ReductionTrace& t) {
    switch (t.construction) {
        case ConstructionId::c1: return {Kind::star, t.k};
        case ConstructionId::c2: return {Kind::star, 4};
        case ConstructionId::c3: return {Kind::star, 5};
        case ConstructionId::c45: return {Kind::star, t.k};
        case ConstructionId::c6: return {Kind::rs, 3};
        case ConstructionId::c7: return {Kind::rs, 4};
        case ConstructionId::c8:
        case ConstructionId::c910: return {Kind::rs, t.k};
    }
    return {Kind::proper, 0};
}

Colouring witness_forward(const ReductionTrace& t, const Colouring& w) {
    const auto [kind, k] = output_problem(t);
    std::vector<int> out(t.output_n, -1);
    switch (t.construction) {
        case ConstructionId::c1: {
            Graph lg = line_graph(t.input);
            require_witness(lg, w, Kind::proper, t.k - 2, "edge colouring");
            paint(out, instance(t, "chain"), gadget_scheme(instance(t, "chain"), {"fig4", {}}));
            for (std::size_t l = 0; l < w.colours.size(); ++l)
                out[t.anchors.at("e" + s(static_cast<int>(l)))] = w.colours[l] + 2;
            break;
        }
        case ConstructionId::c2: {
            require_witness(t.input, w, Kind::proper, 3, "3-colouring");
            for (VertexId i = 0; i < t.input.n(); ++i)
                paint(out, instance(t, "V" + s(i)), gadget_scheme(instance(t, "V" + s(i)), {"fig8", {w.colours[i] + 1}}));
            paint(out, instance(t, "chain"), gadget_scheme(instance(t, "chain"), {"fig8", {0}}));
            break;
        }
        case ConstructionId::c3: {
            require_witness(t.input, w, Kind::proper, 3, "3-colouring");
            for (VertexId i = 0; i < t.input.n(); ++i)
                paint(out, instance(t, "V" + s(i)), gadget_scheme(instance(t, "V" + s(i)), {"fig9c", {w.colours[i] + 2}}));
            for (int c = 0; c < 2; ++c) {
                const auto& gi = instance(t, "chain" + s(c + 1));
                paint(out, gi, gadget_scheme(gi, {"fig9c", {c}}));
            }
            Gadget ne = build(GadgetId::not_equal);
            const VertexId y = ne.terminal("y"), z = ne.terminal("z");
            for (const auto& gi : t.gadgets) {
                if (gi.id != GadgetId::not_equal) continue;
                const int cy = out[gi.embed[y]], cz = out[gi.embed[z]];
                paint(out, gi, scheme(ne, {"fig10", {cy, cz}}));
            }
            break;
        }
        case ConstructionId::c45:
        case ConstructionId::c910: {
            const bool rs = t.construction == ConstructionId::c910;
            const Graph& g = t.input;
            require_witness(g, w, rs ? Kind::rs : Kind::star, t.k, rs ? "k-rs colouring" : "k-star colouring");
            for (VertexId v = 0; v < g.n(); ++v) {
                out[t.anchors.at("1:" + s(v))] = w.colours[v];
                out[t.anchors.at("2:" + s(v))] = w.colours[v];
            }
            for (VertexId v = 0; v < g.n(); ++v) {
                const int fv = w.colours[v];
                std::vector<bool> used(t.k, false);
                used[fv] = true;
                for (VertexId u : g.neighbours(v)) used[w.colours[u]] = true;
                for (const GadgetInstance* gi : fillers_at(t, v)) {
                    const int free = static_cast<int>(std::find(used.begin(), used.end(), false) - used.begin());
                    SchemeVariant var;
                    if (!rs) {
                        var = {"swap", {fv, free}};
                    } else if (fv == t.k - 1) {
                        var = {"filler", {fv, free}};
                    } else {
                        var = {"filler", {fv}};
                    }
                    Colouring c = gadget_scheme(*gi, var);
                    paint(out, *gi, c);
                    // The filler's hub is now a neighbour of v.
                    Gadget fg = build(gi->id, gi->params);
                    VertexId hub = fg.graph.neighbours(fg.terminal("v1"))[0];
                    used[c.colours[hub]] = true;
                }
            }
            break;
        }
        case ConstructionId::c8: {
            const Graph& g = t.input;
            require_witness(g, w, Kind::rs, t.k - 2, "(k-2)-rs colouring");
            for (VertexId v = 0; v < g.n(); ++v) out[t.anchors.at("v" + s(v))] = w.colours[v] + 1;
            for (const auto& gi : t.gadgets) {
                VertexId wv = static_cast<VertexId>(std::stoi(gi.label.substr(1, gi.label.find('.') - 1)));
                paint(out, gi, gadget_scheme(gi, {"fig15", {w.colours[wv] + 1}}));
            }
            break;
        }
        case ConstructionId::c6:
        case ConstructionId::c7:
            throw NoForwardScheme(std::string(to_string(t.construction)) +
                                  ": the colouring direction is certified by the solver, not by a scheme");
    }
    return finish_colouring(std::move(out), k);
}

Colouring witness_backward(const ReductionTrace& t, const Colouring& f) {
    const auto [kind, k] = output_problem(t);
    if (static_cast<int>(f.colours.size()) != t.output_n)
        throw InvalidOutputColouring("colouring size does not match the output graph");
    if (f.k > k) throw InvalidOutputColouring("palette larger than " + s(k));
    for (int c : f.colours)
        if (c < 0 || c >= k) throw InvalidOutputColouring("colour outside the palette");
    if (t.construction != ConstructionId::c6 && t.construction != ConstructionId::c7) {
        if (auto bad = validate(output_graph(t), Colouring{k, f.colours}, kind))
            throw InvalidOutputColouring(std::string("not a valid ") + to_string(kind) + " colouring: " +
                                         to_string(bad->kind) + " at vertex " + s(bad->path[0]));
    }
    auto colour_of = [&](const std::string& anchor) { return f.colours[t.anchors.at(anchor)]; };
    switch (t.construction) {
        case ConstructionId::c1: {
            const auto pi = normalise(k, {colour_of("v0.t0"), colour_of("v0.t0.nbr")});
            const std::size_t m = t.input.m();
            Colouring out{k - 2, std::vector<int>(m)};
            for (std::size_t l = 0; l < m; ++l) {
                int c = pi[colour_of("e" + s(static_cast<int>(l)))] - 2;
                if (c < 0) throw InvalidOutputColouring("edge vertex shares a terminal colour");
                out.colours[l] = c;
            }
            return out;
        }
        case ConstructionId::c2:
        case ConstructionId::c3: {
            const bool c3 = t.construction == ConstructionId::c3;
            const auto pi = c3 ? normalise(k, {colour_of("x_{1,1}"), colour_of("x_{1,2}")})
                               : normalise(k, {colour_of("v*_0")});
            const int shift = c3 ? 2 : 1;
            Colouring out{3, std::vector<int>(t.input.n())};
            for (VertexId i = 0; i < t.input.n(); ++i) {
                int c = pi[colour_of("v_{" + s(i) + ",0}")] - shift;
                if (c < 0) throw InvalidOutputColouring("vertex gadget shares the chain colour");
                out.colours[i] = c;
            }
            return out;
        }
        case ConstructionId::c45:
        case ConstructionId::c910: {
            Colouring out{t.k, std::vector<int>(t.input.n())};
            for (VertexId v = 0; v < t.input.n(); ++v) out.colours[v] = colour_of("1:" + s(v));
            return out;
        }
        case ConstructionId::c8: {
            Colouring out{t.k - 2, std::vector<int>(t.input.n())};
            for (VertexId v = 0; v < t.input.n(); ++v) {
                int c = colour_of("v" + s(v));
                if (c == 0 || c == k - 1) throw InvalidOutputColouring("input vertex coloured 0 or k-1");
                out.colours[v] = c - 1;
            }
            return out;
        }
        case ConstructionId::c6:
        case ConstructionId::c7:
            throw NoBackwardScheme(std::string(to_string(t.construction)) +
                                   ": truth assignments are not read off colourings by this artifact");
    }
    return {};
}

Graph output_graph(const ReductionTrace& t) {
    const ReductionParams p{t.k, t.d, false};
    return t.formula ? build_reduction(t.construction, *t.formula, p).graph
                     : build_reduction(t.construction, t.input, p).graph;
}

InputProblem input_problem(const ReductionTrace& t) {
    switch (t.construction) {
        case ConstructionId::c1: return {Kind::proper, t.k - 2, true};
        case ConstructionId::c2:
        case ConstructionId::c3: return {Kind::proper, 3, false};
        case ConstructionId::c45: return {Kind::star, t.k, false};
        case ConstructionId::c910: return {Kind::rs, t.k, false};
        case ConstructionId::c8: return {Kind::rs, t.k - 2, false};
        case ConstructionId::c6:
        case ConstructionId::c7: break;
    }
    throw std::invalid_argument(std::string(to_string(t.construction)) + " takes a formula, not a colouring");
}

bool input_witness_valid(const ReductionTrace& t, const Colouring& w) {
    const InputProblem ip = input_problem(t);
    if (w.k > ip.k) return false;
    const Graph g = ip.on_edges ? line_graph(t.input) : t.input;
    if (static_cast<int>(w.colours.size()) != g.n()) return false;
    for (int c : w.colours)
        if (c < 0 || c >= ip.k) return false;
    return is_valid(g, Colouring{ip.k, w.colours}, ip.kind);
}

SolveOutcome solve_input(const ReductionTrace& t, const SolveParams& base) {
    const InputProblem ip = input_problem(t);
    SolveParams p = base;
    p.kind = ip.kind;
    p.k = ip.k;
    p.canonical = ip.kind != Kind::rs;
    return ip.on_edges ? edge_decide(t.input, ip.k, p) : decide(t.input, p);
}

std::optional<std::vector<bool>> sat_1in3(const Formula1in3& b, int max_vars) {
    check_formula(b);
    const int nv = static_cast<int>(b.vars.size());
    if (nv > max_vars) throw CapExceeded(s(nv) + " variables exceed the cap of " + s(max_vars));
    std::vector<std::uint64_t> masks;
    for (const auto& c : b.clauses) masks.push_back((1ull << c[0]) | (1ull << c[1]) | (1ull << c[2]));
    for (std::uint64_t a = 0; a < (1ull << nv); ++a) {
        bool ok = true;
        for (auto m : masks)
            if (std::popcount(a & m) != 1) {
                ok = false;
                break;
            }
        if (ok) {
            std::vector<bool> out(nv);
            for (int i = 0; i < nv; ++i) out[i] = (a >> i) & 1;
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace colour_lab
