#include "colour_lab/gadgets.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace colour_lab {

namespace {

std::string s(int i) { return std::to_string(i); }

struct Draft {
    Graph g;

    VertexId v(const std::string& name) {
        if (auto id = g.find(name)) return *id;
        return g.add_vertex(name);
    }
    void e(const std::string& a, const std::string& b) { g.add_edge(v(a), v(b)); }
    void identify(const std::string& a, const std::string& b) { g = identify_vertices(g, g.at(a), g.at(b)); }
};

Graph union_prefixed(const Graph& part, const std::vector<std::string>& prefixes) {
    std::vector<Graph> parts(prefixes.size(), part);
    return disjoint_union(parts, prefixes);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ParamOutOfRange(what);
}

// ---- wiring ----

Graph star_component(int k, bool subgraph) {
    Draft d;
    for (int i = 1; i <= k - 4; ++i) d.v("u" + s(i));
    for (int i = 1; i <= k - 2; ++i) d.v("w" + s(i));
    for (int i = 1; i <= k - 2; ++i) d.v("x" + s(i));
    for (int i = 1; i <= k - 4; ++i) d.v("y" + s(i));
    for (int i = 1; i <= k - 2; ++i)
        for (int j = 1; j <= k - 2; ++j) d.e("w" + s(i), "x" + s(j));
    for (int i = 1; i <= k - 4; ++i) {
        d.e("u" + s(i), "w" + s(i));
        d.e("y" + s(i), "x" + s(i));
    }
    d.e("w" + s(k - 3), "w" + s(k - 2));
    d.e("x" + s(k - 3), "x" + s(k - 2));
    if (!subgraph) d.e("y1", "y2");
    return d.g;
}

std::string chain_prefix(int l) { return "c" + s(l) + "."; }

Graph star_chain(int k, int t) {
    std::vector<std::string> prefixes;
    for (int l = 1; l <= t; ++l) prefixes.push_back(chain_prefix(l));
    Draft d{union_prefixed(star_component(k, false), prefixes)};
    for (int l = 1; l < t; ++l) {
        d.identify(chain_prefix(l) + "w" + s(k - 4), chain_prefix(l + 1) + "u1");
        d.identify(chain_prefix(l) + "u" + s(k - 4), chain_prefix(l + 1) + "w1");
    }
    return d.g;
}

Graph petersen_minus() {
    Draft d;
    for (int i = 1; i <= 5; ++i) d.v("v" + s(i));
    for (int i = 1; i <= 4; ++i) d.v("w" + s(i));
    const int star[] = {1, 3, 5, 2, 4, 1};
    for (int i = 0; i < 5; ++i) d.e("v" + s(star[i]), "v" + s(star[i + 1]));
    for (int i = 1; i <= 4; ++i) d.e("w" + s(i), "v" + s(i));
    for (int i = 1; i < 4; ++i) d.e("w" + s(i), "w" + s(i + 1));
    return d.g;
}

// Copies p1..pn of petersen-minus, w4 of p_j identified with w1 of p_{j+1}.
Graph petersen_string(int copies) {
    std::vector<std::string> prefixes;
    for (int j = 1; j <= copies; ++j) prefixes.push_back("p" + s(j) + ".");
    Draft d{union_prefixed(petersen_minus(), prefixes)};
    for (int j = 1; j < copies; ++j) d.identify("p" + s(j) + ".w4", "p" + s(j + 1) + ".w1");
    return d.g;
}

int wrap5(int i) { return ((i - 1) % 5 + 5) % 5 + 1; }

void grotzsch_into(Draft& d, const std::string& cyc, const std::string& out) {
    for (int i = 1; i <= 5; ++i) d.v(cyc + s(i));
    for (int i = 1; i <= 5; ++i) d.v(out + s(i));
    for (int i = 1; i <= 5; ++i) d.e(cyc + s(i), cyc + s(wrap5(i + 1)));
    for (int i = 1; i <= 5; ++i) {
        d.e(out + s(i), cyc + s(wrap5(i - 1)));
        d.e(out + s(i), cyc + s(wrap5(i + 1)));
    }
}

Graph grotzsch_minus() {
    Draft d;
    grotzsch_into(d, "v", "w");
    return d.g;
}

Graph two_in_two_out() {
    Draft d;
    grotzsch_into(d, "u", "x");
    grotzsch_into(d, "v", "w");
    d.identify("x2", "w2");
    d.identify("x3", "w3");
    for (const char* y : {"y1", "y2"}) {
        for (const char* x : {"x5", "x1", "x4"}) d.e(y, x);
        d.e(y, std::string(y) + "*");
    }
    for (const char* z : {"z1", "z2"}) {
        for (const char* w : {"w5", "w1", "w4"}) d.e(z, w);
        d.e(z, std::string(z) + "*");
    }
    return d.g;
}

Graph not_equal() {
    Draft d{two_in_two_out()};
    d.identify("y1*", "y2*");
    d.identify("z1*", "z2*");
    d.g.rename(d.g.at("y1*"), "y");
    d.g.rename(d.g.at("z1*"), "z");
    return d.g;
}

std::string box(int l, int j) { return "b" + s(l) + "." + s(j) + "."; }
std::string box(int i) { return "b" + s(i) + "."; }

// Out-edge z_a of the parent becomes in-edge y_b of the child.
void share(Draft& d, const std::string& parent, int a, const std::string& child, int b) {
    d.identify(parent + "z" + s(a) + "*", child + "y" + s(b));
    d.identify(parent + "z" + s(a), child + "y" + s(b) + "*");
}

struct Layout {
    std::vector<std::string> boxes;
    std::vector<std::string> terminals;  // vertex names, in order
};

Layout c3_layout(int T, bool linear) {
    Layout out;
    if (linear) {
        for (int i = 1; i <= T; ++i) out.boxes.push_back(box(i));
        for (int i = 1; i < T; ++i) out.terminals.push_back(box(i) + "z2*");
        out.terminals.push_back(box(T) + "z1*");
        out.terminals.push_back(box(T) + "z2*");
    } else {
        for (int l = 1; l <= T; ++l)
            for (int j = 1; j <= l; ++j) out.boxes.push_back(box(l, j));
        for (int j = 1; j <= T; ++j) {
            out.terminals.push_back(box(T, j) + "z1*");
            out.terminals.push_back(box(T, j) + "z2*");
        }
    }
    return out;
}

Graph c3_tree(int T, bool linear) {
    Draft d{union_prefixed(two_in_two_out(), c3_layout(T, linear).boxes)};
    if (linear) {
        for (int i = 1; i < T; ++i) share(d, box(i), 1, box(i + 1), 1);
    } else {
        for (int l = 1; l < T; ++l)
            for (int j = 1; j <= l; ++j) {
                share(d, box(l, j), 1, box(l + 1, j), 2);
                share(d, box(l, j), 2, box(l + 1, j + 1), 1);
            }
    }
    return d.g;
}

// hub - x_1..x_{d-1} = K_{d-1,d-1} = y_1..y_{d-1} - end
void filler_block(Draft& d, const std::string& hub, const std::string& xs, const std::string& ys,
                  const std::string& end, int dd) {
    d.v(hub);
    for (int i = 1; i < dd; ++i) d.v(xs + s(i));
    for (int i = 1; i < dd; ++i) d.v(ys + s(i));
    d.v(end);
    for (int i = 1; i < dd; ++i) {
        d.e(hub, xs + s(i));
        d.e(ys + s(i), end);
        for (int j = 1; j < dd; ++j) d.e(xs + s(i), ys + s(j));
    }
}

Graph star_filler(int dd) {
    Draft d;
    filler_block(d, "1st", "x", "y", "1stEnd", dd);
    d.e("v1", "1st");
    d.e("v2", "1stEnd");
    return d.g;
}

const char* kBlocks[] = {"1st", "2nd", "3rd"};

Graph rs_filler(int dd) {
    Draft d;
    for (const char* b : kBlocks)
        filler_block(d, b, std::string(b) + ".x", std::string(b) + ".y", std::string(b) + "End", dd);
    d.e("1stEnd", "2nd");
    d.e("2ndEnd", "3rd");
    d.e("v1", "1st");
    d.e("v2", "3rdEnd");
    return d.g;
}

Graph rs_component() {
    Draft d;
    for (int i = 1; i <= 8; ++i) d.v("u" + s(i));
    for (int i = 1; i <= 5; ++i) d.e("u" + s(i), "u" + s(wrap5(i + 1)));
    d.e("u6", "u2");
    d.e("u6", "u7");
    d.e("u7", "u8");
    d.e("u7", "u4");
    d.e("u8", "u1");
    return d.g;
}

Graph rs_forcing_h() {
    Draft d{union_prefixed(rs_component(), {"c1.", "c2.", "c3."})};
    d.e("c1.u5", "c2.u3");
    for (const char* t : {"c1.u3", "c2.u5", "c3.u3"}) d.e("j", t);
    return d.g;
}

Graph rs_forcing() {
    Draft d{rs_forcing_h()};
    for (int c = 1; c <= 3; ++c) {
        const std::string p = "c" + s(c) + ".";
        auto r = [&](int level, int i) { return p + "r" + s(level) + s(i); };
        auto m = [&](int i) { return p + "m2" + s(i); };
        for (int i = 1; i <= 5; ++i) d.v(r(3, i));
        for (int i = 1; i <= 5; ++i) {
            d.v(r(2, i));
            d.v(m(i));
        }
        for (int i = 1; i <= 5; ++i) d.v(r(1, i));

        d.e(r(3, 2), r(3, 3));
        d.e(r(3, 3), r(3, 4));
        d.e(r(3, 4), r(3, 5));
        d.e(r(3, 5), r(3, 1));
        d.e(r(3, 1), p + "u8");
        d.e(r(3, 2), p + "u6");
        for (int i = 1; i <= 5; ++i) {
            d.e(r(2, i), m(i));
            d.e(m(i), r(2, wrap5(i + 1)));
            d.e(r(3, i), r(2, i));
            d.e(r(1, i), r(1, wrap5(i + 1)));
        }
        const int spoke[] = {4, 3, 2, 1, 5};  // r1? adjacent to m2i
        for (int i = 1; i <= 5; ++i) d.e(r(1, spoke[i - 1]), m(i));
    }
    return d.g;
}

Graph rs_blocking(int k) {
    Draft d;
    for (int i = 1; i < k; ++i) d.v("x" + s(i));
    for (int i = 1; i < k; ++i) d.v("y" + s(i));
    for (const char* n : {"u1", "u2", "u3", "v1", "v2", "v3"}) d.v(n);
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j)
            if (i != j) d.e("x" + s(i), "y" + s(j));
    d.e("u1", "x1");
    d.e("u1", "y1");
    d.e("u2", "u1");
    d.e("u2", "u3");
    for (int i = 2; i <= k - 2; ++i) d.e("u2", "y" + s(i));
    d.e("v1", "x" + s(k - 1));
    d.e("v1", "y" + s(k - 1));
    d.e("v2", "v1");
    d.e("v2", "v3");
    for (int i = 2; i <= k - 2; ++i) d.e("v2", "x" + s(i));
    return d.g;
}

// ---- schemes ----

using NameColours = std::vector<std::pair<std::string, int>>;

Colouring from_names(const Gadget& gd, const NameColours& nc) {
    Colouring c{gd.k, std::vector<int>(gd.graph.n(), -1)};
    for (const auto& [name, col] : nc) {
        VertexId v = gd.graph.at(name);
        if (c.colours[v] >= 0 && c.colours[v] != col)
            throw std::logic_error("scheme assigns two colours to " + gd.graph.name(v));
        c.colours[v] = col;
    }
    for (VertexId v = 0; v < gd.graph.n(); ++v)
        if (c.colours[v] < 0) throw std::logic_error("scheme leaves " + gd.graph.name(v) + " uncoloured");
    return c;
}

// Applies a colour map to every entry.
NameColours mapped(NameColours nc, const std::vector<int>& perm) {
    for (auto& [name, c] : nc) c = perm[c];
    return nc;
}

NameColours prefixed(const NameColours& nc, const std::string& p) {
    NameColours out;
    for (const auto& [name, c] : nc) out.emplace_back(p + name, c);
    return out;
}

void append(NameColours& a, const NameColours& b) { a.insert(a.end(), b.begin(), b.end()); }

std::vector<int> transposition(int k, int a, int b) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[a], p[b]);
    return p;
}

// Permutation of Z_k sending from[i] to to[i]; the remaining colours are
// matched in ascending order.
std::vector<int> permutation(int k, const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> p(k, -1);
    std::vector<bool> used(k, false);
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (p[from[i]] >= 0 || used[to[i]]) throw std::invalid_argument("colour map is not injective");
        p[from[i]] = to[i];
        used[to[i]] = true;
    }
    int next = 0;
    for (int c = 0; c < k; ++c) {
        if (p[c] >= 0) continue;
        while (used[next]) ++next;
        p[c] = next;
        used[next] = true;
    }
    return p;
}

NameColours fig3b(int k) {
    NameColours nc;
    for (int i = 1; i <= k - 4; ++i) nc.emplace_back("w" + s(i), 1);
    nc.emplace_back("w" + s(k - 3), 0);
    nc.emplace_back("w" + s(k - 2), 1);
    for (int j = 1; j <= k - 2; ++j) nc.emplace_back("x" + s(j), j + 1);
    for (int i = 1; i <= k - 4; ++i) {
        nc.emplace_back("u" + s(i), 0);
        nc.emplace_back("y" + s(i), i == 1 ? 0 : 1);
    }
    return nc;
}

NameColours fig4(int k, int t) {
    NameColours nc;
    for (int l = 1; l <= t; ++l) {
        NameColours part = fig3b(k);
        if (l % 2 == 0)
            for (auto& [name, c] : part)
                if ((name[0] == 'u' || name[0] == 'w') && c <= 1) c = 1 - c;
        append(nc, prefixed(part, chain_prefix(l)));
    }
    return nc;
}

NameColours fig8(int k, int c) {
    NameColours nc = {{"v1", 2}, {"v2", 0}, {"v3", 0}, {"v4", 3}, {"v5", 1},
                      {"w1", 1}, {"w2", 2}, {"w3", 3}, {"w4", 1}};
    return mapped(nc, transposition(k, 1, c));
}

NameColours fig8_string(int copies, int c) {
    NameColours nc;
    for (int j = 1; j <= copies; ++j) append(nc, prefixed(fig8(4, c), "p" + s(j) + "."));
    return nc;
}

NameColours fig7(bool variant_c) {
    NameColours nc;
    for (int i = 1; i <= 5; ++i) nc.emplace_back("v" + s(i), i - 1);
    const int wb[] = {2, 3, 4, 0, 1}, wc[] = {3, 4, 0, 1, 2};
    for (int i = 1; i <= 5; ++i) nc.emplace_back("w" + s(i), variant_c ? wc[i - 1] : wb[i - 1]);
    return nc;
}

NameColours fig9c() {
    NameColours nc;
    const int u[] = {4, 2, 0, 1, 3}, x[] = {1, 3, 4, 2, 0};
    for (int i = 1; i <= 5; ++i) {
        nc.emplace_back("u" + s(i), u[i - 1]);
        nc.emplace_back("x" + s(i), x[i - 1]);
        nc.emplace_back("v" + s(i), i - 1);
    }
    nc.insert(nc.end(), {{"w1", 2}, {"w4", 0}, {"w5", 1}, {"y1", 4}, {"y2", 4}, {"y1*", 3}, {"y2*", 3},
                         {"z1", 3}, {"z2", 3}, {"z1*", 4}, {"z2*", 4}});
    return nc;
}

NameColours fig10(int cy, int cz) {
    NameColours nc;
    for (auto& [name, c] : fig9c())
        if (name.back() != '*') nc.emplace_back(name, c);
    nc.emplace_back("y", 3);
    nc.emplace_back("z", 4);
    return mapped(nc, permutation(5, {3, 4}, {cy, cz}));
}

NameColours c3_scheme(int T, bool linear, int c) {
    NameColours nc;
    const auto perm = transposition(5, 4, c);
    for (const auto& b : c3_layout(T, linear).boxes) append(nc, prefixed(mapped(fig9c(), perm), b));
    return nc;
}

NameColours star_filler_scheme(int k, int dd, int fv, int c) {
    NameColours nc = {{"1st", k - 1}, {"1stEnd", k - 1}, {"v1", 0}, {"v2", 0}};
    for (int i = 1; i < dd; ++i) {
        nc.emplace_back("x" + s(i), 0);
        nc.emplace_back("y" + s(i), i);
    }
    return mapped(nc, permutation(k, {0, k - 1}, {fv, c}));
}

std::vector<int> all_but(int lo, int hi, int skip) {
    std::vector<int> out;
    for (int c = lo; c <= hi; ++c)
        if (c != skip) out.push_back(c);
    return out;
}

// One filler block: hub, the d-1 x colours, the d-1 y colours, end.
void block_colours(NameColours& nc, const std::string& b, int hub, const std::vector<int>& xs,
                   const std::vector<int>& ys, int end, int dd) {
    nc.emplace_back(b, hub);
    for (int i = 1; i < dd; ++i) {
        nc.emplace_back(b + ".x" + s(i), xs[i - 1]);
        nc.emplace_back(b + ".y" + s(i), ys[i - 1]);
    }
    nc.emplace_back(b + "End", end);
}

NameColours rs_filler_scheme(int k, int dd, int fv, int j) {
    const int top = k - 1;
    const std::vector<int> tops(k - 2, top);
    NameColours nc = {{"v1", fv}, {"v2", fv}};
    if (fv == 0) {
        block_colours(nc, "1st", top, all_but(1, k - 2, -1), tops, 0, dd);
        block_colours(nc, "2nd", 1, tops, all_but(0, k - 2, 1), 1, dd);
        block_colours(nc, "3rd", top, all_but(0, k - 2, 1), tops, 1, dd);
    } else if (fv < top) {
        const int i = fv;
        block_colours(nc, "1st", top, all_but(0, k - 2, i), tops, i, dd);
        block_colours(nc, "2nd", 0, tops, all_but(1, k - 2, -1), 0, dd);
        block_colours(nc, "3rd", i, tops, all_but(0, k - 2, i), top, dd);
    } else {
        block_colours(nc, "1st", j, tops, all_but(0, k - 2, j), top, dd);
        block_colours(nc, "2nd", j, tops, all_but(0, k - 2, j), top, dd);
        block_colours(nc, "3rd", j, tops, all_but(0, k - 2, j), j, dd);
    }
    return nc;
}

NameColours rs_blocking_scheme(int k, int c) {
    NameColours nc = {{"x1", k - 1}, {"y1", k - 1}, {"u1", 0}, {"v1", 0}, {"u2", k - 1},
                      {"v2", k - 1}, {"u3", c},     {"v3", c},  {"x" + s(k - 1), c}, {"y" + s(k - 1), c}};
    auto rest = all_but(1, k - 2, c);
    for (int i = 2; i <= k - 2; ++i) {
        nc.emplace_back("x" + s(i), rest[i - 2]);
        nc.emplace_back("y" + s(i), rest[i - 2]);
    }
    return nc;
}

NameColours fig12b() {
    const int col[] = {3, 1, 2, 3, 0, 0, 1, 2};
    NameColours nc;
    for (int i = 1; i <= 8; ++i) nc.emplace_back("u" + s(i), col[i - 1]);
    return nc;
}

void expect_args(const SchemeVariant& v, std::size_t lo, std::size_t hi) {
    if (v.args.size() < lo || v.args.size() > hi)
        throw std::invalid_argument("scheme " + v.figure + " takes " + s(static_cast<int>(lo)) + ".." +
                                    s(static_cast<int>(hi)) + " arguments");
}

void expect_figure(const SchemeVariant& v, GadgetId id, std::initializer_list<const char*> names) {
    for (const char* n : names)
        if (v.figure == n) return;
    throw NoSchemeRecorded(std::string("no scheme ") + v.figure + " recorded for " + to_string(id));
}

void expect_colour(int c, int k, const std::string& what) {
    if (c < 0 || c >= k) throw std::invalid_argument(what + " must lie in [0, " + s(k) + ")");
}

}  // namespace

const char* to_string(GadgetId id) {
    switch (id) {
        case GadgetId::star_component: return "star-component";
        case GadgetId::star_chain: return "star-chain";
        case GadgetId::petersen_minus: return "petersen-minus";
        case GadgetId::c2_vertex: return "c2-vertex";
        case GadgetId::c2_chain: return "c2-chain";
        case GadgetId::grotzsch_minus: return "grotzsch-minus";
        case GadgetId::two_in_two_out: return "two-in-two-out";
        case GadgetId::not_equal: return "not-equal";
        case GadgetId::c3_tree: return "c3-tree";
        case GadgetId::star_filler: return "star-filler";
        case GadgetId::rs_component: return "rs-component";
        case GadgetId::rs_forcing_h: return "rs-forcing-H";
        case GadgetId::rs_forcing: return "rs-forcing";
        case GadgetId::rs_blocking: return "rs-blocking";
        case GadgetId::rs_filler: return "rs-filler";
    }
    return "?";
}

const std::vector<GadgetId>& all_gadgets() {
    static const std::vector<GadgetId> ids = {
        GadgetId::star_component, GadgetId::star_chain,  GadgetId::petersen_minus, GadgetId::c2_vertex,
        GadgetId::c2_chain,       GadgetId::grotzsch_minus, GadgetId::two_in_two_out, GadgetId::not_equal,
        GadgetId::c3_tree,        GadgetId::star_filler,  GadgetId::rs_component,   GadgetId::rs_forcing_h,
        GadgetId::rs_forcing,     GadgetId::rs_blocking,  GadgetId::rs_filler};
    return ids;
}

GadgetId gadget_from_string(const std::string& name) {
    for (GadgetId id : all_gadgets())
        if (name == to_string(id)) return id;
    throw std::invalid_argument("unknown gadget id: " + name);
}

VertexId Gadget::terminal(const std::string& role) const {
    for (const auto& [r, v] : terminals)
        if (r == role) return v;
    throw UnknownVertex("no terminal named " + role);
}

std::vector<VertexId> Gadget::terminal_ids() const {
    std::vector<VertexId> out;
    for (const auto& [r, v] : terminals) out.push_back(v);
    return out;
}

GadgetParams normalized(GadgetId id, GadgetParams p) {
    auto dflt = [](int& field, int value) {
        if (field == 0) field = value;
    };
    switch (id) {
        case GadgetId::star_component:
            dflt(p.k, 7);
            if (p.shape.empty()) p.shape = "full";
            require(p.k >= 7, "star-component needs k >= 7");
            require(p.shape == "full" || p.shape == "subgraph", "star-component shape is full or subgraph");
            break;
        case GadgetId::star_chain:
            dflt(p.k, 7);
            dflt(p.t, 2);
            require(p.k >= 7, "star-chain needs k >= 7");
            require(p.t >= 1, "star-chain needs t >= 1");
            break;
        case GadgetId::c2_chain:
            dflt(p.n, 2);
            require(p.n >= 1, "c2-chain needs n >= 1");
            break;
        case GadgetId::c3_tree:
            dflt(p.T, 3);
            if (p.shape.empty()) p.shape = "triangular";
            require(p.T >= 1, "c3-tree needs T >= 1");
            require(p.shape == "triangular" || p.shape == "linear", "c3-tree shape is triangular or linear");
            break;
        case GadgetId::star_filler:
            dflt(p.k, 4);
            dflt(p.d, p.k - 1);
            require(p.k >= 3, "star-filler needs k >= 3");
            require(p.d >= 1 && p.d <= p.k - 1, "star-filler needs 1 <= d <= k-1");
            break;
        case GadgetId::rs_blocking:
            dflt(p.k, 5);
            require(p.k >= 5, "rs-blocking needs k >= 5");
            break;
        case GadgetId::rs_filler:
            dflt(p.k, 4);
            dflt(p.d, p.k - 1);
            require(p.k >= 4, "rs-filler needs k >= 4");
            require(p.d >= 1 && p.d <= p.k - 1, "rs-filler needs 1 <= d <= k-1");
            break;
        default:
            break;
    }
    return p;
}

Gadget build(GadgetId id, const GadgetParams& raw) {
    const GadgetParams p = normalized(id, raw);
    Gadget out{id, p, {}, {}, Kind::star, 4};
    auto term = [&](const std::string& role, const std::string& vertex) {
        out.terminals.emplace_back(role, out.graph.at(vertex));
    };
    switch (id) {
        case GadgetId::star_component:
            out.graph = star_component(p.k, p.shape == "subgraph");
            out.k = p.k;
            break;
        case GadgetId::star_chain:
            out.graph = star_chain(p.k, p.t);
            out.k = p.k;
            for (int l = 1; l <= p.t; ++l)
                for (int i = 2; i <= p.k - 5; ++i)
                    term("u_{" + s(i) + "," + s(l) + "}", chain_prefix(l) + "u" + s(i));
            break;
        case GadgetId::petersen_minus:
            out.graph = petersen_minus();
            for (const char* t : {"w1", "w4", "v5"}) term(t, t);
            break;
        case GadgetId::c2_vertex:
            out.graph = petersen_string(4);
            term("v0", "p1.w1");
            for (int j = 1; j <= 4; ++j) term("v" + s(j), "p" + s(j) + ".v5");
            break;
        case GadgetId::c2_chain:
            out.graph = petersen_string(p.n);
            for (int j = 1; j <= p.n; ++j) term("v*_" + s(j), "p" + s(j) + ".v5");
            break;
        case GadgetId::grotzsch_minus:
            out.graph = grotzsch_minus();
            out.k = 5;
            for (int i = 1; i <= 5; ++i) term("w" + s(i), "w" + s(i));
            break;
        case GadgetId::two_in_two_out:
            out.graph = two_in_two_out();
            out.k = 5;
            for (const char* t : {"y1*", "y2*", "z1*", "z2*"}) term(t, t);
            break;
        case GadgetId::not_equal:
            out.graph = not_equal();
            out.k = 5;
            term("y", "y");
            term("z", "z");
            break;
        case GadgetId::c3_tree: {
            const bool linear = p.shape == "linear";
            out.graph = c3_tree(p.T, linear);
            out.k = 5;
            const auto names = c3_layout(p.T, linear).terminals;
            for (std::size_t i = 0; i < names.size(); ++i) term("t" + s(static_cast<int>(i)), names[i]);
            break;
        }
        case GadgetId::star_filler:
            out.graph = star_filler(p.d);
            out.k = p.k;
            term("v1", "v1");
            term("v2", "v2");
            break;
        case GadgetId::rs_component:
            out.graph = rs_component();
            out.kind = Kind::rs;
            term("u3", "u3");
            term("u5", "u5");
            break;
        case GadgetId::rs_forcing_h:
        case GadgetId::rs_forcing:
            out.graph = id == GadgetId::rs_forcing ? rs_forcing() : rs_forcing_h();
            out.kind = Kind::rs;
            term("u5''", "c3.u5");
            break;
        case GadgetId::rs_blocking:
            out.graph = rs_blocking(p.k);
            out.kind = Kind::rs;
            out.k = p.k;
            term("u3", "u3");
            break;
        case GadgetId::rs_filler:
            out.graph = rs_filler(p.d);
            out.kind = Kind::rs;
            out.k = p.k;
            term("v1", "v1");
            term("v2", "v2");
            break;
    }
    return out;
}

SchemeVariant default_variant(GadgetId id, const GadgetParams& raw) {
    const GadgetParams p = normalized(id, raw);
    switch (id) {
        case GadgetId::star_component: return {"fig3b", {}};
        case GadgetId::star_chain: return {"fig4", {}};
        case GadgetId::petersen_minus:
        case GadgetId::c2_vertex:
        case GadgetId::c2_chain: return {"fig8", {1}};
        case GadgetId::grotzsch_minus: return {"fig7b", {}};
        case GadgetId::two_in_two_out: return {"fig9c", {}};
        case GadgetId::not_equal: return {"fig10", {3, 4}};
        case GadgetId::c3_tree: return {"fig9c", {4}};
        case GadgetId::star_filler: return {"swap", {0, p.k - 1}};
        case GadgetId::rs_component: return {"fig12b", {}};
        case GadgetId::rs_forcing_h:
        case GadgetId::rs_forcing: return {"derived", {}};
        case GadgetId::rs_blocking: return {"fig15", {1}};
        case GadgetId::rs_filler: return {"filler", {0}};
    }
    return {};
}

Colouring scheme(const Gadget& g, const SchemeVariant& v) {
    const GadgetParams& p = g.params;
    switch (g.id) {
        case GadgetId::star_component:
            expect_figure(v, g.id, {"fig3b"});
            expect_args(v, 0, 0);
            if (p.shape != "full") throw NoSchemeRecorded("fig3b colours the full component only");
            return from_names(g, fig3b(p.k));
        case GadgetId::star_chain:
            expect_figure(v, g.id, {"fig4"});
            expect_args(v, 0, 0);
            return from_names(g, fig4(p.k, p.t));
        case GadgetId::petersen_minus:
        case GadgetId::c2_vertex:
        case GadgetId::c2_chain: {
            expect_figure(v, g.id, {"fig8"});
            expect_args(v, 0, 1);
            const int c = v.args.empty() ? 1 : v.args[0];
            expect_colour(c, 4, "terminal colour");
            if (g.id == GadgetId::petersen_minus) return from_names(g, fig8(4, c));
            return from_names(g, fig8_string(g.id == GadgetId::c2_vertex ? 4 : p.n, c));
        }
        case GadgetId::grotzsch_minus:
            expect_figure(v, g.id, {"fig7b", "fig7c"});
            expect_args(v, 0, 0);
            return from_names(g, fig7(v.figure == "fig7c"));
        case GadgetId::two_in_two_out:
            expect_figure(v, g.id, {"fig9c"});
            expect_args(v, 0, 0);
            return from_names(g, fig9c());
        case GadgetId::not_equal: {
            expect_figure(v, g.id, {"fig10"});
            expect_args(v, 0, 2);
            const int cy = v.args.size() > 0 ? v.args[0] : 3, cz = v.args.size() > 1 ? v.args[1] : 4;
            expect_colour(cy, 5, "cy");
            expect_colour(cz, 5, "cz");
            if (cy == cz) throw std::invalid_argument("not-equal terminals need distinct colours");
            return from_names(g, fig10(cy, cz));
        }
        case GadgetId::c3_tree: {
            expect_figure(v, g.id, {"fig9c"});
            expect_args(v, 0, 1);
            const int c = v.args.empty() ? 4 : v.args[0];
            expect_colour(c, 5, "terminal colour");
            return from_names(g, c3_scheme(p.T, p.shape == "linear", c));
        }
        case GadgetId::star_filler: {
            expect_figure(v, g.id, {"swap"});
            expect_args(v, 2, 2);
            expect_colour(v.args[0], p.k, "f(v)");
            expect_colour(v.args[1], p.k, "hub colour");
            if (v.args[0] == v.args[1]) throw std::invalid_argument("hub colour must differ from f(v)");
            return from_names(g, star_filler_scheme(p.k, p.d, v.args[0], v.args[1]));
        }
        case GadgetId::rs_component:
            expect_figure(v, g.id, {"fig12b"});
            expect_args(v, 0, 0);
            return from_names(g, fig12b());
        case GadgetId::rs_forcing_h:
        case GadgetId::rs_forcing: {
            expect_figure(v, g.id, {"derived"});
            expect_args(v, 0, 0);
            const auto& full = rs_forcing_derived_colours();
            return Colouring{4, std::vector<int>(full.begin(), full.begin() + g.graph.n())};
        }
        case GadgetId::rs_blocking: {
            expect_figure(v, g.id, {"fig15"});
            expect_args(v, 0, 1);
            const int c = v.args.empty() ? 1 : v.args[0];
            if (c <= 0 || c >= p.k - 1) throw std::invalid_argument("fig15 needs 0 < c < k-1");
            return from_names(g, rs_blocking_scheme(p.k, c));
        }
        case GadgetId::rs_filler: {
            expect_figure(v, g.id, {"filler"});
            expect_args(v, 1, 2);
            const int fv = v.args[0];
            expect_colour(fv, p.k, "f(v)");
            int j = 0;
            if (fv == p.k - 1) {
                if (v.args.size() != 2) throw std::invalid_argument("f(v) = k-1 needs the colour j");
                j = v.args[1];
                expect_colour(j, p.k - 1, "j");
            }
            return from_names(g, rs_filler_scheme(p.k, p.d, fv, j));
        }
    }
    throw NoSchemeRecorded(std::string("no scheme for ") + to_string(g.id));
}

Colouring scheme(GadgetId id, const GadgetParams& p, const SchemeVariant& v) { return scheme(build(id, p), v); }

std::vector<GadgetInfo> gadget_catalogue() {
    return {
        {GadgetId::star_component, "k >= 7; shape full|subgraph", "(none)", Kind::star, "star gadget component"},
        {GadgetId::star_chain, "k >= 7, t >= 1", "u_{i,l}, 2 <= i <= k-5", Kind::star, "star chain gadget"},
        {GadgetId::petersen_minus, "-", "w1, w4, v5", Kind::star, "Petersen graph minus a vertex"},
        {GadgetId::c2_vertex, "-", "v0..v4", Kind::star, "4-star vertex gadget"},
        {GadgetId::c2_chain, "n >= 1", "v*_1..v*_n", Kind::star, "4-star chain gadget"},
        {GadgetId::grotzsch_minus, "-", "w1..w5", Kind::star, "Grotzsch graph minus a vertex"},
        {GadgetId::two_in_two_out, "-", "y1*, y2*, z1*, z2*", Kind::star, "2-in-2-out gadget"},
        {GadgetId::not_equal, "-", "y, z", Kind::star, "not-equal gadget"},
        {GadgetId::c3_tree, "T >= 1; shape triangular|linear", "t0..", Kind::star, "5-star vertex/chain gadget"},
        {GadgetId::star_filler, "k >= 3, 1 <= d <= k-1", "v1, v2", Kind::star, "star filler gadget"},
        {GadgetId::rs_component, "-", "u3, u5", Kind::rs, "rs gadget component"},
        {GadgetId::rs_forcing_h, "-", "u5''", Kind::rs, "colour forcing subgraph H"},
        {GadgetId::rs_forcing, "-", "u5''", Kind::rs, "colour forcing gadget"},
        {GadgetId::rs_blocking, "k >= 5", "u3", Kind::rs, "colour blocking gadget"},
        {GadgetId::rs_filler, "k >= 4, 1 <= d <= k-1", "v1, v2", Kind::rs, "rs filler gadget"},
    };
}

std::pair<Graph, Colouring> fig1a_prism() {
    Draft d;
    for (int i = 0; i < 3; ++i) d.v("u" + s(i));
    for (int i = 0; i < 3; ++i) d.v("v" + s(i));
    for (int i = 0; i < 3; ++i) {
        d.e("u" + s(i), "u" + s((i + 1) % 3));
        d.e("v" + s(i), "v" + s((i + 1) % 3));
        d.e("u" + s(i), "v" + s(i));
    }
    return {d.g, Colouring{4, {0, 1, 2, 1, 2, 3}}};
}

std::pair<Graph, Colouring> fig1b_pendant_triangle() {
    Draft d;
    for (int i = 0; i < 3; ++i) d.v("u" + s(i));
    for (int i = 0; i < 3; ++i) d.v("v" + s(i));
    for (int i = 0; i < 3; ++i) {
        d.e("u" + s(i), "u" + s((i + 1) % 3));
        d.e("u" + s(i), "v" + s(i));
    }
    return {d.g, Colouring{3, {0, 1, 2, 1, 2, 0}}};
}

}  // namespace colour_lab
