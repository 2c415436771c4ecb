#include "colour_lab/io.hpp"

#include <fstream>
#include <sstream>

namespace colour_lab {

MalformedGraph6::MalformedGraph6(std::size_t off, const std::string& what)
    : GraphError("malformed graph6 at byte " + std::to_string(off) + ": " + what), offset(off) {}

MalformedEdgeList::MalformedEdgeList(std::size_t ln, const std::string& what)
    : GraphError("malformed edge list at line " + std::to_string(ln) + ": " + what), line(ln) {}

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, std::uint64_t n) {
    auto put6 = [&](int groups) {
        for (int s = groups - 1; s >= 0; --s) out.push_back(static_cast<char>(63 + ((n >> (6 * s)) & 63)));
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        put6(3);
    } else {
        out.push_back(126);
        out.push_back(126);
        put6(6);
    }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    std::string out;
    const std::uint64_t n = g.n();
    put_size(out, n);
    int acc = 0, bits = 0;
    for (int j = 1; j < g.n(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph decode_graph6(std::string_view bytes) {
    std::size_t pos = 0;
    if (bytes.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    if (!bytes.empty() && bytes.back() == '\n') bytes.remove_suffix(1);
    if (!bytes.empty() && bytes.back() == '\r') bytes.remove_suffix(1);

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= bytes.size()) throw MalformedGraph6(i, "unexpected end of input");
        int c = static_cast<unsigned char>(bytes[i]);
        if (c < 63 || c > 126) throw MalformedGraph6(i, "byte outside 63..126");
        return c - 63;
    };
    auto read_groups = [&](int groups) {
        std::uint64_t v = 0;
        for (int s = 0; s < groups; ++s) v = (v << 6) | static_cast<std::uint64_t>(byte_at(pos++));
        return v;
    };

    if (pos < bytes.size() && bytes[pos] == ':') throw MalformedGraph6(pos, "sparse6 is not supported");
    std::uint64_t n;
    if (byte_at(pos) < 63) {
        n = static_cast<std::uint64_t>(byte_at(pos++));
    } else {
        ++pos;
        if (byte_at(pos) < 63) {
            n = read_groups(3);
            if (n <= 62) throw MalformedGraph6(pos - 3, "non-minimal size encoding");
        } else {
            ++pos;
            n = read_groups(6);
            if (n <= 258047) throw MalformedGraph6(pos - 6, "non-minimal size encoding");
        }
    }
    if (n > (1u << 20)) throw MalformedGraph6(pos, "graph too large");

    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
    if (bytes.size() - pos < need) throw MalformedGraph6(bytes.size(), "truncated adjacency payload");
    if (bytes.size() - pos > need) throw MalformedGraph6(pos + need, "trailing bytes after payload");

    Graph g(static_cast<int>(n));
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int b = byte_at(pos + k / 6);
            if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        int b = byte_at(pos + k / 6);
        if (b & ((1 << (6 - k % 6)) - 1)) throw MalformedGraph6(pos + k / 6, "non-zero padding bits");
    }
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph read_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::optional<Graph> g;
    long long declared_m = 0;
    std::size_t seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw MalformedEdgeList(lineno, "expected two integers");
        }
        if (!(ls >> b)) throw MalformedEdgeList(lineno, "expected two integers");
        std::string rest;
        if (ls >> rest) throw MalformedEdgeList(lineno, "trailing tokens");
        if (!g) {
            if (a < 0 || b < 0 || a > (1 << 24)) throw MalformedEdgeList(lineno, "bad header");
            g.emplace(static_cast<int>(a));
            declared_m = b;
            continue;
        }
        if (a < 0 || b < 0 || a >= g->n() || b >= g->n())
            throw MalformedEdgeList(lineno, "vertex out of range");
        if (a == b) throw MalformedEdgeList(lineno, "self-loop");
        if (g->adjacent(static_cast<int>(a), static_cast<int>(b)))
            throw MalformedEdgeList(lineno, "repeated edge");
        g->add_edge(static_cast<int>(a), static_cast<int>(b));
        ++seen;
    }
    if (!g) throw MalformedEdgeList(lineno, "missing \"n m\" header");
    if (static_cast<long long>(seen) != declared_m)
        throw MalformedEdgeList(lineno, "header declares " + std::to_string(declared_m) + " edges, found " +
                                            std::to_string(seen));
    return std::move(*g);
}

std::string to_dot(const Graph& g, const DotStyle& style) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                    "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5"};
    std::vector<bool> terminal(g.n(), false);
    for (const auto& [role, v] : style.terminals) terminal[v] = true;
    std::ostringstream os;
    os << "graph G {\n  node [shape=circle];\n";
    for (VertexId v = 0; v < g.n(); ++v) {
        os << "  " << v << " [label=\"" << g.name(v);
        if (style.colours) os << "\\n" << (*style.colours)[v];
        os << '"';
        if (terminal[v]) os << ", shape=doublecircle";
        if (style.colours) {
            int c = (*style.colours)[v];
            os << ", style=filled, fillcolor=\"" << palette[((c % 10) + 10) % 10] << '"';
        }
        os << "];\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

GraphFormat sniff_format(std::string_view text) {
    auto nl = text.find('\n');
    std::string_view first = text.substr(0, nl);
    try {
        decode_graph6(first);
        return GraphFormat::graph6;
    } catch (const MalformedGraph6&) {
        return GraphFormat::edge_list;
    }
}

Graph parse_graph(std::string_view text) {
    if (sniff_format(text) == GraphFormat::graph6) return decode_graph6(text.substr(0, text.find('\n')));
    return read_edge_list(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << data;
}

}  // namespace colour_lab
