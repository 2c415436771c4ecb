#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colour_lab/graph.hpp"

namespace colour_lab {

struct MalformedGraph6 : GraphError {
    MalformedGraph6(std::size_t offset, const std::string& what);
    std::size_t offset;
};

struct MalformedEdgeList : GraphError {
    MalformedEdgeList(std::size_t line, const std::string& what);
    std::size_t line;
};

std::string encode_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and one trailing newline.
Graph decode_graph6(std::string_view bytes);

// "n m" header, then one "u v" line per edge. '#' starts a comment.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::string_view text);

struct DotStyle {
    std::map<std::string, VertexId> terminals;
    std::optional<std::vector<int>> colours;
};
std::string to_dot(const Graph& g, const DotStyle& style = {});

enum class GraphFormat { graph6, edge_list };
// graph6 when the first line parses as graph6, edge list otherwise.
GraphFormat sniff_format(std::string_view text);
Graph parse_graph(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view data);

}  // namespace colour_lab
