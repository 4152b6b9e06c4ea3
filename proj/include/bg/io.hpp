#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bg/graph.hpp"

namespace bg {

/// Decodes one graph6 record (optional ">>graph6<<" prefix and surrounding
/// whitespace tolerated). Throws std::invalid_argument on malformed input.
Graph parse_graph6(std::string_view text);

/// Canonical-format graph6 record for g (no trailing newline).
std::string to_graph6(const Graph& g);

/// Plain text: first line "n", then one "u v" line per edge.
Graph parse_edge_list_text(std::string_view text);
std::string to_edge_list_text(const Graph& g);

/// Graphviz source for undirected rendering.
std::string to_dot(const Graph& g);

/// One graph6 record per non-empty line.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace bg
