#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "forestweave/graph.hpp"

namespace forestweave {

enum class GraphFormat { EdgeList, Dimacs, Graph6 };

/// Parses "edgelist" / "dimacs" / "graph6"; throws ParseError otherwise.
GraphFormat parse_graph_format(std::string_view name);
const char* format_name(GraphFormat f);

/// Parses a single graph.
///
///   EdgeList: "n m" header, then m lines "u v" with 0 <= u, v < n.
///   Dimacs:   "p edge n m" header, "e u v" lines with 1-based ids, "c" comments.
///   Graph6:   one line of the standard 6-bit encoding, n < 63.
///
/// Throws ParseError, LoopError, VertexOutOfRange, UnsupportedSize.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Serializes `g`; graph6 output carries no trailing newline.
std::string write_graph(const Graph& g, GraphFormat format);

Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Every non-empty line of a graph6 stream; a ">>graph6<<" header is skipped.
/// Throws CorpusParseError naming the offending line.
std::vector<Graph> parse_graph6_stream(std::string_view text);

}  // namespace forestweave
