#include "forestweave/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

#include "forestweave/errors.hpp"

namespace forestweave {
namespace {

constexpr int kGraph6Offset = 63;
constexpr std::size_t kGraph6MaxOrder = 62;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

// nauty writes an optional ">>graph6<<" marker in front of the first graph.
std::string_view strip_header(std::string_view s) {
  constexpr std::string_view header = ">>graph6<<";
  if (s.starts_with(header)) s.remove_prefix(header.size());
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Splits into lines, keeping 1-based line numbers.
template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    f(lineno, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

std::int64_t to_int(std::string_view tok, std::size_t lineno) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(lineno, "expected integer, got '" + std::string(tok) + "'");
  return v;
}

Vertex checked_vertex(std::int64_t v, std::size_t n, std::size_t lineno) {
  if (v < 0 || static_cast<std::uint64_t>(v) >= n)
    throw VertexOutOfRange("line " + std::to_string(lineno) + ": vertex " + std::to_string(v) +
                           " outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
  return static_cast<Vertex>(v);
}

Graph parse_edge_list(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].starts_with('#')) return;
    if (tok.size() != 2) throw ParseError(lineno, "expected two integers");
    std::int64_t a = to_int(tok[0], lineno), b = to_int(tok[1], lineno);
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError(lineno, "negative count in header");
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      have_header = true;
      edges.reserve(m);
      return;
    }
    if (edges.size() == m) throw ParseError(lineno, "more edges than declared");
    Vertex u = checked_vertex(a, n, lineno), v = checked_vertex(b, n, lineno);
    if (u == v) throw LoopError(u);
    edges.emplace_back(u, v);
  });
  if (!have_header) throw ParseError(0, "missing 'n m' header");
  if (edges.size() != m)
    throw ParseError(0, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(n, edges);
}

Graph parse_dimacs(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate 'p' line");
      if (tok.size() != 4) throw ParseError(lineno, "expected 'p edge n m'");
      std::int64_t nn = to_int(tok[2], lineno);
      to_int(tok[3], lineno);
      if (nn < 0) throw ParseError(lineno, "negative vertex count");
      n = static_cast<std::size_t>(nn);
      have_header = true;
      return;
    }
    if (tok[0] == "e") {
      if (!have_header) throw ParseError(lineno, "edge before 'p' line");
      if (tok.size() != 3) throw ParseError(lineno, "expected 'e u v'");
      Vertex u = checked_vertex(to_int(tok[1], lineno) - 1, n, lineno);
      Vertex v = checked_vertex(to_int(tok[2], lineno) - 1, n, lineno);
      if (u == v) throw LoopError(u);
      edges.emplace_back(u, v);
      return;
    }
    throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
  });
  if (!have_header) throw ParseError(0, "missing 'p edge n m' line");
  std::vector<std::int64_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::int64_t>(i) + 1;
  return Graph(n, edges, std::move(labels));
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  if (name == "graph6") return GraphFormat::Graph6;
  throw ParseError(0, "unknown graph format '" + std::string(name) + "'");
}

const char* format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::EdgeList: return "edgelist";
    case GraphFormat::Dimacs: return "dimacs";
    case GraphFormat::Graph6: return "graph6";
  }
  return "?";
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.empty()) throw ParseError(1, "empty graph6 string");
  for (char c : line)
    if (c < kGraph6Offset || c > 126) throw ParseError(1, "graph6 byte out of range");
  if (line[0] == 126) throw UnsupportedSize("graph6 encodings with n >= 63 are not supported");
  const std::size_t n = static_cast<std::size_t>(line[0] - kGraph6Offset);
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (line.size() != 1 + chars)
    throw ParseError(1, "graph6 length " + std::to_string(line.size()) + ", expected " +
                            std::to_string(1 + chars) + " for n=" + std::to_string(n));
  std::vector<Edge> edges;
  std::size_t k = 0;
  auto bit = [&](std::size_t idx) {
    int six = line[1 + idx / 6] - kGraph6Offset;
    return (six >> (5 - idx % 6)) & 1;
  };
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (bit(k)) edges.emplace_back(i, j);
  for (; k < chars * 6; ++k)
    if (bit(k)) throw ParseError(1, "non-zero graph6 padding bits");
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw UnsupportedSize("graph6 encodings with n >= 63 are not supported");
  std::string out(1, static_cast<char>(n + kGraph6Offset));
  int acc = 0, used = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Offset));
        acc = used = 0;
      }
    }
  if (used) out.push_back(static_cast<char>((acc << (6 - used)) + kGraph6Offset));
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList: return parse_edge_list(text);
    case GraphFormat::Dimacs: return parse_dimacs(text);
    case GraphFormat::Graph6: {
      std::string_view first;
      bool found = false;
      for_each_line(text, [&](std::size_t, std::string_view line) {
        line = strip_header(trim(line));
        if (line.empty()) return;
        if (found) throw ParseError(0, "graph6 input holds more than one graph");
        first = line;
        found = true;
      });
      if (!found) throw ParseError(0, "empty graph6 input");
      return parse_graph6(first);
    }
  }
  throw ParseError(0, "unknown graph format");
}

std::string write_graph(const Graph& g, GraphFormat format) {
  std::ostringstream os;
  switch (format) {
    case GraphFormat::EdgeList:
      os << g.order() << ' ' << g.edge_count() << '\n';
      for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
      break;
    case GraphFormat::Dimacs:
      os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
      for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
      break;
    case GraphFormat::Graph6:
      return to_graph6(g);
  }
  return os.str();
}

std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    line = strip_header(trim(line));
    if (line.empty()) return;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Error& e) {
      throw CorpusParseError("graph6 corpus line " + std::to_string(lineno) + ": " + e.what());
    }
  });
  return out;
}

}  // namespace forestweave
