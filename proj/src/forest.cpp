#include "forestweave/forest.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>

#include "forestweave/errors.hpp"

namespace forestweave {

Tree::Tree(std::size_t k, std::span<const Edge> edges) : nbrs_(k) {
  if (k == 0) throw InvalidTree("tree must have at least one vertex");
  if (edges.size() != k - 1)
    throw InvalidTree("tree on " + std::to_string(k) + " vertices needs " + std::to_string(k - 1) +
                      " edges, got " + std::to_string(edges.size()));
  // Union-find rejects cycles; k-1 acyclic edges on k vertices are connected.
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    if (u >= k || v >= k)
      throw InvalidTree("edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 0.." +
                        std::to_string(k - 1));
    if (u == v) throw InvalidTree("loop at " + std::to_string(u));
    auto ru = find(u), rv = find(v);
    if (ru == rv) throw InvalidTree("edge " + std::to_string(u) + "-" + std::to_string(v) + " closes a cycle");
    parent[ru] = rv;
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
  std::sort(edges_.begin(), edges_.end());
  bfs_order_ = connected_prefix_order(*this, 0);
}

Tree Tree::path(std::size_t k) {
  std::vector<Edge> e;
  for (Vertex i = 1; i < k; ++i) e.emplace_back(i - 1, i);
  return Tree(k, e);
}

Tree Tree::star(std::size_t k) {
  std::vector<Edge> e;
  for (Vertex i = 1; i < k; ++i) e.emplace_back(0, i);
  return Tree(k, e);
}

bool Tree::is_star() const {
  if (order() <= 2) return true;
  for (Vertex v = 0; v < order(); ++v)
    if (degree(v) == order() - 1) return true;
  return false;
}

std::string Tree::to_string() const {
  if (edges_.empty()) return "0";
  std::string out;
  for (auto [u, v] : edges_) {
    if (!out.empty()) out += ',';
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

Tree parse_tree(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t max_label = 0;
  bool any = false;
  auto num = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw ParseError(1, "bad tree vertex '" + std::string(s) + "'");
    max_label = std::max<std::size_t>(max_label, v);
    any = true;
    return v;
  };
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    auto dash = tok.find('-');
    if (dash == std::string_view::npos) {
      num(tok);
    } else {
      Vertex u = num(tok.substr(0, dash));
      Vertex v = num(tok.substr(dash + 1));
      edges.emplace_back(u, v);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (!any) return Tree::single_vertex();
  return Tree(max_label + 1, edges);
}

std::vector<Vertex> connected_prefix_order(const Tree& t, Vertex root) {
  std::vector<Vertex> order;
  order.reserve(t.order());
  std::vector<char> seen(t.order(), 0);
  order.push_back(root);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex w : t.neighbors(order[head]))
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  return order;
}

Tree prufer_decode(std::span<const Vertex> seq, std::size_t k) {
  if (k == 0) throw BadLength("Prüfer decoding needs k >= 1");
  const std::size_t want = k >= 2 ? k - 2 : 0;
  if (seq.size() != want)
    throw BadLength("Prüfer sequence for k=" + std::to_string(k) + " must have length " +
                    std::to_string(want) + ", got " + std::to_string(seq.size()));
  for (Vertex s : seq)
    if (s >= k) throw LabelOutOfRange("Prüfer label " + std::to_string(s) + " outside 0.." + std::to_string(k - 1));
  if (k == 1) return Tree::single_vertex();

  std::vector<std::size_t> degree(k, 1);
  for (Vertex s : seq) ++degree[s];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < k; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  edges.reserve(k - 1);
  for (Vertex s : seq) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1) leaves.insert(s);
  }
  Vertex u = *leaves.begin();
  Vertex v = *std::next(leaves.begin());
  edges.emplace_back(u, v);
  return Tree(k, edges);
}

std::vector<Vertex> prufer_encode(const Tree& t) {
  const std::size_t k = t.order();
  std::vector<Vertex> seq;
  if (k <= 2) return seq;
  std::vector<std::size_t> degree(k);
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < k; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<char> removed(k, 0);
  seq.reserve(k - 2);
  while (seq.size() < k - 2) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    removed[leaf] = 1;
    for (Vertex w : t.neighbors(leaf))
      if (!removed[w]) {
        seq.push_back(w);
        if (--degree[w] == 1) leaves.insert(w);
        break;
      }
  }
  return seq;
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)), order_(trees_.size()) {
  for (const auto& t : trees_) d_ += t.size();
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) { return trees_[a].size() > trees_[b].size(); });
}

std::string Forest::to_string() const {
  std::string out;
  for (const auto& t : trees_) out += t.to_string() + "\n";
  return out;
}

Forest parse_forest(std::string_view text) {
  std::vector<Tree> trees;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty() && !line.starts_with('#')) {
      try {
        trees.push_back(parse_tree(line));
      } catch (const ParseError& e) {
        throw ParseError(lineno, e.reason());
      }
    }
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return Forest(std::move(trees));
}

}  // namespace forestweave
