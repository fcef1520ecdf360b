#pragma once
// Independent, deliberately naive reference implementations used only by the
// tests. Nothing here calls into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ref {

using EdgeSet = std::set<std::pair<int, int>>;

struct SmallGraph {
  int n = 0;
  std::vector<std::vector<char>> adj;

  explicit SmallGraph(int order = 0) : n(order), adj(order, std::vector<char>(order, 0)) {}
  void add(int u, int v) { adj[u][v] = adj[v][u] = 1; }
  EdgeSet edges() const {
    EdgeSet e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adj[u][v]) e.emplace(u, v);
    return e;
  }
};

// graph6 decoder written from the format description: one byte N(n) = n + 63
// for n <= 62, then the upper triangle listed column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, most
// significant bit first, each byte offset by 63, zero-padded at the end.
inline bool decode_graph6(const std::string& line, SmallGraph& out) {
  if (line.empty()) return false;
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n < 0 || n > 62) return false;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != 1 + bytes) return false;
  std::vector<int> stream;
  for (std::size_t i = 1; i < line.size(); ++i) {
    const int c = static_cast<unsigned char>(line[i]) - 63;
    if (c < 0 || c > 63) return false;
    for (int b = 5; b >= 0; --b) stream.push_back((c >> b) & 1);
  }
  out = SmallGraph(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (stream[k++]) out.add(i, j);
  return true;
}

// A forest flattened to one vertex range: tree t owns [offset[t], offset[t+1]).
struct FlatForest {
  int order = 0;
  std::vector<int> offset;
  std::vector<std::pair<int, int>> edges;  // global vertex ids
};

// Number of injective maps of all forest vertices into the graph that carry
// every forest edge onto a graph edge. Vertices are assigned in global index
// order and an edge is checked as soon as both ends are placed.
inline std::uint64_t count_injections(const SmallGraph& g, const FlatForest& f, bool stop_at_first = false) {
  std::vector<std::vector<int>> back(f.order);  // earlier endpoints of each vertex
  for (auto [u, v] : f.edges) back[std::max(u, v)].push_back(std::min(u, v));
  std::vector<int> img(f.order, -1);
  std::vector<char> used(g.n, 0);
  std::uint64_t count = 0;
  std::function<bool(int)> rec = [&](int x) -> bool {
    if (x == f.order) {
      ++count;
      return stop_at_first;
    }
    for (int v = 0; v < g.n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int w : back[x])
        if (!g.adj[img[w]][v]) ok = false;
      if (!ok) continue;
      img[x] = v;
      used[v] = 1;
      if (rec(x + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  rec(0);
  return count;
}

// Validity of per-tree maps against the graph, by direct lookup.
inline bool valid_maps(const SmallGraph& g, const std::vector<std::vector<std::pair<int, int>>>& tree_edges,
                       const std::vector<std::vector<int>>& maps) {
  std::set<int> seen;
  for (std::size_t t = 0; t < maps.size(); ++t) {
    for (int v : maps[t]) {
      if (v < 0 || v >= g.n || !seen.insert(v).second) return false;
    }
    for (auto [a, b] : tree_edges[t])
      if (!g.adj[maps[t][a]][maps[t][b]]) return false;
  }
  return true;
}

// All labeled trees on k vertices by brute force over (k-1)-edge subsets of
// K_k that are acyclic (union-find). Feasible for k <= 5.
inline std::vector<EdgeSet> all_labeled_trees(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) pairs.emplace_back(u, v);
  std::vector<EdgeSet> out;
  const int m = static_cast<int>(pairs.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k - 1) continue;
    std::vector<int> parent(k);
    for (int i = 0; i < k; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    bool acyclic = true;
    EdgeSet e;
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      int a = find(pairs[i].first), b = find(pairs[i].second);
      if (a == b) acyclic = false;
      parent[a] = b;
      e.insert(pairs[i]);
    }
    if (acyclic) out.push_back(e);
  }
  return out;
}

}  // namespace ref
