#include "forestweave/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "forestweave/errors.hpp"

namespace forestweave {

HypothesisViolation::HypothesisViolation(bool degree_short, bool n_short, std::size_t n,
                                         std::size_t min_degree, std::size_t d,
                                         std::size_t p)
    : Error(std::string("hypothesis violated (") +
            (degree_short ? "degree_short" : "n_short") + "): n=" + std::to_string(n) +
            " min_degree=" + std::to_string(min_degree) + " d=" + std::to_string(d) +
            " p=" + std::to_string(p)),
      degree_short_(degree_short),
      n_short_(n_short),
      n_(n),
      min_degree_(min_degree),
      d_(d),
      p_(p) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::int64_t> labels)
    : adj_(n, VertexSet(n)), deg_(n, 0), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n)
    throw VertexOutOfRange("label map size " + std::to_string(labels_.size()) +
                           " does not match vertex count " + std::to_string(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw VertexOutOfRange("edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw LoopError(u);
    if (adj_[u].contains(v)) continue;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++deg_[u];
    ++deg_[v];
    ++edge_count_;
  }
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph Graph::cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph(n, e);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (std::size_t v = adj_[u].next(u + 1); v != VertexSet::npos; v = adj_[u].next(v + 1))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<Vertex>* old_index) const {
  std::vector<Vertex> old = keep.members();
  std::vector<Vertex> fresh(order(), std::numeric_limits<Vertex>::max());
  for (Vertex i = 0; i < old.size(); ++i) fresh[old[i]] = i;
  std::vector<Edge> e;
  for (Vertex i = 0; i < old.size(); ++i) {
    (adj_[old[i]] & keep).for_each([&](Vertex w) {
      if (fresh[w] > i) e.emplace_back(i, fresh[w]);
    });
  }
  std::vector<std::int64_t> lab;
  if (!labels_.empty()) {
    lab.reserve(old.size());
    for (Vertex v : old) lab.push_back(labels_[v]);
  }
  if (old_index) *old_index = old;
  return Graph(old.size(), e, std::move(lab));
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw EmptyGraph();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::size_t min_degree(const Graph& g, const VertexSet& within) {
  if (within.empty()) throw EmptyGraph();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  within.for_each([&](Vertex v) { best = std::min(best, degree_within(g, v, within)); });
  return best;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  const std::size_t need = s.count();
  s.for_each([&](Vertex v) {
    if (ok && g.neighbors(v).intersection_count(s) + 1 != need) ok = false;
  });
  return ok;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
  return common_neighbors(g, s, VertexSet::full(g.order()));
}

VertexSet common_neighbors(const Graph& g, const VertexSet& s, const VertexSet& within) {
  VertexSet out = within - s;
  s.for_each([&](Vertex v) { out &= g.neighbors(v); });
  return out;
}

}  // namespace forestweave
