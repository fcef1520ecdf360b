#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "forestweave/vertex_set.hpp"

namespace forestweave {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on dense vertices 0..n-1.
///
/// Adjacency is one VertexSet per vertex, so neighbourhood intersections
/// and counts are word-parallel. Duplicate edges collapse; loops throw
/// LoopError; endpoints >= n throw VertexOutOfRange.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const Edge> edges,
        std::vector<std::int64_t> labels = {});

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return deg_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Original label of a vertex (the input id before re-indexing).
  std::int64_t label(Vertex v) const { return labels_.empty() ? v : labels_[v]; }
  const std::vector<std::int64_t>& labels() const { return labels_; }

  /// Subgraph induced by `keep`, re-indexed densely in ascending order.
  /// `old_index`, if given, receives the original index of every new vertex.
  Graph induced(const VertexSet& keep, std::vector<Vertex>* old_index = nullptr) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::size_t> deg_;
  std::size_t edge_count_ = 0;
  std::vector<std::int64_t> labels_;
};

/// Minimum degree; throws EmptyGraph when n = 0.
std::size_t min_degree(const Graph& g);

/// Minimum degree of the subgraph induced by `within`; throws EmptyGraph
/// when `within` is empty.
std::size_t min_degree(const Graph& g, const VertexSet& within);

/// |N(v) ∩ within|.
inline std::size_t degree_within(const Graph& g, Vertex v, const VertexSet& within) {
  return g.neighbors(v).intersection_count(within);
}

bool is_clique(const Graph& g, const VertexSet& s);

/// { v ∉ S : S ⊆ N(v) }.
VertexSet common_neighbors(const Graph& g, const VertexSet& s);

/// common_neighbors restricted to `within`.
VertexSet common_neighbors(const Graph& g, const VertexSet& s, const VertexSet& within);

}  // namespace forestweave
