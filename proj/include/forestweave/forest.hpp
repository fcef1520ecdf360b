#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forestweave/graph.hpp"

namespace forestweave {

/// Labeled tree on vertices 0..k-1. Validated on construction: exactly
/// k-1 edges, no cycle, connected. Throws InvalidTree.
class Tree {
 public:
  Tree() : Tree(1, {}) {}
  Tree(std::size_t k, std::span<const Edge> edges);

  static Tree single_vertex() { return Tree(); }
  static Tree path(std::size_t k);
  /// Star with centre 0 and k-1 leaves.
  static Tree star(std::size_t k);

  std::size_t order() const { return nbrs_.size(); }
  /// Edge count; the "size" of the tree.
  std::size_t size() const { return order() - 1; }

  const std::vector<Edge>& edges() const { return edges_; }
  /// Neighbours in ascending order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  std::size_t degree(Vertex v) const { return nbrs_[v].size(); }
  bool is_star() const;

  /// Connected-prefix order from vertex 0, cached.
  const std::vector<Vertex>& bfs_order() const { return bfs_order_; }

  /// "u-v,u-v,..." with a lone "0" for the single-vertex tree.
  std::string to_string() const;

  friend bool operator==(const Tree& a, const Tree& b) { return a.nbrs_ == b.nbrs_; }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<Vertex> bfs_order_;
};

/// Parses "u-v,u-v,..." (a bare "u" token names a vertex without edges);
/// the order is the largest label + 1. Throws ParseError or InvalidTree.
Tree parse_tree(std::string_view text);

/// Breadth-first order from `root`, ties broken by ascending index: every
/// prefix induces a connected subtree.
std::vector<Vertex> connected_prefix_order(const Tree& t, Vertex root);

/// Tree with the given Prüfer sequence; |seq| must be k-2 (empty for k <= 2).
Tree prufer_decode(std::span<const Vertex> seq, std::size_t k);
std::vector<Vertex> prufer_encode(const Tree& t);

/// Ordered collection of trees with cached size statistics.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees);

  std::size_t tree_count() const { return trees_.size(); }
  const Tree& tree(std::size_t i) const { return trees_[i]; }
  const std::vector<Tree>& trees() const { return trees_; }
  /// a_i, the edge count of tree i.
  std::size_t size_of(std::size_t i) const { return trees_[i].size(); }
  /// d = sum of a_i.
  std::size_t total_size() const { return d_; }
  /// p.
  std::size_t p() const { return trees_.size(); }
  /// Total vertex count, d + p.
  std::size_t order() const { return d_ + trees_.size(); }
  /// Tree indices by size descending, ties by ascending index.
  const std::vector<std::size_t>& by_size() const { return order_; }

  /// One tree per line, in Tree::to_string form.
  std::string to_string() const;

 private:
  std::vector<Tree> trees_;
  std::size_t d_ = 0;
  std::vector<std::size_t> order_;
};

/// One tree per non-empty line; see parse_tree.
Forest parse_forest(std::string_view text);

}  // namespace forestweave
