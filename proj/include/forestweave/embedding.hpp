#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "forestweave/forest.hpp"
#include "forestweave/graph.hpp"

namespace forestweave {

/// Per-tree vertex maps into a host graph. `maps[i][x]` is the image of
/// vertex x of tree i; an empty map means tree i is not (yet) embedded.
/// `used` is the union of all images.
struct Embedding {
  std::vector<std::vector<Vertex>> maps;
  VertexSet used;

  Embedding() = default;
  Embedding(std::size_t tree_count, std::size_t graph_order)
      : maps(tree_count), used(graph_order) {}

  bool has(std::size_t tree) const { return !maps[tree].empty(); }

  /// Installs a map for `tree`, marking its images used.
  void assign(std::size_t tree, std::vector<Vertex> map);
  /// Removes the map for `tree`, releasing its images.
  void release(std::size_t tree);

  VertexSet image(std::size_t tree) const;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> violations;

  explicit operator bool() const { return ok; }
};

/// Checks that every tree is mapped, the maps are globally injective, and
/// every tree edge lands on a graph edge.
VerifyReport verify_embedding(const Graph& g, const Forest& f, const Embedding& emb);

}  // namespace forestweave
