#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "forestweave/vertex_set.hpp"

namespace forestweave {

// Steps of the construction, in the pre-order the recursion emits them.
// `tree` is always the forest index of the largest tree at that level.
// A level with one tree emits GreedyBase. Otherwise it emits CliqueGrown,
// then either AvenueA followed by the sub-level, or the sub-level followed
// by one closing step (UnusedXVertex, ObsKNeighbor, ObsSwap, FallbackS).

/// Lone tree embedded by greedy extension.
struct GreedyBase {
  std::size_t tree;
  friend bool operator==(const GreedyBase&, const GreedyBase&) = default;
};

/// Clique growth from `seed`; each entry of `universal` was adjacent to the
/// whole greedy image built on the clique so far.
struct CliqueGrown {
  std::size_t tree;
  Vertex seed;
  std::vector<Vertex> universal;
  friend bool operator==(const CliqueGrown&, const CliqueGrown&) = default;
};

/// The greedy image (listed in tree-vertex order) had no universal vertex;
/// it is removed and the remaining trees recurse on what is left.
struct AvenueA {
  std::size_t tree;
  std::vector<Vertex> removed;
  friend bool operator==(const AvenueA&, const AvenueA&) = default;
};

/// Some vertex z of X was left unused by the smaller trees.
struct UnusedXVertex {
  std::size_t tree;
  Vertex z;
  friend bool operator==(const UnusedXVertex&, const UnusedXVertex&) = default;
};

/// Unused vertex s adjacent to clique vertex k.
struct ObsKNeighbor {
  std::size_t tree;
  Vertex s;
  Vertex k;
  friend bool operator==(const ObsKNeighbor&, const ObsKNeighbor&) = default;
};

/// Tree `swapped_tree` was re-embedded through s, freeing `freed` in X.
/// `near_full` distinguishes the entirely-in-X remap from the full swap.
struct ObsSwap {
  std::size_t tree;
  Vertex s;
  std::size_t swapped_tree;
  Vertex freed;
  bool near_full;
  friend bool operator==(const ObsSwap&, const ObsSwap&) = default;
};

/// No opportunity anywhere in S; the tree was embedded greedily inside S,
/// whose induced minimum degree was `min_degree`.
struct FallbackS {
  std::size_t tree;
  std::size_t min_degree;
  friend bool operator==(const FallbackS&, const FallbackS&) = default;
};

using CertificateStep =
    std::variant<GreedyBase, CliqueGrown, AvenueA, UnusedXVertex, ObsKNeighbor, ObsSwap, FallbackS>;

const char* step_name(const CertificateStep& step);

struct Certificate {
  std::vector<CertificateStep> steps;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

}  // namespace forestweave
