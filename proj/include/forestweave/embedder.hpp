#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "forestweave/certificate.hpp"
#include "forestweave/embedding.hpp"
#include "forestweave/forest.hpp"
#include "forestweave/graph.hpp"

namespace forestweave {

/// Tree vertex -> graph vertex; kUnmapped marks vertices not yet placed.
using TreeMap = std::vector<Vertex>;
inline constexpr Vertex kUnmapped = std::numeric_limits<Vertex>::max();

// ---------------------------------------------------------------------------
// Single-tree growth.

/// Extends `partial` to all of `t` one vertex at a time: each unplaced tree
/// vertex adjacent to a placed one goes to the lowest-index free graph
/// neighbour of its placed neighbour's image. Images avoid `forbidden`.
///
/// The placed part of `partial` must induce a connected subtree. An empty
/// partial roots tree vertex 0 at the lowest vertex outside `forbidden`.
/// Throws ExtensionStuck when some image has no free neighbour left, which
/// cannot happen while the graph minus `forbidden` has minimum degree at
/// least t.size().
TreeMap greedy_extend(const Graph& g, const Tree& t, TreeMap partial, const VertexSet& forbidden);

/// greedy_extend with the complementary convention: images stay inside `allowed`.
TreeMap greedy_extend_within(const Graph& g, const Tree& t, TreeMap partial, const VertexSet& allowed);

/// Embedding of `t` with tree vertex x at graph vertex y.
TreeMap embed_tree_rooted_at(const Graph& g, const Tree& t, Vertex x, Vertex y);

/// Lowest vertex outside `image` adjacent to all of it, if any.
std::optional<Vertex> find_universal_vertex(const Graph& g, const VertexSet& image);
std::optional<Vertex> find_universal_vertex(const Graph& g, const VertexSet& image,
                                            const VertexSet& within);

// ---------------------------------------------------------------------------
// Clique growth.

struct CliqueFound {
  VertexSet clique;
  Vertex seed;
  std::vector<Vertex> universal;
};

/// A greedy embedding of the largest tree whose image has no universal vertex.
struct NoUniversal {
  TreeMap map;
  Vertex seed;
  std::vector<Vertex> universal;
};

using CliqueOutcome = std::variant<CliqueFound, NoUniversal>;

/// Starts from the maximum-degree vertex (lowest index on ties) and grows a
/// clique K until |K| >= a. Each round embeds the first |K| vertices of the
/// connected-prefix order of `t1` into K, extends greedily, and looks for a
/// universal vertex of the image; one is always adjacent to all of K and
/// joins it. Without one the round's embedding is returned instead.
CliqueOutcome grow_clique_or_recurse(const Graph& g, const Tree& t1, std::size_t a);
CliqueOutcome grow_clique_or_recurse(const Graph& g, const Tree& t1, std::size_t a,
                                     const VertexSet& within);

/// Embeds `t` (with |K| = t.size()) into the clique K plus one outside
/// vertex z: the lowest-index leaf goes to z, its neighbour to the lowest K
/// vertex adjacent to z, the remaining tree vertices ascending onto the
/// remaining K vertices ascending. Throws NoLeafAnchor if z has no K neighbour.
TreeMap embed_tree_via_clique(const Graph& g, const VertexSet& clique, Vertex z, const Tree& t);

// ---------------------------------------------------------------------------
// Phase two: the smaller trees are embedded away from K and cover all of X.

enum class TreeClass : int {
  EntirelyInX = 1,  // image inside X
  XAndY = 2,        // at least two vertices in X, at least one outside
  OneInX = 3,       // exactly one vertex in X
  EntirelyInY = 4,  // no vertex in X
};

struct Classification {
  /// q[0..3] = q1..q4.
  std::array<std::size_t, 4> q{};
  /// Class per forest tree index; empty for trees the embedding lacks.
  std::vector<std::optional<TreeClass>> classes;
};

/// Classifies every embedded tree of `g` by how its image meets X.
Classification classify_trees(const Embedding& g, const VertexSet& x_set);

struct KNeighbor {
  Vertex k;
};
/// Image meets X, leaves X, and lies inside N(s).
struct FullSwap {
  std::size_t tree;
};
/// Image inside X and at most one image vertex outside N(s).
struct NearFullRemap {
  std::size_t tree;
  std::optional<Vertex> missed;
};
using Opportunity = std::variant<KNeighbor, FullSwap, NearFullRemap>;

/// First applicable opportunity for unused vertex s: a K neighbour, else
/// the first tree in index order admitting a full swap or near-full remap.
std::optional<Opportunity> find_opportunity(const Graph& g, const Embedding& emb,
                                            const VertexSet& clique, const VertexSet& x_set,
                                            Vertex s);

struct SwapResult {
  Embedding embedding;
  Vertex freed;
};

/// Moves one tree vertex of the opportunity's tree onto s, freeing a vertex
/// of X. FullSwap moves the preimage of the lowest image vertex in X;
/// NearFullRemap moves the preimage of the missed vertex, or tree vertex 0
/// when s sees the whole image. The result is checked
/// against `f`; failure throws InvalidOpportunity.
SwapResult apply_swap(const Graph& g, const Forest& f, Embedding emb, const Opportunity& opp,
                      Vertex s, const VertexSet& x_set);

/// Maps each listed (single-vertex) tree to the lowest unused vertex.
/// Throws NotEnoughVertices.
Embedding place_isolated_trees(const Graph& g, Embedding emb, std::span<const std::size_t> trees);

/// The K, x, X, Y, S partition of a phase-two level.
struct PhaseTwoContext {
  VertexSet clique;  // K
  Vertex x = 0;
  VertexSet x_set;   // X
  VertexSet y_set;   // Y
  VertexSet s_set;   // S
  std::array<std::size_t, 4> q{};
  std::size_t a = 0;
  std::size_t d = 0;
  std::size_t p = 0;
};

/// Per-vertex degree split of the fallback branch.
struct FallbackCounts {
  Vertex s;
  std::size_t in_clique;  // |N(s) ∩ K|
  std::size_t in_xy;      // |N(s) ∩ (X ∪ Y)|
  std::size_t in_s;       // |N(s) ∩ S|
};

/// Optional instrumentation for embed_forest. Counters accumulate across calls.
struct EmbedTrace {
  std::size_t levels = 0;
  std::size_t greedy_base = 0;
  std::size_t avenue_a = 0;
  std::size_t clique_route = 0;
  std::size_t unused_x = 0;
  std::size_t k_neighbor = 0;
  std::size_t full_swap = 0;
  std::size_t near_full_remap = 0;
  std::size_t fallback = 0;
  std::size_t lemma2_checks = 0;
  std::size_t phase_two_checks = 0;
  std::size_t fallback_vertex_checks = 0;

  /// Active vertices, removed image, and the level's d and a.
  std::function<void(const VertexSet&, const VertexSet&, std::size_t, std::size_t)> on_avenue_a;
  std::function<void(const PhaseTwoContext&)> on_phase_two;
  std::function<void(const PhaseTwoContext&, const FallbackCounts&)> on_fallback_vertex;
};

struct EmbedResult {
  Embedding embedding;
  Certificate certificate;
};

/// Throws HypothesisViolation unless n >= d + p and min degree >= d.
void check_hypothesis(const Graph& g, const Forest& f);
bool hypothesis_holds(const Graph& g, const Forest& f);

/// Embeds every tree of `f` into `g`.
///
/// Requires n >= d + p and minimum degree >= d (HypothesisViolation
/// otherwise). The result is verified before it is returned; every counting
/// step of the construction is asserted along the way and a failed assertion
/// throws an InternalLogicError subclass (CountingBreach, ExtensionStuck, ...).
EmbedResult embed_forest(const Graph& g, const Forest& f, EmbedTrace* trace = nullptr);

/// Rebuilds the embedding by following `cert` instead of searching, checking
/// every recorded choice against the graph. Throws CertificateMismatch.
Embedding replay_certificate(const Graph& g, const Forest& f, const Certificate& cert);

}  // namespace forestweave
