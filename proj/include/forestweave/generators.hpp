#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "forestweave/embedding.hpp"
#include "forestweave/forest.hpp"
#include "forestweave/graph.hpp"
#include "forestweave/oracle.hpp"
#include "forestweave/rng.hpp"

namespace forestweave {

enum class GraphModel {
  MinDegreePad,     // sparse random graph, padded at minimum-degree vertices
  NearRegular,      // degrees d or d+1
  DisjointCliques,  // n/(d+1) disjoint copies of K_{d+1}
  TightOrder,       // MinDegreePad with n forced to d+p
};

GraphModel parse_model(std::string_view name);
const char* model_name(GraphModel m);

struct InstanceSpec {
  std::size_t n = 0;
  std::vector<std::size_t> sizes;
  GraphModel model = GraphModel::MinDegreePad;
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  Graph graph;
  Forest forest;
};

/// Host graph with minimum degree >= d = sum(sizes) and the forest with the
/// requested tree sizes. Output depends only on the spec. Throws
/// InfeasibleSpec when n < d + p (TightOrder excepted) or when
/// DisjointCliques cannot tile n with K_{d+1}.
GeneratedInstance gen_instance(const InstanceSpec& spec);

/// Uniform labeled tree with `size` edges (via a uniform Prüfer sequence).
Tree random_tree(std::size_t size, Rng& rng);
Forest random_forest(std::span<const std::size_t> sizes, std::uint64_t seed);

/// Where naive_sequential_embed gave up.
struct NaiveStuck {
  std::size_t tree;
  Vertex tree_vertex;
};

/// Trees in index order; tree vertex 0 at the lowest free vertex, then
/// connected-prefix order, each vertex at the lowest free neighbour of its
/// parent's image. No backtracking.
std::variant<Embedding, NaiveStuck> naive_sequential_embed(const Graph& g, const Forest& f);

struct NaiveFailure {
  Graph graph;
  Forest forest;
  NaiveStuck stuck;
  std::uint64_t instances_tried = 0;
};

/// Random search over small MinDegreePad instances for one that satisfies
/// the embedding hypothesis but defeats naive_sequential_embed. The budget's
/// node count bounds the number of instances tried. A hit is shrunk by
/// deleting vertices, then edges, while the property holds.
std::optional<NaiveFailure> find_naive_failure(SearchBudget budget, std::uint64_t seed);

/// Deletes vertices, then edges, of `g` while the hypothesis still holds and
/// naive_sequential_embed still gets stuck.
Graph minimize_naive_failure(Graph g, const Forest& f);

}  // namespace forestweave
