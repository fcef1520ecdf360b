#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "forestweave/forest.hpp"
#include "forestweave/graph.hpp"
#include "forestweave/instance_io.hpp"
#include "forestweave/oracle.hpp"

namespace forestweave {

enum class VerdictStatus { Consistent, CounterexampleCandidate, Skipped };
const char* verdict_name(VerdictStatus s);

/// Outcome of testing one (graph, forest) pair against the average-degree
/// form of the embedding statement.
struct ConjectureVerdict {
  std::string id;
  /// 2|E| >= d n and n >= d + p.
  bool hypothesis_holds = false;
  /// Additionally min degree >= d: the proved case.
  bool min_degree_holds = false;
  bool embedding_found = false;
  VerdictStatus status = VerdictStatus::Consistent;
  std::uint64_t nodes = 0;
};

/// Consults the oracle only when the hypothesis holds; the average degree
/// is compared as the integer inequality 2|E| >= d n.
ConjectureVerdict check_conjecture(const Graph& g, const Forest& f, SearchBudget budget, std::string id = {});

/// One representative per isomorphism class of trees with `order` vertices,
/// sorted by canonical code.
std::vector<Tree> unlabeled_trees(std::size_t order);

/// Forests up to isomorphism with total order d + p in [min_order, max_order].
/// Orders ascend; within one order the tree-order partitions come in
/// decreasing lexicographic order, each part a multiset of unlabeled trees.
std::vector<Forest> enumerate_forests(std::size_t min_order, std::size_t max_order, bool stars_only = false);

/// "0-1,1-2;0-1;0": trees joined by ';'.
std::string forest_code(const Forest& f);
Forest parse_forest_code(std::string_view code);

struct SweepOptions {
  SearchBudget budget;
  std::size_t jobs = 1;
  /// Seed of a sampled corpus, carried into every record (0 for files).
  std::uint64_t seed = 0;
  /// Emit a record for every instance rather than only candidates and skips.
  bool all_records = true;
};

struct SweepReport {
  std::size_t instances = 0;
  std::size_t vacuous = 0;     // hypothesis fails; oracle not consulted
  std::size_t consistent = 0;  // includes vacuous
  std::size_t candidates = 0;
  std::size_t skipped = 0;
  std::size_t min_degree_instances = 0;
  std::vector<Json> candidate_records;

  Json summary() const;
};

/// Every graph of `corpus` against every forest. Records stream to
/// `on_record` in corpus-major order whatever the job count. A candidate
/// that also satisfies the minimum-degree bound contradicts the proved
/// statement and throws InternalLogicError.
SweepReport sweep(std::span<const Graph> corpus, std::span<const Forest> forests, const SweepOptions& options,
                  const std::function<void(const Json&)>& on_record = {});

Json verdict_record(const ConjectureVerdict& v, const Graph& g, const Forest& f, const SearchBudget& budget,
                   std::uint64_t seed = 0);

}  // namespace forestweave
