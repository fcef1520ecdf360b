#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "forestweave/embedding.hpp"
#include "forestweave/forest.hpp"
#include "forestweave/graph.hpp"

namespace forestweave {

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::milliseconds timeout{30'000};

  /// "NODES" or "NODES,SECONDS"; throws ParseError. Both must be positive.
  static SearchBudget parse(std::string_view text);
  /// Defaults, overridden by FORESTWEAVE_BUDGET when set.
  static SearchBudget from_env();

  std::string to_string() const;
};

enum class SearchStatus { Found, NotFound, BudgetExceeded };
const char* status_name(SearchStatus s);

struct OracleResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;
};

/// Exact backtracking search for an embedding of `f` into `g`; no
/// hypothesis is assumed. NotFound is only reported after a complete search.
///
/// Trees are placed largest first, each in connected-prefix order from its
/// canonical root. Candidates must be unused, adjacent to the image of the
/// tree parent, and of graph degree at least the tree degree. Among
/// isomorphic trees the root images are forced to increase.
OracleResult oracle_embed(const Graph& g, const Forest& f, SearchBudget budget = {});

struct CountResult {
  bool complete = true;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

/// Number of embeddings counted under the same symmetry rule: for every
/// class of mutually isomorphic trees only the assignments whose canonical
/// root images increase with tree index are counted. Distinct trees and
/// automorphisms inside a tree are not quotiented. `complete` is false when
/// the budget ran out first.
CountResult count_embeddings(const Graph& g, const Forest& f, SearchBudget budget = {});

/// Canonical rooted code of a tree at its centre (the smaller code when the
/// tree is bicentral). Two trees are isomorphic iff their codes are equal.
struct TreeShape {
  std::string code;
  Vertex root = 0;
};
TreeShape canonical_shape(const Tree& t);

}  // namespace forestweave
