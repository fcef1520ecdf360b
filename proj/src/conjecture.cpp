#include "forestweave/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "forestweave/errors.hpp"

namespace forestweave {
namespace {

// Partitions of k into parts <= max_part, non-increasing, in decreasing
// lexicographic order.
void partitions(std::size_t k, std::size_t max_part, std::vector<std::size_t>& prefix,
                std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t part = std::min(k, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(k - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Multisets of `count` indices from 0..choices-1, non-decreasing.
void multisets(std::size_t count, std::size_t choices, std::size_t from, std::vector<std::size_t>& prefix,
               std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() == count) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t c = from; c < choices; ++c) {
    prefix.push_back(c);
    multisets(count, choices, c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const char* verdict_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Consistent: return "Consistent";
    case VerdictStatus::CounterexampleCandidate: return "CounterexampleCandidate";
    case VerdictStatus::Skipped: return "Skipped";
  }
  return "?";
}

ConjectureVerdict check_conjecture(const Graph& g, const Forest& f, SearchBudget budget, std::string id) {
  ConjectureVerdict v;
  v.id = std::move(id);
  const std::size_t n = g.order(), d = f.total_size(), p = f.p();
  v.hypothesis_holds = n >= d + p && 2 * g.edge_count() >= d * n;
  v.min_degree_holds = v.hypothesis_holds && (n == 0 || min_degree(g) >= d);
  if (!v.hypothesis_holds) {
    v.status = VerdictStatus::Consistent;
    return v;
  }
  OracleResult r = oracle_embed(g, f, budget);
  v.nodes = r.nodes;
  switch (r.status) {
    case SearchStatus::Found:
      v.embedding_found = true;
      v.status = VerdictStatus::Consistent;
      break;
    case SearchStatus::NotFound: v.status = VerdictStatus::CounterexampleCandidate; break;
    case SearchStatus::BudgetExceeded: v.status = VerdictStatus::Skipped; break;
  }
  return v;
}

std::vector<Tree> unlabeled_trees(std::size_t order) {
  if (order == 0) return {};
  std::map<std::string, Tree> level{{canonical_shape(Tree::single_vertex()).code, Tree::single_vertex()}};
  for (std::size_t k = 2; k <= order; ++k) {
    std::map<std::string, Tree> next;
    for (const auto& [code, t] : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        std::vector<Edge> e = t.edges();
        e.emplace_back(v, static_cast<Vertex>(t.order()));
        Tree grown(t.order() + 1, e);
        next.try_emplace(canonical_shape(grown).code, std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Tree> out;
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

std::vector<Forest> enumerate_forests(std::size_t min_order, std::size_t max_order, bool stars_only) {
  std::vector<std::vector<Tree>> by_order(max_order + 1);
  for (std::size_t k = 1; k <= max_order; ++k) {
    for (auto& t : unlabeled_trees(k))
      if (!stars_only || t.is_star()) by_order[k].push_back(std::move(t));
  }
  std::vector<Forest> out;
  for (std::size_t k = std::max<std::size_t>(min_order, 1); k <= max_order; ++k) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> prefix;
    partitions(k, k, prefix, parts);
    for (const auto& part : parts) {
      // Groups of equal part sizes, each filled by a multiset of trees.
      std::vector<std::pair<std::size_t, std::vector<std::vector<std::size_t>>>> groups;
      for (std::size_t i = 0; i < part.size();) {
        std::size_t j = i;
        while (j < part.size() && part[j] == part[i]) ++j;
        std::vector<std::vector<std::size_t>> choices;
        std::vector<std::size_t> pre;
        multisets(j - i, by_order[part[i]].size(), 0, pre, choices);
        groups.emplace_back(part[i], std::move(choices));
        i = j;
      }
      std::vector<std::size_t> pick(groups.size(), 0);
      bool any = std::all_of(groups.begin(), groups.end(), [](const auto& g) { return !g.second.empty(); });
      while (any) {
        std::vector<Tree> trees;
        for (std::size_t gi = 0; gi < groups.size(); ++gi)
          for (std::size_t idx : groups[gi].second[pick[gi]]) trees.push_back(by_order[groups[gi].first][idx]);
        out.emplace_back(std::move(trees));
        std::size_t gi = groups.size();
        while (gi-- > 0) {
          if (++pick[gi] < groups[gi].second.size()) break;
          pick[gi] = 0;
        }
        if (gi == static_cast<std::size_t>(-1)) break;
      }
    }
  }
  return out;
}

std::string forest_code(const Forest& f) {
  std::string out;
  for (std::size_t t = 0; t < f.tree_count(); ++t) {
    if (t) out += ';';
    out += f.tree(t).to_string();
  }
  return out;
}

Forest parse_forest_code(std::string_view code) {
  std::vector<Tree> trees;
  while (!code.empty()) {
    auto semi = code.find(';');
    trees.push_back(parse_tree(code.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    code.remove_prefix(semi + 1);
  }
  return Forest(std::move(trees));
}

Json verdict_record(const ConjectureVerdict& v, const Graph& g, const Forest& f, const SearchBudget& budget,
                   std::uint64_t seed) {
  return Json{{"id", v.id},
              {"graph6", to_graph6(g)},
              {"forest", forest_code(f)},
              {"seed", seed},
              {"budget", budget.to_string()},
              {"hypothesis_holds", v.hypothesis_holds},
              {"min_degree_holds", v.min_degree_holds},
              {"embedding_found", v.embedding_found},
              {"status", verdict_name(v.status)},
              {"nodes", v.nodes}};
}

Json SweepReport::summary() const {
  return Json{{"summary", true},
              {"instances", instances},
              {"vacuous", vacuous},
              {"consistent", consistent},
              {"counterexample_candidates", candidates},
              {"skipped", skipped},
              {"min_degree_instances", min_degree_instances}};
}

SweepReport sweep(std::span<const Graph> corpus, std::span<const Forest> forests, const SweepOptions& options,
                  const std::function<void(const Json&)>& on_record) {
  const std::size_t total = corpus.size() * forests.size();
  std::vector<ConjectureVerdict> verdicts(total);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const std::size_t gi = i / forests.size(), fi = i % forests.size();
      verdicts[i] = check_conjecture(corpus[gi], forests[fi], options.budget,
                                     "g" + std::to_string(gi) + "/f" + std::to_string(fi));
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(work);
  }

  SweepReport report;
  for (std::size_t i = 0; i < total; ++i) {
    const auto& v = verdicts[i];
    const Graph& g = corpus[i / forests.size()];
    const Forest& f = forests[i % forests.size()];
    ++report.instances;
    if (!v.hypothesis_holds) ++report.vacuous;
    if (v.min_degree_holds) ++report.min_degree_instances;
    switch (v.status) {
      case VerdictStatus::Consistent: ++report.consistent; break;
      case VerdictStatus::CounterexampleCandidate: ++report.candidates; break;
      case VerdictStatus::Skipped: ++report.skipped; break;
    }
    const bool notable = v.status != VerdictStatus::Consistent;
    if (notable || options.all_records) {
      Json rec = verdict_record(v, g, f, options.budget, options.seed);
      if (v.status == VerdictStatus::CounterexampleCandidate) report.candidate_records.push_back(rec);
      if (on_record) on_record(rec);
    }
    if (v.status == VerdictStatus::CounterexampleCandidate && v.min_degree_holds)
      throw InternalLogicError("oracle found no embedding although min degree >= d and n >= d+p: " +
                               to_graph6(g) + " / " + forest_code(f));
  }
  return report;
}

}  // namespace forestweave
