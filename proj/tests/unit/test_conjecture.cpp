#include <sstream>

#include "bridge.hpp"
#include "doctest.h"
#include "forestweave/conjecture.hpp"
#include "forestweave/errors.hpp"
#include "forestweave/generators.hpp"
#include "forestweave/graph_io.hpp"

using namespace forestweave;

namespace {

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

}  // namespace

TEST_SUITE("conjecture_lab") {
  TEST_CASE("check_conjecture examples") {
    auto k4 = check_conjecture(Graph::complete(4), Forest({Tree::path(2), Tree::path(2)}), {});
    CHECK(k4.hypothesis_holds);
    CHECK(k4.embedding_found);
    CHECK(k4.status == VerdictStatus::Consistent);

    auto c5 = check_conjecture(Graph::cycle(5), Forest({Tree::path(4)}), {});
    CHECK_FALSE(c5.hypothesis_holds);
    CHECK(c5.status == VerdictStatus::Consistent);
    CHECK(c5.nodes == 0);

    for (std::size_t d = 2; d <= 6; ++d) {
      auto s = check_conjecture(star_graph(d), Forest({Tree::star(d + 1)}), {});
      CHECK_FALSE(s.hypothesis_holds);
      CHECK(s.nodes == 0);
    }
  }

  TEST_CASE("average degree is compared exactly") {
    // 2|E| = 8 = d n with d = 2, n = 4: the bound holds with equality.
    Graph c4 = Graph::cycle(4);
    CHECK(check_conjecture(c4, Forest({Tree::path(3)}), {}).hypothesis_holds);
    // one edge fewer: 6 < 8
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}};
    CHECK_FALSE(check_conjecture(Graph(4, e), Forest({Tree::path(3)}), {}).hypothesis_holds);
  }

  TEST_CASE("a single star embeds whenever the average degree reaches d") {
    Rng rng(31, 0);
    std::size_t applicable = 0;
    for (int i = 0; i < 2000; ++i) {
      const std::size_t n = 2 + rng.below(12);
      std::vector<Edge> e;
      const std::size_t density = rng.below(100);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (rng.below(100) < density) e.emplace_back(u, v);
      Graph g(n, e);
      const std::size_t d = 1 + rng.below(n - 1);
      auto v = check_conjecture(g, Forest({Tree::star(d + 1)}), {});
      if (!v.hypothesis_holds) continue;
      ++applicable;
      CHECK(v.embedding_found);
      std::size_t max_deg = 0;
      for (Vertex x = 0; x < n; ++x) max_deg = std::max(max_deg, g.degree(x));
      CHECK(max_deg >= d);
    }
    CHECK(applicable > 200);
  }

  TEST_CASE("forest enumeration") {
    // unlabeled forests on k vertices: 1, 2, 3, 6, 10, 20, 37
    const std::size_t expected[] = {0, 1, 2, 3, 6, 10, 20, 37};
    for (std::size_t k = 1; k <= 7; ++k) CHECK(enumerate_forests(k, k).size() == expected[k]);
    auto four = enumerate_forests(4, 4);
    // partitions of 4 in decreasing lexicographic order: 4, 3+1, 2+2, 2+1+1, 1+1+1+1
    std::vector<std::size_t> first_tree;
    for (const auto& f : four) first_tree.push_back(f.tree(0).order());
    CHECK(first_tree == std::vector<std::size_t>{4, 4, 3, 2, 2, 1});
    for (const auto& f : enumerate_forests(1, 7, true))
      for (const auto& t : f.trees()) CHECK(t.is_star());
    CHECK(parse_forest_code(forest_code(four[3])).trees() == four[3].trees());
  }

  TEST_CASE("empty corpus gives an empty report") {
    std::vector<Graph> none;
    auto forests = enumerate_forests(1, 3);
    auto rep = sweep(none, forests, {});
    CHECK(rep.instances == 0);
    CHECK(rep.candidates == 0);
    CHECK(rep.summary()["instances"] == 0);
  }

  TEST_CASE("records are replayable and independent of the job count") {
    auto corpus = parse_graph6_stream(bridge::read_data("graphs_n1-7.g6"));
    corpus.resize(300);
    auto forests = enumerate_forests(2, 5);
    std::vector<std::string> one, four;
    SweepOptions o1;
    auto r1 = sweep(corpus, forests, o1, [&](const Json& j) { one.push_back(j.dump()); });
    SweepOptions o4;
    o4.jobs = 4;
    auto r4 = sweep(corpus, forests, o4, [&](const Json& j) { four.push_back(j.dump()); });
    CHECK(one == four);
    CHECK(r1.summary() == r4.summary());
    CHECK(r1.candidates == 0);

    for (std::size_t i = 0; i < one.size(); i += 97) {
      Json rec = Json::parse(one[i]);
      Graph g = parse_graph6(rec["graph6"].get<std::string>());
      Forest f = parse_forest_code(rec["forest"].get<std::string>());
      auto again = check_conjecture(g, f, SearchBudget::parse(rec["budget"].get<std::string>()), rec["id"]);
      CHECK(verdict_record(again, g, f, SearchBudget::parse(rec["budget"].get<std::string>())).dump() == one[i]);
    }
  }

  TEST_CASE("star forests up to 8 vertices: every candidate is genuine and published") {
    auto corpus = parse_graph6_stream(bridge::read_data("graphs_n1-7.g6"));
    auto n8 = parse_graph6_stream(bridge::read_data("graphs_n8.g6"));
    corpus.insert(corpus.end(), n8.begin(), n8.end());
    auto forests = enumerate_forests(2, 8, true);
    SweepOptions o;
    o.all_records = false;
    auto rep = sweep(corpus, forests, o);
    CHECK(rep.skipped == 0);
    CHECK(rep.instances == corpus.size() * forests.size());

    std::vector<std::string> published;
    std::istringstream in(bridge::read_data("conjecture_candidates_stars_n8.ndjson"));
    for (std::string line; std::getline(in, line);)
      if (!Json::parse(line).contains("summary")) published.push_back(line);
    REQUIRE(published.size() == rep.candidates);
    for (std::size_t i = 0; i < published.size(); ++i) {
      CHECK(rep.candidate_records[i].dump() == published[i]);
      Json rec = rep.candidate_records[i];
      Graph g = parse_graph6(rec["graph6"].get<std::string>());
      Forest f = parse_forest_code(rec["forest"].get<std::string>());
      CHECK(2 * g.edge_count() >= f.total_size() * g.order());
      CHECK(g.order() >= f.order());
      CHECK_FALSE(rec["min_degree_holds"].get<bool>());
      CHECK(ref::count_injections(bridge::small(g), bridge::flat(f), true) == 0);
    }
  }

  TEST_CASE("corpus errors surface") {
    CHECK_THROWS_AS(parse_graph6_stream("Bw\n!!\n"), CorpusParseError);
  }
}
