#include <cmath>
#include <map>

#include "bridge.hpp"
#include "doctest.h"
#include "forestweave/embedder.hpp"
#include "forestweave/errors.hpp"
#include "forestweave/generators.hpp"
#include "forestweave/graph_io.hpp"
#include "forestweave/instance_io.hpp"

using namespace forestweave;

namespace {

std::string serialized(const GeneratedInstance& g) {
  return instance_to_json(Instance{g.graph, GraphFormat::Graph6, g.forest, Json::object()}).dump() + "|" +
         write_graph(g.graph, GraphFormat::EdgeList);
}

// Connected components as a label per vertex.
std::vector<int> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      g.neighbors(u).for_each([&](Vertex w) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      });
    }
    ++next;
  }
  return comp;
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("gen_instance examples") {
    auto tight = gen_instance({4, {1, 1}, GraphModel::TightOrder, 1});
    CHECK(tight.graph.order() == 4);
    CHECK(min_degree(tight.graph) >= 2);

    auto cliques = gen_instance({6, {2}, GraphModel::DisjointCliques, 1});
    CHECK(cliques.graph.order() == 6);
    CHECK(cliques.graph.edge_count() == 6);
    CHECK(min_degree(cliques.graph) == 2);
    auto comp = components(cliques.graph);
    CHECK(*std::max_element(comp.begin(), comp.end()) == 1);

    CHECK_THROWS_AS(gen_instance({5, {5}, GraphModel::MinDegreePad, 1}), InfeasibleSpec);
    CHECK_THROWS_AS(gen_instance({7, {2}, GraphModel::DisjointCliques, 1}), InfeasibleSpec);
  }

  TEST_CASE("hypothesis holds exactly as requested") {
    Rng rng(8, 0);
    const GraphModel models[] = {GraphModel::MinDegreePad, GraphModel::NearRegular, GraphModel::TightOrder};
    for (int i = 0; i < 600; ++i) {
      InstanceSpec s;
      const std::size_t p = rng.between(1, 5);
      for (std::size_t t = 0; t < p; ++t) s.sizes.push_back(rng.below(6));
      const std::size_t d = std::accumulate(s.sizes.begin(), s.sizes.end(), std::size_t{0});
      s.model = models[i % 3];
      s.n = d + p + rng.below(30);
      s.seed = rng.next();
      auto inst = gen_instance(s);
      CHECK(inst.graph.order() == (s.model == GraphModel::TightOrder ? d + p : s.n));
      CHECK(min_degree(inst.graph) >= d);
      CHECK(inst.forest.total_size() == d);
      for (std::size_t t = 0; t < p; ++t) CHECK(inst.forest.size_of(t) == s.sizes[t]);
      if (s.model == GraphModel::NearRegular)
        for (Vertex v = 0; v < inst.graph.order(); ++v) CHECK(inst.graph.degree(v) <= d + 1);
    }
  }

  TEST_CASE("same seed gives byte-identical instances") {
    for (auto m : {GraphModel::MinDegreePad, GraphModel::NearRegular, GraphModel::TightOrder,
                   GraphModel::DisjointCliques}) {
      InstanceSpec s{24, {3, 2, 1}, m, 99};
      if (m == GraphModel::DisjointCliques) s.n = 21;
      CHECK(serialized(gen_instance(s)) == serialized(gen_instance(s)));
      InstanceSpec other = s;
      other.seed = 100;
      CHECK(serialized(gen_instance(s)) != serialized(gen_instance(other)));
    }
  }

  TEST_CASE("the generator stream is pinned") {
    // First outputs for seed 1, stream 0; guards against silent changes in
    // the seeding rule that would invalidate recorded seeds.
    Rng a(1, 0), b(1, 0), c(1, 1);
    const auto first = a.next();
    CHECK(first == b.next());
    CHECK(first != c.next());
    for (int i = 0; i < 1000; ++i) CHECK(a.below(10) < 10);
  }

  TEST_CASE("disjoint cliques keep each tree inside one clique") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      auto inst = gen_instance({24, {2, 1, 2, 0}, GraphModel::DisjointCliques, seed});
      auto r = embed_forest(inst.graph, inst.forest);
      CHECK(bridge::valid(inst.graph, inst.forest, r.embedding));
      auto comp = components(inst.graph);
      for (const auto& m : r.embedding.maps)
        for (Vertex v : m) CHECK(comp[v] == comp[m[0]]);
    }
  }

  TEST_CASE("random_forest examples") {
    std::vector<std::size_t> zero{0};
    CHECK(random_forest(zero, 1).tree(0).order() == 1);
    std::vector<std::size_t> ones{1, 1};
    Forest f = random_forest(ones, 1);
    CHECK(f.p() == 2);
    CHECK(f.tree(0).size() == 1);
    CHECK(f.tree(1).size() == 1);
  }

  TEST_CASE("random trees with 3 edges are uniform over the 16 labeled trees") {
    auto all = ref::all_labeled_trees(4);
    std::map<ref::EdgeSet, int> freq;
    for (const auto& t : all) freq[t] = 0;
    std::vector<std::size_t> sizes{3};
    const int samples = 4096;
    for (int i = 0; i < samples; ++i) {
      Forest f = random_forest(sizes, static_cast<std::uint64_t>(i));
      ref::EdgeSet e;
      for (auto [u, v] : f.tree(0).edges()) e.emplace(std::min(u, v), std::max(u, v));
      REQUIRE(freq.count(e));
      ++freq[e];
    }
    const double expect = samples / 16.0, sigma = std::sqrt(samples * (1.0 / 16) * (15.0 / 16));
    double chi2 = 0;
    for (auto [t, c] : freq) {
      CHECK(std::abs(c - expect) <= 5 * sigma);
      chi2 += (c - expect) * (c - expect) / expect;
    }
    // 15 degrees of freedom; 0.999 quantile is about 37.7
    CHECK(chi2 < 37.7);
  }

  TEST_CASE("naive_sequential_embed") {
    Forest edge({Tree::path(2)});
    CHECK(std::holds_alternative<Embedding>(naive_sequential_embed(Graph::complete(2), edge)));
    Rng rng(4, 0);
    for (int i = 0; i < 300; ++i) {
      const std::size_t a = rng.below(8);
      auto inst = gen_instance({a + 1 + rng.below(10), {a}, GraphModel::MinDegreePad, rng.next()});
      auto r = naive_sequential_embed(inst.graph, inst.forest);
      REQUIRE(std::holds_alternative<Embedding>(r));
      CHECK(bridge::valid(inst.graph, inst.forest, std::get<Embedding>(r)));
    }
  }

  TEST_CASE("the pinned naive failure") {
    Json j = Json::parse(bridge::read_data("naive_failure.json"));
    Instance inst = parse_instance(j.dump());
    CHECK(hypothesis_holds(inst.graph, inst.forest));
    auto naive = naive_sequential_embed(inst.graph, inst.forest);
    REQUIRE(std::holds_alternative<NaiveStuck>(naive));
    CHECK(std::get<NaiveStuck>(naive).tree == j["meta"]["stuck_tree"].get<std::size_t>());
    auto r = embed_forest(inst.graph, inst.forest);
    CHECK(bridge::valid(inst.graph, inst.forest, r.embedding));
  }

  TEST_CASE("find_naive_failure") {
    SearchBudget none{1, std::chrono::milliseconds(1000)};
    // One instance is rarely enough; an empty result is the expected outcome
    // whenever the first draw is benign.
    auto maybe = find_naive_failure(none, 12345);
    if (maybe) CHECK(maybe->instances_tried == 1);

    auto hit = find_naive_failure(SearchBudget{100000, std::chrono::milliseconds(60000)}, 1);
    REQUIRE(hit);
    CHECK(hypothesis_holds(hit->graph, hit->forest));
    CHECK(std::holds_alternative<NaiveStuck>(naive_sequential_embed(hit->graph, hit->forest)));
    auto r = embed_forest(hit->graph, hit->forest);
    CHECK(bridge::valid(hit->graph, hit->forest, r.embedding));
    // minimal: deleting any edge breaks the property
    for (auto e : hit->graph.edges()) {
      auto fewer = hit->graph.edges();
      std::erase(fewer, e);
      Graph h(hit->graph.order(), fewer);
      const bool still = hypothesis_holds(h, hit->forest) &&
                         std::holds_alternative<NaiveStuck>(naive_sequential_embed(h, hit->forest));
      CHECK_FALSE(still);
    }
  }
}
