#include "forestweave/generators.hpp"

#include <chrono>
#include <numeric>
#include <set>
#include <tuple>

#include "forestweave/embedder.hpp"
#include "forestweave/errors.hpp"

namespace forestweave {
namespace {

// Mutable adjacency used while building a host graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : adj_(n, VertexSet(n)), deg_(n, 0) {}

  std::size_t order() const { return adj_.size(); }
  std::size_t degree(Vertex v) const { return deg_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  bool add(Vertex u, Vertex v) {
    if (u == v || adj_[u].contains(v)) return false;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++deg_[u];
    ++deg_[v];
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    return true;
  }

  // Uniform non-neighbour of v other than v; one must exist.
  Vertex random_non_neighbor(Vertex v, Rng& rng) const {
    const std::size_t n = order();
    for (int attempt = 0; attempt < 64; ++attempt) {
      Vertex w = static_cast<Vertex>(rng.below(n));
      if (w != v && !adj_[v].contains(w)) return w;
    }
    std::vector<Vertex> pool = (adj_[v].complement()).members();
    std::erase(pool, v);
    return pool[rng.below(pool.size())];
  }

  Graph build() const { return Graph(order(), edges_); }

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::size_t> deg_;
  std::vector<Edge> edges_;
};

// Raises every degree to at least d, always working on a minimum-degree vertex.
void pad_min_degree(GraphBuilder& b, std::size_t d, Rng& rng, bool near_regular) {
  const std::size_t n = b.order();
  if (d == 0 || n == 0) return;
  std::vector<std::uint64_t> key(n);
  for (auto& k : key) k = rng.next();
  using Entry = std::tuple<std::size_t, std::uint64_t, Vertex>;
  std::set<Entry> queue;
  for (Vertex v = 0; v < n; ++v) queue.emplace(b.degree(v), key[v], v);
  auto bump = [&](Vertex v) {
    queue.erase(Entry{b.degree(v) - 1, key[v], v});
    queue.emplace(b.degree(v), key[v], v);
  };
  while (std::get<0>(*queue.begin()) < d) {
    const Vertex v = std::get<2>(*queue.begin());
    Vertex w = v;
    if (near_regular) {
      for (const auto& [deg, k, u] : queue)
        if (u != v && !b.adjacent(u, v)) {
          w = u;
          break;
        }
    } else {
      w = b.random_non_neighbor(v, rng);
    }
    if (w == v || !b.add(v, w)) throw InternalLogicError("degree padding found no partner");
    bump(v);
    bump(w);
  }
}

Graph permute(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), e);
}

}  // namespace

GraphModel parse_model(std::string_view name) {
  if (name == "MinDegreePad") return GraphModel::MinDegreePad;
  if (name == "NearRegular") return GraphModel::NearRegular;
  if (name == "DisjointCliques") return GraphModel::DisjointCliques;
  if (name == "TightOrder") return GraphModel::TightOrder;
  throw ParseError(0, "unknown graph model '" + std::string(name) + "'");
}

const char* model_name(GraphModel m) {
  switch (m) {
    case GraphModel::MinDegreePad: return "MinDegreePad";
    case GraphModel::NearRegular: return "NearRegular";
    case GraphModel::DisjointCliques: return "DisjointCliques";
    case GraphModel::TightOrder: return "TightOrder";
  }
  return "?";
}

Tree random_tree(std::size_t size, Rng& rng) {
  const std::size_t k = size + 1;
  std::vector<Vertex> seq(k >= 2 ? k - 2 : 0);
  for (auto& s : seq) s = static_cast<Vertex>(rng.below(k));
  return prufer_decode(seq, k);
}

Forest random_forest(std::span<const std::size_t> sizes, std::uint64_t seed) {
  Rng rng(seed, Rng::kForest);
  std::vector<Tree> trees;
  trees.reserve(sizes.size());
  for (std::size_t a : sizes) trees.push_back(random_tree(a, rng));
  return Forest(std::move(trees));
}

GeneratedInstance gen_instance(const InstanceSpec& spec) {
  const std::size_t d = std::accumulate(spec.sizes.begin(), spec.sizes.end(), std::size_t{0});
  const std::size_t p = spec.sizes.size();
  std::size_t n = spec.model == GraphModel::TightOrder ? d + p : spec.n;
  if (n < d + p)
    throw InfeasibleSpec("n=" + std::to_string(n) + " is below d+p=" + std::to_string(d + p));
  Rng rng(spec.seed, Rng::kGraph);
  Graph graph;
  switch (spec.model) {
    case GraphModel::MinDegreePad:
    case GraphModel::TightOrder: {
      GraphBuilder b(n);
      const std::size_t sparse = n * d / 4;
      for (std::size_t i = 0; i < sparse && n >= 2; ++i)
        b.add(static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n)));
      pad_min_degree(b, d, rng, false);
      graph = b.build();
      break;
    }
    case GraphModel::NearRegular: {
      GraphBuilder b(n);
      pad_min_degree(b, d, rng, true);
      graph = b.build();
      break;
    }
    case GraphModel::DisjointCliques: {
      const std::size_t block = d + 1;
      if (n % block != 0)
        throw InfeasibleSpec("n=" + std::to_string(n) + " is not a multiple of d+1=" + std::to_string(block) +
                             "; a truncated clique would have minimum degree below d");
      std::vector<Edge> e;
      for (std::size_t base = 0; base < n; base += block)
        for (std::size_t i = 0; i < block; ++i)
          for (std::size_t j = i + 1; j < block; ++j)
            e.emplace_back(static_cast<Vertex>(base + i), static_cast<Vertex>(base + j));
      graph = permute(Graph(n, e), rng);
      break;
    }
  }
  if (graph.order() != n || (n > 0 && min_degree(graph) < d))
    throw InternalLogicError("generated graph misses the requested order or degree");
  return GeneratedInstance{std::move(graph), random_forest(spec.sizes, spec.seed)};
}

std::variant<Embedding, NaiveStuck> naive_sequential_embed(const Graph& g, const Forest& f) {
  Embedding emb(f.tree_count(), g.order());
  for (std::size_t t = 0; t < f.tree_count(); ++t) {
    const Tree& tree = f.tree(t);
    std::vector<Vertex> map(tree.order(), 0);
    VertexSet local = emb.used;
    const auto& order = tree.bfs_order();
    std::size_t root = local.complement().first();
    if (root == VertexSet::npos) return NaiveStuck{t, 0};
    map[0] = static_cast<Vertex>(root);
    local.insert(root);
    std::vector<char> placed(tree.order(), 0);
    placed[0] = 1;
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Vertex x = order[i];
      Vertex parent = 0;
      for (Vertex w : tree.neighbors(x))
        if (placed[w]) parent = w;
      const VertexSet& nb = g.neighbors(map[parent]);
      std::size_t v = nb.first_in_and_not(nb, local);
      if (v == VertexSet::npos) return NaiveStuck{t, x};
      map[x] = static_cast<Vertex>(v);
      local.insert(v);
      placed[x] = 1;
    }
    emb.assign(t, std::move(map));
  }
  return emb;
}

Graph minimize_naive_failure(Graph g, const Forest& f) {
  auto still_fails = [&](const Graph& h) {
    return hypothesis_holds(h, f) && std::holds_alternative<NaiveStuck>(naive_sequential_embed(h, f));
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = g.order(); v-- > 0;) {
      VertexSet keep = VertexSet::full(g.order());
      keep.erase(v);
      Graph h = g.induced(keep);
      if (still_fails(h)) {
        g = std::move(h);
        changed = true;
      }
    }
    auto edges = g.edges();
    for (std::size_t i = edges.size(); i-- > 0;) {
      std::vector<Edge> fewer = g.edges();
      std::erase(fewer, edges[i]);
      Graph h(g.order(), fewer);
      if (still_fails(h)) {
        g = std::move(h);
        changed = true;
      }
    }
  }
  return g;
}

std::optional<NaiveFailure> find_naive_failure(SearchBudget budget, std::uint64_t seed) {
  Rng rng(seed, Rng::kSearch);
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t tried = 1; tried <= budget.max_nodes; ++tried) {
    if ((tried & 255) == 0 && std::chrono::steady_clock::now() - start > budget.timeout) break;
    InstanceSpec spec;
    const std::size_t p = rng.between(2, 4);
    for (std::size_t i = 0; i < p; ++i) spec.sizes.push_back(rng.between(1, 3));
    const std::size_t d = std::accumulate(spec.sizes.begin(), spec.sizes.end(), std::size_t{0});
    spec.n = d + p + rng.below(4);
    spec.model = GraphModel::MinDegreePad;
    spec.seed = rng.next();
    auto inst = gen_instance(spec);
    auto naive = naive_sequential_embed(inst.graph, inst.forest);
    if (!std::holds_alternative<NaiveStuck>(naive)) continue;
    Graph small = minimize_naive_failure(inst.graph, inst.forest);
    auto stuck = std::get<NaiveStuck>(naive_sequential_embed(small, inst.forest));
    embed_forest(small, inst.forest);  // throws if the construction itself failed
    return NaiveFailure{std::move(small), std::move(inst.forest), stuck, tried};
  }
  return std::nullopt;
}

}  // namespace forestweave
