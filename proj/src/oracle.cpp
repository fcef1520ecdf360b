#include "forestweave/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>

#include "forestweave/errors.hpp"

namespace forestweave {
namespace {

constexpr Vertex kNoParent = static_cast<Vertex>(-1);

std::string rooted_code(const Tree& t, Vertex root) {
  // Iterative post-order; codes of children sorted for canonicity.
  const std::size_t k = t.order();
  std::vector<Vertex> order = connected_prefix_order(t, root);
  std::vector<Vertex> parent(k, kNoParent);
  std::vector<char> seen(k, 0);
  seen[root] = 1;
  for (Vertex v : order)
    for (Vertex w : t.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
      }
  std::vector<std::vector<std::string>> child_codes(k);
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = child_codes[*it];
    std::sort(kids.begin(), kids.end());
    code = "(";
    for (auto& c : kids) code += c;
    code += ")";
    kids.clear();
    if (parent[*it] != kNoParent) child_codes[parent[*it]].push_back(std::move(code));
  }
  return code;
}

std::vector<Vertex> centers(const Tree& t) {
  const std::size_t k = t.order();
  if (k <= 2) {
    std::vector<Vertex> c;
    for (Vertex v = 0; v < k; ++v) c.push_back(v);
    return c;
  }
  std::vector<std::size_t> deg(k);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < k; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = k;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

struct Slot {
  std::size_t tree;
  Vertex tree_vertex;
  long parent_slot;    // -1 for a tree root
  std::size_t degree;  // tree degree
  long sym_slot;       // root slot of the previous isomorphic tree, or -1
};

class Search {
 public:
  Search(const Graph& g, const Forest& f, SearchBudget budget, bool counting)
      : g_(g), f_(f), budget_(budget), counting_(counting), used_(g.order()),
        start_(std::chrono::steady_clock::now()) {
    std::vector<TreeShape> shapes;
    for (const auto& t : f.trees()) shapes.push_back(canonical_shape(t));
    std::vector<long> root_slot(f.tree_count(), -1);
    std::vector<std::size_t> placed_trees;
    for (std::size_t t : f.by_size()) {
      const Tree& tree = f.tree(t);
      long sym = -1;
      for (auto it = placed_trees.rbegin(); it != placed_trees.rend(); ++it)
        if (shapes[*it].code == shapes[t].code) {
          sym = root_slot[*it];
          break;
        }
      placed_trees.push_back(t);
      const auto order = connected_prefix_order(tree, shapes[t].root);
      std::vector<long> slot_of(tree.order(), -1);
      for (Vertex x : order) {
        long parent = -1;
        for (Vertex w : tree.neighbors(x))
          if (slot_of[w] >= 0) parent = slot_of[w];
        slot_of[x] = static_cast<long>(slots_.size());
        slots_.push_back(Slot{t, x, parent, tree.degree(x), parent < 0 ? sym : -1});
      }
      root_slot[t] = slot_of[shapes[t].root];
    }
    image_.assign(slots_.size(), 0);
  }

  // Returns false when the budget ran out.
  bool run() { return dfs(0); }

  bool found() const { return found_; }
  std::uint64_t count() const { return count_; }
  std::uint64_t nodes() const { return nodes_; }

  Embedding embedding() const {
    Embedding emb(f_.tree_count(), g_.order());
    for (std::size_t t = 0; t < f_.tree_count(); ++t) emb.maps[t].assign(f_.tree(t).order(), 0);
    for (std::size_t i = 0; i < slots_.size(); ++i) emb.maps[slots_[i].tree][slots_[i].tree_vertex] = image_[i];
    for (const auto& m : emb.maps)
      for (Vertex v : m) emb.used.insert(v);
    return emb;
  }

 private:
  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if ((nodes_ & 4095) == 0 && std::chrono::steady_clock::now() - start_ > budget_.timeout) return true;
    return false;
  }

  bool dfs(std::size_t i) {
    if (i == slots_.size()) {
      found_ = true;
      ++count_;
      return true;
    }
    const Slot& slot = slots_[i];
    const std::size_t lower = slot.sym_slot >= 0 ? image_[slot.sym_slot] + 1 : 0;
    auto try_vertex = [&](Vertex v) -> int {  // 1 stop (found), 0 continue, -1 budget
      if (v < lower || used_.contains(v) || g_.degree(v) < slot.degree) return 0;
      if (out_of_budget()) return -1;
      ++nodes_;
      image_[i] = v;
      used_.insert(v);
      bool ok = dfs(i + 1);
      used_.erase(v);
      if (!ok) return -1;
      return (found_ && !counting_) ? 1 : 0;
    };
    if (slot.parent_slot >= 0) {
      const VertexSet& nb = g_.neighbors(image_[slot.parent_slot]);
      for (std::size_t v = nb.next(lower); v != VertexSet::npos; v = nb.next(v + 1)) {
        int r = try_vertex(static_cast<Vertex>(v));
        if (r < 0) return false;
        if (r > 0) return true;
      }
    } else {
      for (Vertex v = static_cast<Vertex>(lower); v < g_.order(); ++v) {
        int r = try_vertex(v);
        if (r < 0) return false;
        if (r > 0) return true;
      }
    }
    return true;
  }

  const Graph& g_;
  const Forest& f_;
  SearchBudget budget_;
  bool counting_;
  VertexSet used_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Slot> slots_;
  std::vector<Vertex> image_;
  bool found_ = false;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchBudget SearchBudget::parse(std::string_view text) {
  SearchBudget b;
  auto comma = text.find(',');
  auto num = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v == 0)
      throw ParseError(0, "budget must be 'NODES' or 'NODES,SECONDS' with positive integers");
    return v;
  };
  b.max_nodes = num(text.substr(0, comma));
  if (comma != std::string_view::npos)
    b.timeout = std::chrono::milliseconds(num(text.substr(comma + 1)) * 1000);
  return b;
}

SearchBudget SearchBudget::from_env() {
  if (const char* env = std::getenv("FORESTWEAVE_BUDGET"); env && *env) return parse(env);
  return SearchBudget{};
}

std::string SearchBudget::to_string() const {
  return std::to_string(max_nodes) + "," + std::to_string(timeout.count() / 1000);
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::NotFound: return "NotFound";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

TreeShape canonical_shape(const Tree& t) {
  TreeShape best;
  bool first = true;
  for (Vertex c : centers(t)) {
    std::string code = rooted_code(t, c);
    if (first || code < best.code) {
      best = TreeShape{std::move(code), c};
      first = false;
    }
  }
  return best;
}

OracleResult oracle_embed(const Graph& g, const Forest& f, SearchBudget budget) {
  OracleResult r;
  if (f.order() > g.order()) return r;
  Search search(g, f, budget, false);
  const bool complete = search.run();
  r.nodes = search.nodes();
  if (search.found()) {
    r.status = SearchStatus::Found;
    r.embedding = search.embedding();
  } else {
    r.status = complete ? SearchStatus::NotFound : SearchStatus::BudgetExceeded;
  }
  return r;
}

CountResult count_embeddings(const Graph& g, const Forest& f, SearchBudget budget) {
  CountResult r;
  if (f.order() > g.order()) return r;
  Search search(g, f, budget, true);
  r.complete = search.run();
  r.count = search.count();
  r.nodes = search.nodes();
  return r;
}

}  // namespace forestweave
