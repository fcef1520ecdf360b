#include "forestweave/embedder.hpp"

#include <algorithm>
#include <string>

#include "forestweave/errors.hpp"

namespace forestweave {
namespace {

VertexSet image_of(const TreeMap& map, std::size_t n) {
  VertexSet s(n);
  for (Vertex v : map) s.insert(v);
  return s;
}

// The `count` lowest members of s.
VertexSet lowest(const VertexSet& s, std::size_t count) {
  VertexSet out(s.universe());
  for (std::size_t v = s.first(); v != VertexSet::npos && count > 0; v = s.next(v + 1), --count)
    out.insert(v);
  return out;
}

std::string str(std::size_t v) { return std::to_string(v); }

// Prefix of t1's connected-prefix order laid onto K in ascending order.
TreeMap prefix_on_clique(const Tree& t1, const VertexSet& clique) {
  TreeMap partial(t1.order(), kUnmapped);
  const auto& order = t1.bfs_order();
  std::size_t i = 0;
  clique.for_each([&](Vertex v) {
    if (i < order.size()) partial[order[i++]] = v;
  });
  return partial;
}

// K, x, X, Y, S for a level whose smaller trees are embedded by `sub`.
PhaseTwoContext make_context(const Graph& g, const VertexSet& active, const VertexSet& clique,
                             const Embedding& sub, std::size_t a, std::size_t d, std::size_t p) {
  PhaseTwoContext ctx;
  ctx.clique = clique;
  ctx.a = a;
  ctx.d = d;
  ctx.p = p;
  ctx.x = static_cast<Vertex>(clique.first());
  VertexSet candidates = (g.neighbors(ctx.x) & active) - clique;
  if (candidates.count() < d - a + 1)
    throw CountingBreach("x=" + str(ctx.x) + " has " + str(candidates.count()) +
                         " neighbours outside K, need d-a+1=" + str(d - a + 1));
  ctx.x_set = lowest(candidates, d - a + 1);
  VertexSet used = sub.used & active;
  ctx.y_set = used - ctx.x_set;
  ctx.s_set = (active - clique) - used;
  return ctx;
}

// Lemma-5 bookkeeping once every vertex of X is used.
void check_phase_two(const PhaseTwoContext& ctx, const Embedding& sub, const Forest& f,
                     const Classification& cls) {
  const auto& q = cls.q;
  if (q[0] + q[1] + q[2] + q[3] != ctx.p - 1)
    throw CountingBreach("class counts sum to " + str(q[0] + q[1] + q[2] + q[3]) + ", expected p-1=" +
                         str(ctx.p - 1));
  if (ctx.y_set.count() != ctx.p - 2)
    throw CountingBreach("|Y|=" + str(ctx.y_set.count()) + ", expected p-2=" + str(ctx.p - 2));
  std::size_t bound = 1;
  for (std::size_t t = 0; t < cls.classes.size(); ++t) {
    if (!cls.classes[t] || !sub.has(t)) continue;
    if (*cls.classes[t] == TreeClass::OneInX) bound += f.size_of(t) - 1;
    if (*cls.classes[t] == TreeClass::EntirelyInY) bound += f.size_of(t);
  }
  if (q[0] < bound || bound < 1 + q[3])
    throw CountingBreach("q1=" + str(q[0]) + " below the class bound " + str(bound) + " (q4=" +
                         str(q[3]) + ")");
}

// Degree split of s over K, X ∪ Y, S, with the counting chain asserted.
FallbackCounts fallback_counts(const Graph& g, const PhaseTwoContext& ctx, Vertex s) {
  const VertexSet& nb = g.neighbors(s);
  FallbackCounts c{s, nb.intersection_count(ctx.clique),
                   nb.intersection_count(ctx.x_set) + nb.intersection_count(ctx.y_set),
                   nb.intersection_count(ctx.s_set)};
  const auto& q = ctx.q;
  const std::size_t xy = ctx.x_set.count() + ctx.y_set.count();
  const std::size_t missing = 2 * q[0] + q[1] + q[2];
  if (c.in_clique != 0)
    throw CountingBreach("fallback vertex " + str(s) + " has a clique neighbour");
  if (xy != ctx.d - ctx.a + ctx.p - 1)
    throw CountingBreach("|X u Y|=" + str(xy) + ", expected d-a+p-1");
  if (missing > xy || c.in_xy > xy - missing)
    throw CountingBreach("vertex " + str(s) + " sees " + str(c.in_xy) + " of X u Y, at most " +
                         str(xy - std::min(xy, missing)) + " allowed");
  if (c.in_s + c.in_clique + c.in_xy < ctx.d)
    throw CountingBreach("vertex " + str(s) + ": |N(s) n S|=" + str(c.in_s) + " < d - |N(s) n K| - |N(s) n (X u Y)|");
  if (c.in_s + q[3] < ctx.a + q[0] || ctx.a + q[0] < ctx.a + 1 + q[3])
    throw CountingBreach("vertex " + str(s) + ": |N(s) n S|=" + str(c.in_s) + " below a+q1-q4");
  return c;
}

class Construction {
 public:
  Construction(const Graph& g, const Forest& f, EmbedTrace* trace, Certificate* cert)
      : g_(g), f_(f), trace_(trace), cert_(cert) {}

  Embedding level(const VertexSet& active, std::span<const std::size_t> trees, std::size_t d) {
    Embedding out(f_.tree_count(), g_.order());
    const std::size_t p = trees.size();
    if (p == 0) return out;
    if (trace_) ++trace_->levels;
    if (active.count() < d + p || min_degree(g_, active) < d)
      throw InternalLogicError("recursion level lost the degree/order hypothesis (d=" + str(d) +
                               ", p=" + str(p) + ")");
    const std::size_t t1 = trees.front();
    const Tree& tree1 = f_.tree(t1);
    const std::size_t a = tree1.size();

    if (p == 1) {
      out.assign(t1, greedy_extend_within(g_, tree1, {}, active));
      emit(GreedyBase{t1});
      if (trace_) ++trace_->greedy_base;
      return out;
    }

    auto grown = grow_clique_or_recurse(g_, tree1, a, active);
    if (auto* nu = std::get_if<NoUniversal>(&grown)) {
      emit(CliqueGrown{t1, nu->seed, nu->universal});
      VertexSet image = image_of(nu->map, g_.order());
      VertexSet rest = active - image;
      if (!common_neighbors(g_, image, active).empty() || min_degree(g_, rest) < d - a)
        throw CountingBreach("removed image leaves min degree below d-a");
      if (trace_) {
        ++trace_->lemma2_checks;
        ++trace_->avenue_a;
        if (trace_->on_avenue_a) trace_->on_avenue_a(active, image, d, a);
      }
      emit(AvenueA{t1, nu->map});
      out = level(rest, trees.subspan(1), d - a);
      out.assign(t1, nu->map);
      return out;
    }

    auto& found = std::get<CliqueFound>(grown);
    emit(CliqueGrown{t1, found.seed, found.universal});
    if (trace_) ++trace_->clique_route;
    VertexSet clique = lowest(found.clique, a);
    out = level(active - clique, trees.subspan(1), d - a);

    PhaseTwoContext ctx = make_context(g_, active, clique, out, a, d, p);
    if (std::size_t z = (ctx.x_set - out.used).first(); z != VertexSet::npos) {
      out.assign(t1, embed_tree_via_clique(g_, clique, static_cast<Vertex>(z), tree1));
      emit(UnusedXVertex{t1, static_cast<Vertex>(z)});
      if (trace_) ++trace_->unused_x;
      return out;
    }

    Classification cls = classify_trees(out, ctx.x_set);
    ctx.q = cls.q;
    check_phase_two(ctx, out, f_, cls);
    if (trace_) {
      ++trace_->phase_two_checks;
      if (trace_->on_phase_two) trace_->on_phase_two(ctx);
    }

    for (std::size_t s = ctx.s_set.first(); s != VertexSet::npos; s = ctx.s_set.next(s + 1)) {
      const Vertex sv = static_cast<Vertex>(s);
      auto opp = find_opportunity(g_, out, clique, ctx.x_set, sv);
      if (!opp) continue;
      if (auto* kn = std::get_if<KNeighbor>(&*opp)) {
        out.assign(t1, embed_tree_via_clique(g_, clique, sv, tree1));
        emit(ObsKNeighbor{t1, sv, kn->k});
        if (trace_) ++trace_->k_neighbor;
        return out;
      }
      const bool near = std::holds_alternative<NearFullRemap>(*opp);
      const std::size_t swapped =
          near ? std::get<NearFullRemap>(*opp).tree : std::get<FullSwap>(*opp).tree;
      auto [swapped_emb, freed] = apply_swap(g_, f_, std::move(out), *opp, sv, ctx.x_set);
      out = std::move(swapped_emb);
      out.assign(t1, embed_tree_via_clique(g_, clique, freed, tree1));
      emit(ObsSwap{t1, sv, swapped, freed, near});
      if (trace_) ++(near ? trace_->near_full_remap : trace_->full_swap);
      return out;
    }

    std::size_t min_in_s = ctx.s_set.count();
    ctx.s_set.for_each([&](Vertex s) {
      FallbackCounts c = fallback_counts(g_, ctx, s);
      min_in_s = std::min(min_in_s, c.in_s);
      if (trace_) {
        ++trace_->fallback_vertex_checks;
        if (trace_->on_fallback_vertex) trace_->on_fallback_vertex(ctx, c);
      }
    });
    if (min_in_s < a + 1)
      throw CountingBreach("min degree inside S is " + str(min_in_s) + ", need a+1=" + str(a + 1));
    out.assign(t1, greedy_extend_within(g_, tree1, {}, ctx.s_set));
    emit(FallbackS{t1, min_in_s});
    if (trace_) ++trace_->fallback;
    return out;
  }

 private:
  void emit(CertificateStep step) {
    if (cert_) cert_->steps.push_back(std::move(step));
  }

  const Graph& g_;
  const Forest& f_;
  EmbedTrace* trace_;
  Certificate* cert_;
};

class Replayer {
 public:
  Replayer(const Graph& g, const Forest& f, const Certificate& cert) : g_(g), f_(f), cert_(cert) {}

  Embedding level(const VertexSet& active, std::span<const std::size_t> trees, std::size_t d) {
    Embedding out(f_.tree_count(), g_.order());
    const std::size_t p = trees.size();
    if (p == 0) return out;
    const std::size_t t1 = trees.front();
    const Tree& tree1 = f_.tree(t1);
    const std::size_t a = tree1.size();

    if (p == 1) {
      expect<GreedyBase>(t1);
      out.assign(t1, greedy_extend_within(g_, tree1, {}, active));
      return out;
    }

    const auto& grown = expect<CliqueGrown>(t1);
    if (!active.contains(grown.seed)) fail("clique seed outside the active vertices");
    VertexSet clique(g_.order(), {grown.seed});
    for (Vertex w : grown.universal) {
      VertexSet image = image_of(greedy_extend_within(g_, tree1, prefix_on_clique(tree1, clique), active),
                                 g_.order());
      if (!active.contains(w) || image.contains(w) || !image.is_subset_of(g_.neighbors(w)))
        fail("vertex " + str(w) + " is not universal to the greedy image");
      clique.insert(w);
    }

    if (peek_is<AvenueA>()) {
      const auto& av = expect<AvenueA>(t1);
      TreeMap map = greedy_extend_within(g_, tree1, prefix_on_clique(tree1, clique), active);
      if (map != av.removed) fail("removed image differs from the greedy image");
      VertexSet image = image_of(map, g_.order());
      if (!common_neighbors(g_, image, active).empty()) fail("removed image has a universal vertex");
      out = level(active - image, trees.subspan(1), d - a);
      out.assign(t1, std::move(map));
      return out;
    }

    if (clique.count() < a || !is_clique(g_, clique)) fail("grown set is not a clique of size a");
    clique = lowest(clique, a);
    out = level(active - clique, trees.subspan(1), d - a);
    PhaseTwoContext ctx = make_context(g_, active, clique, out, a, d, p);

    if (peek_is<UnusedXVertex>()) {
      const auto& st = expect<UnusedXVertex>(t1);
      if (!ctx.x_set.contains(st.z) || out.used.contains(st.z)) fail("z is not an unused X vertex");
      out.assign(t1, embed_tree_via_clique(g_, clique, st.z, tree1));
      return out;
    }
    if (peek_is<ObsKNeighbor>()) {
      const auto& st = expect<ObsKNeighbor>(t1);
      if (!ctx.s_set.contains(st.s) || !clique.contains(st.k) || !g_.adjacent(st.s, st.k))
        fail("s is not an unused neighbour of the clique");
      out.assign(t1, embed_tree_via_clique(g_, clique, st.s, tree1));
      return out;
    }
    if (peek_is<ObsSwap>()) {
      const auto& st = expect<ObsSwap>(t1);
      if (!ctx.s_set.contains(st.s) || st.swapped_tree >= f_.tree_count() || !out.has(st.swapped_tree))
        fail("swap names an unusable vertex or tree");
      Opportunity opp = FullSwap{st.swapped_tree};
      if (st.near_full) {
        std::optional<Vertex> missed;
        for (Vertex v : out.maps[st.swapped_tree])
          if (!g_.adjacent(st.s, v)) missed = v;
        opp = NearFullRemap{st.swapped_tree, missed};
      }
      auto [swapped_emb, freed] = apply_swap(g_, f_, std::move(out), opp, st.s, ctx.x_set);
      if (freed != st.freed) fail("swap freed " + str(freed) + ", certificate says " + str(st.freed));
      out = std::move(swapped_emb);
      out.assign(t1, embed_tree_via_clique(g_, clique, freed, tree1));
      return out;
    }
    const auto& st = expect<FallbackS>(t1);
    if (ctx.s_set.empty() || min_degree(g_, ctx.s_set) != st.min_degree || st.min_degree < a + 1)
      fail("minimum degree inside S does not match the certificate");
    out.assign(t1, greedy_extend_within(g_, tree1, {}, ctx.s_set));
    return out;
  }

  void finish() const {
    if (pos_ != cert_.steps.size()) fail("certificate has trailing steps");
  }

 private:
  template <class Step>
  bool peek_is() const {
    return pos_ < cert_.steps.size() && std::holds_alternative<Step>(cert_.steps[pos_]);
  }

  template <class Step>
  const Step& expect(std::size_t tree) {
    if (!peek_is<Step>())
      fail(std::string("expected a ") + step_name(CertificateStep{Step{}}) + " step at position " + str(pos_));
    const Step& st = std::get<Step>(cert_.steps[pos_++]);
    if (st.tree != tree) fail("step for tree " + str(st.tree) + ", expected tree " + str(tree));
    return st;
  }

  [[noreturn]] void fail(const std::string& why) const { throw CertificateMismatch("certificate replay: " + why); }

  const Graph& g_;
  const Forest& f_;
  const Certificate& cert_;
  std::size_t pos_ = 0;
};

std::vector<std::size_t> nontrivial_trees(const Forest& f) {
  std::vector<std::size_t> out;
  for (std::size_t t : f.by_size())
    if (f.size_of(t) > 0) out.push_back(t);
  return out;
}

std::vector<std::size_t> isolated_trees(const Forest& f) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < f.tree_count(); ++t)
    if (f.size_of(t) == 0) out.push_back(t);
  return out;
}

}  // namespace

TreeMap greedy_extend_within(const Graph& g, const Tree& t, TreeMap partial, const VertexSet& allowed) {
  const std::size_t k = t.order();
  if (partial.empty()) partial.assign(k, kUnmapped);
  if (partial.size() != k) throw Error("partial map size does not match tree order");
  VertexSet used(g.order());
  std::vector<Vertex> frontier;
  for (Vertex x = 0; x < k; ++x)
    if (partial[x] != kUnmapped) {
      if (partial[x] >= g.order() || used.contains(partial[x]))
        throw Error("partial map is not injective into the graph");
      used.insert(partial[x]);
      frontier.push_back(x);
    }
  if (frontier.empty()) {
    std::size_t start = allowed.first();
    if (start == VertexSet::npos) throw ExtensionStuck(0);
    partial[0] = static_cast<Vertex>(start);
    used.insert(start);
    frontier.push_back(0);
  }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Vertex u = frontier[head];
    for (Vertex w : t.neighbors(u)) {
      if (partial[w] != kUnmapped) continue;
      std::size_t img = g.neighbors(partial[u]).first_in_and_not(allowed, used);
      if (img == VertexSet::npos) throw ExtensionStuck(w);
      partial[w] = static_cast<Vertex>(img);
      used.insert(img);
      frontier.push_back(w);
    }
  }
  return partial;
}

TreeMap greedy_extend(const Graph& g, const Tree& t, TreeMap partial, const VertexSet& forbidden) {
  return greedy_extend_within(g, t, std::move(partial), forbidden.complement());
}

TreeMap embed_tree_rooted_at(const Graph& g, const Tree& t, Vertex x, Vertex y) {
  if (x >= t.order() || y >= g.order()) throw VertexOutOfRange("root outside tree or graph");
  TreeMap partial(t.order(), kUnmapped);
  partial[x] = y;
  return greedy_extend(g, t, std::move(partial), VertexSet(g.order()));
}

std::optional<Vertex> find_universal_vertex(const Graph& g, const VertexSet& image) {
  return find_universal_vertex(g, image, VertexSet::full(g.order()));
}

std::optional<Vertex> find_universal_vertex(const Graph& g, const VertexSet& image, const VertexSet& within) {
  std::size_t v = common_neighbors(g, image, within).first();
  if (v == VertexSet::npos) return std::nullopt;
  return static_cast<Vertex>(v);
}

CliqueOutcome grow_clique_or_recurse(const Graph& g, const Tree& t1, std::size_t a) {
  return grow_clique_or_recurse(g, t1, a, VertexSet::full(g.order()));
}

CliqueOutcome grow_clique_or_recurse(const Graph& g, const Tree& t1, std::size_t a, const VertexSet& within) {
  if (within.empty()) throw EmptyGraph();
  Vertex seed = static_cast<Vertex>(within.first());
  std::size_t best = 0;
  within.for_each([&](Vertex v) {
    std::size_t dv = degree_within(g, v, within);
    if (dv > best) {
      best = dv;
      seed = v;
    }
  });
  VertexSet clique(g.order(), {seed});
  std::vector<Vertex> universal;
  while (clique.count() < a) {
    TreeMap map = greedy_extend_within(g, t1, prefix_on_clique(t1, clique), within);
    auto w = find_universal_vertex(g, image_of(map, g.order()), within);
    if (!w) return NoUniversal{std::move(map), seed, std::move(universal)};
    clique.insert(*w);
    universal.push_back(*w);
  }
  return CliqueFound{std::move(clique), seed, std::move(universal)};
}

TreeMap embed_tree_via_clique(const Graph& g, const VertexSet& clique, Vertex z, const Tree& t) {
  const std::size_t a = t.size();
  if (clique.count() != a) throw InternalLogicError("clique size " + str(clique.count()) + " != tree size " + str(a));
  if (clique.contains(z)) throw InternalLogicError("anchor vertex lies inside the clique");
  TreeMap map(t.order(), kUnmapped);
  if (a == 0) {
    map[0] = z;
    return map;
  }
  std::size_t anchor = g.neighbors(z).first_in_and_not(clique, VertexSet(g.order()));
  if (anchor == VertexSet::npos) throw NoLeafAnchor("vertex " + str(z) + " has no neighbour in the clique");
  Vertex leaf = 0;
  while (t.degree(leaf) != 1) ++leaf;
  const Vertex parent = t.neighbors(leaf).front();
  map[leaf] = z;
  map[parent] = static_cast<Vertex>(anchor);
  std::size_t next = clique.first();
  for (Vertex x = 0; x < t.order(); ++x) {
    if (x == leaf || x == parent) continue;
    if (next == anchor) next = clique.next(next + 1);
    map[x] = static_cast<Vertex>(next);
    next = clique.next(next + 1);
  }
  return map;
}

Classification classify_trees(const Embedding& g, const VertexSet& x_set) {
  Classification out;
  out.classes.resize(g.maps.size());
  for (std::size_t t = 0; t < g.maps.size(); ++t) {
    if (!g.has(t)) continue;
    std::size_t in_x = 0;
    for (Vertex v : g.maps[t]) in_x += x_set.contains(v) ? 1 : 0;
    const std::size_t outside = g.maps[t].size() - in_x;
    TreeClass c = outside == 0 ? TreeClass::EntirelyInX
                  : in_x >= 2  ? TreeClass::XAndY
                  : in_x == 1  ? TreeClass::OneInX
                               : TreeClass::EntirelyInY;
    out.classes[t] = c;
    ++out.q[static_cast<int>(c) - 1];
  }
  return out;
}

std::optional<Opportunity> find_opportunity(const Graph& g, const Embedding& emb, const VertexSet& clique,
                                            const VertexSet& x_set, Vertex s) {
  const VertexSet& nb = g.neighbors(s);
  if (std::size_t k = nb.first_in_and_not(clique, VertexSet(g.order())); k != VertexSet::npos)
    return KNeighbor{static_cast<Vertex>(k)};
  for (std::size_t t = 0; t < emb.maps.size(); ++t) {
    if (!emb.has(t)) continue;
    std::size_t in_x = 0, misses = 0;
    std::optional<Vertex> missed;
    for (Vertex v : emb.maps[t]) {
      in_x += x_set.contains(v) ? 1 : 0;
      if (!nb.contains(v)) {
        ++misses;
        missed = v;
      }
    }
    const std::size_t outside = emb.maps[t].size() - in_x;
    if (in_x > 0 && outside > 0 && misses == 0) return FullSwap{t};
    if (outside == 0 && misses <= 1) return NearFullRemap{t, missed};
  }
  return std::nullopt;
}

SwapResult apply_swap(const Graph& g, const Forest& f, Embedding emb, const Opportunity& opp, Vertex s,
                      const VertexSet& x_set) {
  std::size_t tree = 0;
  Vertex moved = 0;
  if (const auto* fs = std::get_if<FullSwap>(&opp)) {
    tree = fs->tree;
    if (tree >= emb.maps.size() || !emb.has(tree)) throw InvalidOpportunity("swap names an unembedded tree");
    const auto& map = emb.maps[tree];
    std::size_t best = VertexSet::npos;
    for (Vertex x = 0; x < map.size(); ++x)
      if (x_set.contains(map[x]) && (best == VertexSet::npos || map[x] < map[best])) best = x;
    if (best == VertexSet::npos) throw InvalidOpportunity("full swap on a tree with no image in X");
    moved = static_cast<Vertex>(best);
  } else if (const auto* nf = std::get_if<NearFullRemap>(&opp)) {
    tree = nf->tree;
    if (tree >= emb.maps.size() || !emb.has(tree)) throw InvalidOpportunity("remap names an unembedded tree");
    const auto& map = emb.maps[tree];
    if (nf->missed) {
      auto it = std::find(map.begin(), map.end(), *nf->missed);
      if (it == map.end()) throw InvalidOpportunity("missed vertex is not in the tree image");
      moved = static_cast<Vertex>(it - map.begin());
    }
  } else {
    throw InvalidOpportunity("a clique neighbour is not a swap");
  }

  if (emb.used.contains(s)) throw InvalidOpportunity("vertex " + str(s) + " is already used");
  TreeMap map = emb.maps[tree];
  const Vertex freed = map[moved];
  if (!x_set.contains(freed)) throw InvalidOpportunity("swap would free " + str(freed) + ", not an X vertex");
  map[moved] = s;
  for (Vertex w : f.tree(tree).neighbors(moved))
    if (!g.adjacent(s, map[w]))
      throw InvalidOpportunity("swap breaks tree " + str(tree) + " edge " + str(moved) + "-" + str(w));
  emb.release(tree);
  emb.assign(tree, std::move(map));
  return SwapResult{std::move(emb), freed};
}

Embedding place_isolated_trees(const Graph& g, Embedding emb, std::span<const std::size_t> trees) {
  if (g.order() - std::min(g.order(), emb.used.count()) < trees.size())
    throw NotEnoughVertices("need " + str(trees.size()) + " unused vertices, have " +
                            str(g.order() - std::min(g.order(), emb.used.count())));
  for (std::size_t t : trees) {
    std::size_t v = emb.used.complement().first();
    emb.assign(t, {static_cast<Vertex>(v)});
  }
  return emb;
}

void check_hypothesis(const Graph& g, const Forest& f) {
  const std::size_t n = g.order(), d = f.total_size(), p = f.p();
  const std::size_t delta = n == 0 ? 0 : min_degree(g);
  const bool degree_short = n > 0 && delta < d;
  const bool n_short = n < d + p;
  if (degree_short || n_short) throw HypothesisViolation(degree_short, n_short, n, delta, d, p);
}

bool hypothesis_holds(const Graph& g, const Forest& f) {
  const std::size_t n = g.order(), d = f.total_size(), p = f.p();
  return n >= d + p && (n == 0 || min_degree(g) >= d);
}

EmbedResult embed_forest(const Graph& g, const Forest& f, EmbedTrace* trace) {
  check_hypothesis(g, f);
  EmbedResult r;
  Construction build(g, f, trace, &r.certificate);
  const auto trees = nontrivial_trees(f);
  r.embedding = build.level(VertexSet::full(g.order()), trees, f.total_size());
  const auto isolated = isolated_trees(f);
  r.embedding = place_isolated_trees(g, std::move(r.embedding), isolated);
  if (auto report = verify_embedding(g, f, r.embedding); !report)
    throw InternalLogicError("constructed embedding failed verification: " + report.violations.front());
  return r;
}

Embedding replay_certificate(const Graph& g, const Forest& f, const Certificate& cert) {
  check_hypothesis(g, f);
  Replayer replay(g, f, cert);
  Embedding emb = replay.level(VertexSet::full(g.order()), nontrivial_trees(f), f.total_size());
  replay.finish();
  emb = place_isolated_trees(g, std::move(emb), isolated_trees(f));
  if (auto report = verify_embedding(g, f, emb); !report)
    throw CertificateMismatch("replayed embedding failed verification: " + report.violations.front());
  return emb;
}

}  // namespace forestweave
