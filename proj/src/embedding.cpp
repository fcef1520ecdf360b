#include "forestweave/embedding.hpp"

#include <string>

namespace forestweave {

void Embedding::assign(std::size_t tree, std::vector<Vertex> map) {
  for (Vertex v : map) used.insert(v);
  maps[tree] = std::move(map);
}

void Embedding::release(std::size_t tree) {
  for (Vertex v : maps[tree]) used.erase(v);
  maps[tree].clear();
}

VertexSet Embedding::image(std::size_t tree) const {
  VertexSet s(used.universe());
  for (Vertex v : maps[tree]) s.insert(v);
  return s;
}

VerifyReport verify_embedding(const Graph& g, const Forest& f, const Embedding& emb) {
  VerifyReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };
  if (emb.maps.size() != f.tree_count()) {
    fail("embedding has " + std::to_string(emb.maps.size()) + " tree maps, forest has " +
         std::to_string(f.tree_count()) + " trees");
    return r;
  }
  const std::size_t n = g.order();
  std::vector<long> owner(n, -1);
  VertexSet images(n);
  for (std::size_t t = 0; t < f.tree_count(); ++t) {
    const auto& map = emb.maps[t];
    const Tree& tree = f.tree(t);
    if (map.size() != tree.order()) {
      fail("tree " + std::to_string(t) + ": map covers " + std::to_string(map.size()) + " of " +
           std::to_string(tree.order()) + " vertices");
      continue;
    }
    bool in_range = true;
    for (std::size_t x = 0; x < map.size(); ++x) {
      Vertex v = map[x];
      if (v >= n) {
        fail("tree " + std::to_string(t) + " vertex " + std::to_string(x) + " maps outside graph");
        in_range = false;
        continue;
      }
      if (owner[v] >= 0)
        fail("injectivity: graph vertex " + std::to_string(v) + " used twice (tree " +
             std::to_string(owner[v]) + " and tree " + std::to_string(t) + ")");
      owner[v] = static_cast<long>(t);
      images.insert(v);
    }
    if (!in_range) continue;
    for (auto [x, y] : tree.edges())
      if (!g.adjacent(map[x], map[y]))
        fail("edge preservation: tree " + std::to_string(t) + " edge " + std::to_string(x) + "-" +
             std::to_string(y) + " maps to non-edge " + std::to_string(map[x]) + "-" +
             std::to_string(map[y]));
  }
  if (r.ok && emb.used.universe() == n && !(emb.used == images))
    fail("used set disagrees with the union of images");
  return r;
}

}  // namespace forestweave
