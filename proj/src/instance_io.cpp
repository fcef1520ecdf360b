#include "forestweave/instance_io.hpp"

#include "forestweave/errors.hpp"

namespace forestweave {
namespace {

Tree tree_from_json(const Json& j) {
  if (j.is_string()) return parse_tree(j.get<std::string>());
  if (!j.is_array()) throw ParseError(0, "forest entries must be strings or arrays of pairs");
  std::vector<Edge> edges;
  std::size_t k = 1;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw ParseError(0, "tree edge must be a pair of non-negative integers");
    Vertex u = e[0].get<Vertex>(), v = e[1].get<Vertex>();
    edges.emplace_back(u, v);
    k = std::max<std::size_t>(k, std::max(u, v) + 1);
  }
  return Tree(k, edges);
}

std::vector<Vertex> vertices_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(0, std::string(what) + " must be an array");
  std::vector<Vertex> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError(0, std::string(what) + " must hold vertex ids");
    out.push_back(v.get<Vertex>());
  }
  return out;
}

std::size_t field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw ParseError(0, std::string("certificate step lacks '") + key + "'");
  return j[key].get<std::size_t>();
}

}  // namespace

const char* step_name(const CertificateStep& step) {
  static constexpr const char* kNames[] = {"GreedyBase",   "CliqueGrown", "AvenueA",  "UnusedXVertex",
                                           "ObsKNeighbor", "ObsSwap",     "FallbackS"};
  return kNames[step.index()];
}

Instance parse_instance(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("graph") || !j.contains("forest"))
    throw ParseError(0, "instance needs 'graph' and 'forest'");
  const Json& gj = j["graph"];
  if (!gj.is_object() || !gj.contains("format") || !gj.contains("data") || !gj["format"].is_string() ||
      !gj["data"].is_string())
    throw ParseError(0, "'graph' needs string fields 'format' and 'data'");
  Instance inst;
  inst.format = parse_graph_format(gj["format"].get<std::string>());
  inst.graph = parse_graph(gj["data"].get<std::string>(), inst.format);
  if (!j["forest"].is_array()) throw ParseError(0, "'forest' must be an array of trees");
  std::vector<Tree> trees;
  for (const auto& t : j["forest"]) trees.push_back(tree_from_json(t));
  inst.forest = Forest(std::move(trees));
  if (j.contains("meta")) inst.meta = j["meta"];
  return inst;
}

Json instance_to_json(const Instance& inst) {
  Json forest = Json::array();
  for (const auto& t : inst.forest.trees()) forest.push_back(t.to_string());
  return Json{{"graph", {{"format", format_name(inst.format)}, {"data", write_graph(inst.graph, inst.format)}}},
              {"forest", forest},
              {"meta", inst.meta}};
}

Json embedding_to_json(const Embedding& emb) {
  Json trees = Json::array();
  for (const auto& m : emb.maps) trees.push_back(m);
  return Json{{"trees", trees}};
}

Embedding embedding_from_json(const Json& j, std::size_t graph_order) {
  if (!j.is_object() || !j.contains("trees") || !j["trees"].is_array())
    throw ParseError(0, "embedding needs a 'trees' array");
  Embedding emb(j["trees"].size(), graph_order);
  for (std::size_t t = 0; t < j["trees"].size(); ++t) {
    auto map = vertices_from_json(j["trees"][t], "tree map");
    for (Vertex v : map)
      if (v >= graph_order) throw VertexOutOfRange("embedding maps to vertex " + std::to_string(v));
    emb.maps[t] = std::move(map);
    for (Vertex v : emb.maps[t]) emb.used.insert(v);
  }
  return emb;
}

Json certificate_to_json(const Certificate& cert) {
  Json out = Json::array();
  for (const auto& step : cert.steps) {
    Json s{{"step", step_name(step)}};
    std::visit(
        [&](const auto& st) {
          using T = std::decay_t<decltype(st)>;
          s["tree"] = st.tree;
          if constexpr (std::is_same_v<T, CliqueGrown>) {
            s["seed"] = st.seed;
            s["universal"] = st.universal;
          } else if constexpr (std::is_same_v<T, AvenueA>) {
            s["removed"] = st.removed;
          } else if constexpr (std::is_same_v<T, UnusedXVertex>) {
            s["z"] = st.z;
          } else if constexpr (std::is_same_v<T, ObsKNeighbor>) {
            s["s"] = st.s;
            s["k"] = st.k;
          } else if constexpr (std::is_same_v<T, ObsSwap>) {
            s["s"] = st.s;
            s["swapped_tree"] = st.swapped_tree;
            s["freed"] = st.freed;
            s["near_full"] = st.near_full;
          } else if constexpr (std::is_same_v<T, FallbackS>) {
            s["min_degree"] = st.min_degree;
          }
        },
        step);
    out.push_back(std::move(s));
  }
  return out;
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError(0, "certificate must be an array of steps");
  Certificate cert;
  for (const auto& s : j) {
    if (!s.is_object() || !s.contains("step") || !s["step"].is_string())
      throw ParseError(0, "certificate step needs a 'step' name");
    const std::string name = s["step"].get<std::string>();
    const std::size_t tree = field(s, "tree");
    auto vtx = [&](const char* key) { return static_cast<Vertex>(field(s, key)); };
    if (name == "GreedyBase") {
      cert.steps.push_back(GreedyBase{tree});
    } else if (name == "CliqueGrown") {
      cert.steps.push_back(CliqueGrown{tree, vtx("seed"), vertices_from_json(s.value("universal", Json()), "universal")});
    } else if (name == "AvenueA") {
      cert.steps.push_back(AvenueA{tree, vertices_from_json(s.value("removed", Json()), "removed")});
    } else if (name == "UnusedXVertex") {
      cert.steps.push_back(UnusedXVertex{tree, vtx("z")});
    } else if (name == "ObsKNeighbor") {
      cert.steps.push_back(ObsKNeighbor{tree, vtx("s"), vtx("k")});
    } else if (name == "ObsSwap") {
      if (!s.contains("near_full") || !s["near_full"].is_boolean()) throw ParseError(0, "ObsSwap lacks 'near_full'");
      cert.steps.push_back(ObsSwap{tree, vtx("s"), field(s, "swapped_tree"), vtx("freed"), s["near_full"].get<bool>()});
    } else if (name == "FallbackS") {
      cert.steps.push_back(FallbackS{tree, field(s, "min_degree")});
    } else {
      throw ParseError(0, "unknown certificate step '" + name + "'");
    }
  }
  return cert;
}

}  // namespace forestweave
