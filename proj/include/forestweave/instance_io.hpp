#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "forestweave/certificate.hpp"
#include "forestweave/embedding.hpp"
#include "forestweave/forest.hpp"
#include "forestweave/graph.hpp"
#include "forestweave/graph_io.hpp"

namespace forestweave {

using Json = nlohmann::json;

/// A host graph and a forest, as stored in an instance file:
///
///   { "graph":  { "format": "edgelist" | "dimacs" | "graph6", "data": "..." },
///     "forest": [ "0-1,1-2", [[0,1]], "0", ... ],
///     "meta":   { "seed": ..., "spec": {...} } }
///
/// Each forest entry is a tree, either in "u-v,u-v" text form or as an array
/// of [u, v] pairs; "0" or [] is the single-vertex tree.
struct Instance {
  Graph graph;
  GraphFormat format = GraphFormat::EdgeList;
  Forest forest;
  Json meta = Json::object();
};

/// Throws ParseError (malformed JSON or schema) or the graph/tree errors.
Instance parse_instance(std::string_view text);
Json instance_to_json(const Instance& inst);

/// { "trees": [[image of vertex 0, image of vertex 1, ...], ...] }
Json embedding_to_json(const Embedding& emb);
/// Throws ParseError on schema errors; vertices >= graph_order are rejected.
Embedding embedding_from_json(const Json& j, std::size_t graph_order);

/// [ { "step": "CliqueGrown", "tree": 0, "seed": 3, "universal": [5] }, ... ]
Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

}  // namespace forestweave
