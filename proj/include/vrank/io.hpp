#pragma once

#include "json.hpp"
#include <span>
#include <string>

#include "vrank/constructive.hpp"
#include "vrank/graph.hpp"
#include "vrank/oracle.hpp"
#include "vrank/ranking.hpp"

namespace vrank::io {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);
Json to_json(const Ranking& r);
Json to_json(const FamilySpec& spec);
Json to_json(const EdgeSet& es);
Json to_json(const EdgeVerdict& v);
Json edges_to_json(std::span<const Edge> edges);

/// Parsers throw InputError on malformed documents.
Graph graph_from_json(const Json& j);
Ranking ranking_from_json(const Json& j);
FamilySpec family_from_json(const Json& j);

struct DotStyle {
  const Ranking* labels = nullptr;   ///< vertex text; vertex ids when absent
  std::span<const Edge> added;       ///< drawn dashed after the host edges
  std::string name = "G";
};

/// Undirected DOT with host edges solid and added edges dashed. Output is byte-stable.
std::string to_dot(const Graph& g, const DotStyle& style = {});

}  // namespace vrank::io
