#include "vrank/io.hpp"

#include <sstream>

namespace vrank::io {

namespace {

Edge edge_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw InputError("edge must be a [u, v] integer pair");
  return Edge::make(j[0].get<int>(), j[1].get<int>());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

Json edges_to_json(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json to_json(const Graph& g) {
  Json out;
  out["n"] = g.order();
  out["edges"] = edges_to_json(g.edges());
  return out;
}

Json to_json(const Ranking& r) {
  Json out;
  out["labels"] = r.labels();
  return out;
}

Json to_json(const FamilySpec& spec) {
  Json out;
  if (auto* p = std::get_if<PathFamily>(&spec)) {
    out["type"] = "path";
    out["k"] = p->k;
  } else if (auto* c = std::get_if<CycleFamily>(&spec)) {
    out["type"] = "cycle";
    out["k"] = c->k;
  } else if (auto* m = std::get_if<MultipartiteFamily>(&spec)) {
    out["type"] = "multipartite";
    out["parts"] = m->parts;
  } else {
    out["type"] = "joined";
    out["n"] = std::get<JoinedCliquesFamily>(spec).n;
  }
  return out;
}

Json to_json(const EdgeSet& es) {
  Json out;
  out["family"] = to_json(es.host);
  out["edges"] = edges_to_json(es.edges);
  Json clauses = Json::array();
  for (Clause c : es.clauses) clauses.push_back(std::string(clause_tag(c)));
  out["clauses"] = std::move(clauses);
  return out;
}

Json to_json(const EdgeVerdict& v) {
  Json out;
  out["edge"] = {v.edge.u, v.edge.v};
  out["base"] = v.base_rank;
  out["augmented"] = v.augmented_rank;
  out["verdict"] = std::string(to_string(v.verdict));
  return out;
}

Graph graph_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const Json& raw = field(j, "edges");
  if (!raw.is_array()) throw InputError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const Json& e : raw) edges.push_back(edge_from_json(e));
  return Graph(n, edges);
}

Ranking ranking_from_json(const Json& j) {
  const Json& raw = field(j, "labels");
  if (!raw.is_array()) throw InputError("\"labels\" must be an array");
  std::vector<int> labels;
  for (const Json& l : raw) {
    if (!l.is_number_integer()) throw InputError("labels must be integers");
    labels.push_back(l.get<int>());
  }
  return Ranking(std::move(labels));
}

FamilySpec family_from_json(const Json& j) {
  const Json& type = field(j, "type");
  if (!type.is_string()) throw InputError("\"type\" must be a string");
  const std::string t = type.get<std::string>();
  if (t == "path") return normalize(PathFamily{int_field(j, "k")});
  if (t == "cycle") return normalize(CycleFamily{int_field(j, "k")});
  if (t == "joined") return normalize(JoinedCliquesFamily{int_field(j, "n")});
  if (t == "multipartite") {
    const Json& parts = field(j, "parts");
    if (!parts.is_array()) throw InputError("\"parts\" must be an array");
    MultipartiteFamily m;
    for (const Json& p : parts) {
      if (!p.is_number_integer()) throw InputError("part sizes must be integers");
      m.parts.push_back(p.get<int>());
    }
    return normalize(m);
  }
  throw InputError("unknown family type \"" + t + "\"");
}

std::string to_dot(const Graph& g, const DotStyle& style) {
  if (style.labels != nullptr && style.labels->size() != g.order())
    throw InputError("label count does not match graph order");
  std::ostringstream out;
  out << "graph " << style.name << " {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 1; v <= g.order(); ++v) {
    int text = style.labels != nullptr ? style.labels->label(v) : v;
    out << "  v" << v << " [label=\"" << text << "\", xlabel=\"v" << v << "\"];\n";
  }
  for (const Edge& e : g.edges()) out << "  v" << e.u << " -- v" << e.v << ";\n";
  for (const Edge& e : style.added) out << "  v" << e.u << " -- v" << e.v << " [style=dashed, color=gray40];\n";
  out << "}\n";
  return out.str();
}

}  // namespace vrank::io
