#include "vrank/graph.hpp"

#include <algorithm>

namespace vrank {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) {
  for (Vertex v : vs) insert(v);
}

VertexSet VertexSet::range(Vertex lo, Vertex hi) {
  VertexSet s;
  for (Vertex v = std::max(lo, 1); v <= hi && v <= kMaxOrder; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v < 1 || v > kMaxOrder) throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(kMaxOrder));
  bits_ |= std::uint64_t{1} << v;
}

Edge Edge::make(Vertex a, Vertex b) {
  if (a < 1 || b < 1) throw InputError("vertex ids are 1-based");
  if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
  if (n < 0 || n > kMaxOrder)
    throw InputError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& raw : edges) {
    Edge e = Edge::make(raw.u, raw.v);
    check_vertex(e.v);
    if (has_edge(e)) continue;
    adj_[static_cast<std::size_t>(e.u)].insert(e.v);
    adj_[static_cast<std::size_t>(e.v)].insert(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) return false;
  return adj_[static_cast<std::size_t>(a)].contains(b);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  InducedSubgraph sub{s & g.vertices(), {}};
  for (const Edge& e : g.edges())
    if (sub.vertices.contains(e.u) && sub.vertices.contains(e.v)) sub.edges.push_back(e);
  return sub;
}

VertexSet component_of(const Graph& g, VertexSet s, Vertex from) {
  VertexSet seen{from};
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & s) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> parts;
  VertexSet rest = s & g.vertices();
  while (!rest.empty()) {
    VertexSet c = component_of(g, rest, rest.lowest());
    parts.push_back(c);
    rest -= c;
  }
  return parts;
}

bool is_connected(const Graph& g, VertexSet s) {
  return s.empty() || component_of(g, s, s.lowest()) == s;
}

std::vector<Edge> non_edges(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 1; u <= g.order(); ++u)
    for (Vertex v = u + 1; v <= g.order(); ++v)
      if (!g.has_edge(u, v)) out.push_back({u, v});
  return out;
}

EdgeAddition add_edges(const Graph& g, std::span<const Edge> es) {
  std::vector<Edge> all = g.edges();
  std::vector<Edge> dups;
  for (const Edge& raw : es) {
    Edge e = Edge::make(raw.u, raw.v);
    if (e.v > g.order()) throw InputError("edge " + to_string(e) + " outside 1.." + std::to_string(g.order()));
    if (g.has_edge(e)) dups.push_back(e);
    all.push_back(e);
  }
  return {Graph(g.order(), all), std::move(dups)};
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InputError("permutation size does not match graph order");
  std::vector<char> hit(perm.size() + 1, 0);
  for (Vertex v : perm) {
    if (v < 1 || v > g.order() || hit[static_cast<std::size_t>(v)]) throw InputError("relabelling is not a permutation");
    hit[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Edge> es;
  es.reserve(g.edge_count());
  for (const Edge& e : g.edges())
    es.push_back(Edge::make(perm[static_cast<std::size_t>(e.u - 1)], perm[static_cast<std::size_t>(e.v - 1)]));
  return Graph(g.order(), es);
}

}  // namespace vrank
