#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "support.hpp"
#include "vrank/constructive.hpp"
#include "vrank/graph.hpp"

using namespace vrank;
using namespace vrank::testing;

TEST_CASE("vertex set basics") {
  VertexSet s{3, 1, 7};
  CHECK(s.size() == 3);
  CHECK(s.lowest() == 1);
  CHECK(s.highest() == 7);
  CHECK(s.to_vector() == std::vector<Vertex>{1, 3, 7});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK_FALSE(s.contains(0));
  CHECK((s - VertexSet{3}) == VertexSet{1, 7});
  CHECK(VertexSet::range(5, 4).empty());
  CHECK(VertexSet::range(1, 63).size() == 63);
  CHECK_THROWS_AS(s.insert(64), InputError);
  CHECK_THROWS_AS(s.insert(0), InputError);
}

TEST_CASE("edges are canonical") {
  CHECK(Edge::make(5, 2) == Edge{2, 5});
  CHECK_THROWS_AS(Edge::make(3, 3), InputError);
  CHECK_THROWS_AS(Edge::make(0, 3), InputError);
}

TEST_CASE("graph construction") {
  std::vector<Edge> es{{1, 2}, {2, 3}, {1, 2}};
  Graph g(3, es);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK(g.degree(2) == 2);
  std::vector<Edge> out_of_range{{1, 4}};
  CHECK_THROWS_AS(Graph(3, out_of_range), InputError);
  CHECK_THROWS_AS(Graph(64), InputError);
}

TEST_CASE("induced subgraph") {
  const Graph p7 = path_graph(7);
  CHECK(induced_subgraph(p7, VertexSet::range(1, 7)).edges == p7.edges());

  const Graph p15 = path_graph(15);
  const auto sub = induced_subgraph(p15, VertexSet::range(1, 7));
  CHECK(sub.edges == p7.edges());
  CHECK(sub.vertices == VertexSet::range(1, 7));

  const auto alt = induced_subgraph(cycle_graph(8), VertexSet{1, 3, 5, 7});
  CHECK(alt.edges.empty());
  CHECK(alt.vertices.size() == 4);

  CHECK(induced_subgraph(p7, {}).edges.empty());
}

TEST_CASE("connected components") {
  const Graph p15 = path_graph(15);
  auto comps = connected_components(p15, VertexSet::range(1, 15).without(8));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet::range(1, 7));
  CHECK(comps[1] == VertexSet::range(9, 15));

  CHECK(connected_components(p15, {}).empty());

  comps = connected_components(p15, VertexSet::range(1, 15) - VertexSet{4, 8, 12});
  REQUIRE(comps.size() == 4);
  for (const auto& c : comps) CHECK(c.size() == 3);
  CHECK(comps[0] == VertexSet{1, 2, 3});
  CHECK(comps[3] == VertexSet{13, 14, 15});
}

TEST_CASE("non-edges") {
  auto ne = non_edges(path_graph(3));
  REQUIRE(ne.size() == 1);
  CHECK(ne[0] == Edge{1, 3});
  CHECK(non_edges(complete_graph(4)).empty());
  CHECK(non_edges(path_graph(7)).size() == 15);
}

TEST_CASE("add edges") {
  const Graph p7 = path_graph(7);
  CHECK(add_edges(p7, {}).graph == p7);
  std::vector<Edge> one{{1, 4}};
  CHECK(add_edges(p7, one).graph.edge_count() == 7);

  const EdgeSet hp = build_HP(4);
  CHECK(add_edges(path_graph(15), hp.edges).graph.edge_count() == 34);

  std::vector<Edge> dup{{1, 2}, {1, 5}};
  auto r = add_edges(p7, dup);
  CHECK(r.graph.edge_count() == 7);
  REQUIRE(r.duplicates.size() == 1);
  CHECK(r.duplicates[0] == Edge{1, 2});

  std::vector<Edge> bad{{1, 8}};
  CHECK_THROWS_AS(add_edges(p7, bad), InputError);
}

TEST_CASE("component partition invariants on random graphs") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::uint64_t> mask_dist;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 14;
    const Graph g = random_graph(n, 0.25, rng);
    const VertexSet s = VertexSet(mask_dist(rng)) & g.vertices();
    const auto comps = connected_components(g, s);

    VertexSet seen;
    for (const auto& c : comps) {
      CHECK((seen & c).empty());
      seen |= c;
      CHECK(is_connected(g, c));
      // idempotent on each component
      auto again = connected_components(g, c);
      REQUIRE(again.size() == 1);
      CHECK(again[0] == c);
    }
    CHECK(seen == s);
    for (std::size_t i = 0; i + 1 < comps.size(); ++i) CHECK(comps[i].lowest() < comps[i + 1].lowest());
    // no edge between different parts
    for (std::size_t a = 0; a < comps.size(); ++a)
      for (std::size_t b = a + 1; b < comps.size(); ++b)
        for (Vertex u : comps[a]) CHECK((g.neighbors(u) & comps[b]).empty());
  }
}

TEST_CASE("edges and non-edges split all pairs") {
  std::mt19937 rng(7);
  for (int n = 0; n <= 12; ++n) {
    const Graph g = random_graph(n, 0.4, rng);
    const auto ne = non_edges(g);
    std::set<Edge> all(g.edges().begin(), g.edges().end());
    for (const Edge& e : ne) CHECK(all.insert(e).second);
    CHECK(all.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(std::is_sorted(ne.begin(), ne.end()));
  }
}

TEST_CASE("relabel") {
  const Graph p4 = path_graph(4);
  std::vector<Vertex> perm{4, 3, 2, 1};
  CHECK(relabel(p4, perm) == p4);
  std::vector<Vertex> rot{2, 3, 4, 1};
  const Graph r = relabel(p4, rot);
  CHECK(r.has_edge(2, 3));
  CHECK(r.has_edge(4, 1));
  CHECK_FALSE(r.has_edge(1, 2));
  std::vector<Vertex> not_perm{1, 1, 2, 3};
  CHECK_THROWS_AS(relabel(p4, not_perm), InputError);
}
