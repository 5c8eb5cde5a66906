#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support.hpp"
#include "vrank/constructive.hpp"
#include "vrank/oracle.hpp"
#include "vrank/ranking.hpp"

using namespace vrank;
using namespace vrank::testing;

TEST_CASE("validity examples") {
  const Graph p7 = path_graph(7);
  CHECK(is_valid_ranking(p7, Ranking({1, 2, 1, 3, 1, 2, 1})));
  CHECK_FALSE(is_valid_ranking(p7, Ranking({1, 2, 1, 2, 1, 2, 1})));
  CHECK(is_valid_ranking(with_edges(path_graph(15), build_HP(4).edges), standard_path_ranking(4)));
  CHECK_THROWS_AS(is_valid_ranking(p7, Ranking({1, 2, 1})), InputError);
  CHECK_THROWS_AS(Ranking({1, 0}), InputError);
}

TEST_CASE("component rule agrees with path enumeration, exhaustive up to 5 vertices") {
  // every graph on n <= 5 vertices, every labelling with labels <= n
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<Edge> all;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) all.push_back({u, v});
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      std::vector<Edge> es;
      for (int i = 0; i < pairs; ++i)
        if (mask >> i & 1) es.push_back(all[static_cast<std::size_t>(i)]);
      const Graph g(n, es);
      for_each_labelling(n, n, [&](const std::vector<int>& l) {
        REQUIRE(is_valid_ranking(g, Ranking(l)) == ranking_by_paths(g, l));
      });
    }
  }
}

TEST_CASE("component rule agrees with path enumeration, random up to 7 vertices") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 6 + trial % 2;
    const Graph g = random_graph(n, 0.35, rng);
    std::uniform_int_distribution<int> lab(1, n);
    std::vector<int> l(static_cast<std::size_t>(n));
    for (int& x : l) x = lab(rng);
    REQUIRE(is_valid_ranking(g, Ranking(l)) == ranking_by_paths(g, l));
  }
}

TEST_CASE("label of position") {
  CHECK(label_of_position(4) == 3);
  CHECK(label_of_position(1) == 1);
  CHECK(label_of_position(12) == 3);
  CHECK_THROWS_AS(label_of_position(0), InputError);
}

TEST_CASE("standard path ranking") {
  CHECK(standard_path_ranking(3).labels() == std::vector<int>{1, 2, 1, 3, 1, 2, 1});
  CHECK(standard_path_ranking(1).labels() == std::vector<int>{1});
  const Ranking r4 = standard_path_ranking(4);
  CHECK(r4.label(8) == 4);
  CHECK(r4.label(12) == 3);
  for (int k = 1; k <= 6; ++k) {
    const Ranking r = standard_path_ranking(k);
    CHECK(r.max_label() == k);
    CHECK(is_valid_ranking(path_graph((1 << k) - 1), r));
    std::vector<int> rev(r.labels().rbegin(), r.labels().rend());
    CHECK(rev == r.labels());
  }
}

TEST_CASE("standard cycle ranking") {
  CHECK(standard_cycle_ranking(3).labels() == std::vector<int>{1, 2, 1, 3, 1, 2, 1, 4});
  CHECK(standard_cycle_ranking(4).label(16) == 5);
  CHECK(standard_cycle_ranking(2).labels() == std::vector<int>{1, 2, 1, 3});
  for (int k = 2; k <= 5; ++k) {
    const Ranking r = standard_cycle_ranking(k);
    CHECK(r.max_label() == k + 1);
    CHECK(is_valid_ranking(cycle_graph(1 << k), r));
  }
  CHECK_THROWS_AS(standard_cycle_ranking(1), InputError);
}

TEST_CASE("labels between m and omega stay below the label at omega") {
  // odd m < 64, 1 <= i <= t-1
  int checked = 0;
  for (std::uint64_t m = 5; m < 64; m += 2) {
    const int t = BinaryDigits::of(m).top();
    for (int i = 1; i <= t - 1; ++i) {
      const std::uint64_t w = omega(m, i);
      for (std::uint64_t j = m + 1; j < w; ++j) {
        CHECK(label_of_position(j) < label_of_position(w));
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("multipartite ranking") {
  const MultipartiteFamily k32{{3, 2}};
  const Ranking r = multipartite_ranking(k32);
  CHECK(r.labels() == std::vector<int>{1, 1, 1, 2, 3});
  CHECK(family_rank_number(k32) == 3);
  CHECK(multipartite_ranking({{2, 2}}).labels() == std::vector<int>{1, 1, 2, 3});
  CHECK(multipartite_ranking({{1, 1}}).labels() == std::vector<int>{1, 2});
  // parts are sorted largest first
  CHECK(multipartite_ranking({{2, 3}}) == r);
  CHECK(normalize(MultipartiteFamily{{2, 4, 3}}) == FamilySpec{MultipartiteFamily{{4, 3, 2}}});
}

TEST_CASE("joined cliques ranking") {
  CHECK(joined_cliques_ranking(2).labels() == std::vector<int>{1, 2, 1, 3});
  CHECK(joined_cliques_ranking(3).max_label() == 4);
  CHECK(family_rank_number(JoinedCliquesFamily{5}) == 6);
}

TEST_CASE("family graphs") {
  Graph g = build_family(PathFamily{3});
  CHECK(g.order() == 7);
  CHECK(g.edge_count() == 6);
  g = build_family(CycleFamily{4});
  CHECK(g.order() == 16);
  CHECK(g.edge_count() == 16);
  g = build_family(JoinedCliquesFamily{5});
  CHECK(g.order() == 10);
  CHECK(g.edge_count() == 21);
  CHECK(g.has_edge(5, 10));
  g = build_family(MultipartiteFamily{{4, 3, 2}});
  CHECK(g.order() == 9);
  CHECK(g.edge_count() == 4 * 3 + 4 * 2 + 3 * 2);
  CHECK_THROWS_AS(build_family(PathFamily{7}), InputError);
  CHECK_THROWS_AS(normalize(MultipartiteFamily{{3}}), InputError);
  CHECK_THROWS_AS(normalize(JoinedCliquesFamily{1}), InputError);
  CHECK_THROWS_AS(normalize(PathFamily{0}), InputError);
}

TEST_CASE("family rankings are valid and attain the closed-form rank") {
  std::vector<FamilySpec> families;
  for (int k = 1; k <= 5; ++k) families.push_back(PathFamily{k});
  for (int k = 2; k <= 5; ++k) families.push_back(CycleFamily{k});
  for (int n = 2; n <= 8; ++n) families.push_back(JoinedCliquesFamily{n});
  for (const auto& m : std::vector<std::vector<int>>{{1, 1}, {3, 2}, {2, 2}, {4, 3, 2}, {5, 1, 1}, {3, 3, 3}})
    families.push_back(MultipartiteFamily{m});
  for (const auto& f : families) {
    CAPTURE(describe(f));
    const Graph g = build_family(f);
    const Ranking r = family_ranking(f);
    CHECK(is_valid_ranking(g, r));
    CHECK(r.max_label() == family_rank_number(f));
    if (g.order() <= 20) CHECK(rank_number(g).rank == family_rank_number(f));
  }
}

TEST_CASE("subgraph monotonicity") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 7;
    const Graph g = random_graph(n, 0.4, rng);
    if (g.edge_count() == 0) continue;
    std::vector<Edge> keep;
    std::bernoulli_distribution coin(0.6);
    for (const Edge& e : g.edges())
      if (coin(rng)) keep.push_back(e);
    const Graph h(n, keep);
    CHECK(rank_number(h).rank <= rank_number(g).rank);
    // induced subgraphs too
    const VertexSet s = VertexSet::range(1, n - 1);
    RankSolver solver(g);
    CHECK(solver.rank(s) <= solver.rank());
  }
}
