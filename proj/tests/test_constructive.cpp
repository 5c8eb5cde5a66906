#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "support.hpp"
#include "vrank/constructive.hpp"

using namespace vrank;
using namespace vrank::testing;

namespace {

// Pairs of P_{2^k-1} where one end is an ancestor of the other in the elimination
// tree of the standard ranking: the higher label beats everything strictly between.
std::vector<Edge> ancestor_pairs(int k) {
  const int n = (1 << k) - 1;
  std::vector<Edge> out;
  for (int a = 1; a <= n; ++a) {
    int between = 0;
    for (int b = a + 1; b <= n; ++b) {
      const int top = std::max(label_of_position(static_cast<std::uint64_t>(a)),
                               label_of_position(static_cast<std::uint64_t>(b)));
      if (b > a + 1 && between < top) out.push_back({a, b});
      between = std::max(between, label_of_position(static_cast<std::uint64_t>(b)));
    }
  }
  return out;
}

std::vector<std::uint64_t> target_ids(const TargetSet& ts) {
  std::vector<std::uint64_t> out;
  for (const Target& t : ts.targets) out.push_back(t.n);
  return out;
}

void check_edge_set_shape(const EdgeSet& es) {
  const int n = family_order(es.host);
  CHECK(std::is_sorted(es.edges.begin(), es.edges.end()));
  CHECK(std::adjacent_find(es.edges.begin(), es.edges.end()) == es.edges.end());
  CHECK(es.clauses.size() == es.edges.size());
  if (n <= kMaxOrder) {
    const Graph g = build_family(es.host);
    for (const Edge& e : es.edges) CHECK_FALSE(g.has_edge(e));
  }
  for (const Edge& e : es.edges) {
    CHECK(e.u >= 1);
    CHECK(e.u < e.v);
    CHECK(e.v <= n);
  }
}

}  // namespace

TEST_CASE("g_flip") {
  CHECK(g_flip(0) == 1);
  CHECK(g_flip(1) == 0);
  for (int b : {0, 1}) CHECK(g_flip(g_flip(b)) == b);
  CHECK_THROWS_AS(g_flip(2), InputError);
}

TEST_CASE("binary digits") {
  const auto b = BinaryDigits::of(13);
  CHECK(b.digits == std::vector<int>{1, 0, 1, 1});
  CHECK(b.top() == 3);
  CHECK_THROWS_AS(BinaryDigits::of(0), InputError);
}

TEST_CASE("omega") {
  CHECK(omega(5, 1) == 8);
  CHECK(omega(9, 1) == 12);
  CHECK(omega(9, 2) == 16);
  CHECK(omega(7, 1) == 8);
  CHECK_THROWS_AS(omega(6, 1), InputError);
  CHECK_THROWS_AS(omega(9, 3), InputError);
  CHECK_THROWS_AS(omega(3, 1), InputError);
}

TEST_CASE("omega is the next multiple of 2^(s+1) above m") {
  for (std::uint64_t m = 5; m < 4096; m += 2)
    for (int s = 1; s <= BinaryDigits::of(m).top() - 1; ++s) REQUIRE(omega(m, s) == next_multiple(m, s + 1));
}

TEST_CASE("procedure 1 targets") {
  CHECK(target_ids(procedure1_targets(1, 3)) == std::vector<std::uint64_t>{4});
  CHECK(target_ids(procedure1_targets(4, 3)) == std::vector<std::uint64_t>{6, 7});
  CHECK(target_ids(procedure1_targets(5, 4)) == std::vector<std::uint64_t>{8});
  // non-power ancestor of an even position
  CHECK(target_ids(procedure1_targets(10, 4)) == std::vector<std::uint64_t>{12});
  CHECK(target_ids(procedure1_targets(10, 4, Reading::Literal)).empty());
  CHECK(target_ids(procedure1_targets(4, 3, Reading::Literal)).empty());
  CHECK_THROWS_AS(procedure1_targets(0, 3), InputError);
  CHECK_THROWS_AS(procedure1_targets(8, 3), InputError);

  const TargetSet five = procedure1_targets(5, 4);
  bool clipped16 = false;
  for (const auto& c : five.clipped) clipped16 |= (c.n == 16);
  CHECK(clipped16);
}

TEST_CASE("H_P for k = 3") {
  const EdgeSet hp = build_HP(3);
  CHECK(hp.edges == std::vector<Edge>{{1, 4}, {2, 4}, {4, 6}, {4, 7}});
  check_edge_set_shape(hp);
  for (const auto& c : hp.clipped) CHECK(c.n > 7);
}

TEST_CASE("H_P sizes and closure equality, k = 3..10") {
  for (int k = 3; k <= 10; ++k) {
    CAPTURE(k);
    const EdgeSet hp = build_HP(k);
    CHECK(static_cast<std::int64_t>(hp.size()) == mu_path(k));
    CHECK(mu_path(k) == mu_path_recurrence(k));
    CHECK(hp.edges == ancestor_pairs(k));
    check_edge_set_shape(hp);
  }
  CHECK(build_HP(4).size() == 20);
  CHECK(build_HP(5).size() == 68);
  CHECK_THROWS_AS(build_HP(2), InputError);
}

TEST_CASE("literal reading") {
  CHECK(build_HP(4, Reading::Literal).size() == 11);
  CHECK(union_ej(4, Reading::Literal).size() == 8);
  for (int k = 3; k <= 8; ++k) {
    const auto lit = build_HP(k, Reading::Literal).edges;
    const auto cor = build_HP(k).edges;
    CHECK(std::includes(cor.begin(), cor.end(), lit.begin(), lit.end()));
    CHECK(lit.size() < cor.size());
  }
}

TEST_CASE("A_j and E(v)") {
  const Ranking r = standard_path_ranking(4);
  CHECK(a_set(r, 4) == VertexSet{8});
  CHECK(a_set(r, 1) == VertexSet::range(1, 15));
  CHECK(a_set(r, 3) == VertexSet{4, 8, 12});

  CHECK(ev_edges(path_graph(15), VertexSet::range(1, 15), 8).size() == 12);
  CHECK(ev_edges(path_graph(7), VertexSet::range(1, 7), 4).size() == 4);
  CHECK(ev_edges(path_graph(3), VertexSet::range(1, 3), 2).empty());
  CHECK_THROWS_AS(ev_edges(path_graph(3), VertexSet{1, 2}, 3), InputError);
}

TEST_CASE("E_j sets") {
  auto e45 = ej_edges(4, 5);
  CHECK(e45.size() == 12);
  for (const Edge& e : e45) CHECK((e.u == 8 || e.v == 8));
  auto e44 = ej_edges(4, 4);
  CHECK(e44.size() == 8);
  int at4 = 0, at12 = 0;
  for (const Edge& e : e44) {
    at4 += (e.u == 4 || e.v == 4);
    at12 += (e.u == 12 || e.v == 12);
  }
  CHECK(at4 == 4);
  CHECK(at12 == 4);
  CHECK(ej_edges(5, 4).size() == 16);
  CHECK_THROWS_AS(ej_edges(4, 3), InputError);
  CHECK_THROWS_AS(ej_edges(4, 6), InputError);

  for (int k = 3; k <= 6; ++k) {
    std::set<Edge> seen;
    std::int64_t total = 0;
    for (int j = 4; j <= k + 1; ++j) {
      const auto ej = ej_edges(k, j);
      CHECK(static_cast<std::int64_t>(ej.size()) == (std::int64_t{1} << (k - j + 1)) * ((1 << (j - 1)) - 4));
      for (const Edge& e : ej) CHECK(seen.insert(e).second);
      total += static_cast<std::int64_t>(ej.size());
    }
    CHECK(total == mu_path(k));
    CHECK(union_ej(k).edges == build_HP(k).edges);
  }
  CHECK(union_ej(3).edges == ej_edges(3, 4));
}

TEST_CASE("components of the path minus A_j") {
  for (int k = 4; k <= 6; ++k)
    for (int j = 4; j <= k; ++j) {
      CAPTURE(k);
      CAPTURE(j);
      const Graph p = build_family(PathFamily{k});
      const VertexSet rest = p.vertices() - a_set(standard_path_ranking(k), j);
      const auto comps = connected_components(p, rest);
      CHECK(comps.size() == (std::size_t{1} << (k - j + 1)));
      for (const auto& c : comps) {
        CHECK(c.size() == (1 << (j - 1)) - 1);
        CHECK(induced_subgraph(p, c).edges.size() == static_cast<std::size_t>(c.size() - 1));
      }
    }
}

TEST_CASE("H_C") {
  CHECK(build_HC(3).size() == 9);
  CHECK(build_HC(4).size() == 33);
  CHECK(build_HC(5).size() == 97);
  for (int k = 3; k <= 9; ++k) {
    const auto hc = build_HC(k);
    const auto hp = build_HP(k);
    CHECK(static_cast<std::int64_t>(hc.size()) == mu_cycle(k));
    CHECK(mu_cycle(k) == mu_path(k) + (1 << k) - 3);
    CHECK(std::includes(hc.edges.begin(), hc.edges.end(), hp.edges.begin(), hp.edges.end()));
    check_edge_set_shape(hc);
  }
}

TEST_CASE("closed forms") {
  CHECK(mu_path(4) == 20);
  CHECK(mu_cycle(4) == 33);
  CHECK(mu_joined(5) == 8);
  CHECK(mu_multipartite({{4, 3, 2}}) == 4);
  CHECK(mu_multipartite({{2, 3, 4}}) == 4);
  CHECK(mu_path_recurrence(3) == 4);
  CHECK(mu_path_recurrence(4) == 20);
  CHECK(mu_path_recurrence(6) == 196);
  for (int k = 3; k <= 10; ++k) {
    std::int64_t sum = 0;
    for (int j = 4; j <= k + 1; ++j) sum += (std::int64_t{1} << (k - j + 1)) * ((std::int64_t{1} << (j - 1)) - 4);
    CHECK(sum == mu_path(k));
  }
}

TEST_CASE("multipartite sets") {
  const MultipartiteFamily k32{{3, 2}};
  CHECK(multipartite_good_edges(k32).edges == std::vector<Edge>{{4, 5}});
  CHECK(multipartite_forbidden_edges(k32).size() == 3);
  CHECK(multipartite_good_edges({{2, 2}}).size() == 1);
  CHECK(multipartite_forbidden_edges({{2, 2}}).size() == 1);
  CHECK(multipartite_good_edges({{4, 1}}).edges.empty());

  for (const auto& parts : std::vector<std::vector<int>>{{4, 3, 2}, {3, 3}, {5, 1, 1}, {2, 2, 2, 2}}) {
    const MultipartiteFamily f{parts};
    const auto good = multipartite_good_edges(f).edges;
    const auto bad = multipartite_forbidden_edges(f).edges;
    std::vector<Edge> both;
    std::merge(good.begin(), good.end(), bad.begin(), bad.end(), std::back_inserter(both));
    CHECK(both == non_edges(build_family(f)));
    CHECK(static_cast<std::int64_t>(good.size()) == mu_multipartite(f));
  }
}

TEST_CASE("joined cliques set") {
  const auto h5 = joined_good_edges(5);
  CHECK(h5.size() == 8);
  check_edge_set_shape(h5);
  CHECK(joined_good_edges(2).size() == 2);
  CHECK(joined_good_edges(3).size() == 4);
  for (const Edge& e : h5.edges) CHECK((e.u == 5 || e.v == 10));
}

TEST_CASE("standard rankings survive the whole good set") {
  std::vector<FamilySpec> families;
  for (int k = 3; k <= 6; ++k) families.push_back(PathFamily{k});
  for (int k = 3; k <= 5; ++k) families.push_back(CycleFamily{k});
  for (int n = 2; n <= 10; ++n) families.push_back(JoinedCliquesFamily{n});
  for (const auto& m : std::vector<std::vector<int>>{{3, 2}, {4, 3, 2}, {5, 5, 1}, {2, 2, 2}})
    families.push_back(MultipartiteFamily{m});
  for (const auto& f : families) {
    CAPTURE(describe(f));
    const Graph g = build_family(f);
    const Graph aug = with_edges(g, family_good_edges(f).edges);
    CHECK(aug.edge_count() == g.edge_count() + family_good_edges(f).size());
    CHECK(is_valid_ranking(aug, family_ranking(f)));
  }
}
