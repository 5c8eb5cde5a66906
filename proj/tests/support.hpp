#pragma once

// Slow reference implementations used only as test oracles.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "vrank/graph.hpp"
#include "vrank/ranking.hpp"

namespace vrank::testing {

/// Definitional check: every simple path between two equal labels has a larger label on it.
inline bool ranking_by_paths(const Graph& g, const std::vector<int>& labels) {
  const int n = g.order();
  auto lab = [&](Vertex v) { return labels[static_cast<std::size_t>(v - 1)]; };
  std::vector<char> on_path(static_cast<std::size_t>(n) + 1, 0);
  // Is there a simple path from cur to target whose interior stays below c?
  std::function<bool(Vertex, Vertex, int)> bad_path = [&](Vertex cur, Vertex target, int c) {
    for (Vertex w : g.neighbors(cur)) {
      if (w == target) return true;
      if (on_path[static_cast<std::size_t>(w)] || lab(w) >= c) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      bool found = bad_path(w, target, c);
      on_path[static_cast<std::size_t>(w)] = 0;
      if (found) return true;
    }
    return false;
  };
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) {
      if (lab(u) != lab(v)) continue;
      on_path[static_cast<std::size_t>(u)] = 1;
      bool found = bad_path(u, v, lab(u));
      on_path[static_cast<std::size_t>(u)] = 0;
      if (found) return false;
    }
  return true;
}

/// Calls f on every labelling of n vertices with labels in 1..k.
template <class F>
void for_each_labelling(int n, int k, F&& f) {
  std::vector<int> labels(static_cast<std::size_t>(n), 1);
  while (true) {
    f(labels);
    std::size_t i = 0;
    while (i < labels.size() && labels[i] == k) labels[i++] = 1;
    if (i == labels.size()) return;
    ++labels[i];
  }
}

/// Rank number by trying every labelling with 1..k labels for increasing k.
inline int brute_rank(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = 1;; ++k) {
    bool found = false;
    for_each_labelling(g.order(), k, [&](const std::vector<int>& l) {
      if (!found && ranking_by_paths(g, l)) found = true;
    });
    if (found) return k;
  }
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph(n, es);
}

inline Graph path_graph(int n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v, v + 1});
  return Graph(n, es);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v, v + 1});
  es.push_back({1, n});
  return Graph(n, es);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) es.push_back({u, v});
  return Graph(n, es);
}

inline Graph with_edges(const Graph& g, const std::vector<Edge>& extra) {
  return add_edges(g, extra).graph;
}

}  // namespace vrank::testing
