#include "vrank/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

namespace vrank {

namespace {

using Clock = std::chrono::steady_clock;

void check_cap(const Graph& g, int cap) {
  if (g.order() > cap)
    throw CapExceeded("graph order " + std::to_string(g.order()) + " exceeds the exact-search cap of " +
                      std::to_string(cap));
}

int floor_log2(int x) { return std::bit_width(static_cast<unsigned>(x)) - 1; }

/// Deepest vertex count along a depth-first search tree rooted at `root`, and the deepest vertex.
std::pair<int, Vertex> dfs_depth(const Graph& g, VertexSet s, Vertex root) {
  VertexSet seen{root};
  int best = 1;
  Vertex deepest = root;
  std::function<void(Vertex, int)> visit = [&](Vertex v, int depth) {
    if (depth > best) {
      best = depth;
      deepest = v;
    }
    for (Vertex w : (g.neighbors(v) & s) - seen) {
      if (seen.contains(w)) continue;
      seen.insert(w);
      visit(w, depth + 1);
    }
  };
  visit(root, 1);
  return {best, deepest};
}

int degeneracy(const Graph& g, VertexSet s) {
  int best = 0;
  while (!s.empty()) {
    Vertex pick = s.lowest();
    int low = kMaxOrder + 1;
    for (Vertex v : s) {
      int d = (g.neighbors(v) & s).size();
      if (d < low) {
        low = d;
        pick = v;
      }
    }
    best = std::max(best, low);
    s.erase(pick);
  }
  return best;
}

}  // namespace

std::string_view to_string(Verdict v) { return v == Verdict::Good ? "good" : "forbidden"; }
std::string_view to_string(CheckMode m) { return m == CheckMode::Exact ? "exact" : "certificate"; }

int path_lower_bound(const Graph& g, VertexSet connected) {
  if (connected.empty()) return 0;
  // Two sweeps: the deepest vertex of one search is a good root for the next.
  auto [first, far] = dfs_depth(g, connected, connected.lowest());
  int longest = std::max(first, dfs_depth(g, connected, far).first);
  return floor_log2(longest) + 1;
}

RankSolver::RankSolver(const Graph& g, OracleOptions opts) : g_(g), opts_(opts) { check_cap(g_, opts_.cap); }

int RankSolver::lower_bound(VertexSet s) const {
  return std::max(path_lower_bound(g_, s), degeneracy(g_, s) + 1);
}

// Returns the exact rank of the connected set s when it is at most `limit`,
// otherwise some value greater than `limit` that is a valid lower bound.
int RankSolver::solve(VertexSet s, int limit) {
  ++nodes_;
  const int n = s.size();
  if (n <= 2) return n;

  MemoEntry scratch;
  // unordered_map references survive rehashing, so `entry` stays valid across recursion.
  MemoEntry& entry = opts_.memoize ? memo_[s.bits()] : scratch;
  if (entry.exact) return entry.lower;

  bool complete = true;
  for (Vertex v : s) complete = complete && (g_.neighbors(v) & s).size() == n - 1;
  if (complete) {
    entry = {n, true};
    return n;
  }

  const int lower = std::max(entry.lower, lower_bound(s));
  if (lower > limit) {
    entry.lower = lower;
    return lower;
  }

  std::vector<Vertex> order = s.to_vector();
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return (g_.neighbors(a) & s).size() > (g_.neighbors(b) & s).size();
  });

  int best = limit + 1;  // looking for anything strictly smaller
  for (Vertex v : order) {
    VertexSet rest = s.without(v);
    int worst = 0;
    bool viable = true;
    while (!rest.empty()) {
      VertexSet comp = component_of(g_, rest, rest.lowest());
      rest -= comp;
      worst = std::max(worst, solve(comp, best - 2));
      if (1 + worst >= best) {
        viable = false;
        break;
      }
    }
    if (viable) {
      best = 1 + worst;
      if (best == lower) break;
    }
  }

  if (best <= limit) {
    entry = {best, true};
    return best;
  }
  entry.lower = std::max(lower, limit + 1);
  return entry.lower;
}

int RankSolver::rank() { return rank(g_.vertices()); }

int RankSolver::rank(VertexSet s) {
  const auto start = Clock::now();
  int result = 0;
  for (VertexSet comp : connected_components(g_, s)) result = std::max(result, solve(comp, comp.size()));
  elapsed_ += Clock::now() - start;
  return result;
}

bool RankSolver::exists(int k) { return exists(g_.vertices(), k); }

bool RankSolver::exists(VertexSet s, int k) {
  const auto start = Clock::now();
  bool ok = true;
  for (VertexSet comp : connected_components(g_, s)) {
    if (solve(comp, k) > k) {
      ok = false;
      break;
    }
  }
  elapsed_ += Clock::now() - start;
  return ok;
}

SearchStats RankSolver::stats() const { return {memo_.size(), nodes_, elapsed_}; }

RankResult rank_number(const Graph& g, OracleOptions opts) {
  RankSolver solver(g, opts);
  int r = solver.rank();
  return {r, solver.stats()};
}

bool exists_ranking(const Graph& g, int k, OracleOptions opts) { return RankSolver(g, opts).exists(k); }

int certified_lower_bound(const Graph& g, OracleOptions opts) {
  int best = 0;
  for (VertexSet comp : connected_components(g, g.vertices())) {
    if (comp.size() <= opts.cap) {
      RankSolver solver(g, {kMaxOrder, opts.memoize});
      best = std::max(best, solver.rank(comp));
      continue;
    }
    // A connected graph needs one label more than its best single-vertex deletion.
    int after_deletion = kMaxOrder;
    for (Vertex v : comp) {
      int worst = 0;
      for (VertexSet part : connected_components(g, comp.without(v)))
        worst = std::max(worst, path_lower_bound(g, part));
      after_deletion = std::min(after_deletion, worst);
    }
    best = std::max({best, path_lower_bound(g, comp), 1 + after_deletion});
  }
  return best;
}

EdgeVerdict classify_edge(const Graph& g, int base_rank, Edge e, OracleOptions opts) {
  if (g.has_edge(e)) throw InputError("edge " + to_string(e) + " is already in the graph");
  const Edge single[] = {e};
  RankSolver solver(add_edges(g, single).graph, opts);
  int augmented = solver.exists(base_rank) ? base_rank : solver.rank();
  return {e, base_rank, augmented, augmented == base_rank ? Verdict::Good : Verdict::Forbidden};
}

EdgeVerdict classify_edge(const Graph& g, Edge e, OracleOptions opts) {
  return classify_edge(g, rank_number(g, opts).rank, e, opts);
}

GoodEdgeReport classify_edges(const Graph& g, std::span<const Edge> candidates, OracleOptions opts, Execution exec) {
  check_cap(g, opts.cap);
  for (const Edge& e : candidates) {
    if (e.u < 1 || e.v > g.order() || e.u >= e.v) throw InputError("candidate " + to_string(e) + " is not canonical");
    if (g.has_edge(e)) throw InputError("candidate " + to_string(e) + " is already in the graph");
  }
  GoodEdgeReport report;
  report.base_rank = rank_number(g, opts).rank;
  report.verdicts.resize(candidates.size());
  const int count = static_cast<int>(candidates.size());
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i)
      report.verdicts[static_cast<std::size_t>(i)] =
          classify_edge(g, report.base_rank, candidates[static_cast<std::size_t>(i)], opts);
  } else {
    for (int i = 0; i < count; ++i)
      report.verdicts[static_cast<std::size_t>(i)] =
          classify_edge(g, report.base_rank, candidates[static_cast<std::size_t>(i)], opts);
  }
  for (const EdgeVerdict& v : report.verdicts)
    if (v.verdict == Verdict::Good) report.good.push_back(v.edge);
  return report;
}

GoodEdgeReport good_edge_set(const Graph& g, OracleOptions opts, Execution exec) {
  const std::vector<Edge> candidates = non_edges(g);
  return classify_edges(g, candidates, opts, exec);
}

SimultaneousCheck verify_simultaneous(const Graph& g, std::span<const Edge> extra, const Ranking* witness,
                                      OracleOptions opts) {
  const Graph augmented = add_edges(g, extra).graph;
  SimultaneousCheck check;
  if (g.order() <= opts.cap) {
    check.mode = CheckMode::Exact;
    check.base_rank = rank_number(g, opts).rank;
    check.augmented_rank = RankSolver(augmented, opts).rank();
    check.holds = check.base_rank == check.augmented_rank;
    check.detail = "exact search on both graphs";
    return check;
  }
  check.mode = CheckMode::Certificate;
  if (witness == nullptr) {
    check.conclusive = false;
    check.detail = "order above cap and no witness ranking supplied";
    return check;
  }
  if (!is_valid_ranking(augmented, *witness)) {
    check.conclusive = false;
    check.detail = "witness is not a ranking of the augmented graph";
    return check;
  }
  check.augmented_rank = witness->max_label();
  check.base_rank = certified_lower_bound(g, opts);
  // lower <= rank(g) <= rank(g + extra) <= witness max
  check.holds = check.augmented_rank <= check.base_rank;
  check.conclusive = check.holds;
  check.detail = check.holds ? "witness upper bound meets the certified lower bound"
                             : "witness upper bound exceeds the certified lower bound";
  return check;
}

std::vector<Ranking> enumerate_optimal_rankings(const Graph& g, OracleOptions opts, std::size_t max_results) {
  RankSolver solver(g, opts);
  const int target = solver.rank();
  const std::size_t width = static_cast<std::size_t>(g.order()) + 1;
  using Partial = std::vector<std::uint8_t>;  // labels indexed by vertex id; 0 outside the subset
  std::map<std::pair<std::uint64_t, int>, std::vector<Partial>> memo;

  auto guard = [&](std::size_t n) {
    if (n > max_results) throw CapExceeded("more than " + std::to_string(max_results) + " optimal rankings");
  };
  auto product = [&](const std::vector<Partial>& a, const std::vector<Partial>& b) {
    guard(a.size() * b.size());
    std::vector<Partial> out;
    out.reserve(a.size() * b.size());
    for (const Partial& x : a)
      for (const Partial& y : b) {
        Partial z = x;
        for (std::size_t i = 0; i < width; ++i) z[i] = static_cast<std::uint8_t>(z[i] | y[i]);
        out.push_back(std::move(z));
      }
    return out;
  };

  // Rankings of connected s with every label <= budget. The unique top vertex r carries
  // label L and each component of s - r is ranked independently below L.
  std::function<const std::vector<Partial>&(VertexSet, int)> connected = [&](VertexSet s,
                                                                              int budget) -> const std::vector<Partial>& {
    auto key = std::make_pair(s.bits(), budget);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Partial> out;
    if (budget >= 1 && solver.exists(s, budget)) {
      for (Vertex r : s) {
        std::vector<VertexSet> parts = connected_components(g, s.without(r));
        int floor_label = 1;
        for (VertexSet p : parts) floor_label = std::max(floor_label, 1 + solver.rank(p));
        for (int label = floor_label; label <= budget; ++label) {
          std::vector<Partial> acc{Partial(width, 0)};
          for (VertexSet p : parts) acc = product(acc, connected(p, label - 1));
          for (Partial& x : acc) x[static_cast<std::size_t>(r)] = static_cast<std::uint8_t>(label);
          out.insert(out.end(), std::make_move_iterator(acc.begin()), std::make_move_iterator(acc.end()));
          guard(out.size());
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };

  std::vector<Partial> all{Partial(width, 0)};
  for (VertexSet comp : connected_components(g, g.vertices())) all = product(all, connected(comp, target));

  std::vector<Ranking> out;
  out.reserve(all.size());
  for (const Partial& p : all) out.emplace_back(std::vector<int>(p.begin() + 1, p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> image(static_cast<std::size_t>(n) + 1, 0);
  VertexSet used;
  std::function<void(Vertex)> extend = [&](Vertex v) {
    if (v > n) {
      out.emplace_back(image.begin() + 1, image.end());
      return;
    }
    for (Vertex w = 1; w <= n; ++w) {
      if (used.contains(w) || g.degree(w) != g.degree(v)) continue;
      bool consistent = true;
      for (Vertex u = 1; u < v && consistent; ++u)
        consistent = g.has_edge(u, v) == g.has_edge(image[static_cast<std::size_t>(u)], w);
      if (!consistent) continue;
      image[static_cast<std::size_t>(v)] = w;
      used.insert(w);
      extend(v + 1);
      used.erase(w);
    }
  };
  extend(1);
  return out;
}

std::size_t count_orbits(std::span<const Ranking> rankings, std::span<const std::vector<Vertex>> autos) {
  std::set<std::vector<int>> canon;
  for (const Ranking& r : rankings) {
    std::vector<int> best = r.labels();
    for (const auto& perm : autos) {
      std::vector<int> moved(r.labels().size());
      for (std::size_t v = 0; v < perm.size(); ++v) moved[static_cast<std::size_t>(perm[v] - 1)] = r.labels()[v];
      best = std::min(best, moved);
    }
    canon.insert(std::move(best));
  }
  return canon.size();
}

std::size_t count_top_swap_classes(std::span<const Ranking> rankings) {
  std::set<std::vector<int>> canon;
  for (const Ranking& r : rankings) {
    std::vector<int> swapped = r.labels();
    const int top = r.max_label();
    if (top >= 2)
      for (int& x : swapped) x = x == top ? top - 1 : (x == top - 1 ? top : x);
    canon.insert(std::min(r.labels(), swapped));
  }
  return canon.size();
}

namespace {

/// Maximum closure size over elimination forests of bounded depth whose closure contains g.
class ClosureSearch {
 public:
  explicit ClosureSearch(const Graph& g, OracleOptions opts) : g_(g), ranks_(g, opts) {}

  static constexpr std::int64_t kInfeasible = -1;

  /// One rooted tree on `a` (a union of components of g[a]) with depth <= d.
  std::int64_t tree(VertexSet a, int d) {
    if (d < 1) return kInfeasible;
    if (a.size() == 1) return 0;
    if (d == 1) return kInfeasible;
    auto key = std::make_pair(a.bits(), d);
    if (auto it = trees_.find(key); it != trees_.end()) return it->second.value;

    // Only the component holding the root may need the full depth.
    int at_full_depth = 0;
    for (VertexSet comp : connected_components(g_, a)) {
      int r = ranks_.rank(comp);
      if (r > d) return remember_tree(key, kInfeasible, 0);
      if (r == d) ++at_full_depth;
    }
    if (at_full_depth > 1) return remember_tree(key, kInfeasible, 0);

    std::int64_t best = kInfeasible;
    Vertex best_root = 0;
    for (Vertex r : a) {
      std::int64_t below = forest(a.without(r), d - 1);
      if (below == kInfeasible) continue;
      std::int64_t value = (a.size() - 1) + below;
      if (value >= best) {  // ties go to the later vertex
        best = value;
        best_root = r;
      }
    }
    return remember_tree(key, best, best_root);
  }

  /// A forest on s with depth <= d where every tree is a union of components of g[s].
  std::int64_t forest(VertexSet s, int d) {
    if (s.empty()) return 0;
    auto key = std::make_pair(s.bits(), d);
    if (auto it = forests_.find(key); it != forests_.end()) return it->second.value;

    std::vector<VertexSet> comps = connected_components(g_, s);
    for (VertexSet c : comps)
      if (ranks_.rank(c) > d) return remember_forest(key, kInfeasible, {});

    const std::size_t others = comps.size() - 1;
    std::int64_t best = kInfeasible;
    VertexSet best_group;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others); ++mask) {
      VertexSet group = comps.front();
      for (std::size_t i = 0; i < others; ++i)
        if ((mask >> i) & 1U) group |= comps[i + 1];
      std::int64_t head = tree(group, d);
      if (head == kInfeasible) continue;
      std::int64_t tail = forest(s - group, d);
      if (tail == kInfeasible) continue;
      if (head + tail > best) {
        best = head + tail;
        best_group = group;
      }
    }
    return remember_forest(key, best, best_group);
  }

  /// Parent links of the optimal forest on s (0 for roots).
  void build(VertexSet s, int d, Vertex parent, std::vector<Vertex>& parents) {
    while (!s.empty()) {
      forest(s, d);
      VertexSet group = forests_.at({s.bits(), d}).group;
      build_tree(group, d, parent, parents);
      s -= group;
    }
  }

  SearchStats stats() const {
    SearchStats st = ranks_.stats();
    st.memo_entries += trees_.size() + forests_.size();
    return st;
  }

 private:
  struct TreeChoice {
    std::int64_t value;
    Vertex root;
  };
  struct ForestChoice {
    std::int64_t value;
    VertexSet group;
  };

  std::int64_t remember_tree(std::pair<std::uint64_t, int> key, std::int64_t value, Vertex root) {
    trees_[key] = {value, root};
    return value;
  }
  std::int64_t remember_forest(std::pair<std::uint64_t, int> key, std::int64_t value, VertexSet group) {
    forests_[key] = {value, group};
    return value;
  }

  void build_tree(VertexSet a, int d, Vertex parent, std::vector<Vertex>& parents) {
    Vertex root = a.lowest();
    if (a.size() > 1) {
      tree(a, d);
      root = trees_.at({a.bits(), d}).root;
    }
    parents[static_cast<std::size_t>(root)] = parent;
    build(a.without(root), d - 1, root, parents);
  }

  const Graph& g_;
  RankSolver ranks_;
  std::map<std::pair<std::uint64_t, int>, TreeChoice> trees_;
  std::map<std::pair<std::uint64_t, int>, ForestChoice> forests_;
};

}  // namespace

MaxGoodSet maximum_good_set(const Graph& g, OracleOptions opts) {
  check_cap(g, opts.cap);
  const auto start = Clock::now();
  ClosureSearch search(g, opts);
  MaxGoodSet out;
  out.rank = rank_number(g, opts).rank;
  const std::int64_t closure = search.forest(g.vertices(), out.rank);
  out.mu = closure - static_cast<std::int64_t>(g.edge_count());

  std::vector<Vertex> parents(static_cast<std::size_t>(g.order()) + 1, 0);
  search.build(g.vertices(), out.rank, 0, parents);
  for (Vertex v = 1; v <= g.order(); ++v)
    for (Vertex a = parents[static_cast<std::size_t>(v)]; a != 0; a = parents[static_cast<std::size_t>(a)])
      if (!g.has_edge(a, v)) out.edges.push_back(Edge::make(a, v));
  std::sort(out.edges.begin(), out.edges.end());

  out.stats = search.stats();
  out.stats.wall_time = Clock::now() - start;
  return out;
}

}  // namespace vrank
