#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "vrank/graph.hpp"
#include "vrank/ranking.hpp"

namespace vrank {

/// Thrown when a graph is larger than the configured search cap. Exact search never degrades to a heuristic.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  int cap = 20;          ///< largest graph order accepted by exact search
  bool memoize = true;   ///< memo table keyed by connected vertex subset
};

struct SearchStats {
  std::size_t memo_entries = 0;
  std::size_t nodes_expanded = 0;
  std::chrono::nanoseconds wall_time{0};
};

/// Exact rank number of a fixed graph by memoized vertex elimination:
/// a connected graph costs 1 + min over v of the cost of G - v, a disconnected one
/// the max over its components. Not thread-safe; use one solver per thread.
class RankSolver {
 public:
  explicit RankSolver(const Graph& g, OracleOptions opts = {});

  const Graph& graph() const { return g_; }

  /// Rank number of g, or of the subgraph induced by s.
  int rank();
  int rank(VertexSet s);

  /// True iff the (sub)graph admits a k-ranking; stops as soon as the bound is settled.
  bool exists(int k);
  bool exists(VertexSet s, int k);

  SearchStats stats() const;

 private:
  struct MemoEntry {
    int lower = 0;
    bool exact = false;
  };

  int solve(VertexSet s, int limit);
  int lower_bound(VertexSet s) const;

  Graph g_;
  OracleOptions opts_;
  std::unordered_map<std::uint64_t, MemoEntry> memo_;
  std::size_t nodes_ = 0;
  std::chrono::nanoseconds elapsed_{0};
};

struct RankResult {
  int rank = 0;
  SearchStats stats;
};

RankResult rank_number(const Graph& g, OracleOptions opts = {});
bool exists_ranking(const Graph& g, int k, OracleOptions opts = {});

/// Lower bound from the longest path found by depth-first search: floor(log2 L) + 1.
int path_lower_bound(const Graph& g, VertexSet connected);

/// Lower bound on the rank number valid at any order: exact below the cap, otherwise
/// one elimination step over path bounds of the remaining components.
int certified_lower_bound(const Graph& g, OracleOptions opts = {});

enum class Verdict { Good, Forbidden };

std::string_view to_string(Verdict v);

struct EdgeVerdict {
  Edge edge;
  int base_rank = 0;
  int augmented_rank = 0;
  Verdict verdict = Verdict::Good;
};

/// Throws InputError if e is already an edge of g.
EdgeVerdict classify_edge(const Graph& g, Edge e, OracleOptions opts = {});
EdgeVerdict classify_edge(const Graph& g, int base_rank, Edge e, OracleOptions opts = {});

enum class Execution { Serial, Parallel };

struct GoodEdgeReport {
  int base_rank = 0;
  std::vector<Edge> good;
  std::vector<EdgeVerdict> verdicts;  ///< one per candidate, in candidate order
};

/// Classifies each candidate on its own. Output order does not depend on `exec`.
GoodEdgeReport classify_edges(const Graph& g, std::span<const Edge> candidates, OracleOptions opts = {},
                              Execution exec = Execution::Parallel);

/// classify_edges over every non-edge of g.
GoodEdgeReport good_edge_set(const Graph& g, OracleOptions opts = {}, Execution exec = Execution::Parallel);

enum class CheckMode { Exact, Certificate };

std::string_view to_string(CheckMode m);

struct SimultaneousCheck {
  bool holds = false;
  bool conclusive = true;
  CheckMode mode = CheckMode::Exact;
  int base_rank = 0;       ///< exact, or a certified lower bound in certificate mode
  int augmented_rank = 0;  ///< exact, or the witness ranking's max label in certificate mode
  std::string detail;
};

/// Whether adding all of `extra` at once leaves the rank number unchanged. Uses exact search
/// within the cap; above it, requires `witness`: a ranking of g + extra whose max label meets
/// certified_lower_bound(g).
SimultaneousCheck verify_simultaneous(const Graph& g, std::span<const Edge> extra, const Ranking* witness = nullptr,
                                      OracleOptions opts = {});

/// Every labelling with labels in 1..rank(g) that is a ranking, in lexicographic order.
/// Default cap is 16; throws CapExceeded past max_results.
std::vector<Ranking> enumerate_optimal_rankings(const Graph& g, OracleOptions opts = {16, true},
                                                std::size_t max_results = 1'000'000);

/// Vertex permutations preserving adjacency; perm[v-1] is the image of v.
std::vector<std::vector<Vertex>> automorphisms(const Graph& g);

/// Number of classes of `rankings` under relabelling vertices by `autos`.
std::size_t count_orbits(std::span<const Ranking> rankings, std::span<const std::vector<Vertex>> autos);

/// Number of classes of `rankings` when the two largest label values are interchangeable.
std::size_t count_top_swap_classes(std::span<const Ranking> rankings);

struct MaxGoodSet {
  int rank = 0;
  std::int64_t mu = 0;
  std::vector<Edge> edges;  ///< one maximum set of jointly addable edges
  SearchStats stats;
};

/// Largest edge set whose joint addition keeps the rank number. Maximises closure edges
/// over elimination forests of depth rank(g) that contain every edge of g. Default cap 16.
MaxGoodSet maximum_good_set(const Graph& g, OracleOptions opts = {16, true});

}  // namespace vrank
