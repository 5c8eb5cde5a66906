#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "vrank/graph.hpp"
#include "vrank/ranking.hpp"

namespace vrank {

/// Which construction rule produced an edge.
enum class Clause {
  OddPowerOrOmega,   ///< odd m: n = 2^w (w > t) or n = omega(m, s)
  BlockInterior,     ///< m = 2^j(2l+1): m+2 <= n < 2^j(2l+2)
  PowerAbove,        ///< m = 2^j(2l+1): n = 2^w >= 2^j(2l+2)
  EvenAncestor,      ///< even m: n = smallest multiple of 2^w above m, j < w <= t
  CycleTop,          ///< {v_i, v_{2^k}} with 2 <= i <= 2^k - 2
  ComponentTop,      ///< E(v) at the top vertex of a component of P \ A_j
  MultipartiteIntra, ///< pair inside a part other than the designated largest one
  CliqueTopFirst,    ///< {w_n, v_i}, i < n
  CliqueTopSecond,   ///< {v_n, w_i}, i < n
};

/// Short tag used in reports and JSON ("P1.1", "P1.2", ...).
std::string_view clause_tag(Clause c);

/// How literally to read the path construction.
enum class Reading {
  Corrected,  ///< block-interior rule for l >= 0, even-m ancestor rule, E_j union over 4..k+1
  Literal,    ///< block-interior rule only for l > 0, no even-m ancestor rule, E_j union over 4..k
};

/// A candidate dropped because its far endpoint lies outside the host graph.
struct ClippedCandidate {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  Clause clause{};
};

/// Sorted, duplicate-free edge list with the rule that first produced each edge.
struct EdgeSet {
  FamilySpec host;
  std::vector<Edge> edges;
  std::vector<Clause> clauses;  ///< parallel to edges
  std::vector<ClippedCandidate> clipped;

  std::size_t size() const { return edges.size(); }
};

/// Binary digits of a positive integer, least significant first.
struct BinaryDigits {
  std::uint64_t value = 0;
  std::vector<int> digits;  ///< digits[i] = alpha_i; digits.back() == 1

  static BinaryDigits of(std::uint64_t m);
  /// floor(log2 value), the index of the top set bit.
  int top() const { return static_cast<int>(digits.size()) - 1; }
};

/// Complement of a single binary digit.
int g_flip(int bit);

/// m + 1 + sum_{i=1..s} g_flip(alpha_i) 2^i for odd m, 1 <= s <= floor(log2 m) - 1.
std::uint64_t omega(std::uint64_t m, int s);

/// Smallest multiple of 2^w strictly greater than m. For odd m, omega(m, s) == next_multiple(m, s + 1).
std::uint64_t next_multiple(std::uint64_t m, int w);

struct Target {
  std::uint64_t n = 0;
  Clause clause{};
};

struct TargetSet {
  std::vector<Target> targets;  ///< sorted by n, first clause wins
  std::vector<ClippedCandidate> clipped;
};

/// Partners n > m of v_m in the good-edge set of P_{2^k - 1}.
TargetSet procedure1_targets(std::uint64_t m, int k, Reading reading = Reading::Corrected);

/// Good edges of P_{2^k - 1}, k >= 3.
EdgeSet build_HP(int k, Reading reading = Reading::Corrected);

/// Good edges of C_{2^k}, k >= 3: the path set plus every chord to v_{2^k}.
EdgeSet build_HC(int k);

/// Vertices whose label is at least j.
VertexSet a_set(const Ranking& r, int j);

/// Edges from v to each non-neighbour of v inside `component`.
std::vector<Edge> ev_edges(const Graph& g, VertexSet component, Vertex v);

/// Union of E(v) over components of P_{2^k-1} \ A_j at their label-(j-1) vertex; 4 <= j <= k+1, k <= 6.
std::vector<Edge> ej_edges(int k, int j);

/// Union of ej_edges for j = 4..k+1 (Corrected) or 4..k (Literal).
EdgeSet union_ej(int k, Reading reading = Reading::Corrected);

/// Closed forms for the maximum number of good edges.
std::int64_t mu_path(int k);
std::int64_t mu_cycle(int k);
std::int64_t mu_multipartite(const MultipartiteFamily& spec);
std::int64_t mu_joined(int n);
/// a_3 = 4, a_k = 2 a_{k-1} + 2^k - 4.
std::int64_t mu_path_recurrence(int k);
/// Closed form for whichever family `spec` is.
std::int64_t mu_family(const FamilySpec& spec);

EdgeSet multipartite_good_edges(const MultipartiteFamily& spec);
EdgeSet multipartite_forbidden_edges(const MultipartiteFamily& spec);
EdgeSet joined_good_edges(int n);

/// The family's constructive good-edge set (build_HP, build_HC, ...).
EdgeSet family_good_edges(const FamilySpec& spec, Reading reading = Reading::Corrected);

}  // namespace vrank
