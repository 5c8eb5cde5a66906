#pragma once

#include <cstdint>
#include <ranges>
#include <string>
#include <variant>
#include <vector>

#include "vrank/graph.hpp"

namespace vrank {

/// Vertex labelling with positive integers, aligned with vertex ids 1..n.
class Ranking {
 public:
  Ranking() = default;
  /// labels[i] is the label of vertex i+1; every label must be >= 1.
  explicit Ranking(std::vector<int> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  int label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v - 1)); }
  int max_label() const { return max_label_; }
  const std::vector<int>& labels() const { return labels_; }

  friend bool operator==(const Ranking&, const Ranking&) = default;
  friend auto operator<=>(const Ranking& a, const Ranking& b) { return a.labels_ <=> b.labels_; }

 private:
  std::vector<int> labels_;
  int max_label_ = 0;
};

/// True iff r is a ranking of g: equal labels are separated by a larger label on every path.
/// Throws InputError when r does not label exactly the vertices of g.
bool is_valid_ranking(const Graph& g, const Ranking& r);

/// Number of trailing zero bits of m, plus one. m >= 1.
int label_of_position(std::uint64_t m);

Ranking standard_path_ranking(int k);
Ranking standard_cycle_ranking(int k);

// Graph families with closed-form rank numbers and good-edge sets.

struct PathFamily {
  int k = 1;  ///< path on 2^k - 1 vertices
  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

struct CycleFamily {
  int k = 2;  ///< cycle on 2^k vertices
  friend bool operator==(const CycleFamily&, const CycleFamily&) = default;
};

/// Complete multipartite graph; parts are kept sorted largest first.
struct MultipartiteFamily {
  std::vector<int> parts;
  friend bool operator==(const MultipartiteFamily&, const MultipartiteFamily&) = default;
};

/// Two copies of K_n joined by one edge. Vertices 1..n form the first clique
/// (w_1..w_n), n+1..2n the second (v_1..v_n), and the join edge is {w_n, v_n}.
struct JoinedCliquesFamily {
  int n = 2;
  friend bool operator==(const JoinedCliquesFamily&, const JoinedCliquesFamily&) = default;
};

using FamilySpec = std::variant<PathFamily, CycleFamily, MultipartiteFamily, JoinedCliquesFamily>;

/// Largest order a family description may have. Building the graph itself
/// is still limited to kMaxOrder; constructions and closed forms are not.
inline constexpr int kMaxFamilyOrder = 1 << 16;

/// Checks parameter invariants and sorts multipartite parts descending.
/// Throws InputError on violations, including orders above kMaxFamilyOrder.
FamilySpec normalize(FamilySpec spec);

std::string describe(const FamilySpec& spec);
int family_order(const FamilySpec& spec);

/// Concrete graph with the canonical numbering documented on each family type.
Graph build_family(const FamilySpec& spec);

/// Rank number of the family as given by its closed form.
int family_rank_number(const FamilySpec& spec);

Ranking multipartite_ranking(const MultipartiteFamily& spec);
Ranking joined_cliques_ranking(int n);
/// Dispatches to the family's explicit optimal ranking.
Ranking family_ranking(const FamilySpec& spec);

/// Vertex ids of part i (0-based) of a normalized multipartite family.
std::ranges::iota_view<Vertex, Vertex> multipartite_part(const MultipartiteFamily& spec, std::size_t i);

}  // namespace vrank
