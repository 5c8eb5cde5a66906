#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vrank/constructive.hpp"
#include "vrank/oracle.hpp"
#include "vrank/ranking.hpp"

namespace vrank {

/// Constructive good-edge set checked against the exact oracle.
struct GoodEdgeComparison {
  FamilySpec family;
  Reading reading = Reading::Corrected;
  EdgeSet constructive;
  GoodEdgeReport per_edge;               ///< every non-edge classified on its own
  std::vector<Edge> missing;             ///< per-edge good, absent from the construction
  std::vector<Edge> not_good;            ///< constructed, but forbidden on its own
  SimultaneousCheck constructive_joint;  ///< construction added all at once
  SimultaneousCheck per_edge_joint;      ///< all per-edge good edges added at once
  std::optional<MaxGoodSet> maximum;     ///< exact maximum jointly addable set, when within its cap

  /// The construction is a maximum good set, each of its edges is good, and it equals
  /// the per-edge good set whenever that set is itself jointly addable.
  bool identical() const;
};

/// Throws CapExceeded when the family graph exceeds opts.cap.
GoodEdgeComparison compare_good_edges(const FamilySpec& family, Reading reading = Reading::Corrected,
                                      OracleOptions opts = {});

/// Differences between the literal and corrected readings of the path construction.
struct LiteralReadingReport {
  int k = 0;
  std::size_t corrected_size = 0;
  std::size_t literal_size = 0;
  std::vector<Edge> dropped;           ///< in the corrected set only
  std::size_t dropped_by_block_rule = 0;     ///< block-interior edges with l = 0
  std::size_t dropped_by_ancestor_rule = 0;  ///< non-power ancestors above an even m
  std::vector<Edge> dropped_good;      ///< dropped edges the oracle classifies as good
  bool oracle_checked = false;
  bool union_checked = false;          ///< component unions are only built for k <= 6
  std::size_t union_corrected = 0;     ///< E_j union over 4..k+1
  std::size_t union_literal = 0;       ///< E_j union over 4..k
};

LiteralReadingReport literal_reading_report(int k, OracleOptions opts = {});

struct ClaimResult {
  std::string id;
  std::string statement;
  bool passed = false;
  std::string detail;
  bool asserted = true;  ///< false for informational lines that report without judging
};

/// Suites: paper-all, path, cycle, multipartite, joined, uniqueness.
/// `family` narrows a suite to one instance. Throws InputError on an unknown suite.
std::vector<ClaimResult> run_suite(std::string_view suite, int max_k, const std::optional<FamilySpec>& family = {},
                                   OracleOptions opts = {});

/// All multipartite part profiles (descending, at least two parts) with total order <= max_total.
std::vector<MultipartiteFamily> multipartite_profiles(int max_total);

}  // namespace vrank
