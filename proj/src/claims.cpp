#include "vrank/claims.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <set>

#include "vrank/graph.hpp"

namespace vrank {

namespace {

constexpr int kMaxGoodSetCap = 16;

std::vector<Edge> difference(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string edge_list(const std::vector<Edge>& es, std::size_t limit = 12) {
  std::string s;
  for (std::size_t i = 0; i < es.size() && i < limit; ++i) s += (i ? " " : "") + to_string(es[i]);
  if (es.size() > limit) s += " ...";
  return s.empty() ? "none" : s;
}

std::string pair_text(long long got, long long want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

class Claims {
 public:
  void check(std::string id, std::string statement, bool passed, std::string detail) {
    out_.push_back({std::move(id), std::move(statement), passed, std::move(detail), true});
  }
  void note(std::string id, std::string statement, std::string detail) {
    out_.push_back({std::move(id), std::move(statement), true, std::move(detail), false});
  }
  std::vector<ClaimResult> take() && { return std::move(out_); }

 private:
  std::vector<ClaimResult> out_;
};

/// Exact rank when within the cap; otherwise certified bounds around the family ranking.
std::pair<bool, std::string> rank_matches(const Graph& g, const Ranking& witness, int expected,
                                          const OracleOptions& opts) {
  if (g.order() <= opts.cap) {
    int r = rank_number(g, opts).rank;
    return {r == expected, "exact search: " + pair_text(r, expected)};
  }
  const bool valid = is_valid_ranking(g, witness);
  const int lower = certified_lower_bound(g, opts);
  const bool ok = valid && witness.max_label() == expected && lower == expected;
  return {ok, "certificate: witness " + std::string(valid ? "valid" : "invalid") + " with max label " +
                  std::to_string(witness.max_label()) + ", lower bound " + std::to_string(lower)};
}

std::string joint_text(const SimultaneousCheck& c) {
  return std::string(to_string(c.mode)) + ": base " + std::to_string(c.base_rank) + ", augmented " +
         std::to_string(c.augmented_rank) + " (" + c.detail + ")";
}

void path_claims(Claims& out, int k, const OracleOptions& opts) {
  const std::string id = "path.k" + std::to_string(k);
  const FamilySpec family = PathFamily{k};
  const Graph g = build_family(family);
  const Ranking standard = standard_path_ranking(k);

  auto [rank_ok, rank_detail] = rank_matches(g, standard, k, opts);
  out.check(id + ".rank", "rank number equals k", rank_ok, rank_detail);

  const EdgeSet hp = build_HP(k);
  out.check(id + ".mu.recurrence", "closed form equals recurrence", mu_path(k) == mu_path_recurrence(k),
            pair_text(mu_path(k), mu_path_recurrence(k)));
  out.check(id + ".hp.size", "constructed set has (k-3)2^k+4 edges",
            static_cast<std::int64_t>(hp.size()) == mu_path(k), pair_text(static_cast<long long>(hp.size()), mu_path(k)));
  if (k <= 6) {
    const EdgeSet ej = union_ej(k);
    out.check(id + ".hp.union_ej", "component decomposition yields the same set", ej.edges == hp.edges,
              "decomposition " + std::to_string(ej.size()) + " edges, construction " + std::to_string(hp.size()));
  }
  const SimultaneousCheck joint = verify_simultaneous(g, hp.edges, &standard, opts);
  out.check(id + ".hp.joint", "adding the whole set keeps the rank number", joint.holds, joint_text(joint));

  if (g.order() <= opts.cap) {
    const GoodEdgeComparison cmp = compare_good_edges(family, Reading::Corrected, opts);
    out.check(id + ".hp.oracle", "construction equals the oracle's good-edge set", cmp.identical() && cmp.missing.empty(),
              "oracle " + std::to_string(cmp.per_edge.good.size()) + " good, construction " +
                  std::to_string(hp.size()) + ", missing " + edge_list(cmp.missing) + ", not good " +
                  edge_list(cmp.not_good));
    std::size_t forbidden_outside = 0;
    std::set<Edge> in_hp(hp.edges.begin(), hp.edges.end());
    for (const EdgeVerdict& v : cmp.per_edge.verdicts)
      if (!in_hp.count(v.edge) && v.verdict == Verdict::Forbidden && v.augmented_rank > k) ++forbidden_outside;
    const std::size_t outside = cmp.per_edge.verdicts.size() - hp.size();
    out.check(id + ".forbidden_complement", "every other non-edge raises the rank", forbidden_outside == outside,
              std::to_string(forbidden_outside) + " of " + std::to_string(outside) + " forbidden");
    if (cmp.maximum)
      out.check(id + ".mu.oracle", "maximum jointly addable set has the closed-form size",
                cmp.maximum->mu == mu_path(k), pair_text(cmp.maximum->mu, mu_path(k)));
  }

  if (k <= 6) {
    const LiteralReadingReport lit = literal_reading_report(k, opts);
    out.note(id + ".literal_reading", "literal construction text (l > 0, powers only above even m, union over 4..k)",
             "literal " + std::to_string(lit.literal_size) + " vs corrected " + std::to_string(lit.corrected_size) +
                 " edges; dropped " + edge_list(lit.dropped) + " (block rule " +
                 std::to_string(lit.dropped_by_block_rule) + ", ancestor rule " +
                 std::to_string(lit.dropped_by_ancestor_rule) + ")" +
                 (lit.oracle_checked ? "; oracle-good among dropped: " + std::to_string(lit.dropped_good.size()) : "") +
                 (lit.union_checked ? "; union 4..k gives " + std::to_string(lit.union_literal) + " vs " +
                                          std::to_string(lit.union_corrected)
                                    : std::string()));
  }
}

void cycle_claims(Claims& out, int k, const OracleOptions& opts) {
  const std::string id = "cycle.k" + std::to_string(k);
  const FamilySpec family = CycleFamily{k};
  const Graph g = build_family(family);
  const Ranking standard = standard_cycle_ranking(k);

  auto [rank_ok, rank_detail] = rank_matches(g, standard, k + 1, opts);
  out.check(id + ".rank", "rank number equals k+1", rank_ok, rank_detail);

  const EdgeSet hc = build_HC(k);
  const std::int64_t via_path = mu_path(k) + (std::int64_t{1} << k) - 3;
  out.check(id + ".hc.size", "constructed set has (k-2)2^k+1 edges",
            static_cast<std::int64_t>(hc.size()) == mu_cycle(k) && mu_cycle(k) == via_path,
            pair_text(static_cast<long long>(hc.size()), mu_cycle(k)) + ", path count + 2^k - 3 = " +
                std::to_string(via_path));
  const SimultaneousCheck joint = verify_simultaneous(g, hc.edges, &standard, opts);
  out.check(id + ".hc.joint", "adding the whole set keeps the rank number", joint.holds, joint_text(joint));

  if (g.order() <= opts.cap) {
    const GoodEdgeComparison cmp = compare_good_edges(family, Reading::Corrected, opts);
    const EdgeSet hp = build_HP(k);
    std::set<Edge> good(cmp.per_edge.good.begin(), cmp.per_edge.good.end());
    std::size_t inherited = 0;
    for (const Edge& e : hp.edges) inherited += good.count(e);
    out.check(id + ".hp_inherited", "every good edge of the path is good for the cycle", inherited == hp.size(),
              std::to_string(inherited) + " of " + std::to_string(hp.size()));
    if (cmp.maximum) {
      out.check(id + ".mu.oracle", "maximum jointly addable set has the closed-form size",
                cmp.maximum->mu == mu_cycle(k), pair_text(cmp.maximum->mu, mu_cycle(k)));
      out.check(id + ".hc.maximum", "construction is a maximum good set", cmp.identical(),
                "oracle maximum " + std::to_string(cmp.maximum->mu) + ", construction " + std::to_string(hc.size()) +
                    ", not good " + edge_list(cmp.not_good));
    }
    out.note(id + ".per_edge", "edges good on their own (all rotations of the optimal ranking)",
             std::to_string(cmp.per_edge.good.size()) + " of " + std::to_string(cmp.per_edge.verdicts.size()) +
                 " non-edges; jointly addable: " + (cmp.per_edge_joint.holds ? "yes" : "no"));
  }
}

void multipartite_claims(Claims& out, const MultipartiteFamily& raw, const OracleOptions& opts) {
  const auto spec = std::get<MultipartiteFamily>(normalize(raw));
  const std::string id = "multipartite." + describe(spec);
  const Graph g = build_family(spec);
  const Ranking f = multipartite_ranking(spec);
  const int expected = family_rank_number(spec);

  auto [rank_ok, rank_detail] = rank_matches(g, f, expected, opts);
  out.check(id + ".rank", "rank number equals N - m_1 + 1 and the explicit ranking attains it",
            rank_ok && is_valid_ranking(g, f) && f.max_label() == expected, rank_detail);
  if (g.order() > opts.cap) return;

  const GoodEdgeReport per_edge = good_edge_set(g, opts);
  const EdgeSet good = multipartite_good_edges(spec);
  const EdgeSet forbidden = multipartite_forbidden_edges(spec);
  std::set<Edge> oracle_good(per_edge.good.begin(), per_edge.good.end());

  std::size_t good_ok = 0;
  for (const Edge& e : good.edges) good_ok += oracle_good.count(e);
  out.check(id + ".other_parts_good", "pairs inside the smaller parts are good", good_ok == good.size(),
            std::to_string(good_ok) + " of " + std::to_string(good.size()));

  std::size_t forbidden_ok = 0;
  for (const Edge& e : forbidden.edges) forbidden_ok += oracle_good.count(e) == 0 ? 1 : 0;
  const bool unique_max = spec.parts.size() < 2 || spec.parts[0] > spec.parts[1];
  const std::string forbidden_detail = std::to_string(forbidden_ok) + " of " + std::to_string(forbidden.size()) +
                                       " forbidden; oracle good count " + std::to_string(per_edge.good.size()) +
                                       ", formula " + std::to_string(mu_multipartite(spec));
  if (unique_max) {
    out.check(id + ".largest_part_forbidden", "pairs inside the largest part are forbidden; counts match",
              forbidden_ok == forbidden.size() &&
                  static_cast<std::int64_t>(per_edge.good.size()) == mu_multipartite(spec) &&
                  per_edge.good == good.edges,
              forbidden_detail);
  } else {
    out.note(id + ".tied_largest_part", "largest part size is tied; its pairs are reported, not asserted",
             forbidden_detail);
  }

  if (g.order() <= kMaxGoodSetCap) {
    const MaxGoodSet best = maximum_good_set(g, {kMaxGoodSetCap, opts.memoize});
    out.check(id + ".mu.oracle", "maximum jointly addable set has the closed-form size",
              best.mu == mu_multipartite(spec), pair_text(best.mu, mu_multipartite(spec)));
  }
}

void joined_claims(Claims& out, int n, const OracleOptions& opts) {
  const std::string id = "joined.n" + std::to_string(n);
  const FamilySpec family = JoinedCliquesFamily{n};
  const Graph g = build_family(family);
  const Ranking f = joined_cliques_ranking(n);

  auto [rank_ok, rank_detail] = rank_matches(g, f, n + 1, opts);
  out.check(id + ".rank", "rank number equals n+1 and the explicit ranking attains it",
            rank_ok && is_valid_ranking(g, f), rank_detail);
  const EdgeSet h = joined_good_edges(n);
  out.check(id + ".size", "constructed set has 2(n-1) edges", static_cast<std::int64_t>(h.size()) == mu_joined(n),
            pair_text(static_cast<long long>(h.size()), mu_joined(n)));
  if (g.order() > opts.cap) return;
  const GoodEdgeComparison cmp = compare_good_edges(family, Reading::Corrected, opts);
  if (cmp.maximum)
    out.check(id + ".maximum", "construction is a maximum good set", cmp.identical(),
              "oracle maximum " + std::to_string(cmp.maximum->mu) + ", construction " + std::to_string(h.size()));
  std::set<Edge> outside(cmp.per_edge.good.begin(), cmp.per_edge.good.end());
  for (const Edge& e : h.edges) outside.erase(e);
  out.check(id + ".rest_forbidden", "every non-edge outside the construction is forbidden on its own",
            outside.empty() && cmp.not_good.empty(),
            std::to_string(outside.size()) + " of " + std::to_string(g.order() * (g.order() - 1) / 2 - g.edges().size() - h.size()) +
                " other non-edges are good on their own: " + edge_list({outside.begin(), outside.end()}));
  out.check(id + ".joint", "adding the whole set keeps the rank number", cmp.constructive_joint.holds,
            joint_text(cmp.constructive_joint));
}

void uniqueness_claims(Claims& out, int max_k, const OracleOptions& opts) {
  for (int k = 1; k <= std::min(max_k, 4); ++k) {
    const Graph g = build_family(PathFamily{k});
    const auto all = enumerate_optimal_rankings(g, {std::max(opts.cap, 16), opts.memoize});
    const bool ok = all.size() == 1 && all.front() == standard_path_ranking(k);
    out.check("uniqueness.path.k" + std::to_string(k), "exactly one optimal ranking, the standard one", ok,
              std::to_string(all.size()) + " optimal ranking(s)");
  }
  for (int k = 2; k <= std::min(max_k, 4); ++k) {
    const Graph g = build_family(CycleFamily{k});
    const auto all = enumerate_optimal_rankings(g, {std::max(opts.cap, 16), opts.memoize});
    const auto autos = automorphisms(g);
    const std::size_t orbits = count_orbits(all, autos);
    const std::size_t swaps = count_top_swap_classes(all);
    const std::size_t n = std::size_t{1} << k;
    out.check("uniqueness.cycle.k" + std::to_string(k),
              "optimal rankings are the rotations of the standard one (one orbit)",
              all.size() == n && orbits == 1 && std::binary_search(all.begin(), all.end(), standard_cycle_ranking(k)),
              std::to_string(all.size()) + " raw, " + std::to_string(orbits) + " up to automorphism, " +
                  std::to_string(swaps) + " up to swapping the two largest labels");
  }
}

}  // namespace

bool GoodEdgeComparison::identical() const {
  if (!constructive_joint.holds || !not_good.empty()) return false;
  if (per_edge_joint.holds && !missing.empty()) return false;
  if (maximum) return maximum->mu == static_cast<std::int64_t>(constructive.size());
  // Without the maximum-set search, maximality follows only from a jointly addable per-edge set.
  return per_edge_joint.holds;
}

GoodEdgeComparison compare_good_edges(const FamilySpec& raw, Reading reading, OracleOptions opts) {
  const FamilySpec family = normalize(raw);
  const Graph g = build_family(family);
  if (g.order() > opts.cap)
    throw CapExceeded("oracle comparison needs order <= cap (" + std::to_string(opts.cap) + "), family has " +
                      std::to_string(g.order()));
  GoodEdgeComparison cmp{family, reading, family_good_edges(family, reading), {}, {}, {}, {}, {}, {}};
  cmp.per_edge = good_edge_set(g, opts);
  cmp.missing = difference(cmp.per_edge.good, cmp.constructive.edges);
  cmp.not_good = difference(cmp.constructive.edges, cmp.per_edge.good);
  const Ranking witness = family_ranking(family);
  cmp.constructive_joint = verify_simultaneous(g, cmp.constructive.edges, &witness, opts);
  cmp.per_edge_joint = verify_simultaneous(g, cmp.per_edge.good, nullptr, opts);
  if (g.order() <= kMaxGoodSetCap) cmp.maximum = maximum_good_set(g, {kMaxGoodSetCap, opts.memoize});
  return cmp;
}

LiteralReadingReport literal_reading_report(int k, OracleOptions opts) {
  LiteralReadingReport rep;
  rep.k = k;
  const EdgeSet corrected = build_HP(k, Reading::Corrected);
  const EdgeSet literal = build_HP(k, Reading::Literal);
  rep.corrected_size = corrected.size();
  rep.literal_size = literal.size();
  rep.dropped = difference(corrected.edges, literal.edges);
  for (std::size_t i = 0; i < corrected.size(); ++i) {
    if (!std::binary_search(rep.dropped.begin(), rep.dropped.end(), corrected.edges[i])) continue;
    if (corrected.clauses[i] == Clause::EvenAncestor) ++rep.dropped_by_ancestor_rule;
    else ++rep.dropped_by_block_rule;
  }
  if (family_order(PathFamily{k}) <= opts.cap) {
    const Graph g = build_family(PathFamily{k});
    rep.oracle_checked = true;
    for (const EdgeVerdict& v : classify_edges(g, rep.dropped, opts).verdicts)
      if (v.verdict == Verdict::Good) rep.dropped_good.push_back(v.edge);
  }
  if (k <= 6) {
    rep.union_checked = true;
    rep.union_corrected = union_ej(k, Reading::Corrected).size();
    rep.union_literal = union_ej(k, Reading::Literal).size();
  }
  return rep;
}

std::vector<MultipartiteFamily> multipartite_profiles(int max_total) {
  std::vector<MultipartiteFamily> out;
  std::vector<int> parts;
  std::function<void(int, int)> grow = [&](int remaining, int cap) {
    if (parts.size() >= 2) out.push_back({parts});
    for (int m = std::min(remaining, cap); m >= 1; --m) {
      parts.push_back(m);
      grow(remaining - m, m);
      parts.pop_back();
    }
  };
  grow(max_total, max_total);
  std::sort(out.begin(), out.end(), [](const MultipartiteFamily& a, const MultipartiteFamily& b) {
    int sa = 0, sb = 0;
    for (int x : a.parts) sa += x;
    for (int x : b.parts) sb += x;
    return sa != sb ? sa < sb : a.parts > b.parts;
  });
  return out;
}

std::vector<ClaimResult> run_suite(std::string_view suite, int max_k, const std::optional<FamilySpec>& family,
                                   OracleOptions opts) {
  const std::set<std::string_view> known{"paper-all", "path", "cycle", "multipartite", "joined", "uniqueness"};
  if (!known.count(suite)) throw InputError("unknown suite \"" + std::string(suite) + "\"");
  if (max_k < 1) throw InputError("max_k must be positive");
  const bool all = suite == "paper-all";
  Claims out;

  auto wants = [&](std::string_view name) { return all || suite == name; };
  const FamilySpec* only = family ? &*family : nullptr;

  if (wants("path")) {
    if (only && std::holds_alternative<PathFamily>(*only)) {
      path_claims(out, std::get<PathFamily>(*only).k, opts);
    } else if (!only) {
      for (int k = 3; k <= std::min(max_k, 6); ++k) path_claims(out, k, opts);
    }
  }
  if (wants("cycle")) {
    if (only && std::holds_alternative<CycleFamily>(*only)) {
      cycle_claims(out, std::get<CycleFamily>(*only).k, opts);
    } else if (!only) {
      for (int k = 3; k <= std::min(max_k, 5); ++k) cycle_claims(out, k, opts);
    }
  }
  if (wants("multipartite")) {
    if (only && std::holds_alternative<MultipartiteFamily>(*only)) {
      multipartite_claims(out, std::get<MultipartiteFamily>(*only), opts);
    } else if (!only) {
      for (const auto& p : multipartite_profiles(7)) multipartite_claims(out, p, opts);
    }
  }
  if (wants("joined")) {
    if (only && std::holds_alternative<JoinedCliquesFamily>(*only)) {
      joined_claims(out, std::get<JoinedCliquesFamily>(*only).n, opts);
    } else if (!only) {
      for (int n = 2; n <= 5; ++n) joined_claims(out, n, opts);
    }
  }
  if (wants("uniqueness")) uniqueness_claims(out, max_k, opts);
  return std::move(out).take();
}

}  // namespace vrank
