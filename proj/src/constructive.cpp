#include "vrank/constructive.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace vrank {

namespace {

constexpr int kMaxPathExponent = 16;

void check_path_exponent(int k, int lowest) {
  if (k < lowest || k > kMaxPathExponent)
    throw InputError("exponent k=" + std::to_string(k) + " outside " + std::to_string(lowest) + ".." +
                     std::to_string(kMaxPathExponent));
}

/// Accumulates edges keyed by endpoints; the first clause recorded for an edge wins.
class EdgeCollector {
 public:
  void add(Edge e, Clause c) { edges_.try_emplace(e, c); }

  EdgeSet finish(FamilySpec host, std::vector<ClippedCandidate> clipped = {}) && {
    EdgeSet out{std::move(host), {}, {}, std::move(clipped)};
    out.edges.reserve(edges_.size());
    out.clauses.reserve(edges_.size());
    for (const auto& [e, c] : edges_) {
      out.edges.push_back(e);
      out.clauses.push_back(c);
    }
    return out;
  }

 private:
  std::map<Edge, Clause> edges_;
};

void add_pairs_within(EdgeCollector& out, std::ranges::iota_view<Vertex, Vertex> part, Clause c) {
  for (Vertex u : part)
    for (Vertex v : part)
      if (u < v) out.add({u, v}, c);
}

}  // namespace

std::string_view clause_tag(Clause c) {
  switch (c) {
    case Clause::OddPowerOrOmega: return "P1.1";
    case Clause::BlockInterior: return "P1.2";
    case Clause::PowerAbove: return "P1.3";
    case Clause::EvenAncestor: return "P1.3a";
    case Clause::CycleTop: return "P2.4";
    case Clause::ComponentTop: return "E_j";
    case Clause::MultipartiteIntra: return "K.intra";
    case Clause::CliqueTopFirst: return "H1";
    case Clause::CliqueTopSecond: return "H2";
  }
  return "?";
}

BinaryDigits BinaryDigits::of(std::uint64_t m) {
  if (m == 0) throw InputError("binary digits need a positive integer");
  BinaryDigits b{m, {}};
  for (std::uint64_t rest = m; rest != 0; rest >>= 1) b.digits.push_back(static_cast<int>(rest & 1U));
  return b;
}

int g_flip(int bit) {
  if (bit != 0 && bit != 1) throw InputError("g_flip expects a binary digit");
  return 1 - bit;
}

std::uint64_t omega(std::uint64_t m, int s) {
  if (m % 2 == 0) throw InputError("omega needs odd m, got " + std::to_string(m));
  const BinaryDigits b = BinaryDigits::of(m);
  if (s < 1 || s > b.top() - 1)
    throw InputError("omega(" + std::to_string(m) + ", s): s must lie in 1.." + std::to_string(b.top() - 1));
  std::uint64_t value = m + 1;
  for (int i = 1; i <= s; ++i) value += static_cast<std::uint64_t>(g_flip(b.digits[static_cast<std::size_t>(i)])) << i;
  return value;
}

std::uint64_t next_multiple(std::uint64_t m, int w) {
  if (w < 0 || w > 62) throw InputError("next_multiple needs 0 <= w <= 62");
  return ((m >> w) + 1) << w;
}

TargetSet procedure1_targets(std::uint64_t m, int k, Reading reading) {
  check_path_exponent(k, 1);
  const std::uint64_t last = (std::uint64_t{1} << k) - 1;
  if (m < 1 || m > last)
    throw InputError("position " + std::to_string(m) + " outside 1.." + std::to_string(last));

  std::map<std::uint64_t, Clause> found;
  TargetSet out;
  auto offer = [&](std::uint64_t n, Clause c) {
    if (n <= m + 1) return;  // n == m + 1 is already a path edge
    if (n > last) {
      out.clipped.push_back({m, n, c});
      return;
    }
    found.try_emplace(n, c);
  };
  // Powers of two from `from` upward; only the first one past the path is recorded as clipped.
  auto offer_powers = [&](std::uint64_t from, Clause c) {
    std::uint64_t p = std::bit_ceil(from);
    for (; p <= last; p <<= 1) offer(p, c);
    offer(p, c);
  };

  const BinaryDigits digits = BinaryDigits::of(m);
  const int t = digits.top();
  if (m % 2 == 1) {
    offer_powers(std::uint64_t{1} << (t + 1), Clause::OddPowerOrOmega);
    for (int s = 1; s <= t - 1; ++s) offer(omega(m, s), Clause::OddPowerOrOmega);
  }

  const int j = std::countr_zero(m);
  const std::uint64_t block = std::uint64_t{1} << j;
  const std::uint64_t l = ((m >> j) - 1) / 2;
  const std::uint64_t block_end = m + block;  // 2^j (2l + 2)
  if (reading == Reading::Corrected || l > 0)
    for (std::uint64_t n = m + 2; n < block_end; ++n) offer(n, Clause::BlockInterior);
  offer_powers(block_end, Clause::PowerAbove);
  // The odd-m rule generalised: every ancestor of v_m above it, not only the powers of two.
  if (reading == Reading::Corrected && m % 2 == 0)
    for (int w = j + 1; w <= t; ++w) offer(next_multiple(m, w), Clause::EvenAncestor);

  for (const auto& [n, c] : found) out.targets.push_back({n, c});
  return out;
}

EdgeSet build_HP(int k, Reading reading) {
  check_path_exponent(k, 3);
  const std::uint64_t last = (std::uint64_t{1} << k) - 1;
  EdgeCollector edges;
  std::vector<ClippedCandidate> clipped;
  for (std::uint64_t m = 1; m <= last; ++m) {
    TargetSet ts = procedure1_targets(m, k, reading);
    for (const Target& t : ts.targets) edges.add({static_cast<Vertex>(m), static_cast<Vertex>(t.n)}, t.clause);
    clipped.insert(clipped.end(), ts.clipped.begin(), ts.clipped.end());
  }
  return std::move(edges).finish(PathFamily{k}, std::move(clipped));
}

EdgeSet build_HC(int k) {
  EdgeSet path = build_HP(k);
  EdgeCollector edges;
  for (std::size_t i = 0; i < path.edges.size(); ++i) edges.add(path.edges[i], path.clauses[i]);
  const Vertex top = static_cast<Vertex>(std::uint64_t{1} << k);
  for (Vertex i = 2; i <= top - 2; ++i) edges.add({i, top}, Clause::CycleTop);
  return std::move(edges).finish(CycleFamily{k}, std::move(path.clipped));
}

VertexSet a_set(const Ranking& r, int j) {
  VertexSet out;
  for (Vertex v = 1; v <= r.size(); ++v)
    if (r.label(v) >= j) out.insert(v);
  return out;
}

std::vector<Edge> ev_edges(const Graph& g, VertexSet component, Vertex v) {
  if (!component.contains(v)) throw InputError("vertex " + std::to_string(v) + " is not in the component");
  std::vector<Edge> out;
  for (Vertex w : component - g.neighbors(v))
    if (w != v) out.push_back(Edge::make(v, w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> ej_edges(int k, int j) {
  if (k < 3 || k > 6) throw InputError("E_j decomposition is available for 3 <= k <= 6");
  if (j < 4 || j > k + 1) throw InputError("j must lie in 4.." + std::to_string(k + 1));
  const Graph path = build_family(PathFamily{k});
  const Ranking f = standard_path_ranking(k);
  std::vector<Edge> out;
  for (VertexSet comp : connected_components(path, path.vertices() - a_set(f, j))) {
    for (Vertex v : comp) {
      if (f.label(v) != j - 1) continue;
      auto part = ev_edges(path, comp, v);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet union_ej(int k, Reading reading) {
  const int last_j = reading == Reading::Corrected ? k + 1 : k;
  EdgeCollector edges;
  for (int j = 4; j <= last_j; ++j)
    for (const Edge& e : ej_edges(k, j)) edges.add(e, Clause::ComponentTop);
  return std::move(edges).finish(PathFamily{k});
}

std::int64_t mu_path(int k) {
  check_path_exponent(k, 3);
  return (static_cast<std::int64_t>(k) - 3) * (std::int64_t{1} << k) + 4;
}

std::int64_t mu_cycle(int k) {
  check_path_exponent(k, 3);
  return (static_cast<std::int64_t>(k) - 2) * (std::int64_t{1} << k) + 1;
}

std::int64_t mu_multipartite(const MultipartiteFamily& raw) {
  const auto spec = std::get<MultipartiteFamily>(normalize(raw));
  std::int64_t total = 0;
  for (std::size_t i = 1; i < spec.parts.size(); ++i)
    total += static_cast<std::int64_t>(spec.parts[i]) * (spec.parts[i] - 1) / 2;
  return total;
}

std::int64_t mu_joined(int n) {
  if (n < 2) throw InputError("joined cliques need n >= 2");
  return 2 * (static_cast<std::int64_t>(n) - 1);
}

std::int64_t mu_path_recurrence(int k) {
  check_path_exponent(k, 3);
  std::int64_t a = 4;
  for (int i = 4; i <= k; ++i) a = 2 * a + (std::int64_t{1} << i) - 4;
  return a;
}

std::int64_t mu_family(const FamilySpec& spec) {
  if (auto* p = std::get_if<PathFamily>(&spec)) return mu_path(p->k);
  if (auto* c = std::get_if<CycleFamily>(&spec)) return mu_cycle(c->k);
  if (auto* m = std::get_if<MultipartiteFamily>(&spec)) return mu_multipartite(*m);
  return mu_joined(std::get<JoinedCliquesFamily>(spec).n);
}

EdgeSet multipartite_good_edges(const MultipartiteFamily& raw) {
  const auto spec = std::get<MultipartiteFamily>(normalize(raw));
  EdgeCollector edges;
  for (std::size_t i = 1; i < spec.parts.size(); ++i)
    add_pairs_within(edges, multipartite_part(spec, i), Clause::MultipartiteIntra);
  return std::move(edges).finish(spec);
}

EdgeSet multipartite_forbidden_edges(const MultipartiteFamily& raw) {
  const auto spec = std::get<MultipartiteFamily>(normalize(raw));
  EdgeCollector edges;
  add_pairs_within(edges, multipartite_part(spec, 0), Clause::MultipartiteIntra);
  return std::move(edges).finish(spec);
}

EdgeSet joined_good_edges(int n) {
  normalize(JoinedCliquesFamily{n});
  EdgeCollector edges;
  for (Vertex i = 1; i <= n - 1; ++i) {
    edges.add({n, n + i}, Clause::CliqueTopFirst);
    edges.add({i, 2 * n}, Clause::CliqueTopSecond);
  }
  return std::move(edges).finish(JoinedCliquesFamily{n});
}

EdgeSet family_good_edges(const FamilySpec& raw, Reading reading) {
  const FamilySpec spec = normalize(raw);
  if (auto* p = std::get_if<PathFamily>(&spec)) return build_HP(p->k, reading);
  if (auto* c = std::get_if<CycleFamily>(&spec)) return build_HC(c->k);
  if (auto* m = std::get_if<MultipartiteFamily>(&spec)) return multipartite_good_edges(*m);
  return joined_good_edges(std::get<JoinedCliquesFamily>(spec).n);
}

}  // namespace vrank
