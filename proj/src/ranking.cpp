#include "vrank/ranking.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace vrank {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int checked_order(long long n) {
  if (n > kMaxFamilyOrder)
    throw InputError("family order " + std::to_string(n) + " exceeds " + std::to_string(kMaxFamilyOrder));
  return static_cast<int>(n);
}

}  // namespace

Ranking::Ranking(std::vector<int> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] < 1) throw InputError("vertex " + std::to_string(i + 1) + " has non-positive label");
  max_label_ = labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

bool is_valid_ranking(const Graph& g, const Ranking& r) {
  if (r.size() != g.order())
    throw InputError("ranking labels " + std::to_string(r.size()) + " vertices, graph has " + std::to_string(g.order()));
  std::set<int> distinct(r.labels().begin(), r.labels().end());
  VertexSet at_most;  // vertices with label <= current level
  for (int c : distinct) {
    VertexSet level;
    for (Vertex v = 1; v <= g.order(); ++v)
      if (r.label(v) == c) level.insert(v);
    at_most |= level;
    VertexSet unchecked = level;
    while (!unchecked.empty()) {
      VertexSet comp = component_of(g, at_most, unchecked.lowest());
      if ((comp & level).size() > 1) return false;
      unchecked -= comp;
    }
  }
  return true;
}

int label_of_position(std::uint64_t m) {
  if (m == 0) throw InputError("positions are 1-based");
  return std::countr_zero(m) + 1;
}

Ranking standard_path_ranking(int k) {
  if (k < 1 || k > 62) throw InputError("path exponent k must be in 1..62");
  std::vector<int> labels((std::size_t{1} << k) - 1);
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = label_of_position(i + 1);
  return Ranking(std::move(labels));
}

Ranking standard_cycle_ranking(int k) {
  if (k < 2 || k > 62) throw InputError("cycle exponent k must be in 2..62");
  std::vector<int> labels = standard_path_ranking(k).labels();
  labels.push_back(k + 1);
  return Ranking(std::move(labels));
}

FamilySpec normalize(FamilySpec spec) {
  std::visit(overloaded{
                 [](PathFamily& f) {
                   if (f.k < 1) throw InputError("path family needs k >= 1");
                   checked_order((1LL << std::min(f.k, 40)) - 1);
                 },
                 [](CycleFamily& f) {
                   if (f.k < 2) throw InputError("cycle family needs k >= 2");
                   checked_order(1LL << std::min(f.k, 40));
                 },
                 [](MultipartiteFamily& f) {
                   if (f.parts.size() < 2) throw InputError("multipartite family needs at least two parts");
                   long long total = 0;
                   for (int m : f.parts) {
                     if (m < 1) throw InputError("multipartite part sizes must be >= 1");
                     total += m;
                   }
                   checked_order(total);
                   std::stable_sort(f.parts.begin(), f.parts.end(), std::greater<>());
                 },
                 [](JoinedCliquesFamily& f) {
                   if (f.n < 2) throw InputError("joined cliques family needs n >= 2");
                   checked_order(2LL * f.n);
                 },
             },
             spec);
  return spec;
}

std::string describe(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const PathFamily& f) { return "path(k=" + std::to_string(f.k) + ")"; },
                        [](const CycleFamily& f) { return "cycle(k=" + std::to_string(f.k) + ")"; },
                        [](const MultipartiteFamily& f) {
                          std::string s = "multipartite(";
                          for (std::size_t i = 0; i < f.parts.size(); ++i)
                            s += (i ? "," : "") + std::to_string(f.parts[i]);
                          return s + ")";
                        },
                        [](const JoinedCliquesFamily& f) { return "joined(n=" + std::to_string(f.n) + ")"; },
                    },
                    spec);
}

int family_order(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const PathFamily& f) { return static_cast<int>((1LL << f.k) - 1); },
                        [](const CycleFamily& f) { return static_cast<int>(1LL << f.k); },
                        [](const MultipartiteFamily& f) { return std::accumulate(f.parts.begin(), f.parts.end(), 0); },
                        [](const JoinedCliquesFamily& f) { return 2 * f.n; },
                    },
                    spec);
}

std::ranges::iota_view<Vertex, Vertex> multipartite_part(const MultipartiteFamily& spec, std::size_t i) {
  int first = 1;
  for (std::size_t p = 0; p < i; ++p) first += spec.parts.at(p);
  return std::views::iota(first, first + spec.parts.at(i));
}

Graph build_family(const FamilySpec& raw) {
  const FamilySpec spec = normalize(raw);
  const int n = family_order(spec);
  std::vector<Edge> es;
  std::visit(overloaded{
                 [&](const PathFamily&) {
                   for (Vertex v = 1; v < n; ++v) es.push_back({v, v + 1});
                 },
                 [&](const CycleFamily&) {
                   for (Vertex v = 1; v < n; ++v) es.push_back({v, v + 1});
                   es.push_back({1, n});
                 },
                 [&](const MultipartiteFamily& f) {
                   for (std::size_t a = 0; a < f.parts.size(); ++a)
                     for (std::size_t b = a + 1; b < f.parts.size(); ++b)
                       for (Vertex u : multipartite_part(f, a))
                         for (Vertex v : multipartite_part(f, b)) es.push_back(Edge::make(u, v));
                 },
                 [&](const JoinedCliquesFamily& f) {
                   for (int base : {0, f.n})
                     for (Vertex u = 1; u <= f.n; ++u)
                       for (Vertex v = u + 1; v <= f.n; ++v) es.push_back({base + u, base + v});
                   es.push_back({f.n, 2 * f.n});
                 },
             },
             spec);
  return Graph(n, es);
}

int family_rank_number(const FamilySpec& raw) {
  const FamilySpec spec = normalize(raw);
  return std::visit(overloaded{
                        [](const PathFamily& f) { return f.k; },
                        [](const CycleFamily& f) { return f.k + 1; },
                        [&](const MultipartiteFamily& f) { return family_order(spec) - f.parts.front() + 1; },
                        [](const JoinedCliquesFamily& f) { return f.n + 1; },
                    },
                    spec);
}

Ranking multipartite_ranking(const MultipartiteFamily& raw) {
  const auto spec = std::get<MultipartiteFamily>(normalize(raw));
  const int n = family_order(spec);
  const int largest = spec.parts.front();
  std::vector<int> labels(static_cast<std::size_t>(n), 1);
  // Part 0 occupies 1..largest and keeps label 1; everything else gets 2, 3, ...
  for (int i = largest; i < n; ++i) labels[static_cast<std::size_t>(i)] = i - largest + 2;
  return Ranking(std::move(labels));
}

Ranking joined_cliques_ranking(int n) {
  normalize(JoinedCliquesFamily{n});
  std::vector<int> labels(2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    labels[static_cast<std::size_t>(i - 1)] = i;
    labels[static_cast<std::size_t>(n + i - 1)] = i;
  }
  labels.back() = n + 1;
  return Ranking(std::move(labels));
}

Ranking family_ranking(const FamilySpec& raw) {
  const FamilySpec spec = normalize(raw);
  return std::visit(overloaded{
                        [](const PathFamily& f) { return standard_path_ranking(f.k); },
                        [](const CycleFamily& f) { return standard_cycle_ranking(f.k); },
                        [](const MultipartiteFamily& f) { return multipartite_ranking(f); },
                        [](const JoinedCliquesFamily& f) { return joined_cliques_ranking(f.n); },
                    },
                    spec);
}

}  // namespace vrank
