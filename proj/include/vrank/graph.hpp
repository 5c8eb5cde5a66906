#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vrank {

/// Vertices are 1-indexed: a graph of order n has vertices 1..n.
using Vertex = int;

/// Largest graph order representable by the word-sized vertex sets.
inline constexpr int kMaxOrder = 63;

/// Raised for malformed input: out-of-range vertices, self-loops, bad parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense subset of 1..63 stored as a bitmask (bit v <=> vertex v).
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits & ~std::uint64_t{1}) {}
  VertexSet(std::initializer_list<Vertex> vs);

  /// {lo, lo+1, ..., hi}; empty when lo > hi.
  static VertexSet range(Vertex lo, Vertex hi);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool contains(Vertex v) const { return v >= 1 && v <= kMaxOrder && ((bits_ >> v) & 1U) != 0; }
  /// Smallest member; the set must be non-empty.
  Vertex lowest() const { return std::countr_zero(bits_); }
  Vertex highest() const { return 63 - std::countl_zero(bits_); }

  void insert(Vertex v);
  void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Undirected edge in canonical order u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Orders the endpoints; throws InputError on a self-loop or non-positive id.
  static Edge make(Vertex a, Vertex b);

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Subgraph induced by a vertex subset; vertex ids are those of the host graph.
struct InducedSubgraph {
  VertexSet vertices;
  std::vector<Edge> edges;
};

/// Simple undirected graph on 1..n, immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Duplicate edges are ignored; loops and out-of-range endpoints throw InputError.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet vertices() const { return VertexSet::range(1, n_); }
  VertexSet neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_ = std::vector<VertexSet>(1);
  std::vector<Edge> edges_;
};

/// Result of add_edges: the augmented graph and the requested edges already present.
struct EdgeAddition {
  Graph graph;
  std::vector<Edge> duplicates;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// Vertices of s reachable from `from` inside the subgraph induced by s.
VertexSet component_of(const Graph& g, VertexSet s, Vertex from);

/// Connected components of g[s], ordered by smallest vertex id.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet s);

bool is_connected(const Graph& g, VertexSet s);

/// All vertex pairs u < v that are not edges, lexicographically sorted.
std::vector<Edge> non_edges(const Graph& g);

EdgeAddition add_edges(const Graph& g, std::span<const Edge> es);

/// Graph on the same vertex ids with vertex v renamed perm[v-1].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace vrank
