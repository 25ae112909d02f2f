#pragma once

// Digraphs, arrangements, and the three ways of scoring an arrangement
// (edge spans, cut sizes, vertex levels), plus the weighted undirected
// abstraction in which each vertex carries its out-degree.

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace maxdla {

using Vertex = int;
using Value = std::int64_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  int multiplicity = 1;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Loop-free directed multigraph on vertices 0..n-1. Arcs are kept sorted by
// (tail, head) with parallel copies folded into one multiplicity.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int num_vertices);
  Digraph(int num_vertices, std::span<const Arc> arcs);

  int num_vertices() const { return num_vertices_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t num_distinct_arcs() const { return arcs_.size(); }
  Value total_multiplicity() const;

  void add_arc(Vertex tail, Vertex head, int multiplicity = 1);
  // Removes `multiplicity` copies; returns false (and changes nothing) when
  // fewer copies are present.
  bool remove_arc(Vertex tail, Vertex head, int multiplicity = 1);
  int multiplicity(Vertex tail, Vertex head) const;
  bool has_arc(Vertex tail, Vertex head) const { return multiplicity(tail, head) > 0; }

  std::vector<int> out_degrees() const;
  std::vector<int> in_degrees() const;
  // Every multiplicity is 1. Opposite arcs are allowed.
  bool is_simple() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int num_vertices_ = 0;
  std::vector<Arc> arcs_;
};

// A bijection from vertices 0..n-1 to positions 1..n, stored both ways.
// Ordering compares the vertex sequences lexicographically.
class Arrangement {
 public:
  Arrangement() = default;
  explicit Arrangement(std::vector<Vertex> order);
  static Arrangement identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  std::span<const Vertex> order() const { return order_; }
  Vertex at(int index) const { return order_[index]; }
  bool contains(Vertex v) const { return v >= 0 && v < size(); }
  // 1-based position pi(v).
  int position(Vertex v) const;

  friend bool operator==(const Arrangement& a, const Arrangement& b) { return a.order_ == b.order_; }
  friend auto operator<=>(const Arrangement& a, const Arrangement& b) { return a.order_ <=> b.order_; }

 private:
  std::vector<Vertex> order_;
  std::vector<int> position_;
};

// Cut sizes (c_1, ..., c_{n-1}) of an arrangement. Empty for n <= 1.
struct Signature {
  std::vector<Value> cuts;

  std::size_t size() const { return cuts.size(); }
  Value sum() const;
  Value max_cut() const;

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

// Per-position levels l(v_i) = c_i - c_{i-1}, with c_0 = c_n = 0.
struct LevelProfile {
  std::vector<Value> levels;

  Signature prefix_signature() const;
  bool non_increasing() const;

  friend auto operator<=>(const LevelProfile&, const LevelProfile&) = default;
};

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  int multiplicity = 1;

  friend auto operator<=>(const WeightedEdge&, const WeightedEdge&) = default;
};

// Undirected loop-free multigraph with integer vertex weights. Each edge
// copy lowers the level of whichever endpoint is placed later by
// `edge_decrement` (1 for an oriented edge, 2 for a symmetric pair).
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int num_vertices, std::span<const WeightedEdge> edges, std::vector<Value> weights,
                int edge_decrement = 1);

  int num_vertices() const { return static_cast<int>(weights_.size()); }
  std::span<const WeightedEdge> edges() const { return edges_; }
  std::span<const Value> weights() const { return weights_; }
  Value weight(Vertex v) const { return weights_.at(v); }
  int edge_decrement() const { return edge_decrement_; }

  void set_weight(Vertex v, Value w) { weights_.at(v) = w; }
  // Removes one copy of {u, v}; returns false when the edge is absent.
  bool remove_edge_copy(Vertex u, Vertex v);
  int multiplicity(Vertex u, Vertex v) const;
  // Degree counted over distinct neighbours.
  int max_degree() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::vector<WeightedEdge> edges_;  // u < v, sorted, folded
  std::vector<Value> weights_;
  int edge_decrement_ = 1;
};

// Simple undirected graph, used for the minimum linear arrangement side.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(int num_vertices, std::span<const std::pair<Vertex, Vertex>> edges);

  int num_vertices() const { return num_vertices_; }
  std::span<const std::pair<Vertex, Vertex>> edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const;
  UndirectedGraph complement() const;
  std::vector<int> degrees() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  int num_vertices_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;  // first < second, sorted
};

Value edge_value(const Arrangement& arr, const Arc& arc);
Value arrangement_value(const Digraph& d, const Arrangement& arr);
Signature signature(const Digraph& d, const Arrangement& arr);
LevelProfile levels(const Digraph& d, const Arrangement& arr);
Value value_by_cuts(const Digraph& d, const Arrangement& arr);
Value value_by_levels(const Digraph& d, const Arrangement& arr);

// Value of any arrangement of the complete digraph on n vertices; also
// val_D(pi) + val_complement(D)(pi) for every simple D.
Value complete_digraph_value(int n);

Digraph complement(const Digraph& d);
Digraph reversed(const Digraph& d);
Digraph reverse_cycle(const Digraph& d, std::span<const Arc> cycle);

WeightedGraph to_weighted(const Digraph& d);
LevelProfile weighted_levels(const WeightedGraph& g, const Arrangement& arr);
Signature weighted_signature(const WeightedGraph& g, const Arrangement& arr);
Value weighted_value(const WeightedGraph& g, const Arrangement& arr);

// Sum of |pi(u) - pi(v)| over edges.
Value linear_arrangement_cost(const UndirectedGraph& g, const Arrangement& arr);

bool dominates(const Signature& a, const Signature& b);
// Drops duplicates and every signature strictly dominated by another; the
// survivors keep their first-occurrence order.
std::vector<Signature> maximal_filter(std::vector<Signature> signatures);

}  // namespace maxdla
