#include "maxdla/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "maxdla/errors.hpp"

namespace maxdla {

namespace {

std::string vertex_message(Vertex v, int n) {
  return "vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices";
}

void check_arrangement_size(int n, const Arrangement& arr) {
  if (arr.size() != n) {
    throw InputError("arrangement covers " + std::to_string(arr.size()) + " vertices, graph has " +
                     std::to_string(n));
  }
}

}  // namespace

// ---------------------------------------------------------------- Digraph

Digraph::Digraph(int num_vertices) : num_vertices_(num_vertices) {
  if (num_vertices < 0) throw InputError("negative vertex count");
}

Digraph::Digraph(int num_vertices, std::span<const Arc> arcs) : Digraph(num_vertices) {
  for (const Arc& a : arcs) add_arc(a.tail, a.head, a.multiplicity);
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= num_vertices_) throw InputError(vertex_message(v, num_vertices_));
}

Value Digraph::total_multiplicity() const {
  Value total = 0;
  for (const Arc& a : arcs_) total += a.multiplicity;
  return total;
}

void Digraph::add_arc(Vertex tail, Vertex head, int multiplicity) {
  check_vertex(tail);
  check_vertex(head);
  if (tail == head) throw InputError("loop at vertex " + std::to_string(tail));
  if (multiplicity < 1) throw InputError("arc multiplicity must be positive");
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{tail, head, 0},
                             [](const Arc& a, const Arc& b) {
                               return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
                             });
  if (it != arcs_.end() && it->tail == tail && it->head == head) {
    it->multiplicity += multiplicity;
  } else {
    arcs_.insert(it, Arc{tail, head, multiplicity});
  }
}

bool Digraph::remove_arc(Vertex tail, Vertex head, int multiplicity) {
  auto it = std::find_if(arcs_.begin(), arcs_.end(),
                         [&](const Arc& a) { return a.tail == tail && a.head == head; });
  if (it == arcs_.end() || it->multiplicity < multiplicity) return false;
  it->multiplicity -= multiplicity;
  if (it->multiplicity == 0) arcs_.erase(it);
  return true;
}

int Digraph::multiplicity(Vertex tail, Vertex head) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::pair(tail, head),
                             [](const Arc& a, const std::pair<Vertex, Vertex>& key) {
                               return std::pair(a.tail, a.head) < key;
                             });
  if (it != arcs_.end() && it->tail == tail && it->head == head) return it->multiplicity;
  return 0;
}

std::vector<int> Digraph::out_degrees() const {
  std::vector<int> deg(num_vertices_, 0);
  for (const Arc& a : arcs_) deg[a.tail] += a.multiplicity;
  return deg;
}

std::vector<int> Digraph::in_degrees() const {
  std::vector<int> deg(num_vertices_, 0);
  for (const Arc& a : arcs_) deg[a.head] += a.multiplicity;
  return deg;
}

bool Digraph::is_simple() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.multiplicity == 1; });
}

// ----------------------------------------------------------- Arrangement

Arrangement::Arrangement(std::vector<Vertex> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  position_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order_[i];
    if (v < 0 || v >= n) throw InputError("arrangement: " + vertex_message(v, n));
    if (position_[v] != 0) throw InputError("arrangement repeats vertex " + std::to_string(v));
    position_[v] = i + 1;
  }
}

Arrangement Arrangement::identity(int n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Arrangement(std::move(order));
}

int Arrangement::position(Vertex v) const {
  if (!contains(v)) throw InputError("arrangement: " + vertex_message(v, size()));
  return position_[v];
}

// --------------------------------------------------- Signature / levels

Value Signature::sum() const { return std::accumulate(cuts.begin(), cuts.end(), Value{0}); }

Value Signature::max_cut() const {
  return cuts.empty() ? 0 : *std::max_element(cuts.begin(), cuts.end());
}

Signature LevelProfile::prefix_signature() const {
  Signature s;
  if (levels.size() <= 1) return s;
  s.cuts.reserve(levels.size() - 1);
  Value running = 0;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    running += levels[i];
    s.cuts.push_back(running);
  }
  return s;
}

bool LevelProfile::non_increasing() const {
  return std::is_sorted(levels.begin(), levels.end(), std::greater<>());
}

// --------------------------------------------------------- WeightedGraph

WeightedGraph::WeightedGraph(int num_vertices, std::span<const WeightedEdge> edges,
                             std::vector<Value> weights, int edge_decrement)
    : weights_(std::move(weights)), edge_decrement_(edge_decrement) {
  if (num_vertices < 0) throw InputError("negative vertex count");
  if (static_cast<int>(weights_.size()) != num_vertices) {
    throw InputError("weighted graph needs exactly one weight per vertex");
  }
  if (edge_decrement < 1) throw InputError("edge decrement must be positive");
  for (WeightedEdge e : edges) {
    if (e.u < 0 || e.u >= num_vertices) throw InputError(vertex_message(e.u, num_vertices));
    if (e.v < 0 || e.v >= num_vertices) throw InputError(vertex_message(e.v, num_vertices));
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    if (e.multiplicity < 1) throw InputError("edge multiplicity must be positive");
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  std::vector<WeightedEdge> folded;
  for (const WeightedEdge& e : edges_) {
    if (!folded.empty() && folded.back().u == e.u && folded.back().v == e.v) {
      folded.back().multiplicity += e.multiplicity;
    } else {
      folded.push_back(e);
    }
  }
  edges_ = std::move(folded);
}

bool WeightedGraph::remove_edge_copy(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  auto it = std::find_if(edges_.begin(), edges_.end(),
                         [&](const WeightedEdge& e) { return e.u == u && e.v == v; });
  if (it == edges_.end()) return false;
  if (--it->multiplicity == 0) edges_.erase(it);
  return true;
}

int WeightedGraph::multiplicity(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  for (const WeightedEdge& e : edges_) {
    if (e.u == u && e.v == v) return e.multiplicity;
  }
  return 0;
}

int WeightedGraph::max_degree() const {
  std::vector<int> deg(num_vertices(), 0);
  for (const WeightedEdge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

// ------------------------------------------------------- UndirectedGraph

UndirectedGraph::UndirectedGraph(int num_vertices, std::span<const std::pair<Vertex, Vertex>> edges)
    : num_vertices_(num_vertices) {
  if (num_vertices < 0) throw InputError("negative vertex count");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= num_vertices) throw InputError(vertex_message(u, num_vertices));
    if (v < 0 || v >= num_vertices) throw InputError(vertex_message(v, num_vertices));
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) {
      throw InputError("repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
  }
  edges_.assign(seen.begin(), seen.end());
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair(u, v));
}

UndirectedGraph UndirectedGraph::complement() const {
  std::vector<std::pair<Vertex, Vertex>> missing;
  for (Vertex u = 0; u < num_vertices_; ++u) {
    for (Vertex v = u + 1; v < num_vertices_; ++v) {
      if (!has_edge(u, v)) missing.emplace_back(u, v);
    }
  }
  return UndirectedGraph(num_vertices_, missing);
}

std::vector<int> UndirectedGraph::degrees() const {
  std::vector<int> deg(num_vertices_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

// ------------------------------------------------------------ operations

Value edge_value(const Arrangement& arr, const Arc& arc) {
  const int from = arr.position(arc.tail);
  const int to = arr.position(arc.head);
  return std::max(0, to - from);
}

Value arrangement_value(const Digraph& d, const Arrangement& arr) {
  check_arrangement_size(d.num_vertices(), arr);
  Value total = 0;
  for (const Arc& a : d.arcs()) total += a.multiplicity * edge_value(arr, a);
  return total;
}

Signature signature(const Digraph& d, const Arrangement& arr) {
  check_arrangement_size(d.num_vertices(), arr);
  const int n = d.num_vertices();
  if (n <= 1) return {};
  // diff[k] changes the size of cut k (after k+1 vertices), 0-based.
  std::vector<Value> diff(n, 0);
  for (const Arc& a : d.arcs()) {
    const int from = arr.position(a.tail) - 1;
    const int to = arr.position(a.head) - 1;
    if (from < to) {
      diff[from] += a.multiplicity;
      diff[to] -= a.multiplicity;
    }
  }
  Signature s;
  s.cuts.resize(n - 1);
  Value running = 0;
  for (int k = 0; k + 1 < n; ++k) {
    running += diff[k];
    s.cuts[k] = running;
  }
  return s;
}

LevelProfile levels(const Digraph& d, const Arrangement& arr) {
  check_arrangement_size(d.num_vertices(), arr);
  const std::vector<int> out = d.out_degrees();
  LevelProfile lp;
  lp.levels.resize(d.num_vertices());
  for (int i = 0; i < arr.size(); ++i) lp.levels[i] = out[arr.at(i)];
  for (const Arc& a : d.arcs()) {
    const int later = std::max(arr.position(a.tail), arr.position(a.head)) - 1;
    lp.levels[later] -= a.multiplicity;
  }
  return lp;
}

Value value_by_cuts(const Digraph& d, const Arrangement& arr) { return signature(d, arr).sum(); }

Value value_by_levels(const Digraph& d, const Arrangement& arr) {
  return levels(d, arr).prefix_signature().sum();
}

Value complete_digraph_value(int n) {
  const Value m = n;
  return m * (m * m - 1) / 6;
}

Digraph complement(const Digraph& d) {
  if (!d.is_simple()) throw InputError("complement requires a simple digraph");
  const int n = d.num_vertices();
  Digraph c(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && !d.has_arc(u, v)) c.add_arc(u, v);
    }
  }
  return c;
}

Digraph reversed(const Digraph& d) {
  Digraph r(d.num_vertices());
  for (const Arc& a : d.arcs()) r.add_arc(a.head, a.tail, a.multiplicity);
  return r;
}

Digraph reverse_cycle(const Digraph& d, std::span<const Arc> cycle) {
  if (cycle.empty()) throw InputError("reverse_cycle: empty cycle");
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Arc& a = cycle[i];
    const Arc& next = cycle[(i + 1) % cycle.size()];
    if (a.head != next.tail) throw InputError("reverse_cycle: arcs do not form a closed directed walk");
    if (!seen.insert(a.tail).second) throw InputError("reverse_cycle: cycle repeats a vertex");
  }
  Digraph out = d;
  for (const Arc& a : cycle) {
    if (!out.remove_arc(a.tail, a.head, 1)) {
      throw InputError("reverse_cycle: arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                       ") is not in the digraph");
    }
  }
  for (const Arc& a : cycle) out.add_arc(a.head, a.tail, 1);
  return out;
}

WeightedGraph to_weighted(const Digraph& d) {
  std::vector<WeightedEdge> edges;
  edges.reserve(d.num_distinct_arcs());
  for (const Arc& a : d.arcs()) edges.push_back({a.tail, a.head, a.multiplicity});
  const std::vector<int> out = d.out_degrees();
  return WeightedGraph(d.num_vertices(), edges, std::vector<Value>(out.begin(), out.end()));
}

LevelProfile weighted_levels(const WeightedGraph& g, const Arrangement& arr) {
  check_arrangement_size(g.num_vertices(), arr);
  LevelProfile lp;
  lp.levels.resize(g.num_vertices());
  for (int i = 0; i < arr.size(); ++i) lp.levels[i] = g.weight(arr.at(i));
  for (const WeightedEdge& e : g.edges()) {
    const int later = std::max(arr.position(e.u), arr.position(e.v)) - 1;
    lp.levels[later] -= Value{e.multiplicity} * g.edge_decrement();
  }
  return lp;
}

Signature weighted_signature(const WeightedGraph& g, const Arrangement& arr) {
  return weighted_levels(g, arr).prefix_signature();
}

Value weighted_value(const WeightedGraph& g, const Arrangement& arr) {
  return weighted_signature(g, arr).sum();
}

Value linear_arrangement_cost(const UndirectedGraph& g, const Arrangement& arr) {
  check_arrangement_size(g.num_vertices(), arr);
  Value total = 0;
  for (auto [u, v] : g.edges()) total += std::abs(arr.position(u) - arr.position(v));
  return total;
}

bool dominates(const Signature& a, const Signature& b) {
  if (a.size() != b.size()) {
    throw InputError("cannot compare signatures of lengths " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.cuts[i] < b.cuts[i]) return false;
  }
  return true;
}

std::vector<Signature> maximal_filter(std::vector<Signature> signatures) {
  std::vector<Signature> kept;
  for (std::size_t i = 0; i < signatures.size(); ++i) {
    const Signature& s = signatures[i];
    bool drop = false;
    for (std::size_t j = 0; j < signatures.size() && !drop; ++j) {
      if (i == j) continue;
      const Signature& other = signatures[j];
      if (!dominates(other, s)) continue;
      // Strictly dominated, or an equal copy that appeared earlier.
      drop = other != s || j < i;
    }
    if (!drop) kept.push_back(s);
  }
  return kept;
}

}  // namespace maxdla
