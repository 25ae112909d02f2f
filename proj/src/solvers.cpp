#include "maxdla/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "maxdla/errors.hpp"
#include "maxdla/tree.hpp"

namespace maxdla {

namespace {

ArrangementOptimum sorted_by_key(const Digraph& d, const std::vector<int>& key) {
  std::vector<Vertex> order(d.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key[a] > key[b]; });
  Arrangement arr(std::move(order));
  const Value value = arrangement_value(d, arr);
  return {value, std::move(arr)};
}

}  // namespace

std::string_view to_string(DigraphClass c) {
  switch (c) {
    case DigraphClass::kTournament: return "tournament";
    case DigraphClass::kTransitiveDag: return "transitive_dag";
    case DigraphClass::kDelta2: return "delta2";
    case DigraphClass::kOrientedForest: return "oriented_forest";
    case DigraphClass::kGeneral: return "general";
  }
  return "general";
}

bool is_tournament(const Digraph& d) {
  if (!d.is_simple()) return false;
  const int n = d.num_vertices();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
    }
  }
  return true;
}

bool is_acyclic(const Digraph& d) {
  const int n = d.num_vertices();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<Vertex>> out(n);
  for (const Arc& a : d.arcs()) {
    ++indeg[a.head];
    out[a.tail].push_back(a.head);
  }
  std::queue<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    const Vertex v = ready.front();
    ready.pop();
    ++seen;
    for (Vertex w : out[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  return seen == n;
}

bool is_transitive_dag(const Digraph& d) {
  if (!d.is_simple() || !is_acyclic(d)) return false;
  for (const Arc& first : d.arcs()) {
    for (const Arc& second : d.arcs()) {
      if (first.head == second.tail && !d.has_arc(first.tail, second.head)) return false;
    }
  }
  return true;
}

bool has_max_degree_two(const Digraph& d) {
  std::vector<int> deg(d.num_vertices(), 0);
  for (const Arc& a : d.arcs()) {
    deg[a.tail] += a.multiplicity;
    deg[a.head] += a.multiplicity;
  }
  return std::all_of(deg.begin(), deg.end(), [](int x) { return x <= 2; });
}

bool is_oriented_forest(const Digraph& d) {
  for (const Arc& a : d.arcs()) {
    if (d.has_arc(a.head, a.tail)) return false;
  }
  return underlying_is_forest(to_weighted(d));
}

DigraphClass detect_class(const Digraph& d) {
  if (is_tournament(d)) return DigraphClass::kTournament;
  if (is_transitive_dag(d)) return DigraphClass::kTransitiveDag;
  if (has_max_degree_two(d)) return DigraphClass::kDelta2;
  if (is_oriented_forest(d)) return DigraphClass::kOrientedForest;
  return DigraphClass::kGeneral;
}

ArrangementOptimum tournament_arrangement(const Digraph& d) {
  if (!is_tournament(d)) throw InputError("tournament_arrangement: the digraph is not a tournament");
  return sorted_by_key(d, d.out_degrees());
}

ArrangementOptimum transitive_dag_arrangement(const Digraph& d) {
  if (!is_transitive_dag(d)) {
    throw InputError("transitive_dag_arrangement: the digraph is not a transitive acyclic digraph");
  }
  std::vector<int> key = d.out_degrees();
  const std::vector<int> in = d.in_degrees();
  for (std::size_t v = 0; v < key.size(); ++v) key[v] -= in[v];
  return sorted_by_key(d, key);
}

ArrangementOptimum delta2_arrangement(const Digraph& d) {
  if (!has_max_degree_two(d)) throw InputError("delta2_arrangement: a vertex meets more than two arcs");
  TreeOptions options;
  options.max_degree = 2;
  options.allow_cycles = true;
  const WitnessedLevelSet set = find_maximal_signatures(to_weighted(d), options);
  if (set.entries.empty()) throw VerificationError("delta2_arrangement: no arrangement found");
  const LevelEntry& best = set.entries.front();
  Arrangement arr(best.order());
  const Value value = arrangement_value(d, arr);
  if (value != best.value()) throw VerificationError("delta2_arrangement: witness does not reproduce its value");
  return {value, std::move(arr)};
}

}  // namespace maxdla
