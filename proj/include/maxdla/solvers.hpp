#pragma once

// Closed-form maximum arrangements for digraph classes whose optimal
// arrangement makes every cut the largest for its size.

#include <string_view>

#include "maxdla/core.hpp"
#include "maxdla/oracle.hpp"

namespace maxdla {

enum class DigraphClass {
  kTournament,
  kTransitiveDag,
  kDelta2,
  kOrientedForest,
  kGeneral,
};

std::string_view to_string(DigraphClass c);

bool is_tournament(const Digraph& d);
bool is_acyclic(const Digraph& d);
bool is_transitive_dag(const Digraph& d);
// Every vertex meets at most two arcs, counting parallel and opposite copies.
bool has_max_degree_two(const Digraph& d);
bool is_oriented_forest(const Digraph& d);

// First match in the order tournament, transitive DAG, degree two, oriented
// forest, general.
DigraphClass detect_class(const Digraph& d);

// Non-increasing out-degree, ties by vertex index.
ArrangementOptimum tournament_arrangement(const Digraph& d);

// Non-increasing out-degree minus in-degree, ties by vertex index. The result
// is also a topological order.
ArrangementOptimum transitive_dag_arrangement(const Digraph& d);

// Disjoint paths and cycles. Paths go through the forest recursion; a cycle
// first branches on one of its edges.
ArrangementOptimum delta2_arrangement(const Digraph& d);

}  // namespace maxdla
