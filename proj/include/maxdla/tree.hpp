#pragma once

// Maximal-signature enumeration for weighted forests of bounded degree, and
// the two solvers built on it: maximum directed linear arrangement of
// oriented forests, and minimum linear arrangement of graphs whose
// complement is such a forest.
//
// A component's maximal signatures are represented by witnesses: concrete
// arrangements whose levels are already non-increasing, so the signature is
// the prefix sums of the level multiset. Removing an edge {u, v} and
// lowering the weight of v by the edge decrement scores every arrangement
// with u before v exactly as before; the recursion branches on which
// endpoint pays, splits into components, and recombines with an interleaving
// merge that never changes a level.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "maxdla/core.hpp"
#include "maxdla/oracle.hpp"

namespace maxdla {

struct PlacedVertex {
  Vertex vertex = 0;
  Value level = 0;

  friend auto operator<=>(const PlacedVertex&, const PlacedVertex&) = default;
};

// An arrangement of one component, listed with each vertex's level, with
// levels non-increasing.
struct LevelEntry {
  std::vector<PlacedVertex> witness;

  std::vector<Vertex> order() const;
  std::map<Value, int> level_multiset() const;
  // Cuts c_1..c_{k-1} of the witness (k = its length).
  Signature canonical_signature() const;
  // All k running totals of the levels; the last is the level sum, which is
  // zero only when the weights are the true out-degrees.
  std::vector<Value> prefix_sums() const;
  Value value() const;
};

struct WitnessedLevelSet {
  std::vector<LevelEntry> entries;
};

struct TreeOptions {
  // Largest number of distinct neighbours any vertex may have.
  int max_degree = 4;
  // Lets components contain cycles; each cycle costs one extra branching.
  // Used by the degree-2 solver.
  bool allow_cycles = false;
};

struct EdgeSplit {
  WeightedGraph lowered_u;  // u pays the edge: arrangements with v before u
  WeightedGraph lowered_v;  // v pays the edge: arrangements with u before v
};

// Removes one copy of {u, v} and lowers the later endpoint's weight by the
// graph's edge decrement, once per branch.
EdgeSplit split_edge(const WeightedGraph& g, Vertex u, Vertex v);

WitnessedLevelSet find_maximal_signatures(const WeightedGraph& g, const TreeOptions& options = {});

// Combines sets for two vertex-disjoint components. With a precedence pair
// (first, second), entries that cannot place `first` before `second` are
// dropped and equal-level ties favour the side holding `first`.
WitnessedLevelSet merge_components(const WitnessedLevelSet& a, const WitnessedLevelSet& b,
                                   std::optional<std::pair<Vertex, Vertex>> precedence = std::nullopt);

// Drops duplicate level multisets and dominated entries; deterministic order
// (value descending, then witness sequence).
WitnessedLevelSet maximal_entries(std::vector<LevelEntry> entries);

ArrangementOptimum maxdla_forest(const Digraph& d, const TreeOptions& options = {});

// Returns the minimum of sum |pi(u) - pi(v)| over E(g) and an arrangement
// attaining it.
ArrangementOptimum minla_complement(const UndirectedGraph& g, const TreeOptions& options = {});

// True iff the underlying simple graph (parallel and opposite copies folded)
// has no cycle.
bool underlying_is_forest(const WeightedGraph& g);

}  // namespace maxdla
