#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "maxdla/errors.hpp"
#include "maxdla/oracle.hpp"
#include "maxdla/tree.hpp"
#include "support/corpus.hpp"

namespace maxdla {
namespace {

using testing::arc;
using testing::path3;
using testing::star2out;

std::vector<Value> weights_of(const WeightedGraph& g) { return {g.weights().begin(), g.weights().end()}; }

std::set<Signature> signature_set(const WitnessedLevelSet& s) {
  std::set<Signature> out;
  for (const LevelEntry& e : s.entries) out.insert(e.canonical_signature());
  return out;
}

WitnessedLevelSet single(Vertex v, Value level) { return {{LevelEntry{{PlacedVertex{v, level}}}}}; }

TEST(SplitEdge, MaxdlaMode) {
  const std::vector<WeightedEdge> edge{{0, 1, 1}};
  const EdgeSplit s = split_edge(WeightedGraph(2, edge, {1, 0}), 0, 1);
  EXPECT_EQ(weights_of(s.lowered_u), (std::vector<Value>{0, 0}));
  EXPECT_EQ(weights_of(s.lowered_v), (std::vector<Value>{1, -1}));
  EXPECT_TRUE(s.lowered_u.edges().empty());
  EXPECT_TRUE(s.lowered_v.edges().empty());
}

TEST(SplitEdge, NegativeWeightsAllowed) {
  const std::vector<WeightedEdge> edge{{0, 1, 1}};
  EXPECT_EQ(weights_of(split_edge(WeightedGraph(2, edge, {0, 0}), 0, 1).lowered_v), (std::vector<Value>{0, -1}));
}

TEST(SplitEdge, MinlaModeLowersByTwo) {
  const std::vector<WeightedEdge> edge{{0, 1, 1}};
  const EdgeSplit s = split_edge(WeightedGraph(2, edge, {2, 2}, 2), 0, 1);
  EXPECT_EQ(weights_of(s.lowered_v), (std::vector<Value>{2, 0}));
  EXPECT_EQ(weights_of(s.lowered_u), (std::vector<Value>{0, 2}));
}

TEST(SplitEdge, MissingEdgeIsInputError) {
  EXPECT_THROW(split_edge(WeightedGraph(2, {}, {0, 0}), 0, 1), InputError);
}

TEST(FindMaximalSignatures, IsolatedVertex) {
  const auto s = find_maximal_signatures(WeightedGraph(1, {}, {3}));
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(s.entries[0].level_multiset(), (std::map<Value, int>{{3, 1}}));
}

TEST(FindMaximalSignatures, SingleEdge) {
  const std::vector<WeightedEdge> edge{{0, 1, 1}};
  const auto s = find_maximal_signatures(WeightedGraph(2, edge, {1, 0}));
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(s.entries[0].level_multiset(), (std::map<Value, int>{{-1, 1}, {1, 1}}));
  EXPECT_EQ(s.entries[0].canonical_signature().cuts, (std::vector<Value>{1}));
}

TEST(FindMaximalSignatures, Path3) {
  const auto s = find_maximal_signatures(to_weighted(path3()));
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(s.entries[0].level_multiset(), (std::map<Value, int>{{-1, 1}, {0, 1}, {1, 1}}));
  EXPECT_EQ(s.entries[0].canonical_signature().cuts, (std::vector<Value>{1, 1}));
  const auto brute = brute_maximal_signatures(to_weighted(path3()));
  EXPECT_EQ(brute[0].signature, s.entries[0].canonical_signature());
}

TEST(FindMaximalSignatures, EmptyGraph) {
  const auto s = find_maximal_signatures(WeightedGraph());
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_TRUE(s.entries[0].witness.empty());
}

TEST(FindMaximalSignatures, RejectsCyclesAndHighDegree) {
  const std::vector<WeightedEdge> triangle{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
  EXPECT_THROW(find_maximal_signatures(WeightedGraph(3, triangle, {1, 1, 1})), InputError);
  const std::vector<WeightedEdge> star{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}};
  EXPECT_THROW(find_maximal_signatures(WeightedGraph(4, star, {3, 0, 0, 0}), TreeOptions{2, false}), SizeLimitError);
  EXPECT_NO_THROW(find_maximal_signatures(WeightedGraph(4, star, {3, 0, 0, 0}), TreeOptions{3, false}));
}

TEST(MergeComponents, EdgePlusIsolatedVertex) {
  const WitnessedLevelSet edge{{LevelEntry{{PlacedVertex{0, 1}, PlacedVertex{1, -1}}}}};
  const auto m = merge_components(edge, single(2, 0));
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].order(), (std::vector<Vertex>{0, 2, 1}));
  EXPECT_EQ(m.entries[0].canonical_signature().cuts, (std::vector<Value>{1, 1}));
  // The interleaved witness evaluates to the same signature.
  const std::vector<WeightedEdge> e{{0, 1, 1}};
  const WeightedGraph g(3, e, {1, 0, 0});
  EXPECT_EQ(weighted_signature(g, Arrangement(m.entries[0].order())).cuts, (std::vector<Value>{1, 1}));
}

TEST(MergeComponents, EmptyComponentIsIdentity) {
  const WitnessedLevelSet a{{LevelEntry{{PlacedVertex{0, 1}, PlacedVertex{1, -1}}}}};
  const auto m = merge_components(a, WitnessedLevelSet{{LevelEntry{}}});
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].witness, a.entries[0].witness);
}

TEST(MergeComponents, TwoSingletons) {
  const auto m = merge_components(single(0, 2), single(1, 1));
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].level_multiset(), (std::map<Value, int>{{1, 1}, {2, 1}}));
  EXPECT_EQ(m.entries[0].prefix_sums(), (std::vector<Value>{2, 3}));
  EXPECT_EQ(m.entries[0].canonical_signature().cuts, (std::vector<Value>{2}));
}

TEST(MergeComponents, PrecedenceControlsTiesAndFeasibility) {
  const auto tie = merge_components(single(0, 0), single(1, 0), std::pair<Vertex, Vertex>{1, 0});
  ASSERT_EQ(tie.entries.size(), 1u);
  EXPECT_EQ(tie.entries[0].order(), (std::vector<Vertex>{1, 0}));
  // first=1 sits at a lower level than second=0, so it cannot come first.
  const auto none = merge_components(single(0, 2), single(1, 1), std::pair<Vertex, Vertex>{1, 0});
  EXPECT_TRUE(none.entries.empty());
}

TEST(MergeComponents, OverlapIsInputError) {
  EXPECT_THROW(merge_components(single(0, 1), single(0, 1)), InputError);
  EXPECT_THROW(merge_components(single(0, 1), single(1, 1), std::pair<Vertex, Vertex>{0, 2}), InputError);
}

TEST(MaximalEntries, DropsDominatedAndDuplicates) {
  std::vector<LevelEntry> entries{
      LevelEntry{{PlacedVertex{0, 1}, PlacedVertex{1, -1}}},
      LevelEntry{{PlacedVertex{1, 0}, PlacedVertex{0, 0}}},
      LevelEntry{{PlacedVertex{1, 1}, PlacedVertex{0, -1}}},
  };
  const auto m = maximal_entries(entries);
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].order(), (std::vector<Vertex>{0, 1}));
}

TEST(MaxdlaForest, Fixtures) {
  EXPECT_EQ(maxdla_forest(path3()).value, 2);
  const auto s = maxdla_forest(star2out());
  EXPECT_EQ(s.value, 3);
  EXPECT_EQ(s.arrangement.order()[0], 0);
  EXPECT_EQ(std::vector<Vertex>(s.arrangement.order().begin(), s.arrangement.order().end()), (std::vector<Vertex>{0, 1, 2}));  // (c, a, b)
  EXPECT_EQ(maxdla_forest(arc()).value, 1);
  EXPECT_EQ(maxdla_forest(Digraph()).value, 0);
}

TEST(MaxdlaForest, RejectsNonForests) {
  EXPECT_THROW(maxdla_forest(testing::cyc3()), InputError);
  EXPECT_THROW(maxdla_forest(Digraph(2, std::vector<Arc>{{0, 1, 1}, {1, 0, 1}})), InputError);
}

TEST(MinlaComplement, Examples) {
  const std::vector<std::pair<Vertex, Vertex>> k3{{0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(minla_complement(UndirectedGraph(3, k3)).value, 4);
  const std::vector<std::pair<Vertex, Vertex>> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  const auto r = minla_complement(UndirectedGraph(4, c4));
  EXPECT_EQ(r.value, 6);
  EXPECT_EQ(linear_arrangement_cost(UndirectedGraph(4, c4), r.arrangement), 6);
  const std::vector<std::pair<Vertex, Vertex>> k2{{0, 1}};
  EXPECT_EQ(minla_complement(UndirectedGraph(2, k2)).value, 1);
}

TEST(MinlaComplement, RejectsCyclicComplement) {
  // Complement of the empty graph on 3 vertices is a triangle.
  EXPECT_THROW(minla_complement(UndirectedGraph(3, {})), InputError);
}

// Properties.

TEST(TreeProperties, ForestSolverMatchesOracle) {
  std::mt19937_64 rng(41);
  int cases = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& shape : testing::tree_shapes(n, 3)) {
      for (int k = 0; k < 8; ++k) {
        const Digraph d = testing::random_orientation(n, shape, rng);
        ASSERT_EQ(maxdla_forest(d).value, brute_maxdla(d).value);
        ++cases;
      }
    }
  }
  EXPECT_GE(cases, 200);
}

TEST(TreeProperties, SignatureSetsMatchOracle) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const WeightedGraph g = testing::random_weighted_forest(n, 3, -2, 3, rng);
    std::set<Signature> brute;
    for (const auto& ws : brute_maximal_signatures(g)) brute.insert(ws.signature);
    ASSERT_EQ(signature_set(find_maximal_signatures(g)), brute) << trial;
  }
}

TEST(TreeProperties, WitnessesReproduceTheirSignatures) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const WeightedGraph g = testing::random_weighted_forest(n, 3, -1, 3, rng);
    for (const LevelEntry& e : find_maximal_signatures(g).entries) {
      const Arrangement a(e.order());
      ASSERT_EQ(weighted_signature(g, a), e.canonical_signature());
      ASSERT_EQ(weighted_value(g, a), e.value());
    }
  }
}

TEST(TreeProperties, LoweringTheLaterEndpointKeepsTheValue) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const WeightedGraph g = testing::random_weighted_forest(n, 3, -2, 4, rng);
    if (g.edges().empty()) continue;
    const WeightedEdge e = g.edges()[rng() % g.edges().size()];
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const Arrangement a(order);
    const EdgeSplit s = split_edge(g, e.u, e.v);
    const WeightedGraph& pays = a.position(e.u) < a.position(e.v) ? s.lowered_v : s.lowered_u;
    ASSERT_EQ(weighted_value(g, a), weighted_value(pays, a));
  }
}

TEST(TreeProperties, MinlaMatchesOracleOnLinearForestComplements) {
  std::mt19937_64 rng(45);
  for (int n = 1; n <= 8; ++n) {
    for (const auto& parts : testing::integer_partitions(n)) {
      std::vector<Vertex> labels(n);
      for (int i = 0; i < n; ++i) labels[i] = i;
      std::shuffle(labels.begin(), labels.end(), rng);
      const auto forest = testing::linear_forest(parts, labels);
      const UndirectedGraph g = UndirectedGraph(n, forest).complement();
      const auto r = minla_complement(g);
      ASSERT_EQ(r.value, brute_minla(g).value) << n;
      ASSERT_EQ(linear_arrangement_cost(g, r.arrangement), r.value);
    }
  }
}

TEST(TreeProperties, TreeShapesAreComplete) {
  // Counts of unlabelled trees with maximum degree <= 3.
  const std::vector<std::size_t> expected{1, 1, 1, 2, 2, 4, 6, 11};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(testing::tree_shapes(n, 3).size(), expected[n - 1]) << n;
}

}  // namespace
}  // namespace maxdla
