#include <gtest/gtest.h>

#include <random>

#include "maxdla/errors.hpp"
#include "maxdla/oracle.hpp"
#include "maxdla/solvers.hpp"
#include "support/corpus.hpp"

namespace maxdla {
namespace {

using testing::cyc3;
using testing::path3;
using testing::tt3;

constexpr Vertex u = 0, v = 1, w = 2;

TEST(DetectClass, Examples) {
  EXPECT_EQ(detect_class(tt3()), DigraphClass::kTournament);
  EXPECT_EQ(detect_class(path3()), DigraphClass::kDelta2);
  EXPECT_EQ(detect_class(Digraph(3, std::vector<Arc>{{u, v, 1}, {v, u, 1}, {v, w, 1}})), DigraphClass::kGeneral);
  EXPECT_EQ(to_string(DigraphClass::kTransitiveDag), "transitive_dag");
}

TEST(DetectClass, ForestAndTransitiveDag) {
  // Star with three leaves: degree 3 forest.
  const Digraph star(4, std::vector<Arc>{{0, 1, 1}, {0, 2, 1}, {3, 0, 1}});
  EXPECT_EQ(detect_class(star), DigraphClass::kOrientedForest);
  const Digraph tdag(4, std::vector<Arc>{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 3, 1}, {2, 3, 1}});
  EXPECT_EQ(detect_class(tdag), DigraphClass::kTransitiveDag);
  EXPECT_TRUE(is_acyclic(tdag));
  EXPECT_FALSE(is_acyclic(cyc3()));
}

TEST(TournamentArrangement, Fixtures) {
  const auto t = tournament_arrangement(tt3());
  EXPECT_EQ(t.arrangement, Arrangement({u, v, w}));
  EXPECT_EQ(t.value, 4);
  const auto c = tournament_arrangement(cyc3());
  EXPECT_EQ(c.arrangement, Arrangement({u, v, w}));
  EXPECT_EQ(c.value, 2);
  const auto one = tournament_arrangement(Digraph(1));
  EXPECT_EQ(one.value, 0);
  EXPECT_THROW(tournament_arrangement(path3()), InputError);
}

TEST(TransitiveDagArrangement, Fixtures) {
  const auto t = transitive_dag_arrangement(tt3());
  EXPECT_EQ(t.arrangement, Arrangement({u, v, w}));
  EXPECT_EQ(t.value, 4);

  constexpr Vertex a = 0, b = 1, x = 2, y = 3;
  const Digraph two(4, std::vector<Arc>{{a, b, 1}, {x, y, 1}});
  const auto r = transitive_dag_arrangement(two);
  EXPECT_EQ(r.arrangement, Arrangement({a, x, b, y}));
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(signature(two, r.arrangement).cuts, (std::vector<Value>{1, 2, 1}));
  EXPECT_EQ(cut_profile(two).per_k, (std::vector<Value>{1, 2, 1}));

  EXPECT_EQ(transitive_dag_arrangement(Digraph(3)).value, 0);
  EXPECT_THROW(transitive_dag_arrangement(path3()), InputError);
  EXPECT_THROW(transitive_dag_arrangement(cyc3()), InputError);
}

TEST(Delta2Arrangement, Fixtures) {
  const auto p = delta2_arrangement(path3());
  EXPECT_EQ(p.value, 2);
  EXPECT_EQ(signature(path3(), p.arrangement).cuts, (std::vector<Value>{1, 1}));
  const auto c = delta2_arrangement(cyc3());
  EXPECT_EQ(c.value, 2);
  EXPECT_EQ(signature(cyc3(), c.arrangement).cuts, (std::vector<Value>{1, 1}));
  const Digraph c4(4, std::vector<Arc>{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  const auto r = delta2_arrangement(c4);
  EXPECT_EQ(r.value, brute_maxdla(c4).value);
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(delta2_arrangement(tt3()).value, 4);
  const Digraph star(4, std::vector<Arc>{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  EXPECT_THROW(delta2_arrangement(star), InputError);
}

TEST(Delta2Arrangement, TwoCycleAndParallelArcs) {
  const Digraph two(2, std::vector<Arc>{{0, 1, 1}, {1, 0, 1}});
  EXPECT_EQ(delta2_arrangement(two).value, 1);
  const Digraph doubled(2, std::vector<Arc>{{0, 1, 2}});
  EXPECT_EQ(delta2_arrangement(doubled).value, 2);
}

// Properties.

TEST(SolverProperties, TournamentsAreMaximum) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Digraph d = testing::random_tournament(n, rng);
    const auto r = tournament_arrangement(d);
    ASSERT_EQ(r.value, brute_maxdla(d).value);
    ASSERT_TRUE(is_maximum_arrangement(d, r.arrangement));
  }
}

TEST(SolverProperties, TransitiveDagsAreMaximumAndTopological) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Digraph d = testing::random_transitive_dag(n, 0.4, rng);
    ASSERT_TRUE(is_transitive_dag(d));
    const auto r = transitive_dag_arrangement(d);
    ASSERT_TRUE(is_maximum_arrangement(d, r.arrangement));
    for (const Arc& a : d.arcs()) ASSERT_LT(r.arrangement.position(a.tail), r.arrangement.position(a.head));
  }
}

TEST(SolverProperties, PathsAndCyclesAreMaximum) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Digraph d = testing::random_delta2(n, rng);
    ASSERT_TRUE(has_max_degree_two(d));
    const auto r = delta2_arrangement(d);
    ASSERT_EQ(arrangement_value(d, r.arrangement), r.value);
    ASSERT_TRUE(is_maximum_arrangement(d, r.arrangement)) << trial;
  }
}

}  // namespace
}  // namespace maxdla
