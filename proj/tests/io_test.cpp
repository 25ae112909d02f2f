#include <gtest/gtest.h>

#include <random>

#include "maxdla/io.hpp"
#include "support/corpus.hpp"

namespace maxdla {
namespace {

ParseErrorKind kind_of(auto&& parse) {
  try {
    parse();
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ParseError";
  return ParseErrorKind::kSyntax;
}

TEST(ParseDigraph, Cycle) { EXPECT_EQ(parse_digraph("3 3\n0 1\n1 2\n2 0"), testing::cyc3()); }

TEST(ParseDigraph, Multiplicity) {
  const Digraph d = parse_digraph("2 1\n0 1 2");
  EXPECT_EQ(d.multiplicity(0, 1), 2);
  // Repeated lines fold into one arc.
  EXPECT_EQ(parse_digraph("2 2\n0 1\n0 1\n"), d);
}

TEST(ParseDigraph, CommentsAndBlankLines) {
  EXPECT_EQ(parse_digraph("# triangle\n\n3 3   # header\n0 1\n\n1 2\n2 0\n"), testing::cyc3());
}

TEST(ParseDigraph, DiagnosticsNameLineAndColumn) {
  try {
    parse_digraph("3 2\n0 1\n1   7\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::kIndexOutOfRange);
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 5);
  }
}

TEST(ParseDigraph, DistinctErrorKinds) {
  EXPECT_EQ(kind_of([] { parse_digraph("2 1\n0 x\n"); }), ParseErrorKind::kSyntax);
  EXPECT_EQ(kind_of([] { parse_digraph("2 1\n0 2\n"); }), ParseErrorKind::kIndexOutOfRange);
  EXPECT_EQ(kind_of([] { parse_digraph("2 1\n1 1\n"); }), ParseErrorKind::kLoop);
  EXPECT_EQ(kind_of([] { parse_digraph("2 2\n0 1\n"); }), ParseErrorKind::kCountMismatch);
  EXPECT_EQ(kind_of([] { parse_digraph("2 1\n0 1\n1 0\n"); }), ParseErrorKind::kCountMismatch);
  EXPECT_EQ(kind_of([] { parse_digraph(""); }), ParseErrorKind::kSyntax);
  EXPECT_EQ(kind_of([] { parse_digraph("2 1\n0 1 0\n"); }), ParseErrorKind::kSyntax);
}

TEST(ParseInstance, NameMap) {
  const Instance inst = parse_instance("3 2\n0 1\n0 2\nnames\n0 c\n1 a\n2 b\n");
  EXPECT_EQ(inst.label(0), "c");
  EXPECT_EQ(inst.lookup("b"), 2);
  EXPECT_EQ(inst.lookup("1"), 1);
  EXPECT_THROW(inst.lookup("z"), InputError);
  EXPECT_THROW(inst.lookup("3"), InputError);
}

TEST(Parse2cnf, Dimacs) {
  const TwoCnf phi = parse_2cnf("c example\np cnf 2 1\n-1 2 0\n");
  ASSERT_EQ(phi.clauses().size(), 1u);
  EXPECT_EQ(phi.clauses()[0].literals, (std::vector<Literal>{{0, true}, {1, false}}));
  // Clauses may span lines.
  EXPECT_EQ(parse_2cnf("p cnf 2 2\n1 -2\n0 2 0\n").clauses().size(), 2u);
}

TEST(Parse2cnf, DistinctErrorKinds) {
  EXPECT_EQ(kind_of([] { parse_2cnf("p cnf 3 1\n1 2 3 0\n"); }), ParseErrorKind::kClauseTooLong);
  EXPECT_EQ(kind_of([] { parse_2cnf("p cnf 2 1\n1 3 0\n"); }), ParseErrorKind::kIndexOutOfRange);
  EXPECT_EQ(kind_of([] { parse_2cnf("p cnf 2 2\n1 2 0\n"); }), ParseErrorKind::kCountMismatch);
  EXPECT_EQ(kind_of([] { parse_2cnf("1 2 0\n"); }), ParseErrorKind::kSyntax);
  EXPECT_EQ(kind_of([] { parse_2cnf("p cnf 2 1\n1 2\n"); }), ParseErrorKind::kSyntax);
  EXPECT_EQ(kind_of([] { parse_2cnf("p cnf 2 1\n1 -1 0\n"); }), ParseErrorKind::kSyntax);
}

TEST(UndirectedFrom, RejectsOppositePairs) {
  EXPECT_EQ(undirected_from(testing::cyc3()).edges().size(), 3u);
  EXPECT_THROW(undirected_from(parse_digraph("2 2\n0 1\n1 0\n")), InputError);
  EXPECT_THROW(undirected_from(parse_digraph("2 1\n0 1 2\n")), InputError);
}

TEST(LooksLikeDimacs, Heuristic) {
  EXPECT_TRUE(looks_like_dimacs("c hi\np cnf 1 1\n1 0\n"));
  EXPECT_FALSE(looks_like_dimacs("# hi\n2 1\n0 1\n"));
}

TEST(IoProperties, DigraphRoundTrip) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 9);
    Digraph d = testing::random_simple_digraph(n, 0.3, rng);
    if (n >= 2) d.add_arc(0, 1, 1 + static_cast<int>(rng() % 3));
    ASSERT_EQ(parse_digraph(serialize_digraph(d)), d);
  }
  const std::vector<std::string> names{"c", "a", "b"};
  const Instance inst = parse_instance(serialize_digraph(testing::star2out(), names));
  EXPECT_EQ(inst.names, names);
}

TEST(IoProperties, TwoCnfRoundTrip) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const TwoCnf phi = testing::random_2cnf(5, 6, rng);
    ASSERT_EQ(parse_2cnf(serialize_2cnf(phi)), phi);
  }
}

}  // namespace
}  // namespace maxdla
