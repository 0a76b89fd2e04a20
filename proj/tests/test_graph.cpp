#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "eigensym/error.hpp"
#include "eigensym/graph.hpp"
#include "eigensym/rng.hpp"

namespace eigensym {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no eigensym::Error thrown";
  return ErrorKind::Internal;
}

TEST(EdgeListTest, ParsesTriangle) {
  const Graph g = parse_edge_list("n 3\n1 2\n2 3\n1 3");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edges().size(), 3u);
  EXPECT_EQ(g, builtin("complete", 3));
}

TEST(EdgeListTest, ParsesPathWithComments) {
  const Graph g = parse_edge_list("# a path\n\nn 3   # header\n1 2\n  2 3 # tail\n");
  EXPECT_EQ(g, builtin("path", 3));
}

TEST(EdgeListTest, EdgeOrderDoesNotMatter) {
  EXPECT_EQ(parse_edge_list("n 4\n3 4\n1 2\n2 3"), parse_edge_list("n 4\n2 1\n4 3\n3 2"));
}

TEST(EdgeListTest, Errors) {
  EXPECT_EQ(kind_of([] { parse_edge_list("n 2\n1 1"); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { parse_edge_list("n 2\n1 3"); }), ErrorKind::EndpointOutOfRange);
  EXPECT_EQ(kind_of([] { parse_edge_list("n 3\n1 2\n2 1"); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { parse_edge_list("n 3\n1 2 3"); }), ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_edge_list("1 2"); }), ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_edge_list(""); }), ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_edge_list("n x"); }), ErrorKind::MalformedLine);
}

TEST(Graph6Test, HandDecodedExamples) {
  // 'B' = 66 -> n = 3; 'w' = 119 - 63 = 0b111000 -> bits (1,2),(1,3),(2,3).
  EXPECT_EQ(parse_graph6("Bw"), builtin("complete", 3));
  // 'A' -> n = 2; '_' = 95 - 63 = 0b100000 -> edge (1,2).
  const Graph g = parse_graph6("A_\n");
  EXPECT_EQ(g.vertex_count(), 2);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges().front(), Edge(0, 1));
}

TEST(Graph6Test, Errors) {
  EXPECT_EQ(kind_of([] { parse_graph6(""); }), ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_graph6("B\x01"); }), ErrorKind::BadChecksumChar);
  EXPECT_EQ(kind_of([] { parse_graph6("Bww"); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([] { parse_graph6("C"); }), ErrorKind::LengthMismatch);
}

TEST(Graph6Test, PetersenKnownString) {
  // Standard graph6 of the Petersen graph under a different labeling; only
  // the degree sequence and edge count are label independent.
  const Graph g = parse_graph6("IheA@GUAo");
  EXPECT_EQ(g.vertex_count(), 10);
  EXPECT_EQ(g.edges().size(), 15u);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3);
}

// Round trip through both formats on seeded random graphs.
TEST(SerializationProperty, RoundTripsBothFormats) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Xorshift64Star rng(seed);
    const int n = 1 + static_cast<int>(rng.below(20));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.uniform() < 0.3) edges.emplace_back(i, j);
    const Graph g(n, edges);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g) << "seed " << seed;
    EXPECT_EQ(parse_graph6(to_graph6(g)), g) << "seed " << seed;
  }
}

TEST(AdjacencyTest, CompleteAndPath) {
  const auto k3 = adjacency_matrix(builtin("complete", 3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(k3(i, j), i == j ? 0 : 1);

  const auto p3 = adjacency_matrix(builtin("path", 3));
  EXPECT_EQ(p3(0, 2), 0);
  EXPECT_EQ(p3(0, 1), 1);
  EXPECT_EQ(p3(1, 2), 1);
}

TEST(AdjacencyTest, SymmetricZeroDiagonalRowSumsAreDegrees) {
  for (const Graph& g : {builtin("petersen", 0), builtin("cycle", 7), builtin("disjoint_edges", 3)}) {
    const auto a = adjacency_matrix(g);
    for (int i = 0; i < g.vertex_count(); ++i) {
      EXPECT_EQ(a(i, i), 0);
      int row = 0;
      for (int j = 0; j < g.vertex_count(); ++j) {
        EXPECT_EQ(a(i, j), a(j, i));
        row += a(i, j);
      }
      EXPECT_EQ(row, g.degree(i));
    }
  }
}

TEST(BuiltinTest, PetersenMatchesFigureLabeling) {
  const Graph pet = builtin("petersen", 0);
  EXPECT_EQ(pet.vertex_count(), 10);
  EXPECT_EQ(pet.edges().size(), 15u);
  const auto a = adjacency_matrix(pet);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(a.degree(v), 3);

  // Outer cycle 1-2-3-4-5, spokes i -- i+5, pentagram 6-8-10-7-9.
  EXPECT_TRUE(pet.adjacent(0, 1));
  EXPECT_TRUE(pet.adjacent(4, 0));
  EXPECT_TRUE(pet.adjacent(2, 7));
  EXPECT_TRUE(pet.adjacent(5, 7));
  EXPECT_TRUE(pet.adjacent(7, 9));
  EXPECT_TRUE(pet.adjacent(9, 6));
  EXPECT_TRUE(pet.adjacent(6, 8));
  EXPECT_TRUE(pet.adjacent(8, 5));
  EXPECT_FALSE(pet.adjacent(5, 6));

  // Labels: adjacent iff the 2-subsets are disjoint.
  ASSERT_EQ(pet.labels().size(), 10u);
  auto subset = [&](int v) {
    const auto& s = pet.labels()[v];
    return std::pair<int, int>(s[1] - '0', s[3] - '0');
  };
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      const auto [a1, b1] = subset(i);
      const auto [a2, b2] = subset(j);
      const bool disjoint = a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2;
      EXPECT_EQ(pet.adjacent(i, j), disjoint) << i + 1 << "," << j + 1;
    }
}

TEST(BuiltinTest, PetersenHasNoTriangles) {
  // trace(A^3) = 6 * (number of triangles)
  const auto a = adjacency_matrix(builtin("petersen", 0));
  long trace = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k) trace += a(i, j) * a(j, k) * a(k, i);
  EXPECT_EQ(trace, 0);
}

TEST(BuiltinTest, Families) {
  EXPECT_EQ(builtin("complete", 3).edges().size(), 3u);
  EXPECT_EQ(builtin("path", 3).edges().size(), 2u);
  EXPECT_EQ(builtin("cycle", 5).edges().size(), 5u);
  EXPECT_EQ(builtin("empty", 4).edges().size(), 0u);
  EXPECT_EQ(builtin("disjoint_edges", 2).vertex_count(), 4);
  EXPECT_EQ(builtin("disjoint_edges", 2).edges().size(), 2u);
  EXPECT_EQ(kind_of([] { builtin("hypercube", 3); }), ErrorKind::UnknownFamily);
  EXPECT_EQ(kind_of([] { builtin("cycle", 2); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { builtin("path", 0); }), ErrorKind::BadParameter);
}

}  // namespace
}  // namespace eigensym
