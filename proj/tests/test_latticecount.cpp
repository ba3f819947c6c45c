#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrlace/errors.hpp"
#include "ehrlace/families.hpp"
#include "ehrlace/latticecount.hpp"
#include "ehrlace/series.hpp"

using namespace ehrlace;
using Tag = FamilyId::Tag;

TEST_CASE("graph builtins and parsing") {
  GraphSpec p = GraphSpec::parse("tree:3");
  CHECK(p.num_vertices == 4);
  CHECK(p.edges.size() == 3);
  CHECK(GraphSpec::parse("cycle:8").edges.size() == 8);
  CHECK(GraphSpec::parse("complete:4").edges.size() == 6);
  GraphSpec k23 = GraphSpec::parse("kab:2,3");
  CHECK(k23.num_vertices == 5);
  CHECK(k23.bipartition == std::make_pair(2, 3));
  CHECK_THROWS_AS(GraphSpec::parse("blob:3"), UsageError);
  CHECK_THROWS_AS(GraphSpec::parse("tree"), UsageError);
}

TEST_CASE("text format round trip and validation") {
  GraphSpec g = GraphSpec::from_text("3 2\n0 1\n1 2\n");
  CHECK(g.num_vertices == 3);
  CHECK(g.num_components() == 1);
  GraphSpec bip = GraphSpec::from_text("4 2\n0 2\n1 3\nbipartition 2 2\n");
  CHECK(bip.bipartition == std::make_pair(2, 2));
  CHECK_THROWS_AS(GraphSpec::from_text("2 1\n0 0\n"), ParamError);
  CHECK_THROWS_AS(GraphSpec::from_text("2 2\n0 1\n1 0\n"), ParamError);
  CHECK_THROWS_AS(GraphSpec::from_text("4 1\n0 1\nbipartition 2 2\n"), ParamError);
  CHECK_THROWS_AS(GraphSpec::from_text("2 1\n0 5\n"), ParamError);
}

TEST_CASE("dilate counts: origin, vertices, monotone growth") {
  GraphSpec c8 = GraphSpec::cycle(8);
  CHECK(count_dilate(c8, 0) == 1);
  CHECK(count_dilate(c8, 1) == 17);
  auto counts = count_dilates_upto(GraphSpec::path(2), 4);
  REQUIRE(counts.size() == 5);
  for (size_t i = 1; i < counts.size(); ++i) CHECK(counts[i] > counts[i - 1]);
  // Path on 3 vertices carries the cross-polytope polynomial 2s^2+2s+1.
  CHECK(counts[2] == 13);
  CHECK(counts[4] == 41);
  CHECK_THROWS_AS(count_dilate(c8, -1), ParamError);
  CHECK_THROWS_AS(count_dilate(c8, 3, 10), OverBudget);
}

TEST_CASE("dilate counts match the published eight-cycle values") {
  Polynomial hg({Rational(1), Rational(7, 2), Rational(175, 36), Rational(161, 36),
                 Rational(35, 18), Rational(35, 36), Rational(7, 36), Rational(1, 18)});
  auto counts = count_dilates_upto(GraphSpec::cycle(8), 5);
  for (long s = 0; s <= 5; ++s)
    CHECK(Rational(BigInt(counts[s])) == hg(Rational(s)));
}

TEST_CASE("interpolation recovers closed forms") {
  GraphSpec edge = GraphSpec::path(1);
  CHECK(ehrhart_interpolate(edge) == Polynomial({Rational(1), Rational(2)}));
  CHECK(ehrhart_interpolate(GraphSpec::complete(4)) ==
        family_polynomial({Tag::RootA, 3}));
  CHECK(ehrhart_interpolate(GraphSpec::complete_bipartite(2, 3)) ==
        family_polynomial({Tag::K2n, 3}));
}

TEST_CASE("interpolation handles disconnected graphs") {
  // Two disjoint edges: the polytope is the free sum of two segments,
  // which is the 2-dimensional cross polytope (2s^2 + 2s + 1), not the
  // product (2s + 1)^2.
  GraphSpec g = GraphSpec::from_text("4 2\n0 1\n2 3\n");
  CHECK(g.num_components() == 2);
  Polynomial h = ehrhart_interpolate(g);
  CHECK(h == family_polynomial({Tag::Cross, 2}));
}

TEST_CASE("correct graph counts, base cases") {
  CHECK(correct_graph_count(1, 1, 0) == 1);
  CHECK(correct_graph_count(3, 3, 0) == 1);
  for (long k = 1; k <= 5; ++k) CHECK(correct_graph_count(1, 1, k) == 2);
  CHECK(correct_graph_count(2, 3, 4) == correct_graph_count(3, 2, 4));
  CHECK_THROWS_AS(correct_graph_count(0, 1, 1), ParamError);
}

TEST_CASE("cumulative counts equal the Ehrhart values") {
  for (int n = 1; n <= 3; ++n) CHECK(verify_corollary_counts(1, n, 6));
  CHECK(verify_corollary_counts(2, 2, 6));
  CHECK(verify_corollary_counts(2, 3, 6));
  CHECK(verify_corollary_counts(3, 3, 5));
}

TEST_CASE("typed counts decompose the (3,n) recursion cases") {
  // Parts: a = v-part of size n, b = typed w-part of size 3.
  const long n = 3;
  auto typed = [&](long nn, VertexType x, VertexType y, long j) {
    return count_correct_graphs({static_cast<int>(nn), 3, j, std::make_pair(x, y)});
  };
  using VT = VertexType;
  for (long k = 0; k <= 5; ++k) {
    BigInt rhs = correct_graph_count(3, n - 1, k);
    for (long j = 0; j < k; ++j) {
      BigInt choose2 = binomial(k - j + 2, 2);
      // w3 incoming (marginal over w2), and the i/o-swapped copy.
      for (VT y : {VT::In, VT::Out, VT::Zero}) {
        rhs += typed(n - 1, VT::In, y, j) + typed(n - 1, VT::Out, y, j);
      }
      rhs += 2 * (k - j + 1) * (typed(n - 1, VT::Zero, VT::In, j) +
                                typed(n - 1, VT::Zero, VT::Out, j));
      rhs += (k - j + 1) * (typed(n - 1, VT::Out, VT::Zero, j) +
                            typed(n - 1, VT::In, VT::Zero, j));
      rhs += typed(n - 1, VT::Out, VT::In, j) + typed(n - 1, VT::In, VT::Out, j);
      rhs += typed(n - 1, VT::Out, VT::Out, j) + typed(n - 1, VT::In, VT::In, j);
      rhs += 2 * choose2 * typed(n - 1, VT::Zero, VT::Zero, j);
    }
    CHECK(correct_graph_count(3, n, k) == rhs);
  }
}

TEST_CASE("typed queries are guarded") {
  CHECK_THROWS_AS(
      count_correct_graphs({2, 2, 1, std::make_pair(VertexType::In, VertexType::In)}),
      ParamError);
}
