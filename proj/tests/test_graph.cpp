#include <gtest/gtest.h>

#include <array>
#include <random>

#include "error.hpp"
#include "graph.hpp"
#include "helpers.hpp"

using namespace ng;
using ng::testing::er;
using ng::testing::named;

namespace {

Graph cycle(std::size_t n) { return named(GeneratorKind::cycle, n); }

}  // namespace

TEST(Graph, EdgeCountAndSymmetry) {
  const std::array<Edge, 3> edges = {{{1, 2}, {3, 2}, {4, 1}}};
  Graph g = Graph::from_edges(4, edges);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_TRUE(g.adjacent(3, 2));
  EXPECT_FALSE(g.adjacent(2, 2));
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(Graph, RejectsBadConstruction) {
  EXPECT_THROW(Graph(0), Error);
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(2, 2), Error);
  EXPECT_THROW(b.add_edge(0, 1), Error);
  EXPECT_THROW(b.add_edge(1, 4), Error);
}

TEST(Graph, SizeCapIsEnforced) {
  ng::testing::CapGuard cap(10);
  EXPECT_NO_THROW(Graph(10));
  try {
    Graph g(11);
    FAIL() << "expected size cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size_cap);
  }
  EXPECT_THROW(blowup_independent(Graph(5), 3), Error);
}

TEST(Complement, CompleteGraphGivesEmpty) {
  EXPECT_EQ(complement(named(GeneratorKind::complete, 4)), Graph(4));
}

TEST(Complement, CycleIsInvolutionAndSelfComplementary) {
  const Graph c5 = cycle(5);
  EXPECT_EQ(complement(complement(c5)), c5);

  // Relabelling 1,3,5,2,4 maps C_5 onto its complement edge for edge.
  const Graph c5bar = complement(c5);
  const std::array<std::size_t, 5> order = {1, 3, 5, 2, 4};
  GraphBuilder b(5);
  for (std::size_t i = 0; i < 5; ++i) b.add_edge(order[i], order[(i + 1) % 5]);
  EXPECT_EQ(std::move(b).build(), c5bar);
}

TEST(Blowup, IndependentOfEdgeIsCompleteBipartite) {
  const Graph k2 = named(GeneratorKind::complete, 2);
  EXPECT_EQ(blowup_independent(k2, 3), named(GeneratorKind::complete_bipartite, 3, 3));
  EXPECT_EQ(blowup_independent(k2, 1), k2);
}

TEST(Blowup, CycleEdgeCount) {
  const Graph g = blowup_independent(cycle(5), 2);
  EXPECT_EQ(g.order(), 10u);
  EXPECT_EQ(g.edge_count(), 20u);
  // Block layout: vertex (u, j) is (u-1)t + j.
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_TRUE(g.adjacent(2, 4));
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(Blowup, CliqueVariant) {
  EXPECT_EQ(blowup_clique(named(GeneratorKind::complete, 2), 2), named(GeneratorKind::complete, 4));
  EXPECT_EQ(blowup_clique(cycle(5), 1), cycle(5));

  const Graph g = blowup_clique(Graph(3), 4);
  EXPECT_EQ(g.edge_count(), 3u * 6u);
  for (std::size_t u = 1; u <= 12; ++u)
    for (std::size_t v = 1; v <= 12; ++v)
      if (u != v) {
        EXPECT_EQ(g.adjacent(u, v), (u - 1) / 4 == (v - 1) / 4);
      }
}

TEST(Blowup, RejectsZeroFactor) {
  EXPECT_THROW(blowup_independent(cycle(5), 0), Error);
  EXPECT_THROW(blowup_clique(cycle(5), 0), Error);
}

TEST(InducedSubgraph, Examples) {
  const std::array<std::size_t, 3> s = {1, 2, 3};
  EXPECT_EQ(induced_subgraph(named(GeneratorKind::complete, 5), s), named(GeneratorKind::complete, 3));
  EXPECT_EQ(induced_subgraph(cycle(5), s), named(GeneratorKind::path, 3));

  const Graph g = er(9, 0.4, 3);
  std::vector<std::size_t> all(9);
  for (std::size_t i = 0; i < 9; ++i) all[i] = i + 1;
  EXPECT_EQ(induced_subgraph(g, all), g);
}

TEST(InducedSubgraph, Errors) {
  const Graph g = cycle(5);
  EXPECT_THROW(induced_subgraph(g, std::span<const std::size_t>()), Error);
  const std::array<std::size_t, 2> bad = {1, 6};
  EXPECT_THROW(induced_subgraph(g, bad), Error);
  const std::array<std::size_t, 2> dup = {2, 2};
  EXPECT_THROW(induced_subgraph(g, dup), Error);
}

TEST(Generate, NamedKinds) {
  // K_{2,2} is the 4-cycle 1-3-2-4.
  GraphBuilder c4(4);
  c4.add_edge(1, 3).add_edge(3, 2).add_edge(2, 4).add_edge(4, 1);
  EXPECT_EQ(named(GeneratorKind::complete_bipartite, 2, 2), std::move(c4).build());
  EXPECT_EQ(named(GeneratorKind::complete, 6).edge_count(), 15u);
  EXPECT_EQ(named(GeneratorKind::path, 6).edge_count(), 5u);
  EXPECT_EQ(cycle(6).edge_count(), 6u);
  EXPECT_THROW(cycle(2), Error);
  EXPECT_THROW(named(GeneratorKind::complete_bipartite, 2, 0), Error);
}

TEST(Generate, ErdosRenyi) {
  EXPECT_EQ(er(10, 0.0, 7), Graph(10));
  EXPECT_EQ(er(10, 1.0, 7), named(GeneratorKind::complete, 10));
  EXPECT_EQ(er(20, 0.5, 1), er(20, 0.5, 1));
  EXPECT_NE(er(20, 0.5, 1), er(20, 0.5, 2));
  EXPECT_THROW(er(5, 1.5, 1), Error);
  GeneratorSpec unseeded;
  unseeded.kind = GeneratorKind::erdos_renyi;
  unseeded.n = 5;
  unseeded.p = 0.5;
  EXPECT_THROW(generate(unseeded), Error);
}

TEST(Generate, ParseSpec) {
  auto s = parse_generator_spec("complete_bipartite:3:4");
  EXPECT_EQ(s.kind, GeneratorKind::complete_bipartite);
  EXPECT_EQ(s.n, 3u);
  EXPECT_EQ(s.m, 4u);

  s = parse_generator_spec("erdos_renyi:12:0.25", 9);
  EXPECT_EQ(s.kind, GeneratorKind::erdos_renyi);
  EXPECT_DOUBLE_EQ(s.p, 0.25);
  EXPECT_EQ(*s.seed, 9u);
  EXPECT_EQ(*parse_generator_spec("erdos_renyi:12:0.25:5", 9).seed, 5u);

  EXPECT_EQ(generate(parse_generator_spec("cycle:5")), cycle(5));
  EXPECT_THROW(parse_generator_spec("cycle"), Error);
  EXPECT_THROW(parse_generator_spec("cycle:x"), Error);
  EXPECT_THROW(parse_generator_spec("wheel:5"), Error);
  EXPECT_THROW(parse_generator_spec("erdos_renyi:5:abc"), Error);
}

TEST(GraphProperties, RandomInvariants) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 14;
    const double p = ng::unit_interval(rng());
    const Graph g = er(n, p, rng());
    const Graph gbar = complement(g);
    ASSERT_EQ(complement(gbar), g);
    ASSERT_EQ(g.edge_count() + gbar.edge_count(), n * (n - 1) / 2);
    ASSERT_EQ(g.edge_count(), g.edges().size());

    const std::size_t t = 1 + rng() % 4;
    const Graph ind = blowup_independent(g, t);
    const Graph cl = blowup_clique(g, t);
    ASSERT_EQ(ind.edge_count(), t * t * g.edge_count());
    ASSERT_EQ(cl.edge_count(), t * t * g.edge_count() + n * t * (t - 1) / 2);
    ASSERT_EQ(complement(blowup_independent(gbar, t)), cl);
  }
}
