#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "spikegraph/error.hpp"
#include "spikegraph/generators.hpp"
#include "spikegraph/primitives.hpp"

namespace spikegraph {
namespace {

using testing::bowtie;
using testing::c4;

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no spikegraph::Error thrown";
  return Errc::InvalidArgument;
}

template <class T>
std::int64_t raster_ticks(const PrimitiveResult<T>& r) {
  std::int64_t n = 0;
  for (const auto& raster : r.rasters) n += static_cast<std::int64_t>(raster.size());
  return n;
}

TEST(NearestNeighbors, K3) {
  const auto r = nearest_neighbors(complete_graph(3), 0);
  EXPECT_EQ(r.answer, (VertexSet{1, 2}));
  EXPECT_EQ(r.report.mct, 1);
  EXPECT_EQ(r.report.writes, 1);
  EXPECT_EQ(r.report.reads, 0);
  EXPECT_EQ(r.report.threshold_weight_ratios, std::vector<double>{1.0});
  EXPECT_EQ(r.report.engine_ticks, raster_ticks(r));
}

TEST(NearestNeighbors, DirectedOutArcs) {
  const auto r = nearest_neighbors(testing::directed(3, {{0, 1}, {2, 0}}), 0);
  EXPECT_EQ(r.answer, (VertexSet{1}));
}

TEST(NearestNeighbors, Errors) {
  EXPECT_EQ(code_of([] { nearest_neighbors(path_graph(3), 5); }), Errc::UnknownVertex);
  EXPECT_EQ(code_of([] { nearest_neighbors(testing::undirected(3, {{0, 1}}), 0); }), Errc::DisconnectedGraph);
}

TEST(FirstFireTimes, PathAndStar) {
  EXPECT_EQ(first_fire_times(path_graph(4), 0).answer, (DistanceMap{{0, 0}, {1, 1}, {2, 2}, {3, 3}}));
  const auto r = first_fire_times(star_graph(5), 1);
  EXPECT_EQ(r.answer, (DistanceMap{{0, 1}, {1, 0}, {2, 2}, {3, 2}, {4, 2}}));
  EXPECT_EQ(r.report.mct, 2);
  EXPECT_EQ(r.report.spike_total, 5);
}

TEST(FirstFireTimes, TickBudget) {
  EXPECT_EQ(code_of([] { first_fire_times(path_graph(10), 0, 3); }), Errc::MaxTicksExceeded);
}

TEST(ShortestPathUpperBound, Threshold) {
  const Graph g = path_graph(5);
  EXPECT_FALSE(shortest_path_upper_bound(g, 0, 4, 3).answer);
  EXPECT_TRUE(shortest_path_upper_bound(g, 0, 4, 4).answer);
  EXPECT_TRUE(shortest_path_upper_bound(g, 2, 2, 0).answer);
  EXPECT_EQ(code_of([&] { shortest_path_upper_bound(g, 0, 1, -1); }), Errc::InvalidArgument);
}

TEST(Eccentricity, Examples) {
  EXPECT_EQ(eccentricity(complete_graph(7), 3).answer, 1);
  EXPECT_EQ(eccentricity(path_graph(6), 0).answer, 5);
  EXPECT_EQ(eccentricity(path_graph(6), 2).answer, 3);
  EXPECT_EQ(eccentricity(Graph(false, 1, {}), 0).answer, 0);
}

TEST(SubgraphExtract, C4Iterative) {
  const auto r = subgraph_extract_iterative(c4(), VertexSet{0, 1, 2});
  EXPECT_EQ(r.answer, (EdgeSet{{0, 1}, {1, 2}}));
  EXPECT_EQ(r.report.writes, 2);
  EXPECT_EQ(r.report.reads, 0);
  EXPECT_EQ(r.rasters.size(), 3u);
  EXPECT_LE(r.report.mct, 5);
}

TEST(SubgraphExtract, C4Parallel) {
  const auto r = subgraph_extract_parallel_detailed(c4(), VertexSet{0, 1, 2});
  EXPECT_EQ(r.answer.edges, (EdgeSet{{0, 1}, {1, 2}}));
  ASSERT_EQ(r.answer.potentiated.size(), 4u);
  for (const auto& p : r.answer.potentiated) EXPECT_EQ(p.weight, 1.5);
  EXPECT_EQ(r.report.mct, 2);
  EXPECT_EQ(r.report.writes, 2);
  EXPECT_EQ(r.report.reads, 1);
}

TEST(SubgraphExtract, StarCentreOutsideSubset) {
  // leaves share the centre; the centre's firing must not create leaf edges
  const VertexSet leaves{1, 2, 3, 4};
  EXPECT_TRUE(subgraph_extract_parallel(star_graph(5), leaves).answer.empty());
  EXPECT_TRUE(subgraph_extract_iterative(star_graph(5), leaves).answer.empty());
}

TEST(SubgraphExtract, Errors) {
  EXPECT_EQ(code_of([] { subgraph_extract_parallel(c4(), VertexSet{}); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { subgraph_extract_parallel(testing::directed(2, {{0, 1}}), VertexSet{0}); }),
            Errc::DirectedNotSupported);
}

TEST(Neighborhood, Bowtie) {
  const auto r = neighborhood_extract(bowtie(), 2);
  EXPECT_EQ(r.answer.vertices, (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(r.answer.edges, bowtie().edges());
  EXPECT_EQ(r.report.reads, 1);
  EXPECT_EQ(r.report.writes, 2);
  EXPECT_LE(r.report.mct, 3);
}

TEST(Neighborhood, LeafOfPath) {
  const auto r = neighborhood_extract(path_graph(4), 0);
  EXPECT_EQ(r.answer.vertices, (VertexSet{0, 1}));
  EXPECT_EQ(r.answer.edges, (EdgeSet{{0, 1}}));
}

TEST(TrianglesOnEdge, Examples) {
  // edge (0,1) of K4 lies in two triangles
  const auto k4 = triangles_on_edge(complete_graph(4), 0, 1);
  EXPECT_EQ(k4.answer.count, 2u);
  EXPECT_EQ(k4.answer.apexes, (VertexSet{2, 3}));
  EXPECT_EQ(k4.report.threshold_weight_ratios, std::vector<double>{2.0});
  EXPECT_EQ(triangles_on_edge(c4(), 0, 1).answer.count, 0u);
  EXPECT_EQ(code_of([] { triangles_on_edge(c4(), 0, 2); }), Errc::NotAnEdge);
}

TEST(TrianglesAtVertex, BowtieIterative) {
  const auto r = triangles_at_vertex_iterative(bowtie(), 2);
  EXPECT_EQ(r.answer.count, 2u);
  EXPECT_EQ(r.answer.raw_count, 4u);
  EXPECT_EQ(r.answer.tuples, (std::vector<TriangleTuple>{{0, 1, 2}, {2, 3, 4}}));
  EXPECT_EQ(r.report.writes, 5);
  EXPECT_EQ(r.report.threshold_weight_ratios, (std::vector<double>{1.0, 2.0}));
}

TEST(TrianglesAtVertex, BowtieClique) {
  const auto r = triangles_at_vertex_clique(bowtie(), 2);
  EXPECT_EQ(r.answer.tuples, (std::vector<TriangleTuple>{{0, 1, 2}, {2, 3, 4}}));
  EXPECT_EQ(r.answer.tests, 6u);
  EXPECT_EQ(r.report.writes, 7);
}

TEST(TrianglesAtVertex, TreeHasNone) {
  const Graph tree = testing::undirected(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  for (Vertex v = 0; v < 6; ++v) {
    EXPECT_EQ(triangles_at_vertex_iterative(tree, v).answer.count, 0u);
    EXPECT_EQ(triangles_at_vertex_clique(tree, v).answer.count, 0u);
  }
}

TEST(CliqueVerify, Examples) {
  EXPECT_TRUE(clique_verify(complete_graph(5), VertexSet{0, 1, 2, 3, 4}).answer);
  EXPECT_FALSE(clique_verify(bowtie(), VertexSet{0, 1, 3}).answer);
  EXPECT_TRUE(clique_verify(bowtie(), VertexSet{4}).answer);
  EXPECT_TRUE(clique_verify(bowtie(), VertexSet{3, 4}).answer);
  EXPECT_FALSE(clique_verify(bowtie(), VertexSet{0, 4}).answer);
  const auto r = clique_verify(complete_graph(5), VertexSet{0, 1, 2, 3});
  EXPECT_EQ(r.report.threshold_weight_ratios, std::vector<double>{3.0});
  EXPECT_EQ(r.report.mct, 1);
  EXPECT_EQ(r.report.writes, 1);
}

TEST(CliqueVerify, OutsiderCannotMasquerade) {
  // every subset member sees the hub; only subset members may count
  const auto r = clique_verify(star_graph(6), VertexSet{1, 2, 3});
  EXPECT_FALSE(r.answer);
}

TEST(CliqueVerifyPlastic, BowtieMissingEdges) {
  const auto r = clique_verify_plastic(bowtie(), VertexSet{0, 1, 2, 3});
  EXPECT_FALSE(r.answer.is_clique);
  EXPECT_EQ(r.answer.missing, (EdgeSet{{0, 3}, {1, 3}}));
}

TEST(CliqueVerifyPlastic, CliqueHasNoWitness) {
  const auto r = clique_verify_plastic(complete_graph(5), VertexSet{1, 2, 4});
  EXPECT_TRUE(r.answer.is_clique);
  EXPECT_TRUE(r.answer.missing.empty());
  EXPECT_EQ(r.report.reads, 1);
  EXPECT_EQ(r.report.writes, 1);
}

TEST(CliqueVerifyPlastic, IndependentSetNeedsWitnessRound) {
  const auto r = clique_verify_plastic(star_graph(6), VertexSet{1, 2, 3, 4});
  EXPECT_EQ(r.answer.missing.size(), 6u);
  EXPECT_EQ(r.report.reads, 2);
  EXPECT_EQ(r.report.writes, 2);
}

TEST(CliqueExpand, Examples) {
  EXPECT_EQ(clique_expand(bowtie(), VertexSet{0, 1}).answer, (VertexSet{2}));
  EXPECT_EQ(clique_expand(bowtie(), VertexSet{0, 1, 2}).answer, VertexSet{});
  EXPECT_EQ(clique_expand(bowtie(), VertexSet{2}).answer, (VertexSet{0, 1, 3, 4}));
  EXPECT_EQ(clique_expand(complete_graph(5), VertexSet{0, 1, 2}).answer, (VertexSet{3, 4}));
  EXPECT_EQ(code_of([] { clique_expand(bowtie(), VertexSet{0, 3}); }), Errc::NotAClique);
}

}  // namespace
}  // namespace spikegraph
