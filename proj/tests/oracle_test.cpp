#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "spikegraph/error.hpp"
#include "spikegraph/generators.hpp"
#include "spikegraph/oracle.hpp"

namespace spikegraph {
namespace {

using namespace oracle;

TEST(Oracle, Adjacency) {
  EXPECT_EQ(adjacency(testing::bowtie(), 2), (VertexSet{0, 1, 3, 4}));
  EXPECT_EQ(adjacency(testing::directed(3, {{0, 1}, {2, 0}}), 0), (VertexSet{1}));
  EXPECT_TRUE(adjacent(testing::bowtie(), 4, 3));
  EXPECT_FALSE(adjacent(testing::bowtie(), 0, 3));
}

TEST(Oracle, BfsDistances) {
  const DistanceMap d = bfs_distances(testing::c4(), 0);
  EXPECT_EQ(d, (DistanceMap{{0, 0}, {1, 1}, {2, 2}, {3, 1}}));
  EXPECT_THROW(bfs_distances(testing::undirected(3, {{0, 1}}), 0), Error);
  // directed: reachable set only
  EXPECT_EQ(bfs_distances(testing::directed(3, {{1, 0}, {1, 2}}), 0), (DistanceMap{{0, 0}}));
}

TEST(Oracle, BfsConnected) {
  EXPECT_TRUE(bfs_connected(path_graph(4)));
  EXPECT_FALSE(bfs_connected(testing::undirected(4, {{0, 1}, {2, 3}})));
}

TEST(Oracle, Triangles) {
  const Graph g = testing::bowtie();
  const TriangleCount at2 = triangle_count_vertex(g, 2);
  EXPECT_EQ(at2.count, 2u);
  EXPECT_EQ(at2.tuples, (std::vector<TriangleTuple>{{0, 1, 2}, {2, 3, 4}}));
  EXPECT_EQ(triangle_count_vertex(g, 0).count, 1u);
  EXPECT_EQ(triangle_apexes(g, 0, 2), (VertexSet{1}));
  EXPECT_EQ(triangle_count_total(g), 2u);
  EXPECT_EQ(triangle_count_total(complete_graph(5)), 10u);
  EXPECT_EQ(triangle_count_total(testing::c4()), 0u);
}

TEST(Oracle, Cliques) {
  const Graph g = testing::bowtie();
  EXPECT_TRUE(is_clique(g, VertexSet{0, 1, 2}));
  EXPECT_FALSE(is_clique(g, VertexSet{0, 1, 3}));
  EXPECT_TRUE(is_clique(g, VertexSet{3}));
  EXPECT_EQ(common_neighbors(g, VertexSet{0, 1}), (VertexSet{2}));
  EXPECT_EQ(common_neighbors(g, VertexSet{2}), (VertexSet{0, 1, 3, 4}));
  EXPECT_EQ(induced_edges(g, VertexSet{0, 1, 2, 3}), (EdgeSet{{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
  EXPECT_EQ(missing_edges(g, VertexSet{0, 1, 2, 3}), (EdgeSet{{0, 3}, {1, 3}}));
}

}  // namespace
}  // namespace spikegraph
