#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "spikegraph/graph.hpp"

// Brute-force reference answers computed from the edge list alone. Nothing
// here touches the simulator or the CSR adjacency of Graph.
namespace spikegraph::oracle {

using DistanceMap = std::map<Vertex, std::int64_t>;

struct TriangleCount {
  std::size_t count = 0;
  std::vector<TriangleTuple> tuples;  // ascending
};

/// Out-neighbours of v by scanning the edge list.
VertexSet adjacency(const Graph& g, Vertex v);
bool adjacent(const Graph& g, Vertex u, Vertex v);

/// Breadth-first search following out-arcs. Undirected input must be
/// connected (DisconnectedGraph otherwise); directed input reports the
/// vertices reachable from v.
DistanceMap bfs_distances(const Graph& g, Vertex v);
bool bfs_connected(const Graph& g);

TriangleCount triangle_count_vertex(const Graph& g, Vertex v);
/// |adj(i) ∩ adj(j)|, as the sorted apex list.
VertexSet triangle_apexes(const Graph& g, Vertex i, Vertex j);
std::size_t triangle_count_total(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& subset);
/// Vertices outside `set` adjacent to every member of `set`.
VertexSet common_neighbors(const Graph& g, const VertexSet& set);
EdgeSet induced_edges(const Graph& g, const VertexSet& subset);
/// Subset pairs (i < j) that are not edges.
EdgeSet missing_edges(const Graph& g, const VertexSet& subset);

}  // namespace spikegraph::oracle
