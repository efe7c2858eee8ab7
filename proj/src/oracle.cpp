#include "spikegraph/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "spikegraph/error.hpp"

namespace spikegraph::oracle {

namespace {

// Undirected adjacency rebuilt from the edge list (arcs for directed input).
std::vector<std::set<Vertex>> adjacency_lists(const Graph& g) {
  std::vector<std::set<Vertex>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    if (!g.directed()) adj[e.v].insert(e.u);
  }
  return adj;
}

}  // namespace

VertexSet adjacency(const Graph& g, Vertex v) {
  g.require_valid(v);
  std::vector<Vertex> out;
  for (const Edge& e : g.edges()) {
    if (e.u == v) out.push_back(e.v);
    else if (!g.directed() && e.v == v) out.push_back(e.u);
  }
  return VertexSet(std::move(out));
}

bool adjacent(const Graph& g, Vertex u, Vertex v) {
  Edge probe{u, v};
  if (!g.directed() && probe.u > probe.v) std::swap(probe.u, probe.v);
  return std::binary_search(g.edges().begin(), g.edges().end(), probe);
}

DistanceMap bfs_distances(const Graph& g, Vertex v) {
  g.require_valid(v);
  if (!g.directed() && !bfs_connected(g)) {
    throw Error(Errc::DisconnectedGraph, "bfs_distances: graph is not connected");
  }
  const auto adj = adjacency_lists(g);
  DistanceMap dist;
  dist[v] = 0;
  std::deque<Vertex> frontier{v};
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop_front();
    for (Vertex y : adj[x]) {
      if (dist.emplace(y, dist[x] + 1).second) frontier.push_back(y);
    }
  }
  return dist;
}

bool bfs_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<std::set<Vertex>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> frontier{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop_front();
    for (Vertex y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        frontier.push_back(y);
      }
    }
  }
  return reached == g.vertex_count();
}

TriangleCount triangle_count_vertex(const Graph& g, Vertex v) {
  g.require_valid(v);
  if (g.directed()) throw Error(Errc::DirectedNotSupported, "triangles need an undirected graph");
  const std::set<Edge> edges(g.edges().begin(), g.edges().end());
  const auto nbrs = adjacency(g, v);
  TriangleCount out;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (edges.count(Edge{nbrs[i], nbrs[j]})) out.tuples.push_back(TriangleTuple::sorted(v, nbrs[i], nbrs[j]));
    }
  }
  std::sort(out.tuples.begin(), out.tuples.end());
  out.count = out.tuples.size();
  return out;
}

VertexSet triangle_apexes(const Graph& g, Vertex i, Vertex j) {
  const auto a = adjacency(g, i);
  const auto b = adjacency(g, j);
  std::vector<Vertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return VertexSet(std::move(common));
}

std::size_t triangle_count_total(const Graph& g) {
  const auto adj = adjacency_lists(g);
  std::size_t total = 0;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b : adj[a]) {
      if (b <= a) continue;
      for (Vertex c : adj[b]) {
        if (c > b && adj[a].count(c)) ++total;
      }
    }
  }
  return total;
}

bool is_clique(const Graph& g, const VertexSet& subset) {
  g.require_valid(subset);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (!adjacent(g, subset[i], subset[j])) return false;
    }
  }
  return true;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& set) {
  g.require_valid(set);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (set.contains(x)) continue;
    bool all = !set.empty();
    for (Vertex c : set) {
      if (!adjacent(g, c, x)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(x);
  }
  return VertexSet(std::move(out));
}

EdgeSet induced_edges(const Graph& g, const VertexSet& subset) {
  g.require_valid(subset);
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    if (subset.contains(e.u) && subset.contains(e.v)) out.push_back(e);
  }
  return out;
}

EdgeSet missing_edges(const Graph& g, const VertexSet& subset) {
  g.require_valid(subset);
  EdgeSet out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (!adjacent(g, subset[i], subset[j])) out.push_back({subset[i], subset[j]});
    }
  }
  return out;
}

}  // namespace spikegraph::oracle
