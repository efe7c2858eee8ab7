#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <vector>

#include "spikegraph/graph.hpp"

namespace spikegraph::testing {

inline Graph undirected(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph(false, n, list);
}

inline Graph directed(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph(true, n, list);
}

// Two triangles sharing vertex 2.
inline Graph bowtie() { return undirected(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {2, 4}, {3, 4}}); }

// 0-1-2-3-0
inline Graph c4() { return undirected(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

// Hand-rolled generators for property tests. Graphs here may be disconnected.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
  bool coin(double p) { return unit() < p; }

  Graph graph(std::size_t n, double p, bool is_directed = false) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = is_directed ? 0 : u + 1; v < n; ++v) {
        if (u != v && coin(p)) edges.push_back({u, v});
      }
    }
    return Graph(is_directed, n, edges);
  }

  VertexSet subset(std::size_t n, std::size_t k) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng_);
    all.resize(std::min(k, n));
    return VertexSet(std::move(all));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace spikegraph::testing
