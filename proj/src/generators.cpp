#include "spikegraph/generators.hpp"

#include <random>
#include <string>
#include <vector>

#include "spikegraph/error.hpp"

namespace spikegraph {

namespace {

constexpr std::size_t kMaxResamples = 1'000'000;

void require_order(std::size_t n, std::size_t min, std::string_view family) {
  if (n < min) {
    throw Error(Errc::InvalidArgument,
                std::string(family) + " graph needs at least " + std::to_string(min) + " vertices");
  }
}

// Uniform [0, 1) from the top 53 bits; identical across standard libraries,
// unlike std::uniform_real_distribution.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "star") return Family::Star;
  if (name == "er") return Family::ErdosRenyi;
  throw Error(Errc::InvalidArgument, "unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Star: return "star";
    case Family::ErdosRenyi: return "er";
  }
  return "unknown";
}

Graph path_graph(std::size_t n) {
  require_order(n, 1, "path");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(false, n, edges);
}

Graph cycle_graph(std::size_t n) {
  require_order(n, 3, "cycle");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(false, n, edges);
}

Graph complete_graph(std::size_t n) {
  require_order(n, 1, "complete");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(false, n, edges);
}

Graph star_graph(std::size_t n) {
  require_order(n, 1, "star");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph(false, n, edges);
}

Graph erdos_renyi_connected(std::size_t n, double p, std::uint64_t seed) {
  require_order(n, 1, "er");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidArgument, "edge probability must lie in [0, 1]");
  if (n > 1 && p == 0.0) throw Error(Errc::InvalidArgument, "p = 0 never yields a connected graph");
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < kMaxResamples; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (unit(rng) < p) edges.push_back({i, j});
      }
    }
    Graph g(false, n, edges);
    if (is_connected(g)) return g;
  }
  throw Error(Errc::InvalidArgument, "no connected G(n, p) sample within the resample limit");
}

Graph generate(Family family, std::size_t n, double p, std::uint64_t seed) {
  switch (family) {
    case Family::Path: return path_graph(n);
    case Family::Cycle: return cycle_graph(n);
    case Family::Complete: return complete_graph(n);
    case Family::Star: return star_graph(n);
    case Family::ErdosRenyi: return erdos_renyi_connected(n, p, seed);
  }
  throw Error(Errc::InvalidArgument, "unknown graph family");
}

}  // namespace spikegraph
