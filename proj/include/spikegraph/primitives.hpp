#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "spikegraph/accounting.hpp"
#include "spikegraph/graph.hpp"
#include "spikegraph/sns.hpp"

// Graph routines realised as spiking-network runs. Each routine directly maps
// the graph to a fresh network, configures thresholds, drives it and reads
// the answer off the raster or the potentiated synapses. All routines use
// unit weights and unit delay.
namespace spikegraph {

/// Answer plus the rasters of every run performed (in order) and the cost
/// report. report.engine_ticks equals the summed raster lengths.
template <class Answer>
struct PrimitiveResult {
  Answer answer{};
  std::vector<SpikeRaster> rasters;
  RunReport report;
};

using DistanceMap = std::map<Vertex, std::int64_t>;

struct EdgeTriangles {
  std::size_t count = 0;
  VertexSet apexes;
};

struct VertexTriangles {
  std::size_t count = 0;
  std::vector<TriangleTuple> tuples;  // ascending
  /// Iterative method: apex total summed over incident edges before halving.
  /// Clique method: number of verified triples.
  std::size_t raw_count = 0;
  /// Number of per-edge or per-pair runs performed after neighbour discovery.
  std::size_t tests = 0;
};

struct NeighborhoodGraph {
  VertexSet vertices;
  EdgeSet edges;
};

struct CliqueWitness {
  bool is_clique = false;
  EdgeSet missing;
};

/// Learning rate of every plastic routine; potentiated weights end at 1 + it.
inline constexpr double kPlasticRate = 0.5;

PrimitiveResult<VertexSet> nearest_neighbors(const Graph& g, Vertex v);

/// Default tick budget for propagation runs: enough for any connected graph.
std::int64_t default_max_ticks(const Graph& g);

/// First firing tick of every neuron reached from v, under a refractory
/// period of |V| so each neuron fires at most once. For connected undirected
/// graphs this is the BFS distance.
PrimitiveResult<DistanceMap> first_fire_times(const Graph& g, Vertex v,
                                              std::optional<std::int64_t> max_ticks = std::nullopt);

/// True iff `to` fires within r ticks of driving `from`.
PrimitiveResult<bool> shortest_path_upper_bound(const Graph& g, Vertex from, Vertex to, std::int64_t r,
                                                std::optional<std::int64_t> max_ticks = std::nullopt);

/// Tick at which the firing wave from v dies out.
PrimitiveResult<std::int64_t> eccentricity(const Graph& g, Vertex v,
                                           std::optional<std::int64_t> max_ticks = std::nullopt);

PrimitiveResult<EdgeSet> subgraph_extract_iterative(const Graph& g, const VertexSet& subset);
PrimitiveResult<EdgeSet> subgraph_extract_parallel(const Graph& g, const VertexSet& subset);

/// Parallel-extraction variant that also returns the potentiated synapses
/// read out of the network.
struct ParallelExtraction {
  EdgeSet edges;
  std::vector<PotentiatedSynapse> potentiated;
};
PrimitiveResult<ParallelExtraction> subgraph_extract_parallel_detailed(const Graph& g, const VertexSet& subset);

PrimitiveResult<NeighborhoodGraph> neighborhood_extract(const Graph& g, Vertex v);

PrimitiveResult<EdgeTriangles> triangles_on_edge(const Graph& g, Vertex i, Vertex j);
PrimitiveResult<VertexTriangles> triangles_at_vertex_iterative(const Graph& g, Vertex v);
PrimitiveResult<VertexTriangles> triangles_at_vertex_clique(const Graph& g, Vertex v);

PrimitiveResult<bool> clique_verify(const Graph& g, const VertexSet& subset);
PrimitiveResult<CliqueWitness> clique_verify_plastic(const Graph& g, const VertexSet& subset);
PrimitiveResult<VertexSet> clique_expand(const Graph& g, const VertexSet& clique);

}  // namespace spikegraph
