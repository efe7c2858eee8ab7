#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spikegraph {

using Vertex = std::uint32_t;
using Label = std::uint64_t;

/// An edge between internal vertex indices. Undirected edges are stored with
/// u < v; directed arcs keep their orientation.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free edge list.
using EdgeSet = std::vector<Edge>;

/// Triangle as a sorted triple a < b < c.
struct TriangleTuple {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  static TriangleTuple sorted(Vertex x, Vertex y, Vertex z);
  friend auto operator<=>(const TriangleTuple&, const TriangleTuple&) = default;
};

/// Ordered list of distinct vertex indices. Construction sorts the input and
/// rejects duplicates; range checks against a graph happen in
/// Graph::require_valid.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vertices);
  explicit VertexSet(std::vector<Vertex> vertices);

  static VertexSet range(Vertex count);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Immutable simple graph with dense internal indices [0, vertex_count).
///
/// Adjacency is held in CSR form and shared between copies, so a Graph is
/// cheap to copy and safe to read from several threads. For undirected
/// graphs every edge appears in both endpoints' rows; the CSR position of an
/// entry doubles as the synapse index of the direct mapping.
class Graph {
 public:
  Graph();

  /// Builds a graph from internal-index edges. Self-loops and out-of-range
  /// endpoints throw; duplicates (including reversed undirected pairs) are
  /// collapsed and counted. `labels`, when non-empty, must have one external
  /// label per vertex.
  Graph(bool directed, std::size_t vertex_count, std::span<const Edge> edges,
        std::vector<Label> labels = {});

  bool directed() const { return topo_->directed; }
  std::size_t vertex_count() const { return topo_->labels.size(); }
  std::size_t edge_count() const { return topo_->edges.size(); }
  /// Number of adjacency entries: 2|E| undirected, |E| directed.
  std::size_t arc_count() const { return topo_->targets.size(); }
  std::size_t duplicates_collapsed() const { return topo_->duplicates; }

  const EdgeSet& edges() const { return topo_->edges; }

  /// Out-neighbours of v, ascending.
  std::span<const Vertex> neighbors(Vertex v) const;
  /// CSR offset of v's first adjacency entry.
  std::size_t arc_begin(Vertex v) const { return topo_->offsets[v]; }
  std::size_t arc_end(Vertex v) const { return topo_->offsets[v + 1]; }
  Vertex arc_source(std::size_t arc) const { return topo_->sources[arc]; }
  Vertex arc_target(std::size_t arc) const { return topo_->targets[arc]; }

  bool has_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;

  Label label(Vertex v) const;
  std::optional<Vertex> find_label(Label label) const;

  bool valid(Vertex v) const { return v < vertex_count(); }
  void require_valid(Vertex v) const;
  void require_valid(const VertexSet& set) const;

  /// Structural equality: orientation, vertex count and edge set. Labels are
  /// presentation only and do not take part.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Topology {
    bool directed = false;
    std::vector<Label> labels;
    EdgeSet edges;
    std::vector<std::size_t> offsets;
    std::vector<Vertex> sources;
    std::vector<Vertex> targets;
    std::size_t duplicates = 0;
  };
  std::shared_ptr<const Topology> topo_;
};

/// Parses the edge-list text format:
///   - one "a b" pair of nonnegative integer labels per line,
///   - '#' starts a comment line, blank lines are ignored,
///   - an optional "vertices N" line, before any edge, declares labels
///     0..N-1 up front (so isolated vertices survive and labels < N map to
///     themselves).
/// Labels are compacted to internal indices in first-appearance order.
Graph parse_edge_list(std::string_view text, bool directed);

/// Inverse of parse_edge_list on internal indices: a "vertices N" header and
/// one edge per line, endpoints ascending for undirected graphs, lines sorted.
std::string serialize_edge_list(const Graph& g);

/// True iff every vertex is reachable from vertex 0 ignoring orientation.
bool is_connected(const Graph& g);

/// Throws DisconnectedGraph naming `routine` unless g is connected.
void require_connected(const Graph& g, std::string_view routine);

}  // namespace spikegraph
