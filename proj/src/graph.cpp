#include "spikegraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "spikegraph/error.hpp"

namespace spikegraph {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::Malformed: return "Malformed";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::MaxTicksExceeded: return "MaxTicksExceeded";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::NotAClique: return "NotAClique";
    case Errc::UnknownRoutine: return "UnknownRoutine";
    case Errc::DirectedNotSupported: return "DirectedNotSupported";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

TriangleTuple TriangleTuple::sorted(Vertex x, Vertex y, Vertex z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  return {x, y, z};
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> vertices)
    : VertexSet(std::vector<Vertex>(vertices)) {}

VertexSet::VertexSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(Errc::InvalidArgument, "vertex set contains a duplicate vertex");
  }
}

VertexSet VertexSet::range(Vertex count) {
  std::vector<Vertex> all(count);
  std::iota(all.begin(), all.end(), Vertex{0});
  return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph() {
  auto t = std::make_shared<Topology>();
  t->offsets = {0};
  topo_ = std::move(t);
}

Graph::Graph(bool directed, std::size_t vertex_count, std::span<const Edge> edges,
             std::vector<Label> labels) {
  auto t = std::make_shared<Topology>();
  t->directed = directed;
  if (labels.empty()) {
    labels.resize(vertex_count);
    std::iota(labels.begin(), labels.end(), Label{0});
  } else if (labels.size() != vertex_count) {
    throw Error(Errc::InvalidArgument, "label count does not match vertex count");
  }
  t->labels = std::move(labels);

  t->edges.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(Errc::UnknownVertex, "edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(Errc::SelfLoop, "self-loop on vertex " + std::to_string(e.u));
    }
    if (!directed && e.u > e.v) std::swap(e.u, e.v);
    t->edges.push_back(e);
  }
  std::sort(t->edges.begin(), t->edges.end());
  const auto last = std::unique(t->edges.begin(), t->edges.end());
  t->duplicates = static_cast<std::size_t>(t->edges.end() - last);
  t->edges.erase(last, t->edges.end());

  std::vector<std::size_t> counts(vertex_count, 0);
  for (const Edge& e : t->edges) {
    ++counts[e.u];
    if (!directed) ++counts[e.v];
  }
  t->offsets.assign(vertex_count + 1, 0);
  for (std::size_t i = 0; i < vertex_count; ++i) t->offsets[i + 1] = t->offsets[i] + counts[i];

  t->targets.resize(t->offsets.back());
  t->sources.resize(t->offsets.back());
  std::vector<std::size_t> cursor(t->offsets.begin(), t->offsets.end() - 1);
  auto place = [&](Vertex from, Vertex to) {
    const std::size_t at = cursor[from]++;
    t->sources[at] = from;
    t->targets[at] = to;
  };
  for (const Edge& e : t->edges) {
    place(e.u, e.v);
    if (!directed) place(e.v, e.u);
  }
  for (std::size_t i = 0; i < vertex_count; ++i) {
    std::sort(t->targets.begin() + static_cast<std::ptrdiff_t>(t->offsets[i]),
              t->targets.begin() + static_cast<std::ptrdiff_t>(t->offsets[i + 1]));
  }
  topo_ = std::move(t);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  require_valid(v);
  return std::span<const Vertex>(topo_->targets).subspan(arc_begin(v), arc_end(v) - arc_begin(v));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!valid(u) || !valid(v)) return false;
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Graph::degree(Vertex v) const {
  require_valid(v);
  return arc_end(v) - arc_begin(v);
}

Label Graph::label(Vertex v) const {
  require_valid(v);
  return topo_->labels[v];
}

std::optional<Vertex> Graph::find_label(Label label) const {
  const auto& labels = topo_->labels;
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels.begin());
}

void Graph::require_valid(Vertex v) const {
  if (!valid(v)) {
    throw Error(Errc::UnknownVertex, "unknown vertex " + std::to_string(v));
  }
}

void Graph::require_valid(const VertexSet& set) const {
  for (Vertex v : set) require_valid(v);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.directed() == b.directed() && a.vertex_count() == b.vertex_count() &&
         a.edges() == b.edges();
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::uint64_t> parse_uint(std::string_view token) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(Errc::Malformed, "line " + std::to_string(line_no) + ": " + why, line_no);
}

}  // namespace

Graph parse_edge_list(std::string_view text, bool directed) {
  std::vector<Label> labels;
  std::unordered_map<Label, Vertex> index;
  std::vector<Edge> edges;

  auto intern = [&](Label label) {
    const auto [it, inserted] = index.emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.front() == "vertices") {
      if (tokens.size() != 2) malformed(line_no, "expected 'vertices N'");
      if (!edges.empty() || !labels.empty()) malformed(line_no, "'vertices' header must precede edges");
      const auto n = parse_uint(tokens[1]);
      if (!n || *n > std::numeric_limits<Vertex>::max()) malformed(line_no, "invalid vertex count");
      for (Label l = 0; l < *n; ++l) intern(l);
      continue;
    }

    if (tokens.size() != 2) malformed(line_no, "expected two vertex labels");
    const auto a = parse_uint(tokens[0]);
    const auto b = parse_uint(tokens[1]);
    if (!a || !b) malformed(line_no, "vertex labels must be nonnegative integers");
    if (*a == *b) {
      throw Error(Errc::SelfLoop, "line " + std::to_string(line_no) + ": self-loop on " + std::to_string(*a),
                  line_no);
    }
    const Vertex u = intern(*a);
    const Vertex v = intern(*b);
    edges.push_back({u, v});
  }

  const std::size_t n = labels.size();
  return Graph(directed, n, edges, std::move(labels));
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// Union-find over the edge list; the BFS reachability check lives in the
// oracle module.
bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : g.edges()) {
    const auto a = find(e.u);
    const auto b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

void require_connected(const Graph& g, std::string_view routine) {
  if (!is_connected(g)) {
    throw Error(Errc::DisconnectedGraph, std::string(routine) + ": graph is not connected");
  }
}

}  // namespace spikegraph
