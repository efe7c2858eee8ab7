#include "spikegraph/primitives.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "spikegraph/error.hpp"

namespace spikegraph {

namespace {

constexpr SynapseParams kStatic{1.0, 1, 0.0};
constexpr SynapseParams kPlastic{1.0, 1, kPlasticRate};

// Accumulates rasters and costs of the runs making up one routine.
template <class Answer>
class Session {
 public:
  explicit Session(Routine routine) { result_.report.routine = routine; }

  void write() { ++result_.report.writes; }
  void read() { ++result_.report.reads; }
  void ratio(double r) { result_.report.add_ratio(r); }

  /// Records a run worth `rounds` clock steps in the cost model.
  const SpikeRaster& record(SpikeRaster raster, std::int64_t rounds) {
    auto& rep = result_.report;
    rep.mct += rounds;
    rep.engine_ticks += static_cast<std::int64_t>(raster.size());
    rep.spike_total += static_cast<std::int64_t>(raster.spike_total());
    result_.rasters.push_back(std::move(raster));
    return result_.rasters.back();
  }

  /// Folds a sub-routine's runs and costs into this one.
  template <class Other>
  void absorb(PrimitiveResult<Other>&& sub) {
    auto& rep = result_.report;
    rep.mct += sub.report.mct;
    rep.engine_ticks += sub.report.engine_ticks;
    rep.spike_total += sub.report.spike_total;
    rep.reads += sub.report.reads;
    rep.writes += sub.report.writes;
    for (double r : sub.report.threshold_weight_ratios) rep.add_ratio(r);
    for (auto& raster : sub.rasters) result_.rasters.push_back(std::move(raster));
  }

  PrimitiveResult<Answer> finish(Answer answer) {
    result_.answer = std::move(answer);
    return std::move(result_);
  }

 private:
  PrimitiveResult<Answer> result_;
};

void require_undirected(const Graph& g, Routine routine) {
  if (g.directed()) {
    throw Error(Errc::DirectedNotSupported,
                std::string(routine_name(routine)) + ": requires an undirected graph");
  }
}

void require_nonempty(const VertexSet& set, Routine routine) {
  if (set.empty()) {
    throw Error(Errc::InvalidArgument, std::string(routine_name(routine)) + ": vertex set is empty");
  }
}

// Drive `driven` at tick 0 and let the spikes land: ticks 0 and 1.
SpikeRaster single_round(Sns& sns, const VertexSet& driven) {
  StimulusPlan plan;
  plan.drive(0, driven);
  return sns.run(plan, 2, false);
}

double edge_scale_threshold(const Graph& g, std::size_t extra) {
  return static_cast<double>(std::max<std::size_t>(g.edge_count() + extra, 1));
}

// Undirected edges whose two synapses both potentiated.
EdgeSet edges_from_potentiation(const std::vector<PotentiatedSynapse>& potentiated) {
  std::set<Edge> directed;
  for (const auto& p : potentiated) directed.insert({p.src, p.dst});
  EdgeSet out;
  for (const Edge& e : directed) {
    if (e.u < e.v && directed.count({e.v, e.u})) out.push_back(e);
  }
  return out;
}

VertexSet complement(const Graph& g, const VertexSet& set) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!set.contains(v)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

PrimitiveResult<DistanceMap> propagate_from(const Graph& g, Vertex v, std::optional<std::int64_t> max_ticks,
                                            Routine routine) {
  require_connected(g, routine_name(routine));
  g.require_valid(v);
  Session<DistanceMap> session(routine);
  const auto refractory = static_cast<std::uint32_t>(g.vertex_count());
  Sns sns(g, {1.0, refractory}, kStatic);
  session.write();
  session.ratio(1.0);

  StimulusPlan plan;
  plan.drive(0, {v});
  SpikeRaster raster = sns.run(plan, max_ticks.value_or(default_max_ticks(g)), true);

  DistanceMap first;
  for (const TickRecord& rec : raster.ticks()) {
    for (const Firing& f : rec.fired) first.emplace(f.neuron, rec.t);
  }
  const std::int64_t rounds = raster.last_firing_tick().value_or(0);
  session.record(std::move(raster), rounds);
  return session.finish(std::move(first));
}

// Subset members that fired internally at the arrival tick.
VertexSet fired_members(const SpikeRaster& raster, const VertexSet& subset) {
  std::vector<Vertex> fired;
  for (Vertex u : raster.internal_at(1)) {
    if (subset.contains(u)) fired.push_back(u);
  }
  return VertexSet(std::move(fired));
}

}  // namespace

std::int64_t default_max_ticks(const Graph& g) { return static_cast<std::int64_t>(g.vertex_count()) + 2; }

PrimitiveResult<VertexSet> nearest_neighbors(const Graph& g, Vertex v) {
  require_connected(g, routine_name(Routine::NearestNeighbors));
  g.require_valid(v);
  Session<VertexSet> session(Routine::NearestNeighbors);
  Sns sns(g, {1.0, 0}, kStatic);
  session.write();
  session.ratio(1.0);
  const SpikeRaster& raster = session.record(single_round(sns, {v}), 1);
  return session.finish(VertexSet(raster.internal_at(1)));
}

PrimitiveResult<DistanceMap> first_fire_times(const Graph& g, Vertex v, std::optional<std::int64_t> max_ticks) {
  return propagate_from(g, v, max_ticks, Routine::FirstFireTimes);
}

PrimitiveResult<bool> shortest_path_upper_bound(const Graph& g, Vertex from, Vertex to, std::int64_t r,
                                                std::optional<std::int64_t> max_ticks) {
  g.require_valid(to);
  if (r < 0) throw Error(Errc::InvalidArgument, "shortest_path_upper_bound: r must be nonnegative");
  auto run = propagate_from(g, from, max_ticks, Routine::ShortestPathBound);
  const auto it = run.answer.find(to);
  PrimitiveResult<bool> out;
  out.answer = it != run.answer.end() && it->second <= r;
  out.rasters = std::move(run.rasters);
  out.report = std::move(run.report);
  return out;
}

PrimitiveResult<std::int64_t> eccentricity(const Graph& g, Vertex v, std::optional<std::int64_t> max_ticks) {
  auto run = propagate_from(g, v, max_ticks, Routine::Eccentricity);
  PrimitiveResult<std::int64_t> out;
  out.answer = run.rasters.front().last_firing_tick().value_or(0);
  out.rasters = std::move(run.rasters);
  out.report = std::move(run.report);
  return out;
}

PrimitiveResult<EdgeSet> subgraph_extract_iterative(const Graph& g, const VertexSet& subset) {
  constexpr Routine kRoutine = Routine::SubgraphIterative;
  require_undirected(g, kRoutine);
  require_connected(g, routine_name(kRoutine));
  g.require_valid(subset);
  require_nonempty(subset, kRoutine);

  Session<EdgeSet> session(kRoutine);
  Sns sns(g, {2.0, 0}, kStatic);
  session.write();
  sns.set_thresholds(subset, 1.0);
  session.write();
  session.ratio(1.0);

  std::set<Edge> edges;
  for (Vertex v : subset) {
    sns.reset();
    const SpikeRaster& raster = session.record(single_round(sns, {v}), 1);
    for (Vertex u : raster.internal_at(1)) edges.insert({std::min(u, v), std::max(u, v)});
  }
  return session.finish(EdgeSet(edges.begin(), edges.end()));
}

PrimitiveResult<ParallelExtraction> subgraph_extract_parallel_detailed(const Graph& g, const VertexSet& subset) {
  constexpr Routine kRoutine = Routine::SubgraphParallel;
  require_undirected(g, kRoutine);
  require_connected(g, routine_name(kRoutine));
  g.require_valid(subset);
  require_nonempty(subset, kRoutine);

  Session<ParallelExtraction> session(kRoutine);
  Sns sns(g, {edge_scale_threshold(g, 0), 0}, kPlastic);
  session.write();
  sns.set_thresholds(subset, 1.0);
  session.write();
  session.ratio(1.0);

  // Two clock steps: the drive and the arrival that triggers potentiation.
  session.record(single_round(sns, subset), 2);
  ParallelExtraction answer;
  answer.potentiated = sns.read_potentiated();
  session.read();
  answer.edges = edges_from_potentiation(answer.potentiated);
  return session.finish(std::move(answer));
}

PrimitiveResult<EdgeSet> subgraph_extract_parallel(const Graph& g, const VertexSet& subset) {
  auto detailed = subgraph_extract_parallel_detailed(g, subset);
  PrimitiveResult<EdgeSet> out;
  out.answer = std::move(detailed.answer.edges);
  out.rasters = std::move(detailed.rasters);
  out.report = std::move(detailed.report);
  return out;
}

PrimitiveResult<NeighborhoodGraph> neighborhood_extract(const Graph& g, Vertex v) {
  constexpr Routine kRoutine = Routine::Neighborhood;
  require_undirected(g, kRoutine);
  require_connected(g, routine_name(kRoutine));
  g.require_valid(v);

  Session<NeighborhoodGraph> session(kRoutine);
  Sns sns(g, {1.0, 0}, kPlastic);
  session.write();
  session.ratio(1.0);

  // vertices: single neuron driving
  const SpikeRaster& first = session.record(single_round(sns, {v}), 1);
  std::vector<Vertex> members = first.internal_at(1);
  members.push_back(v);
  NeighborhoodGraph answer;
  answer.vertices = VertexSet(std::move(members));

  // edges: raise everyone else out of reach and drive the whole neighbourhood
  sns.reset();
  sns.set_thresholds(complement(g, answer.vertices), edge_scale_threshold(g, 1));
  session.write();
  session.record(single_round(sns, answer.vertices), 2);
  answer.edges = edges_from_potentiation(sns.read_potentiated());
  session.read();
  return session.finish(std::move(answer));
}

PrimitiveResult<EdgeTriangles> triangles_on_edge(const Graph& g, Vertex i, Vertex j) {
  constexpr Routine kRoutine = Routine::TrianglesOnEdge;
  require_undirected(g, kRoutine);
  g.require_valid(i);
  g.require_valid(j);
  if (!g.has_edge(i, j)) {
    throw Error(Errc::NotAnEdge, "triangles_on_edge: (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") is not an edge");
  }
  Session<EdgeTriangles> session(kRoutine);
  Sns sns(g, {2.0, 0}, kStatic);
  session.write();
  session.ratio(2.0);
  const SpikeRaster& raster = session.record(single_round(sns, {i, j}), 1);
  EdgeTriangles answer;
  answer.apexes = VertexSet(raster.internal_at(1));
  answer.count = answer.apexes.size();
  return session.finish(std::move(answer));
}

PrimitiveResult<VertexTriangles> triangles_at_vertex_iterative(const Graph& g, Vertex v) {
  constexpr Routine kRoutine = Routine::TrianglesVertexIterative;
  require_undirected(g, kRoutine);
  require_connected(g, routine_name(kRoutine));
  g.require_valid(v);

  Session<VertexTriangles> session(kRoutine);
  auto nn = nearest_neighbors(g, v);
  const VertexSet neighbours = nn.answer;
  session.absorb(std::move(nn));

  VertexTriangles answer;
  std::set<TriangleTuple> tuples;
  for (Vertex u : neighbours) {
    auto edge = triangles_on_edge(g, v, u);
    answer.raw_count += edge.answer.count;
    for (Vertex k : edge.answer.apexes) tuples.insert(TriangleTuple::sorted(v, u, k));
    session.absorb(std::move(edge));
    ++answer.tests;
  }
  // each triangle at v is seen once from each of its two edges at v
  answer.count = answer.raw_count / 2;
  answer.tuples.assign(tuples.begin(), tuples.end());
  return session.finish(std::move(answer));
}

PrimitiveResult<VertexTriangles> triangles_at_vertex_clique(const Graph& g, Vertex v) {
  constexpr Routine kRoutine = Routine::TrianglesVertexClique;
  require_undirected(g, kRoutine);
  require_connected(g, routine_name(kRoutine));
  g.require_valid(v);

  Session<VertexTriangles> session(kRoutine);
  auto nn = nearest_neighbors(g, v);
  const VertexSet neighbours = nn.answer;
  session.absorb(std::move(nn));

  VertexTriangles answer;
  for (std::size_t a = 0; a < neighbours.size(); ++a) {
    for (std::size_t b = a + 1; b < neighbours.size(); ++b) {
      auto check = clique_verify(g, {v, neighbours[a], neighbours[b]});
      if (check.answer) answer.tuples.push_back(TriangleTuple::sorted(v, neighbours[a], neighbours[b]));
      session.absorb(std::move(check));
      ++answer.tests;
    }
  }
  std::sort(answer.tuples.begin(), answer.tuples.end());
  answer.raw_count = answer.tuples.size();
  answer.count = answer.tuples.size();
  return session.finish(std::move(answer));
}

PrimitiveResult<bool> clique_verify(const Graph& g, const VertexSet& subset) {
  constexpr Routine kRoutine = Routine::CliqueVerify;
  require_undirected(g, kRoutine);
  g.require_valid(subset);
  require_nonempty(subset, kRoutine);

  Session<bool> session(kRoutine);
  // K1 and K2 have no usable threshold (0, or 1 which any spike reaches)
  if (subset.size() == 1) return session.finish(true);
  if (subset.size() == 2) return session.finish(g.has_edge(subset[0], subset[1]));

  // members need a spike from every other member; outsiders can never fire
  Sns sns(g, {edge_scale_threshold(g, 1), 0}, kStatic);
  sns.set_thresholds(subset, static_cast<double>(subset.size() - 1));
  session.write();
  session.ratio(static_cast<double>(subset.size() - 1));
  const SpikeRaster& raster = session.record(single_round(sns, subset), 1);
  return session.finish(fired_members(raster, subset).size() == subset.size());
}

PrimitiveResult<CliqueWitness> clique_verify_plastic(const Graph& g, const VertexSet& subset) {
  constexpr Routine kRoutine = Routine::CliqueVerifyPlastic;
  require_undirected(g, kRoutine);
  g.require_valid(subset);
  require_nonempty(subset, kRoutine);

  Session<CliqueWitness> session(kRoutine);
  CliqueWitness answer;
  if (subset.size() == 1) {
    answer.is_clique = true;
    return session.finish(std::move(answer));
  }
  if (subset.size() == 2) {
    answer.is_clique = g.has_edge(subset[0], subset[1]);
    if (!answer.is_clique) answer.missing.push_back({subset[0], subset[1]});
    return session.finish(std::move(answer));
  }

  Sns sns(g, {edge_scale_threshold(g, 1), 0}, kPlastic);
  sns.set_thresholds(subset, static_cast<double>(subset.size() - 1));
  session.write();
  session.ratio(static_cast<double>(subset.size() - 1));
  const VertexSet fired = fired_members(session.record(single_round(sns, subset), 1), subset);
  const auto potentiated = sns.read_potentiated();
  session.read();
  answer.is_clique = fired.size() == subset.size();

  // A member that fired took spikes from every member it is adjacent to, so
  // each pair touching a fired member is decided by the synapse into it.
  std::set<Edge> into_fired;
  for (const auto& p : potentiated) into_fired.insert({p.src, p.dst});
  std::vector<Vertex> silent;
  for (Vertex u : subset) {
    if (!fired.contains(u)) silent.push_back(u);
  }
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      const Vertex x = subset[a];
      const Vertex y = subset[b];
      if (fired.contains(y)) {
        if (!into_fired.count({x, y})) answer.missing.push_back({x, y});
      } else if (fired.contains(x)) {
        if (!into_fired.count({y, x})) answer.missing.push_back({x, y});
      }
    }
  }

  // Silent members each miss an edge to another silent member. With two of
  // them that edge is theirs; with more, a threshold-1 round on the subset
  // separates the silent pairs.
  if (silent.size() == 2) {
    answer.missing.push_back({silent[0], silent[1]});
  } else if (silent.size() > 2) {
    sns.reset();
    sns.set_thresholds(subset, 1.0);
    session.write();
    session.ratio(1.0);
    session.record(single_round(sns, subset), 1);
    std::set<Edge> present;
    for (const auto& p : sns.read_potentiated()) present.insert({p.src, p.dst});
    session.read();
    for (std::size_t a = 0; a < silent.size(); ++a) {
      for (std::size_t b = a + 1; b < silent.size(); ++b) {
        const Vertex x = silent[a];
        const Vertex y = silent[b];
        if (!(present.count({x, y}) && present.count({y, x}))) answer.missing.push_back({x, y});
      }
    }
  }
  std::sort(answer.missing.begin(), answer.missing.end());
  return session.finish(std::move(answer));
}

PrimitiveResult<VertexSet> clique_expand(const Graph& g, const VertexSet& clique) {
  constexpr Routine kRoutine = Routine::CliqueExpand;
  require_undirected(g, kRoutine);
  g.require_valid(clique);
  require_nonempty(clique, kRoutine);
  if (!clique_verify(g, clique).answer) {
    throw Error(Errc::NotAClique, "clique_expand: input vertices do not form a clique");
  }

  const auto n = clique.size();
  Session<VertexSet> session(kRoutine);
  Sns sns(g, {static_cast<double>(n), 0}, kStatic);
  // members never decide the answer; K1 keeps a positive threshold
  sns.set_thresholds(clique, static_cast<double>(std::max<std::size_t>(n - 1, 1)));
  session.write();
  session.ratio(static_cast<double>(n));
  const SpikeRaster& raster = session.record(single_round(sns, clique), 1);
  std::vector<Vertex> joiners;
  for (Vertex u : raster.internal_at(1)) {
    if (!clique.contains(u)) joiners.push_back(u);
  }
  return session.finish(VertexSet(std::move(joiners)));
}

}  // namespace spikegraph
