#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "spikegraph/graph.hpp"

namespace spikegraph {

using Tick = std::int64_t;

struct NeuronParams {
  double threshold = 1.0;       // v_th, > 0
  std::uint32_t refractory = 0; // t_R, ticks of suppression after a firing
};

struct SynapseParams {
  double weight = 1.0;          // s_w
  std::uint32_t delay = 1;      // delta, >= 1
  double learning_rate = 0.0;   // alpha; 0 means static
};

enum class FireCause : std::uint8_t { External, Internal };

struct Firing {
  Vertex neuron = 0;
  FireCause cause = FireCause::External;

  friend bool operator==(const Firing&, const Firing&) = default;
};

/// Firings of one tick, sorted by neuron.
struct TickRecord {
  Tick t = 0;
  std::vector<Firing> fired;

  friend bool operator==(const TickRecord&, const TickRecord&) = default;
};

/// Tick-by-tick firing record of one run. Every executed tick has an entry,
/// including silent ones, so size() is the executed tick count.
class SpikeRaster {
 public:
  void append(TickRecord record) { ticks_.push_back(std::move(record)); }

  std::span<const TickRecord> ticks() const { return ticks_; }
  std::size_t size() const { return ticks_.size(); }
  bool empty() const { return ticks_.empty(); }

  /// Firing indicator eta(n, t).
  bool fired(Vertex n, Tick t) const;
  std::optional<FireCause> cause(Vertex n, Tick t) const;
  std::optional<Tick> first_fire(Vertex n) const;
  /// Neurons that fired internally at tick t, ascending.
  std::vector<Vertex> internal_at(Tick t) const;
  std::optional<Tick> last_firing_tick() const;
  std::size_t spike_total() const;

  friend bool operator==(const SpikeRaster&, const SpikeRaster&) = default;

 private:
  const TickRecord* at(Tick t) const;
  std::vector<TickRecord> ticks_;
};

/// External drive schedule. Ticks are offsets from the start of a run.
class StimulusPlan {
 public:
  StimulusPlan() = default;

  StimulusPlan& drive(Tick at, VertexSet neurons);

  /// Neurons driven at offset `at` (empty when none).
  const VertexSet& driven_at(Tick at) const;
  /// True if any drive is scheduled at an offset >= `at`.
  bool has_drives_from(Tick at) const;
  bool empty() const { return drives_.empty(); }
  const std::map<Tick, VertexSet>& drives() const { return drives_; }

 private:
  std::map<Tick, VertexSet> drives_;
};

struct PotentiatedSynapse {
  Vertex src = 0;
  Vertex dst = 0;
  double weight = 0.0;

  friend bool operator==(const PotentiatedSynapse&, const PotentiatedSynapse&) = default;
};

/// Discrete-time spiking neuron system directly mapped from a graph: one
/// neuron per vertex and one synapse per adjacency entry (so two per
/// undirected edge). Synapse indices follow the graph's CSR order.
///
/// A tick t runs, in order:
///   1. deliver spikes due at t; arrivals at refractory neurons are dropped,
///      the rest accumulate into u_i(t);
///   2. fire every non-refractory neuron that is driven (external) or has
///      u_i(t) >= v_th - tolerance (internal);
///   3. enqueue one spike per outgoing synapse of each firing neuron for
///      tick t + delay;
///   4. potentiate every delivered synapse whose target fired at t by alpha;
///   5. clear potentials;
///   6. advance the tick.
/// A neuron that fires at t is refractory for t+1 .. t+t_R.
///
/// Single writer: step/run mutate state.
class Sns {
 public:
  Sns(Graph graph, NeuronParams neuron, SynapseParams synapse);

  const Graph& graph() const { return graph_; }
  std::size_t neuron_count() const { return neurons_.size(); }
  std::size_t synapse_count() const { return weights_.size(); }
  Tick tick() const { return tick_; }

  const NeuronParams& neuron(Vertex n) const;
  const SynapseParams& synapse_params(std::size_t s) const { return synapses_[s]; }
  double weight(std::size_t s) const { return weights_[s]; }
  std::span<const double> weights() const { return weights_; }

  void set_thresholds(const VertexSet& subset, double threshold);
  void set_refractory(const VertexSet& subset, std::uint32_t refractory);

  /// Threshold comparison slack; 0 by default, which is exact for the
  /// integer-valued weights and thresholds used throughout.
  void set_tolerance(double tolerance) { tolerance_ = tolerance; }

  TickRecord step(const VertexSet& driven);

  /// Steps with the plan's drives. With stop_on_quiescence the run halts
  /// before the first tick that has no queued spikes and no remaining drives
  /// (such a tick could not fire anything), and throws MaxTicksExceeded if
  /// that point is not reached within max_ticks. Otherwise exactly max_ticks
  /// ticks execute.
  SpikeRaster run(const StimulusPlan& plan, Tick max_ticks, bool stop_on_quiescence);

  /// Synapses whose current weight exceeds their initial weight.
  std::vector<PotentiatedSynapse> read_potentiated() const;

  /// Clears queued spikes, refractory state and the tick counter and restores
  /// initial weights. Neuron and synapse parameters are kept.
  void reset();

  bool quiescent() const { return queue_.empty(); }
  /// Earliest queued arrival tick, if any.
  std::optional<Tick> next_arrival() const;

 private:
  bool refractory_at(Vertex n, Tick t) const { return t <= refractory_until_[n]; }

  Graph graph_;
  std::vector<NeuronParams> neurons_;
  std::vector<SynapseParams> synapses_;
  std::vector<double> weights_;
  std::map<Tick, std::vector<std::size_t>> queue_;
  std::vector<Tick> refractory_until_;
  Tick tick_ = 0;
  double tolerance_ = 0.0;

  // per-tick scratch
  std::vector<double> potential_;
  std::vector<std::uint8_t> touched_;
  std::vector<std::uint8_t> fired_;
};

}  // namespace spikegraph
