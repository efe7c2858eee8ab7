#include "spikegraph/sns.hpp"

#include <algorithm>
#include <string>

#include "spikegraph/error.hpp"

namespace spikegraph {

// ---------------------------------------------------------------------------
// SpikeRaster

const TickRecord* SpikeRaster::at(Tick t) const {
  const auto it = std::lower_bound(ticks_.begin(), ticks_.end(), t,
                                   [](const TickRecord& r, Tick v) { return r.t < v; });
  if (it == ticks_.end() || it->t != t) return nullptr;
  return &*it;
}

std::optional<FireCause> SpikeRaster::cause(Vertex n, Tick t) const {
  const TickRecord* rec = at(t);
  if (rec == nullptr) return std::nullopt;
  const auto it = std::lower_bound(rec->fired.begin(), rec->fired.end(), n,
                                   [](const Firing& f, Vertex v) { return f.neuron < v; });
  if (it == rec->fired.end() || it->neuron != n) return std::nullopt;
  return it->cause;
}

bool SpikeRaster::fired(Vertex n, Tick t) const { return cause(n, t).has_value(); }

std::optional<Tick> SpikeRaster::first_fire(Vertex n) const {
  for (const TickRecord& rec : ticks_) {
    for (const Firing& f : rec.fired) {
      if (f.neuron == n) return rec.t;
    }
  }
  return std::nullopt;
}

std::vector<Vertex> SpikeRaster::internal_at(Tick t) const {
  std::vector<Vertex> out;
  if (const TickRecord* rec = at(t)) {
    for (const Firing& f : rec->fired) {
      if (f.cause == FireCause::Internal) out.push_back(f.neuron);
    }
  }
  return out;
}

std::optional<Tick> SpikeRaster::last_firing_tick() const {
  for (auto it = ticks_.rbegin(); it != ticks_.rend(); ++it) {
    if (!it->fired.empty()) return it->t;
  }
  return std::nullopt;
}

std::size_t SpikeRaster::spike_total() const {
  std::size_t total = 0;
  for (const TickRecord& rec : ticks_) total += rec.fired.size();
  return total;
}

// ---------------------------------------------------------------------------
// StimulusPlan

StimulusPlan& StimulusPlan::drive(Tick at, VertexSet neurons) {
  if (at < 0) throw Error(Errc::InvalidArgument, "stimulus tick must be nonnegative");
  if (neurons.empty()) return *this;
  auto& slot = drives_[at];
  std::vector<Vertex> merged(slot.begin(), slot.end());
  for (Vertex v : neurons) {
    if (!slot.contains(v)) merged.push_back(v);
  }
  slot = VertexSet(std::move(merged));
  return *this;
}

const VertexSet& StimulusPlan::driven_at(Tick at) const {
  static const VertexSet kNone;
  const auto it = drives_.find(at);
  return it == drives_.end() ? kNone : it->second;
}

bool StimulusPlan::has_drives_from(Tick at) const {
  return drives_.lower_bound(at) != drives_.end();
}

// ---------------------------------------------------------------------------
// Sns

Sns::Sns(Graph graph, NeuronParams neuron, SynapseParams synapse)
    : graph_(std::move(graph)),
      neurons_(graph_.vertex_count(), neuron),
      synapses_(graph_.arc_count(), synapse),
      weights_(graph_.arc_count(), synapse.weight),
      refractory_until_(graph_.vertex_count(), -1),
      potential_(graph_.vertex_count(), 0.0),
      touched_(graph_.vertex_count(), 0),
      fired_(graph_.vertex_count(), 0) {
  if (!(neuron.threshold > 0.0)) throw Error(Errc::InvalidArgument, "threshold must be positive");
  if (synapse.delay < 1) throw Error(Errc::InvalidArgument, "synaptic delay must be at least 1");
  if (synapse.learning_rate < 0.0) throw Error(Errc::InvalidArgument, "learning rate must be nonnegative");
}

const NeuronParams& Sns::neuron(Vertex n) const {
  graph_.require_valid(n);
  return neurons_[n];
}

void Sns::set_thresholds(const VertexSet& subset, double threshold) {
  graph_.require_valid(subset);
  if (!(threshold > 0.0)) throw Error(Errc::InvalidArgument, "threshold must be positive");
  for (Vertex n : subset) neurons_[n].threshold = threshold;
}

void Sns::set_refractory(const VertexSet& subset, std::uint32_t refractory) {
  graph_.require_valid(subset);
  for (Vertex n : subset) neurons_[n].refractory = refractory;
}

std::optional<Tick> Sns::next_arrival() const {
  if (queue_.empty()) return std::nullopt;
  return queue_.begin()->first;
}

TickRecord Sns::step(const VertexSet& driven) {
  graph_.require_valid(driven);
  const Tick t = tick_;

  // (1) delivery
  std::vector<std::size_t> delivered;
  std::vector<Vertex> touched;
  if (auto it = queue_.find(t); it != queue_.end()) {
    delivered.reserve(it->second.size());
    for (std::size_t s : it->second) {
      const Vertex dst = graph_.arc_target(s);
      if (refractory_at(dst, t)) continue;
      potential_[dst] += weights_[s];
      if (!touched_[dst]) {
        touched_[dst] = 1;
        touched.push_back(dst);
      }
      delivered.push_back(s);
    }
    queue_.erase(it);
  }

  // (2) firing
  TickRecord record{t, {}};
  for (Vertex n : driven) {
    if (refractory_at(n, t)) continue;
    fired_[n] = 1;
    record.fired.push_back({n, FireCause::External});
  }
  for (Vertex n : touched) {
    if (fired_[n]) continue;
    if (potential_[n] >= neurons_[n].threshold - tolerance_) {
      fired_[n] = 1;
      record.fired.push_back({n, FireCause::Internal});
    }
  }
  std::sort(record.fired.begin(), record.fired.end(),
            [](const Firing& a, const Firing& b) { return a.neuron < b.neuron; });

  // (3) emission
  for (const Firing& f : record.fired) {
    for (std::size_t s = graph_.arc_begin(f.neuron); s < graph_.arc_end(f.neuron); ++s) {
      queue_[t + synapses_[s].delay].push_back(s);
    }
  }

  // (4) one-step STDP on same-tick (arrival, postsynaptic fire) pairs
  for (std::size_t s : delivered) {
    if (fired_[graph_.arc_target(s)]) weights_[s] += synapses_[s].learning_rate;
  }

  // (5) reset
  for (Vertex n : touched) {
    potential_[n] = 0.0;
    touched_[n] = 0;
  }
  for (const Firing& f : record.fired) {
    fired_[f.neuron] = 0;
    refractory_until_[f.neuron] = t + neurons_[f.neuron].refractory;
  }

  // (6)
  ++tick_;
  return record;
}

SpikeRaster Sns::run(const StimulusPlan& plan, Tick max_ticks, bool stop_on_quiescence) {
  if (max_ticks < 1) throw Error(Errc::InvalidArgument, "max_ticks must be at least 1");
  for (const auto& [at, set] : plan.drives()) graph_.require_valid(set);

  SpikeRaster raster;
  for (Tick k = 0; k < max_ticks; ++k) {
    if (stop_on_quiescence && queue_.empty() && !plan.has_drives_from(k)) return raster;
    raster.append(step(plan.driven_at(k)));
  }
  if (stop_on_quiescence && !(queue_.empty() && !plan.has_drives_from(max_ticks))) {
    throw Error(Errc::MaxTicksExceeded,
                "no quiescence within " + std::to_string(max_ticks) + " ticks");
  }
  return raster;
}

std::vector<PotentiatedSynapse> Sns::read_potentiated() const {
  std::vector<PotentiatedSynapse> out;
  for (std::size_t s = 0; s < weights_.size(); ++s) {
    if (weights_[s] > synapses_[s].weight) {
      out.push_back({graph_.arc_source(s), graph_.arc_target(s), weights_[s]});
    }
  }
  return out;
}

void Sns::reset() {
  queue_.clear();
  std::fill(refractory_until_.begin(), refractory_until_.end(), Tick{-1});
  for (std::size_t s = 0; s < weights_.size(); ++s) weights_[s] = synapses_[s].weight;
  tick_ = 0;
}

}  // namespace spikegraph
