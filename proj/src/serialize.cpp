#include "spikegraph/serialize.hpp"

namespace spikegraph {

Json raster_to_json(const SpikeRaster& raster, const VertexNamer& name) {
  Json ticks = Json::array();
  for (const TickRecord& rec : raster.ticks()) {
    Json fired = Json::array();
    for (const Firing& f : rec.fired) {
      fired.push_back({{"n", name ? name(f.neuron) : Json(f.neuron)},
                       {"cause", f.cause == FireCause::External ? "external" : "internal"}});
    }
    ticks.push_back({{"t", rec.t}, {"fired", std::move(fired)}});
  }
  return Json{{"ticks", std::move(ticks)}};
}

Json report_to_json(const RunReport& report) {
  return Json{{"routine", std::string(routine_name(report.routine))},
              {"mct", report.mct},
              {"engine_ticks", report.engine_ticks},
              {"threshold_weight_ratios", report.threshold_weight_ratios},
              {"reads", report.reads},
              {"writes", report.writes},
              {"spike_total", report.spike_total},
              {"delay", report.delay}};
}

Json bounds_to_json(const CostBounds& bounds) {
  return Json{{"routine", std::string(routine_name(bounds.routine))},
              {"mct_max", bounds.mct_max},
              {"threshold_weight_ratios", bounds.threshold_weight_ratios},
              {"reads", bounds.reads},
              {"writes", bounds.writes}};
}

}  // namespace spikegraph
