#pragma once

#include <functional>

#include <json.hpp>

#include "spikegraph/accounting.hpp"
#include "spikegraph/sns.hpp"

namespace spikegraph {

using Json = nlohmann::ordered_json;

/// Maps an internal vertex index to the id printed in JSON output.
using VertexNamer = std::function<Json(Vertex)>;

/// {"ticks":[{"t":0,"fired":[{"n":3,"cause":"external"}]}, ...]}
Json raster_to_json(const SpikeRaster& raster, const VertexNamer& name = {});
Json report_to_json(const RunReport& report);
Json bounds_to_json(const CostBounds& bounds);

}  // namespace spikegraph
