#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "spikegraph/graph.hpp"

namespace spikegraph {

enum class Family { Path, Cycle, Complete, Star, ErdosRenyi };

/// "path", "cycle", "complete", "star" or "er"; InvalidArgument otherwise.
Family parse_family(std::string_view name);
std::string_view family_name(Family f);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Vertex 0 is the centre.
Graph star_graph(std::size_t n);

/// G(n, p) sample, resampled from the same stream until connected. The
/// output depends only on (n, p, seed).
Graph erdos_renyi_connected(std::size_t n, double p, std::uint64_t seed);

Graph generate(Family family, std::size_t n, double p, std::uint64_t seed);

}  // namespace spikegraph
