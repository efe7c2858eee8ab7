#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spikegraph {

enum class Routine {
  NearestNeighbors,
  FirstFireTimes,
  ShortestPathBound,
  Eccentricity,
  SubgraphIterative,
  SubgraphParallel,
  Neighborhood,
  TrianglesOnEdge,
  TrianglesVertexIterative,
  TrianglesVertexClique,
  CliqueVerify,
  CliqueVerifyPlastic,
  CliqueExpand,
};

std::string_view routine_name(Routine r);
/// Throws UnknownRoutine.
Routine parse_routine(std::string_view name);
const std::vector<Routine>& all_routines();

/// Cost of one primitive invocation.
///
/// `mct` counts fire-to-arrival propagation rounds (the clock figure of the
/// cost table); `engine_ticks` counts raw simulator ticks over all runs.
/// `threshold_weight_ratios` lists the v_th/s_w of the neurons whose response
/// carries the answer, one entry per distinct phase, in phase order.
struct RunReport {
  Routine routine = Routine::NearestNeighbors;
  std::int64_t mct = 0;
  std::int64_t engine_ticks = 0;
  std::vector<double> threshold_weight_ratios;
  std::int64_t reads = 0;
  std::int64_t writes = 0;
  std::int64_t spike_total = 0;
  std::uint32_t delay = 1;

  /// Appends a phase ratio unless it repeats the previous one.
  void add_ratio(double ratio);

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Upper bound on mct; exact reads, writes and ratios.
struct CostBounds {
  Routine routine = Routine::NearestNeighbors;
  std::int64_t mct_max = 0;
  std::vector<double> threshold_weight_ratios;
  std::int64_t reads = 0;
  std::int64_t writes = 0;
};

/// Instance sizes a cost row is instantiated with. Fields a routine does not
/// use are ignored.
struct CostParams {
  std::size_t vertex_count = 0;  // N
  std::size_t edge_count = 0;    // |E|
  std::size_t degree = 0;        // d
  std::size_t subset_size = 0;   // n
  /// Plastic clique verification only: subset members not adjacent to every
  /// other member. Three or more of them require the extra witness round.
  std::size_t deficient_members = 0;
};

CostBounds expected_costs(Routine routine, const CostParams& params);

struct ReportCheck {
  bool pass = true;
  std::vector<std::string> diffs;
};

/// pass iff same routine, mct <= bound, and reads/writes/ratios equal.
ReportCheck check_report(const RunReport& actual, const CostBounds& expected);

}  // namespace spikegraph
