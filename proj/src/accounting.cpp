#include "spikegraph/accounting.hpp"

#include <array>
#include <sstream>
#include <utility>

#include "spikegraph/error.hpp"

namespace spikegraph {

namespace {

constexpr std::array<std::pair<Routine, std::string_view>, 13> kNames{{
    {Routine::NearestNeighbors, "nearest_neighbors"},
    {Routine::FirstFireTimes, "first_fire_times"},
    {Routine::ShortestPathBound, "shortest_path_upper_bound"},
    {Routine::Eccentricity, "eccentricity"},
    {Routine::SubgraphIterative, "subgraph_extract_iterative"},
    {Routine::SubgraphParallel, "subgraph_extract_parallel"},
    {Routine::Neighborhood, "neighborhood_extract"},
    {Routine::TrianglesOnEdge, "triangles_on_edge"},
    {Routine::TrianglesVertexIterative, "triangles_at_vertex_iterative"},
    {Routine::TrianglesVertexClique, "triangles_at_vertex_clique"},
    {Routine::CliqueVerify, "clique_verify"},
    {Routine::CliqueVerifyPlastic, "clique_verify_plastic"},
    {Routine::CliqueExpand, "clique_expand"},
}};

std::int64_t choose2(std::size_t d) { return d < 2 ? 0 : static_cast<std::int64_t>(d * (d - 1) / 2); }

std::string fmt_ratios(const std::vector<double>& r) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
  out << '}';
  return out.str();
}

}  // namespace

std::string_view routine_name(Routine r) {
  for (const auto& [routine, name] : kNames) {
    if (routine == r) return name;
  }
  return "unknown";
}

Routine parse_routine(std::string_view name) {
  for (const auto& [routine, n] : kNames) {
    if (n == name) return routine;
  }
  throw Error(Errc::UnknownRoutine, "unknown routine '" + std::string(name) + "'");
}

const std::vector<Routine>& all_routines() {
  static const std::vector<Routine> routines = [] {
    std::vector<Routine> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return routines;
}

void RunReport::add_ratio(double ratio) {
  if (threshold_weight_ratios.empty() || threshold_weight_ratios.back() != ratio) {
    threshold_weight_ratios.push_back(ratio);
  }
}

CostBounds expected_costs(Routine routine, const CostParams& p) {
  const auto N = static_cast<std::int64_t>(p.vertex_count);
  const auto d = static_cast<std::int64_t>(p.degree);
  const auto n = static_cast<std::int64_t>(p.subset_size);
  CostBounds b{routine, 0, {}, 0, 0};
  switch (routine) {
    case Routine::NearestNeighbors:
      b.mct_max = 1;
      b.threshold_weight_ratios = {1.0};
      b.writes = 1;
      break;
    case Routine::FirstFireTimes:
    case Routine::ShortestPathBound:
    case Routine::Eccentricity:
      b.mct_max = N;
      b.threshold_weight_ratios = {1.0};
      b.writes = 1;
      break;
    case Routine::SubgraphIterative:
      b.mct_max = N + 1;
      b.threshold_weight_ratios = {1.0};
      b.writes = 2;
      break;
    case Routine::SubgraphParallel:
      b.mct_max = 2;
      b.threshold_weight_ratios = {1.0};
      b.reads = 1;
      b.writes = 2;
      break;
    case Routine::Neighborhood:
      // nearest-neighbour phase (1 round) then plastic extraction (2) on the
      // same network after one reconfiguration
      b.mct_max = 3;
      b.threshold_weight_ratios = {1.0};
      b.reads = 1;
      b.writes = 2;
      break;
    case Routine::TrianglesOnEdge:
      b.mct_max = 1;
      b.threshold_weight_ratios = {2.0};
      b.writes = 1;
      break;
    case Routine::TrianglesVertexIterative:
      b.mct_max = d + 1;
      b.threshold_weight_ratios = d >= 1 ? std::vector<double>{1.0, 2.0} : std::vector<double>{1.0};
      b.writes = d + 1;
      break;
    case Routine::TrianglesVertexClique:
      b.mct_max = choose2(p.degree) + 1;
      b.threshold_weight_ratios = d >= 2 ? std::vector<double>{1.0, 2.0} : std::vector<double>{1.0};
      b.writes = choose2(p.degree) + 1;
      break;
    case Routine::CliqueVerify:
      if (n >= 3) {
        b.mct_max = 1;
        b.threshold_weight_ratios = {static_cast<double>(n - 1)};
        b.writes = 1;
      }
      break;
    case Routine::CliqueVerifyPlastic:
      if (n >= 3) {
        b.mct_max = 1;
        b.threshold_weight_ratios = {static_cast<double>(n - 1)};
        b.reads = 1;
        b.writes = 1;
        if (p.deficient_members > 2) {
          // witness phase: one reconfiguration, one round, one readout
          b.mct_max += 1;
          b.threshold_weight_ratios.push_back(1.0);
          b.reads += 1;
          b.writes += 1;
        }
      }
      break;
    case Routine::CliqueExpand:
      b.mct_max = 1;
      b.threshold_weight_ratios = {static_cast<double>(n)};
      b.writes = 1;
      break;
  }
  return b;
}

ReportCheck check_report(const RunReport& actual, const CostBounds& expected) {
  ReportCheck check;
  auto fail = [&](std::string diff) {
    check.pass = false;
    check.diffs.push_back(std::move(diff));
  };
  if (actual.routine != expected.routine) {
    fail("routine: " + std::string(routine_name(actual.routine)) + " vs " +
         std::string(routine_name(expected.routine)));
  }
  if (actual.mct > expected.mct_max) {
    fail("mct: " + std::to_string(actual.mct) + " > bound " + std::to_string(expected.mct_max));
  }
  if (actual.reads != expected.reads) {
    fail("reads: " + std::to_string(actual.reads) + " != " + std::to_string(expected.reads));
  }
  if (actual.writes != expected.writes) {
    fail("writes: " + std::to_string(actual.writes) + " != " + std::to_string(expected.writes));
  }
  if (actual.threshold_weight_ratios != expected.threshold_weight_ratios) {
    fail("ratios: " + fmt_ratios(actual.threshold_weight_ratios) + " != " +
         fmt_ratios(expected.threshold_weight_ratios));
  }
  return check;
}

}  // namespace spikegraph
