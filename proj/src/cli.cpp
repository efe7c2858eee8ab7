#include "spikegraph/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "spikegraph/accounting.hpp"
#include "spikegraph/error.hpp"
#include "spikegraph/generators.hpp"
#include "spikegraph/graph.hpp"
#include "spikegraph/oracle.hpp"
#include "spikegraph/primitives.hpp"
#include "spikegraph/serialize.hpp"

namespace spikegraph::cli {

namespace {

struct Options {
  // shared by graph subcommands
  std::string graph_path;
  bool directed = false;
  bool oracle = false;
  bool raster = false;
  std::optional<std::int64_t> max_ticks;

  Label vertex = 0;
  std::vector<Label> vertices;
  std::vector<Label> edge;
  std::string subgraph_method;
  std::string triangle_method;
  std::optional<Label> to;
  std::optional<std::int64_t> within;
  bool plastic = false;

  // gen
  std::string family;
  std::size_t n = 0;
  double p = 0.2;
  std::uint64_t seed = 1;
  std::string output;

  // costs
  std::string routine;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t degree = 0;
  std::size_t subset_size = 0;
  std::size_t deficient = 0;
};

Graph load_graph(const Options& o) {
  std::ifstream in(o.graph_path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open graph file '" + o.graph_path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_edge_list(text.str(), o.directed);
}

Vertex resolve(const Graph& g, Label label) {
  const auto v = g.find_label(label);
  if (!v) throw Error(Errc::UnknownVertex, "unknown vertex label " + std::to_string(label));
  return *v;
}

VertexSet resolve(const Graph& g, const std::vector<Label>& labels) {
  std::vector<Vertex> out;
  out.reserve(labels.size());
  for (Label l : labels) out.push_back(resolve(g, l));
  return VertexSet(std::move(out));
}

// JSON views use external labels.
Json labels_json(const Graph& g, const VertexSet& set) {
  std::vector<Label> out;
  for (Vertex v : set) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

Json edges_json(const Graph& g, const EdgeSet& edges) {
  std::vector<std::pair<Label, Label>> out;
  for (const Edge& e : edges) {
    Label a = g.label(e.u);
    Label b = g.label(e.v);
    if (!g.directed() && a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  Json arr = Json::array();
  for (const auto& [a, b] : out) arr.push_back({a, b});
  return arr;
}

Json distances_json(const Graph& g, const DistanceMap& dist) {
  std::vector<std::pair<Label, std::int64_t>> rows;
  for (const auto& [v, d] : dist) rows.emplace_back(g.label(v), d);
  std::sort(rows.begin(), rows.end());
  Json obj = Json::object();
  for (const auto& [l, d] : rows) obj[std::to_string(l)] = d;
  return obj;
}

Json triangles_json(const Graph& g, const std::vector<TriangleTuple>& tuples) {
  std::vector<std::array<Label, 3>> rows;
  for (const auto& t : tuples) {
    std::array<Label, 3> r{g.label(t.a), g.label(t.b), g.label(t.c)};
    std::sort(r.begin(), r.end());
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end());
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(r);
  return arr;
}

struct Outcome {
  Json answer;
  Json oracle;
  bool has_oracle = false;
};

template <class T>
Json emit(const Graph& g, const Options& o, const PrimitiveResult<T>& result, Outcome outcome,
          std::ostream& err, bool& mismatch) {
  Json doc;
  doc["answer"] = std::move(outcome.answer);
  doc["report"] = report_to_json(result.report);
  if (o.oracle) {
    const bool match = doc["answer"] == outcome.oracle;
    doc["oracle"] = std::move(outcome.oracle);
    doc["oracle_match"] = match;
    mismatch = !match;
  }
  if (o.raster) {
    Json rasters = Json::array();
    const VertexNamer name = [&g](Vertex v) { return Json(g.label(v)); };
    for (const auto& r : result.rasters) rasters.push_back(raster_to_json(r, name));
    doc["rasters"] = std::move(rasters);
  }
  const auto& rep = result.report;
  err << routine_name(rep.routine) << ": mct " << rep.mct << ", writes " << rep.writes << ", reads "
      << rep.reads << ", spikes " << rep.spike_total << '\n';
  return doc;
}

void add_graph_options(CLI::App* sub, Options& o) {
  sub->add_option("-g,--graph", o.graph_path, "Edge-list file")->required();
  sub->add_flag("--directed", o.directed, "Read the edge list as directed arcs");
  sub->add_flag("--oracle", o.oracle, "Cross-check against the brute-force oracle");
  sub->add_flag("--raster", o.raster, "Include spike rasters in the output");
  sub->add_option("--max-ticks", o.max_ticks, "Tick budget for propagation runs")->check(CLI::PositiveNumber);
}

int dispatch(CLI::App& app, const Options& o, std::ostream& out, std::ostream& err) {
  const auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  if (name == "gen") {
    const Graph g = generate(parse_family(o.family), o.n, o.p, o.seed);
    const std::string text = serialize_edge_list(g);
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) throw Error(Errc::InvalidArgument, "cannot write '" + o.output + "'");
      file << text;
      out << Json{{"family", std::string(family_name(parse_family(o.family)))},
                  {"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"path", o.output}}.dump()
          << '\n';
    }
    return kExitOk;
  }

  if (name == "costs") {
    CostParams params{o.vertex_count, o.edge_count, o.degree, o.subset_size, o.deficient};
    out << bounds_to_json(expected_costs(parse_routine(o.routine), params)).dump() << '\n';
    return kExitOk;
  }

  const Graph g = load_graph(o);
  bool mismatch = false;
  Json doc;

  if (name == "neighbors") {
    const Vertex v = resolve(g, o.vertex);
    auto r = nearest_neighbors(g, v);
    Outcome oc{labels_json(g, r.answer), o.oracle ? labels_json(g, oracle::adjacency(g, v)) : Json(), o.oracle};
    doc = emit(g, o, r, std::move(oc), err, mismatch);
  } else if (name == "distances") {
    const Vertex v = resolve(g, o.vertex);
    if (o.to) {
      if (!o.within) throw Error(Errc::InvalidArgument, "--to needs --within");
      const Vertex t = resolve(g, *o.to);
      auto r = shortest_path_upper_bound(g, v, t, *o.within, o.max_ticks);
      Json expect;
      if (o.oracle) {
        const auto dist = oracle::bfs_distances(g, v);
        const auto it = dist.find(t);
        expect = it != dist.end() && it->second <= *o.within;
      }
      doc = emit(g, o, r, Outcome{r.answer, expect, o.oracle}, err, mismatch);
    } else {
      auto r = first_fire_times(g, v, o.max_ticks);
      Outcome oc{distances_json(g, r.answer), o.oracle ? distances_json(g, oracle::bfs_distances(g, v)) : Json(),
                 o.oracle};
      doc = emit(g, o, r, std::move(oc), err, mismatch);
    }
  } else if (name == "eccentricity") {
    const Vertex v = resolve(g, o.vertex);
    auto r = eccentricity(g, v, o.max_ticks);
    Json expect;
    if (o.oracle) {
      std::int64_t ecc = 0;
      for (const auto& [u, d] : oracle::bfs_distances(g, v)) ecc = std::max(ecc, d);
      expect = ecc;
    }
    doc = emit(g, o, r, Outcome{r.answer, expect, o.oracle}, err, mismatch);
  } else if (name == "subgraph") {
    const VertexSet subset = resolve(g, o.vertices);
    auto r = o.subgraph_method == "iterative" ? subgraph_extract_iterative(g, subset) : subgraph_extract_parallel(g, subset);
    Outcome oc{edges_json(g, r.answer), o.oracle ? edges_json(g, oracle::induced_edges(g, subset)) : Json(),
               o.oracle};
    doc = emit(g, o, r, std::move(oc), err, mismatch);
  } else if (name == "neighborhood") {
    const Vertex v = resolve(g, o.vertex);
    auto r = neighborhood_extract(g, v);
    Json answer{{"vertices", labels_json(g, r.answer.vertices)}, {"edges", edges_json(g, r.answer.edges)}};
    Json expect;
    if (o.oracle) {
      const VertexSet adj = oracle::adjacency(g, v);
      std::vector<Vertex> members(adj.begin(), adj.end());
      members.push_back(v);
      const VertexSet set(std::move(members));
      expect = Json{{"vertices", labels_json(g, set)}, {"edges", edges_json(g, oracle::induced_edges(g, set))}};
    }
    doc = emit(g, o, r, Outcome{std::move(answer), std::move(expect), o.oracle}, err, mismatch);
  } else if (name == "triangles") {
    if (!o.edge.empty()) {
      const Vertex i = resolve(g, o.edge[0]);
      const Vertex j = resolve(g, o.edge[1]);
      auto r = triangles_on_edge(g, i, j);
      Json answer{{"count", r.answer.count}, {"apexes", labels_json(g, r.answer.apexes)}};
      Json expect;
      if (o.oracle) {
        const auto apexes = oracle::triangle_apexes(g, i, j);
        expect = Json{{"count", apexes.size()}, {"apexes", labels_json(g, apexes)}};
      }
      doc = emit(g, o, r, Outcome{std::move(answer), std::move(expect), o.oracle}, err, mismatch);
    } else {
      const Vertex v = resolve(g, o.vertex);
      auto r = o.triangle_method == "clique" ? triangles_at_vertex_clique(g, v) : triangles_at_vertex_iterative(g, v);
      Json answer{{"count", r.answer.count}, {"triangles", triangles_json(g, r.answer.tuples)}};
      Json expect;
      if (o.oracle) {
        const auto tc = oracle::triangle_count_vertex(g, v);
        expect = Json{{"count", tc.count}, {"triangles", triangles_json(g, tc.tuples)}};
      }
      doc = emit(g, o, r, Outcome{std::move(answer), std::move(expect), o.oracle}, err, mismatch);
    }
  } else if (name == "clique-verify") {
    const VertexSet subset = resolve(g, o.vertices);
    if (o.plastic) {
      auto r = clique_verify_plastic(g, subset);
      Json answer{{"is_clique", r.answer.is_clique}, {"missing", edges_json(g, r.answer.missing)}};
      Json expect;
      if (o.oracle) {
        expect = Json{{"is_clique", oracle::is_clique(g, subset)},
                      {"missing", edges_json(g, oracle::missing_edges(g, subset))}};
      }
      doc = emit(g, o, r, Outcome{std::move(answer), std::move(expect), o.oracle}, err, mismatch);
    } else {
      auto r = clique_verify(g, subset);
      doc = emit(g, o, r, Outcome{r.answer, o.oracle ? Json(oracle::is_clique(g, subset)) : Json(), o.oracle}, err,
                 mismatch);
    }
  } else if (name == "clique-expand") {
    const VertexSet clique = resolve(g, o.vertices);
    auto r = clique_expand(g, clique);
    Outcome oc{labels_json(g, r.answer), o.oracle ? labels_json(g, oracle::common_neighbors(g, clique)) : Json(),
               o.oracle};
    doc = emit(g, o, r, std::move(oc), err, mismatch);
  }

  out << doc.dump() << '\n';
  if (mismatch) {
    err << name << ": primitive and oracle disagree\n";
    return kExitOracleMismatch;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Graph primitives on a simulated spiking neuron system", "spikegraph"};
  app.require_subcommand(1);

  auto* neighbors = app.add_subcommand("neighbors", "Nearest neighbours of a vertex");
  add_graph_options(neighbors, o);
  neighbors->add_option("-v,--vertex", o.vertex, "Vertex label")->required();

  auto* distances = app.add_subcommand("distances", "First-fire times (hop distances) from a vertex");
  add_graph_options(distances, o);
  distances->add_option("-v,--vertex", o.vertex, "Source vertex label")->required();
  distances->add_option("--to", o.to, "Target label: answer whether it fires within --within ticks");
  distances->add_option("-r,--within", o.within, "Tick bound for --to")->check(CLI::NonNegativeNumber);

  auto* ecc = app.add_subcommand("eccentricity", "Eccentricity of a vertex");
  add_graph_options(ecc, o);
  ecc->add_option("-v,--vertex", o.vertex, "Vertex label")->required();

  auto* subgraph = app.add_subcommand("subgraph", "Edges induced by a vertex subset");
  add_graph_options(subgraph, o);
  subgraph->add_option("--vertices", o.vertices, "Comma-separated labels")->required()->delimiter(',');
  subgraph->add_option("--method", o.subgraph_method, "iterative | parallel")
      ->default_val("parallel")
      ->check(CLI::IsMember({"iterative", "parallel"}));

  auto* neighborhood = app.add_subcommand("neighborhood", "Neighbourhood subgraph of a vertex");
  add_graph_options(neighborhood, o);
  neighborhood->add_option("-v,--vertex", o.vertex, "Vertex label")->required();

  auto* triangles = app.add_subcommand("triangles", "Triangles at a vertex or on an edge");
  add_graph_options(triangles, o);
  auto* tri_vertex = triangles->add_option("-v,--vertex", o.vertex, "Vertex label");
  auto* tri_edge = triangles->add_option("--edge", o.edge, "Edge as i,j")->delimiter(',')->expected(2);
  tri_vertex->excludes(tri_edge);
  triangles->add_option("--method", o.triangle_method, "iterative | clique (vertex mode)")
      ->default_val("iterative")
      ->check(CLI::IsMember({"iterative", "clique"}));

  auto* cverify = app.add_subcommand("clique-verify", "Check whether a vertex subset is a clique");
  add_graph_options(cverify, o);
  cverify->add_option("--vertices", o.vertices, "Comma-separated labels")->required()->delimiter(',');
  cverify->add_flag("--plastic", o.plastic, "Plastic variant that also reports missing edges");

  auto* cexpand = app.add_subcommand("clique-expand", "Vertices that extend a clique by one");
  add_graph_options(cexpand, o);
  cexpand->add_option("--vertices", o.vertices, "Comma-separated clique labels")->required()->delimiter(',');

  auto* gen = app.add_subcommand("gen", "Generate an edge-list graph");
  gen->add_option("family", o.family, "path | cycle | complete | star | er")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "er"}));
  gen->add_option("-n", o.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("-p", o.p, "Edge probability (er)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", o.seed, "Random seed (er)");
  gen->add_option("-o,--output", o.output, "Output file (default: stdout)");

  auto* costs = app.add_subcommand("costs", "Expected cost bounds of a routine");
  costs->add_option("--routine", o.routine, "Routine name, e.g. nearest_neighbors")->required();
  costs->add_option("--vertex-count", o.vertex_count, "N");
  costs->add_option("--edge-count", o.edge_count, "|E|");
  costs->add_option("--degree", o.degree, "d");
  costs->add_option("--subset-size", o.subset_size, "n");
  costs->add_option("--deficient", o.deficient, "Subset members missing an edge (plastic clique check)");

  // CLI11 consumes its argument vector from the back.
  std::vector<std::string> reversed;
  if (args.size() > 1) reversed.assign(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (triangles->parsed() && o.edge.empty() && tri_vertex->count() == 0) {
    err << "triangles: one of --vertex or --edge is required\n";
    return kExitUsage;
  }

  try {
    return dispatch(app, o, out, err);
  } catch (const Error& e) {
    err << app.get_subcommands().front()->get_name() << ": " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace spikegraph::cli
