#include "expdom/experiment.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "expdom/error.hpp"
#include "expdom/graph_io.hpp"
#include "expdom/named_graphs.hpp"
#include "expdom/parallel.hpp"
#include "expdom/tree_enumeration.hpp"

namespace expdom {

namespace {

const std::vector<std::string> kSolvers{"exact", "tree", "heuristic", "provided"};

const std::vector<std::string> kBoundNames{"diameter-lower", "linear-upper", "subcubic-upper",
                                           "tree-lower",     "log-lower",    "triple-lower"};

std::vector<std::string> column_names() {
  std::vector<std::string> cols{"instance", "kind",   "solver",   "status",   "n",
                                "m",        "girth",  "diameter", "connected", "subcubic",
                                "tree",     "gamma_lo", "gamma_hi", "gamma_exact", "verified"};
  for (const auto& b : kBoundNames) {
    for (const char* field : {"value", "applicable", "satisfied", "tight"}) {
      cols.push_back(b + "_" + field);
    }
  }
  return cols;
}

std::string optional_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "inf"; }
std::string flag(bool b) { return b ? "true" : "false"; }

template <typename T>
T param(const Json& entry, const char* key) {
  if (!entry.contains(key)) {
    throw Error(ErrorKind::InvalidArgument, std::string("instance entry needs '") + key + "'");
  }
  return entry.at(key).get<T>();
}

Graph graph_from_entry(const Json& entry) {
  if (entry.contains("path")) return read_graph_file(param<std::string>(entry, "path"));
  return named_graph(param<std::string>(entry, "name"));
}

struct Row {
  std::vector<std::string> cells;
  Json json;
};

Row make_row(const ExperimentInstance& inst, const std::string& solver, const std::string& status,
             const GraphMetrics& metrics, const std::optional<BoundsReport>& report, bool verified) {
  Row row;
  const auto& g = inst.graph;
  row.cells = {inst.name,
               inst.kind,
               solver,
               status,
               std::to_string(g.order()),
               std::to_string(g.size()),
               optional_text(metrics.girth),
               optional_text(metrics.connected ? metrics.diameter : std::nullopt),
               flag(metrics.connected),
               flag(g.is_subcubic()),
               flag(g.order() > 0 && is_tree(g))};
  row.json = {{"instance", inst.name}, {"kind", inst.kind}, {"solver", solver}, {"status", status},
              {"n", g.order()}, {"m", g.size()}, {"girth", metrics.girth ? Json(*metrics.girth) : Json(nullptr)}};
  if (report) {
    row.cells.push_back(std::to_string(report->gamma.lo));
    row.cells.push_back(std::to_string(report->gamma.hi));
    row.cells.push_back(flag(report->gamma.is_exact()));
    row.cells.push_back(flag(verified));
    for (const auto& name : kBoundNames) {
      const auto* b = report->find(name);
      row.cells.push_back(rational_string(b->value));
      row.cells.push_back(flag(b->applicable));
      row.cells.push_back(flag(b->satisfied));
      row.cells.push_back(flag(b->tight));
    }
    row.json["verified"] = verified;
    row.json["report"] = to_json(*report);
  } else {
    row.cells.resize(column_names().size());
  }
  return row;
}

Row solve_row(const ExperimentInstance& inst, const std::string& solver, const Json& config,
              const std::optional<std::string>& dump_dir) {
  const auto& g = inst.graph;
  const auto metrics = graph_metrics(g);
  const bool tree = g.order() > 0 && is_tree(g);
  std::optional<GammaValue> gamma;
  VertexSet witness;
  std::string status = "ok";
  const std::size_t floor_value = g.order() > 0 ? 1 : 0;

  if (solver == "exact") {
    if (g.order() <= kExactGuard) {
      const auto r = gamma_e_exact(g);
      gamma = GammaValue::exact(r.value);
      witness = r.witness;
    }
  } else if (solver == "tree") {
    if (tree && g.is_subcubic()) {
      const auto r = gamma_e_tree(g).result;
      gamma = GammaValue::exact(r.value);
      witness = r.witness;
    }
  } else if (solver == "heuristic") {
    if (g.is_subcubic() && g.order() > 0) {
      const auto seed = config.value("seed", std::uint64_t{0});
      const auto trials = config.value("trials", std::size_t{100});
      const auto p = config.value("p", 1.0 / 3.0);
      const auto r = randomized_expdom(g, p, seed, trials, 1);
      gamma = GammaValue{floor_value, r.min_size};
      witness = r.best_set;
    }
  } else if (solver == "provided") {
    if (inst.provided) {
      gamma = GammaValue{floor_value, inst.provided->size()};
      witness = *inst.provided;
    }
  }
  if (!gamma) return make_row(inst, solver, "skipped", metrics, std::nullopt, false);

  const bool verified = is_exponential_dominating(g, witness).ok;
  if (!verified) status = "unverified";
  const auto report = bounds_report(g, *gamma);
  if (gamma->is_exact()) {
    for (const auto& b : report.bounds) {
      if (!b.applicable || b.satisfied) continue;
      if (dump_dir) {
        std::filesystem::create_directories(*dump_dir);
        std::ofstream out(std::filesystem::path(*dump_dir) / "counterexample.json");
        out << Json{{"instance", inst.name}, {"solver", solver}, {"graph", to_json(g)},
                    {"witness", to_json(witness)}, {"report", to_json(report)}}
                   .dump(2)
            << "\n";
      }
      throw Error(ErrorKind::BoundViolation,
                  "bound " + b.name + " violated on instance " + inst.name + " by solver " + solver);
    }
  }
  return make_row(inst, solver, status, metrics, report, verified);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<ExperimentInstance> expand_instances(const Json& config) {
  std::vector<ExperimentInstance> out;
  if (!config.contains("instances")) return out;
  for (const auto& entry : config.at("instances")) {
    const auto kind = param<std::string>(entry, "kind");
    if (kind == "file") {
      const auto path = param<std::string>(entry, "path");
      out.push_back({"file:" + path, kind, read_graph_file(path), std::nullopt});
    } else if (kind == "figure2") {
      const auto k = param<std::size_t>(entry, "k");
      out.push_back({"figure2(k=" + std::to_string(k) + ")", kind, build_figure2(k), std::nullopt});
    } else if (kind == "extremal-ops") {
      const auto trees = generate_extremal_candidates(param<std::size_t>(entry, "max_n"));
      for (std::size_t i = 0; i < trees.size(); ++i) {
        out.push_back({"extremal-ops#" + std::to_string(i) + "(n=" + std::to_string(trees[i].order()) + ")",
                       kind, trees[i], std::nullopt});
      }
    } else if (kind == "named") {
      const auto name = param<std::string>(entry, "name");
      out.push_back({"named:" + name, kind, named_graph(name), std::nullopt});
    } else if (kind == "gadget") {
      const auto map = build_gadget(graph_from_entry(entry));
      const auto label = entry.contains("path") ? entry.at("path").get<std::string>()
                                                : entry.at("name").get<std::string>();
      out.push_back({"gadget:" + label, kind, map.gadget,
                     cover_to_expdom(map, minimum_vertex_cover(map.source))});
    } else if (kind == "degree5") {
      const auto h = param<std::size_t>(entry, "h");
      auto inst = build_degree5_instance(h);
      out.push_back({"degree5(h=" + std::to_string(h) + ")", kind, inst.tree.graph(), inst.set});
    } else if (kind == "trees") {
      const auto lo = entry.value("min_n", std::size_t{1});
      const auto hi = param<std::size_t>(entry, "max_n");
      for (std::size_t n = lo; n <= hi; ++n) {
        const auto trees = enumerate_subcubic_trees(n);
        for (std::size_t i = 0; i < trees.size(); ++i) {
          out.push_back({"tree(n=" + std::to_string(n) + ")#" + std::to_string(i), kind, trees[i], std::nullopt});
        }
      }
    } else {
      throw Error(ErrorKind::UnknownName, "unknown instance kind '" + kind + "'");
    }
  }
  return out;
}

std::string ExperimentOutput::csv() const {
  std::ostringstream out;
  out << kCsvVersionLine << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_escape(columns[i]);
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
    out << "\n";
  }
  return out.str();
}

ExperimentOutput run_experiment(const Json& config, std::size_t threads,
                                const std::optional<std::string>& dump_dir) {
  std::vector<std::string> solvers;
  if (config.contains("solvers")) {
    for (const auto& s : config.at("solvers")) {
      const auto name = s.get<std::string>();
      if (std::find(kSolvers.begin(), kSolvers.end(), name) == kSolvers.end()) {
        throw Error(ErrorKind::UnknownName, "unknown solver '" + name + "'");
      }
      solvers.push_back(name);
    }
  }
  const auto instances = expand_instances(config);

  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (std::size_t s = 0; s < solvers.size(); ++s) jobs.emplace_back(i, s);
  }
  std::vector<Row> rows(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t j) {
    rows[j] = solve_row(instances[jobs[j].first], solvers[jobs[j].second], config, dump_dir);
  });

  ExperimentOutput out;
  out.columns = column_names();
  out.json = {{"schema", "expdom-experiment v1"}, {"columns", out.columns}, {"rows", Json::array()}};
  for (auto& row : rows) {
    out.rows.push_back(std::move(row.cells));
    out.json["rows"].push_back(std::move(row.json));
  }
  return out;
}

ExperimentOutput run_experiment_to(const Json& config, const std::string& out_dir, std::size_t threads) {
  std::filesystem::create_directories(out_dir);
  auto out = run_experiment(config, threads, out_dir);
  const auto dir = std::filesystem::path(out_dir);
  std::ofstream(dir / "results.csv") << out.csv();
  std::ofstream(dir / "results.json") << out.json.dump(2) << "\n";
  return out;
}

}  // namespace expdom
