#include "expdom/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "expdom/error.hpp"
#include "expdom/experiment.hpp"
#include "expdom/graph_io.hpp"
#include "expdom/named_graphs.hpp"
#include "expdom/parallel.hpp"
#include "expdom/tree_enumeration.hpp"

namespace expdom {

namespace {

Graph load_graph(const std::string& spec) {
  if (spec.rfind("named:", 0) == 0) return named_graph(spec.substr(6));
  return read_graph_file(spec);
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto value = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

std::set<ReductionRule> parse_rules(const std::string& text) {
  std::set<ReductionRule> rules;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) rules.insert(parse_rule(item));
  return rules;
}

GraphFormat graph_format(const std::string& name) {
  return name == "graph6" ? GraphFormat::Graph6 : GraphFormat::Edge;
}

void emit_graphs(std::ostream& out, const std::vector<Graph>& graphs, const std::string& format) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& g : graphs) arr.push_back(to_json(g));
    out << arr.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (format == "graph6") {
      out << emit_graph(graphs[i], GraphFormat::Graph6) << "\n";
    } else {
      if (graphs.size() > 1) out << (i ? "\n" : "") << "# graph " << i << "\n";
      out << emit_graph(graphs[i], GraphFormat::Edge) << "\n";
    }
  }
}

// Primary output of `construct`: the graph in the requested format, the sidecar
// either embedded (json) or written to --sidecar.
void emit_construction(std::ostream& out, const Graph& g, Json sidecar, const std::string& format,
                       const std::string& sidecar_path) {
  if (format == "json") {
    out << Json{{"graph", to_json(g)}, {"sidecar", sidecar}}.dump(2) << "\n";
  } else {
    out << emit_graph(g, graph_format(format)) << "\n";
  }
  if (!sidecar_path.empty()) {
    std::ofstream file(sidecar_path);
    if (!file) throw Error(ErrorKind::Io, "cannot write sidecar " + sidecar_path);
    file << sidecar.dump(2) << "\n";
  }
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponential domination in subcubic graphs", "expdom"};
  app.require_subcommand(1);
  std::optional<std::size_t> threads_opt;
  app.add_option("--threads", threads_opt, "worker threads (default: EXPDOM_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  // weight
  auto* weight = app.add_subcommand("weight", "exact weights and domination check for a set");
  std::string graph_path;
  std::string set_text;
  bool porous = false;
  std::optional<Vertex> shell_center;
  std::optional<Vertex> cert_center;
  weight->add_option("--graph", graph_path, "graph file or named:NAME")->required();
  weight->add_option("--set", set_text, "comma-separated vertex ids")->required();
  weight->add_flag("--porous", porous, "plain graph distances");
  weight->add_option("--shell", shell_center, "also report the shell profile around this vertex");
  weight->add_option("--cert", cert_center, "also extract the full binary certificate at this vertex");

  // solve
  auto* solve = app.add_subcommand("solve", "compute gamma_e");
  bool use_exact = false;
  bool use_tree = false;
  bool use_triple = false;
  bool force = false;
  bool trace = false;
  std::optional<std::size_t> max_k;
  solve->add_option("--graph", graph_path, "graph file or named:NAME")->required();
  auto* exact_flag = solve->add_flag("--exact", use_exact, "size-ordered exhaustive search");
  auto* tree_flag = solve->add_flag("--tree", use_tree, "polynomial algorithm for subcubic trees");
  auto* triple_flag = solve->add_flag("--triple", use_triple, "minimum set giving weight >= 3 outside it");
  exact_flag->excludes(tree_flag)->excludes(triple_flag);
  tree_flag->excludes(triple_flag);
  solve->add_flag("--porous", porous, "porous weights (exact search only)");
  solve->add_option("--max-k", max_k, "largest set size to try");
  solve->add_flag("--force", force, "lift the order guard");
  solve->add_flag("--trace", trace, "include the per-iteration trace (tree solver)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "apply reduction rules to closure");
  std::string rules_text = "i,ii,iii";
  std::string format = "json";
  reduce->add_option("--graph", graph_path, "graph file or named:NAME")->required();
  reduce->add_option("--rules", rules_text, "subset of i,ii,iii,iv")->capture_default_str();
  reduce->add_option("--format", format, "json|edge|graph6")
      ->check(CLI::IsMember({"json", "edge", "graph6"}));

  // construct
  auto* construct = app.add_subcommand("construct", "build instance families");
  construct->require_subcommand(1);
  std::string construct_format = "edge";
  std::string sidecar_path;
  construct->add_option("--format", construct_format, "edge|graph6|json")
      ->check(CLI::IsMember({"json", "edge", "graph6"}));
  construct->add_option("--sidecar", sidecar_path, "write the JSON sidecar to this file");
  construct->fallthrough();
  std::size_t k_param = 0;
  std::string degrees_text;
  std::size_t h_param = 1;
  std::size_t max_n = 10;
  std::string name_param;
  std::size_t leaves_param = 3;
  auto* c_fig2 = construct->add_subcommand("figure2", "tree with gamma_e = (n+1)/5");
  c_fig2->add_option("--k", k_param)->required();
  auto* c_ttree = construct->add_subcommand("t-tree", "T(d0,...,dk)");
  c_ttree->add_option("--degrees", degrees_text, "comma-separated child counts")->required();
  c_ttree->add_flag("--force", force);
  auto* c_deg5 = construct->add_subcommand("degree5", "T(5,4,...,4) with a small dominating set");
  c_deg5->set_help_flag("--help", "Print this help message and exit");
  c_deg5->add_option("--h", h_param)->required();
  c_deg5->add_flag("--force", force);
  auto* c_ops = construct->add_subcommand("extremal-ops", "trees grown from K_1 by the three operations");
  c_ops->add_option("--max-n", max_n)->required();
  auto* c_gadget = construct->add_subcommand("gadget", "vertex-cover gadget graph of a cubic graph");
  c_gadget->add_option("--graph", graph_path, "graph file or named:NAME")->required();
  auto* c_named = construct->add_subcommand("named", "catalog graph");
  c_named->add_option("--name", name_param)->required();
  auto* c_thm7 = construct->add_subcommand("thm7", "three glued copies of a degree-{1,3} tree");
  c_thm7->add_option("--leaves", leaves_param, "leaves of the caterpillar base tree");
  c_thm7->add_option("--graph", graph_path, "base tree instead of the caterpillar");
  for (auto* sub : {c_fig2, c_ttree, c_deg5, c_ops, c_gadget, c_named, c_thm7}) sub->fallthrough();

  // heuristic
  auto* heuristic = app.add_subcommand("heuristic", "randomized two-phase construction");
  std::optional<double> p_opt;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::optional<double> eps_opt;
  std::optional<double> alpha_opt;
  heuristic->add_option("--graph", graph_path, "graph file or named:NAME")->required();
  heuristic->add_option("--p", p_opt, "inclusion probability");
  heuristic->add_option("--seed", seed)->capture_default_str();
  heuristic->add_option("--trials", trials)->capture_default_str();
  auto* eps_flag = heuristic->add_option("--eps", eps_opt, "derive p from epsilon");
  auto* alpha_flag = heuristic->add_option("--alpha", alpha_opt, "derive p from alpha and n");
  eps_flag->excludes(alpha_flag);

  // report
  auto* report = app.add_subcommand("report", "evaluate all bounds on a graph");
  report->add_option("--graph", graph_path, "graph file or named:NAME")->required();
  auto* r_exact = report->add_flag("--exact", use_exact, "gamma_e by exhaustive search (default)");
  auto* r_tree = report->add_flag("--tree", use_tree, "gamma_e by the tree algorithm");
  r_exact->excludes(r_tree);
  report->add_flag("--triple", use_triple, "also evaluate the triple-weight bound");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "batch run over a config");
  std::string config_path;
  std::string out_dir;
  std::optional<std::size_t> conjecture_n;
  auto* config_opt = experiment->add_option("--config", config_path, "config JSON");
  experiment->add_option("--out", out_dir, "output directory");
  auto* conj_opt = experiment->add_option("--conjecture", conjecture_n,
                                          "compare extremal trees with the generated family up to this order");
  config_opt->excludes(conj_opt);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "all subcubic trees of a given order");
  std::size_t enum_n = 1;
  std::string enum_format = "graph6";
  enumerate->add_option("--n", enum_n)->required();
  enumerate->add_option("--format", enum_format, "graph6|edge|json|codes")
      ->check(CLI::IsMember({"graph6", "edge", "json", "codes"}));

  std::vector<std::string> argv_store{"expdom"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const std::size_t threads = resolve_threads(threads_opt);

    if (*weight) {
      const Graph g = load_graph(graph_path);
      const auto set = parse_vertex_set(set_text, g.order());
      const auto mode = porous ? WeightMode::Porous : WeightMode::Blocked;
      Json j{{"profile", to_json(weight_profile(g, set, mode))},
             {"domination", to_json(is_exponential_dominating(g, set, mode))}};
      if (shell_center) j["shell"] = to_json(shell_profile(g, set, *shell_center));
      if (cert_center) {
        const auto cert = lemma1_certificate(g, set, *cert_center);
        j["certificate"] = cert ? to_json(*cert) : Json(nullptr);
      }
      print_json(out, j);
    } else if (*solve) {
      const Graph g = load_graph(graph_path);
      if (use_tree) {
        const auto r = gamma_e_tree(g, trace);
        Json j = to_json(r.result);
        if (trace) {
          j["trace"] = Json::array();
          for (const auto& s : r.trace) j["trace"].push_back(to_json(s));
        }
        print_json(out, j);
      } else if (use_triple) {
        print_json(out, to_json(min_triple_weight_set(g, force)));
      } else {
        ExactOptions opts;
        opts.mode = porous ? WeightMode::Porous : WeightMode::Blocked;
        opts.max_k = max_k;
        opts.force = force;
        try {
          print_json(out, to_json(gamma_e_exact(g, opts)));
        } catch (const BudgetExhausted& e) {
          err << Json{{"error", error_kind_name(e.kind())},
                      {"message", e.what()},
                      {"lower_bound", e.lower_bound()},
                      {"explored", e.explored()}}
                     .dump()
              << "\n";
          return 1;
        }
      }
    } else if (*reduce) {
      const Graph g = load_graph(graph_path);
      const auto r = reduce_fully(g, parse_rules(rules_text));
      if (format == "json") {
        print_json(out, to_json(r));
      } else {
        out << emit_graph(r.graph, graph_format(format)) << "\n";
      }
    } else if (*construct) {
      if (*c_fig2) {
        const Graph g = build_figure2(k_param);
        emit_construction(out, g, {{"family", "figure2"}, {"k", k_param}, {"n", g.order()}},
                          construct_format, sidecar_path);
      } else if (*c_ttree) {
        const auto degrees = parse_sizes(degrees_text);
        const auto t = build_t_tree(degrees, force);
        emit_construction(out, t.graph(), {{"family", "t-tree"}, {"degrees", degrees}, {"root", t.root()}},
                          construct_format, sidecar_path);
      } else if (*c_deg5) {
        const auto inst = build_degree5_instance(h_param, force);
        emit_construction(out, inst.tree.graph(),
                          {{"family", "degree5"}, {"h", inst.h}, {"d", inst.depth}, {"root", inst.tree.root()},
                           {"set", to_json(inst.set)}, {"set_size", inst.set.size()}},
                          construct_format, sidecar_path);
      } else if (*c_ops) {
        const auto trees = generate_extremal_candidates(max_n);
        if (construct_format == "json") {
          Json arr = Json::array();
          for (const auto& t : trees) arr.push_back(to_json(t));
          print_json(out, {{"family", "extremal-ops"}, {"max_n", max_n}, {"graphs", arr}});
        } else {
          emit_graphs(out, trees, construct_format);
        }
        if (!sidecar_path.empty()) {
          Json codes = Json::array();
          for (const auto& t : trees) codes.push_back(canonical_tree_code(t));
          std::ofstream(sidecar_path) << Json{{"family", "extremal-ops"}, {"max_n", max_n}, {"codes", codes}}.dump(2)
                                      << "\n";
        }
      } else if (*c_gadget) {
        const auto map = build_gadget(load_graph(graph_path));
        const auto cover = minimum_vertex_cover(map.source);
        Json side = to_json(map);
        side["cover"] = to_json(cover);
        side["dominating_set"] = to_json(cover_to_expdom(map, cover));
        emit_construction(out, map.gadget, side, construct_format, sidecar_path);
      } else if (*c_named) {
        const Graph g = named_graph(name_param);
        emit_construction(out, g, {{"family", "named"}, {"name", name_param}}, construct_format, sidecar_path);
      } else if (*c_thm7) {
        const Graph base = graph_path.empty() ? cubic_caterpillar(leaves_param) : load_graph(graph_path);
        const auto inst = build_theorem7_extremal(base);
        emit_construction(out, inst.graph,
                          {{"family", "thm7"}, {"leaves", inst.leaves}, {"base", to_json(base)},
                           {"triple_set", to_json(inst.triple_set)}},
                          construct_format, sidecar_path);
      }
    } else if (*heuristic) {
      const Graph g = load_graph(graph_path);
      Json j = Json::object();
      double p = 1.0 / 3.0;
      if (eps_opt || alpha_opt) {
        const auto params = eps_opt ? theorem6_params(ParamMode::Epsilon, *eps_opt)
                                    : theorem6_params(ParamMode::Alpha, *alpha_opt, g.order());
        j["params"] = to_json(params);
        p = params.p;
      }
      if (p_opt) p = *p_opt;
      const auto r = randomized_expdom(g, p, seed, trials, threads);
      j["report"] = to_json(r);
      print_json(out, j);
    } else if (*report) {
      const Graph g = load_graph(graph_path);
      const auto solved = use_tree ? gamma_e_tree(g).result : gamma_e_exact(g);
      std::optional<std::size_t> triple;
      if (use_triple) triple = min_triple_weight_set(g).value;
      Json j = to_json(bounds_report(g, GammaValue::exact(solved.value), triple));
      j["solve"] = to_json(solved);
      print_json(out, j);
    } else if (*experiment) {
      if (conjecture_n) {
        print_json(out, to_json(conjecture_experiment(*conjecture_n, threads)));
      } else {
        if (config_path.empty()) throw CLI::RequiredError("--config or --conjecture");
        std::ifstream in(config_path);
        if (!in) throw Error(ErrorKind::Io, "cannot read config " + config_path);
        Json config;
        try {
          config = Json::parse(in);
        } catch (const Json::exception& e) {
          throw Error(ErrorKind::InvalidArgument, std::string("config is not valid JSON: ") + e.what());
        }
        const auto result = out_dir.empty() ? run_experiment(config, threads)
                                            : run_experiment_to(config, out_dir, threads);
        if (out_dir.empty()) {
          out << result.csv();
        } else {
          print_json(out, {{"rows", result.rows.size()}, {"out", out_dir}});
        }
      }
    } else if (*enumerate) {
      const auto trees = enumerate_subcubic_trees(enum_n);
      if (enum_format == "codes") {
        for (const auto& t : trees) out << canonical_tree_code(t) << "\n";
      } else {
        emit_graphs(out, trees, enum_format);
      }
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const Error& e) {
    err << Json{{"error", error_kind_name(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << Json{{"error", "invalid_argument"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace expdom
