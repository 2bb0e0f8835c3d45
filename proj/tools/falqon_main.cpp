// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: instance generation, feedback runs, parameter sweeps,
// and sampling-cost summaries. Outputs are data files (CSV/JSON) meant for
// external plotting; every output is reproducible from the recorded seeds.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "falqon/experiments.hpp"
#include "falqon/feedback.hpp"
#include "falqon/graph.hpp"
#include "falqon/graph_gen.hpp"
#include "falqon/trace_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GenerateArgs {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  int count = 1;
  bool all = false;
  bool weighted = false;
  bool force = false;
  std::string out;
};

struct RunArgs {
  std::string instance;
  double dt = 0.2;
  int layers = 100;
  std::string variant = "standard";
  std::string estimator = "exact";
  std::uint64_t seed = 0;
  int iters = 3;
  double beta1 = 0.0;
  double stop_eps = 1e-6;
  int patience = 5;
  int final_shots = 1024;
  bool estimate_energy = false;
  double gain = 1.0;
  double kick_beta_c = 1.0;
  double kick_amp = 0.1;
  std::string lambda_file;
  std::string out;
};

struct DtcArgs {
  std::string corpus;
  int layers = 0;
  double lo = 1e-3;
  double hi = 1.0;
  double resolution = 1e-3;
  std::string out;
};

struct ThresholdArgs {
  std::string corpus;
  double dt = 0.0;
  std::string dtc_report;
  int layers = 0;
  std::string out;
  std::string aggregate;
};

struct CostArgs {
  std::string run_dir;
  std::string out;
};

void ensure_output_dir(const std::string& out, bool force) {
  const fs::path dir(out);
  if (fs::exists(dir)) {
    if (!fs::is_directory(dir)) {
      throw std::runtime_error("output path exists and is not a directory: " + out);
    }
    if (!fs::is_empty(dir) && !force) {
      throw std::runtime_error("output directory " + out +
                               " is not empty; pass --force to reuse it");
    }
  } else {
    fs::create_directories(dir);
  }
}

falqon::RunConfig config_from_args(const RunArgs& args) {
  falqon::RunConfig cfg;
  cfg.dt = args.dt;
  cfg.max_layers = args.layers;
  cfg.seed = args.seed;
  cfg.beta_1 = args.beta1;
  cfg.stop_eps = args.stop_eps;
  cfg.stop_patience = args.patience;
  cfg.final_samples = args.final_shots;
  cfg.estimate_energy = args.estimate_energy;
  cfg.law.gain = args.gain;
  cfg.kick.beta_c = args.kick_beta_c;
  cfg.kick.amp = args.kick_amp;
  cfg.qlc_iterations = args.iters;

  if (args.variant == "standard") {
    cfg.variant = falqon::Variant::kStandard;
  } else if (args.variant == "kicks") {
    cfg.variant = falqon::Variant::kKicks;
  } else if (args.variant == "reference") {
    cfg.variant = falqon::Variant::kReference;
  } else if (args.variant == "iterative") {
    cfg.variant = falqon::Variant::kIterativeQlc;
  } else {
    throw std::invalid_argument("unknown variant: " + args.variant);
  }

  if (args.estimator == "exact") {
    cfg.estimator = falqon::Estimator::kExact;
  } else if (args.estimator == "shots") {
    cfg.estimator = falqon::Estimator::kShots;
  } else if (args.estimator.rfind("shots:", 0) == 0) {
    cfg.estimator = falqon::Estimator::kShots;
    std::size_t used = 0;
    const std::string m = args.estimator.substr(6);
    cfg.shots = std::stoi(m, &used);
    if (used != m.size()) {
      throw std::invalid_argument("bad shot count in estimator spec: " + args.estimator);
    }
  } else {
    throw std::invalid_argument("estimator must be 'exact' or 'shots:<m>', got " +
                                args.estimator);
  }

  if (!args.lambda_file.empty()) {
    const json j = json::parse(falqon::read_text_file(args.lambda_file));
    if (!j.is_array()) {
      throw std::runtime_error("lambda schedule file must hold a JSON array of numbers");
    }
    cfg.lambda_schedule = j.get<std::vector<double>>();
  }
  return cfg;
}

std::vector<falqon::Graph> load_corpus(const std::string& corpus_dir) {
  const fs::path dir(corpus_dir);
  std::vector<falqon::Graph> graphs;
  const fs::path manifest = dir / "manifest.json";
  if (fs::exists(manifest)) {
    const json j = json::parse(falqon::read_text_file(manifest.string()));
    for (const auto& rel : j.at("instances")) {
      graphs.push_back(falqon::read_graph((dir / rel.get<std::string>()).string()));
    }
  } else {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      graphs.push_back(falqon::read_graph(file.string()));
    }
  }
  if (graphs.empty()) {
    throw std::runtime_error("no instances found in corpus directory: " + corpus_dir);
  }
  return graphs;
}

void emit(const std::string& out, const std::string& content) {
  if (out.empty()) {
    std::cout << content;
  } else {
    falqon::write_text_file(out, content);
    std::cout << "wrote " << out << "\n";
  }
}

void cmd_generate(const GenerateArgs& args) {
  // Generate into memory first so parameter errors leave no directories behind.
  std::vector<falqon::Graph> graphs;
  bool complete = true;
  std::uint64_t attempts = 0;
  if (args.all) {
    if (args.weighted) {
      throw std::invalid_argument("--all enumerates isomorphism classes; it cannot be "
                                  "combined with --weighted");
    }
    graphs = falqon::enumerate_regular_all(args.n, args.d);
  } else {
    falqon::GenerateOptions opt;
    opt.n = args.n;
    opt.d = args.d;
    opt.seed = args.seed;
    opt.count = args.count;
    opt.weighted = args.weighted;
    auto result = falqon::generate_regular(opt);
    graphs = std::move(result.graphs);
    complete = result.complete;
    attempts = result.attempts;
  }

  ensure_output_dir(args.out, args.force);
  const fs::path dir(args.out);
  fs::create_directories(dir / "instances");

  json manifest;
  manifest["command"] = "generate";
  manifest["n"] = args.n;
  manifest["d"] = args.d;
  manifest["seed"] = args.seed;
  manifest["count"] = args.all ? static_cast<int>(graphs.size()) : args.count;
  manifest["all"] = args.all;
  manifest["weighted"] = args.weighted;
  manifest["complete"] = complete;
  manifest["attempts"] = attempts;
  auto& list = manifest["instances"] = json::array();
  for (const falqon::Graph& g : graphs) {
    const std::string rel = "instances/" + g.name + ".json";
    falqon::write_graph(g, (dir / rel).string());
    list.push_back(rel);
  }
  falqon::write_text_file((dir / "manifest.json").string(), manifest.dump(2) + "\n");

  std::cout << "wrote " << graphs.size() << " instance(s) to " << args.out << "\n";
  if (!complete) {
    std::cerr << "warning: only " << graphs.size()
              << " nonisomorphic connected instance(s) found before sampling stalled\n";
  }
}

void cmd_run(const RunArgs& args) {
  const falqon::RunConfig cfg = config_from_args(args);  // flag errors before file IO
  const falqon::Graph g = falqon::read_graph(args.instance);

  const auto hp = falqon::build_problem(g);
  const auto comm = falqon::build_commutator(g);
  const auto ground = falqon::brute_force_maxcut(g);

  const fs::path dir(args.out.empty() ? "." : args.out);
  fs::create_directories(dir);

  if (cfg.variant == falqon::Variant::kIterativeQlc) {
    const auto result = falqon::run_iterative_qlc(hp, comm, ground, cfg, cfg.qlc_iterations);
    json summary;
    summary["passes"] = result.runs.size();
    summary["warnings"] = result.warnings;
    auto& finals = summary["final_energies"] = json::array();
    for (std::size_t i = 0; i < result.runs.size(); ++i) {
      const auto& run = result.runs[i];
      finals.push_back(run.energy.back());
      falqon::write_trace_csv((dir / ("trace_iter" + std::to_string(i) + ".csv")).string(),
                              run);
      falqon::write_text_file((dir / ("meta_iter" + std::to_string(i) + ".json")).string(),
                              falqon::run_metadata_json(cfg, run, g, args.instance));
    }
    falqon::write_text_file((dir / "iterative.json").string(), summary.dump(2) + "\n");
    for (const std::string& w : result.warnings) {
      std::cerr << "warning: " << w << "\n";
    }
    std::cout << "wrote " << result.runs.size() << " iterative traces to " << dir.string()
              << "\n";
    return;
  }

  falqon::FeedbackRun run;
  if (cfg.variant == falqon::Variant::kReference && !cfg.lambda_schedule.empty()) {
    run = falqon::run_with_reference(hp, comm, ground, cfg, cfg.lambda_schedule);
  } else {
    run = falqon::run_falqon(hp, comm, ground, cfg);
  }
  falqon::write_trace_csv((dir / "trace.csv").string(), run);
  falqon::write_text_file((dir / "meta.json").string(),
                          falqon::run_metadata_json(cfg, run, g, args.instance));
  std::cout << "layers " << run.layers_executed << ", final energy " << run.energy.back()
            << ", phi " << run.phi.back() << "; wrote " << (dir / "trace.csv").string()
            << "\n";
}

void cmd_sweep_dtc(const DtcArgs& args) {
  const auto graphs = load_corpus(args.corpus);
  const auto prepared = falqon::prepare_instances(graphs);
  falqon::CriticalDtOptions opt;
  opt.lo = args.lo;
  opt.hi = args.hi;
  opt.resolution = args.resolution;
  opt.layers = args.layers;
  const auto report = falqon::find_critical_dt(prepared, opt);
  emit(args.out, falqon::critical_dt_report_json(report));
  if (!report.bounded) {
    std::cerr << "warning: monotone over the whole search range; dt_c is a lower bound\n";
  }
  if (report.failed_at_lo) {
    std::cerr << "warning: monotonicity already fails at lo = " << args.lo << "\n";
  }
}

void cmd_sweep_thresholds(const ThresholdArgs& args) {
  const auto graphs = load_corpus(args.corpus);
  const auto prepared = falqon::prepare_instances(graphs);

  double dt = args.dt;
  if (!args.dtc_report.empty()) {
    const json j = json::parse(falqon::read_text_file(args.dtc_report));
    dt = j.at("dt_c").get<double>();
  }
  if (!(dt > 0.0)) {
    throw std::invalid_argument("pass --dt or --dtc-report to set the time step");
  }
  const int layers =
      args.layers > 0 ? args.layers : falqon::default_layer_horizon(graphs.front().n);
  const auto report = falqon::layers_to_threshold(prepared, dt, layers);
  emit(args.out, falqon::threshold_report_json(report));
  if (!report.rejected.empty()) {
    std::cerr << "warning: " << report.rejected.size() << " instance(s) rejected\n";
  }

  if (!args.aggregate.empty()) {
    // Aggregation needs equal-length runs, so replay the corpus at the full
    // horizon without the early exit.
    std::vector<falqon::FeedbackRun> runs(prepared.size());
    const auto count = static_cast<long long>(prepared.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
      falqon::RunConfig cfg;
      cfg.dt = dt;
      cfg.max_layers = layers;
      cfg.stop_eps = 0.0;
      cfg.final_samples = 0;
      runs[i] = falqon::run_falqon(prepared[i].hp, prepared[i].comm, prepared[i].ground, cfg);
    }
    const auto agg = falqon::aggregate_runs(graphs.front().n, runs);
    falqon::write_text_file(args.aggregate, falqon::aggregate_to_csv(agg));
    std::cout << "wrote " << args.aggregate << "\n";
  }
}

void cmd_cost(const CostArgs& args) {
  const fs::path dir(args.run_dir);
  const json meta = json::parse(falqon::read_text_file((dir / "meta.json").string()));

  const std::string instance_path = meta.at("instance").at("path").get<std::string>();
  falqon::Graph g;
  if (fs::exists(instance_path)) {
    g = falqon::read_graph(instance_path);
  } else if (fs::exists(dir / instance_path)) {
    g = falqon::read_graph((dir / instance_path).string());
  } else {
    throw std::runtime_error("instance file recorded in meta.json not found: " +
                             instance_path);
  }

  falqon::FeedbackRun run;
  const auto& cost = meta.at("cost");
  run.cost.total_samples = cost.at("total_samples").get<long long>();
  run.cost.commutator_samples = cost.at("commutator_samples").get<long long>();
  run.cost.energy_samples = cost.at("energy_samples").get<long long>();
  run.cost.solution_samples = cost.at("solution_samples").get<long long>();
  run.cost.per_layer_strings = cost.at("per_layer_strings").get<int>();
  run.cost.shots_per_string = cost.at("shots_per_string").get<int>();
  run.layers_executed = meta.at("result").at("layers_executed").get<int>();

  emit(args.out, falqon::cost_report_json(falqon::cost_report(run, g)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MaxCut feedback-control simulator and experiment harness"};
  app.set_config("--config", "", "Config file with long-option values; flags override it");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a corpus of regular graphs");
  generate->add_option("--n", gen.n, "Vertex count")->required();
  generate->add_option("--d", gen.d, "Degree")->required();
  generate->add_option("--seed", gen.seed, "Master RNG seed");
  generate->add_option("--count", gen.count, "Number of instances");
  generate->add_flag("--all", gen.all, "Enumerate every isomorphism class (small n)");
  generate->add_flag("--weighted", gen.weighted, "Draw edge weights uniformly in (0,1)");
  generate->add_flag("--force", gen.force, "Write into a non-empty output directory");
  generate->add_option("--out", gen.out, "Output directory")
      ->envname("FALQON_OUT_DIR")
      ->required();
  generate->callback([&gen] { cmd_generate(gen); });

  RunArgs run;
  auto* runcmd = app.add_subcommand("run", "Run the feedback protocol on one instance");
  runcmd->add_option("instance", run.instance, "Instance JSON file")->required();
  runcmd->add_option("--dt", run.dt, "Trotter time step")->required();
  runcmd->add_option("--layers", run.layers, "Maximum layer count")->required();
  runcmd->add_option("--variant", run.variant, "standard|kicks|reference|iterative");
  runcmd->add_option("--estimator", run.estimator, "exact or shots:<m>");
  runcmd->add_option("--seed", run.seed, "Master RNG seed");
  runcmd->add_option("--iters", run.iters, "Passes for the iterative variant");
  runcmd->add_option("--beta1", run.beta1, "Seed coefficient for layer 1");
  runcmd->add_option("--stop-eps", run.stop_eps, "Early-stop threshold on |beta| (0 = off)");
  runcmd->add_option("--patience", run.patience, "Consecutive quiet layers before stopping");
  runcmd->add_option("--final-shots", run.final_shots, "Z-basis read-out samples (0 = skip)");
  runcmd->add_flag("--estimate-energy", run.estimate_energy,
                   "Also bill a per-layer energy estimation circuit in shot mode");
  runcmd->add_option("--gain", run.gain, "Feedback gain w");
  runcmd->add_option("--kick-beta-c", run.kick_beta_c, "Kick level");
  runcmd->add_option("--kick-amp", run.kick_amp, "Kick amplitude");
  runcmd->add_option("--lambda-file", run.lambda_file,
                     "JSON array with a per-layer reference schedule");
  runcmd->add_option("--out", run.out, "Output directory")->envname("FALQON_OUT_DIR");
  runcmd->callback([&run] { cmd_run(run); });

  auto* sweep = app.add_subcommand("sweep", "Corpus-level experiment drivers");
  sweep->require_subcommand(1);

  DtcArgs dtc;
  auto* dtccmd = sweep->add_subcommand("dtc", "Bisect for the critical time step");
  dtccmd->add_option("--corpus", dtc.corpus, "Corpus directory")->required();
  dtccmd->add_option("--layers", dtc.layers, "Layer horizon (0 = per-size default)");
  dtccmd->add_option("--lo", dtc.lo, "Lower search bound");
  dtccmd->add_option("--hi", dtc.hi, "Upper search bound");
  dtccmd->add_option("--resolution", dtc.resolution, "Bisection resolution");
  dtccmd->add_option("--out", dtc.out, "Report file (default: stdout)");
  dtccmd->callback([&dtc] { cmd_sweep_dtc(dtc); });

  ThresholdArgs thr;
  auto* thrcmd = sweep->add_subcommand("thresholds", "Layers to the reference thresholds");
  thrcmd->add_option("--corpus", thr.corpus, "Corpus directory")->required();
  thrcmd->add_option("--dt", thr.dt, "Time step");
  thrcmd->add_option("--dtc-report", thr.dtc_report, "Take the time step from a dtc report");
  thrcmd->add_option("--layers", thr.layers, "Layer horizon (0 = per-size default)");
  thrcmd->add_option("--out", thr.out, "Report file (default: stdout)");
  thrcmd->add_option("--aggregate", thr.aggregate, "Also write per-layer aggregate CSV here");
  thrcmd->callback([&thr] { cmd_sweep_thresholds(thr); });

  CostArgs cost;
  auto* costcmd = app.add_subcommand("cost", "Sampling-cost summary of a finished run");
  costcmd->add_option("run_dir", cost.run_dir, "Directory with meta.json")->required();
  costcmd->add_option("--out", cost.out, "Report file (default: stdout)");
  costcmd->callback([&cost] { cmd_cost(cost); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
