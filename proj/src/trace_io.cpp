// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#include "falqon/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace falqon {

namespace {

using nlohmann::json;

// Shortest spelling that round-trips a double, so identical runs produce
// byte-identical files.
std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json json_or_null(double x) {
  if (std::isnan(x)) return nullptr;
  return x;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::kStandard: return "standard";
    case Variant::kKicks: return "kicks";
    case Variant::kReference: return "reference";
    case Variant::kIterativeQlc: return "iterative";
  }
  return "standard";
}

}  // namespace

std::string trace_to_csv(const FeedbackRun& run) {
  std::ostringstream out;
  out << "layer,beta,A,energy,r_A,phi,cumulative_samples\n";
  for (int k = 1; k <= run.layers_executed; ++k) {
    out << k << ',' << fmt(run.beta[k]) << ',' << fmt(run.A[k]) << ',' << fmt(run.energy[k])
        << ',' << fmt(run.r_A[k]) << ',' << fmt(run.phi[k]) << ','
        << run.cumulative_samples[k] << '\n';
  }
  return out.str();
}

void write_trace_csv(const std::string& path, const FeedbackRun& run) {
  write_text_file(path, trace_to_csv(run));
}

std::string run_metadata_json(const RunConfig& cfg, const FeedbackRun& run, const Graph& g,
                              const std::string& instance_path) {
  json meta;
  meta["trace_schema_version"] = kTraceSchemaVersion;
  meta["instance"] = {{"name", g.name},
                      {"path", instance_path},
                      {"n", g.n},
                      {"edges", g.edges.size()}};
  meta["config"] = {
      {"dt", cfg.dt},
      {"tau", 2.0 * cfg.dt},
      {"max_layers", cfg.max_layers},
      {"estimator", cfg.estimator == Estimator::kShots ? "shots" : "exact"},
      {"shots", cfg.estimator == Estimator::kShots ? cfg.shots : 0},
      {"estimate_energy", cfg.estimate_energy},
      {"variant", variant_name(cfg.variant)},
      {"beta_1", cfg.beta_1},
      {"stop_eps", cfg.stop_eps},
      {"stop_patience", cfg.stop_patience},
      {"final_samples", cfg.final_samples},
      {"gain", cfg.law.gain},
      {"seed", cfg.seed},
  };
  if (cfg.variant == Variant::kKicks) {
    meta["config"]["kick"] = {{"beta_c", cfg.kick.beta_c}, {"amp", cfg.kick.amp}};
  }
  meta["initial"] = {{"energy", run.energy.empty() ? 0.0 : run.energy[0]},
                     {"r_A", json_or_null(run.r_A.empty() ? 0.0 : run.r_A[0])},
                     {"phi", run.phi.empty() ? 0.0 : run.phi[0]},
                     {"A", run.A.empty() ? 0.0 : run.A[0]}};
  meta["result"] = {
      {"layers_executed", run.layers_executed},
      {"early_stopped", run.early_stopped},
      {"final_energy", run.energy.back()},
      {"final_r_A", json_or_null(run.r_A.back())},
      {"final_phi", run.phi.back()},
      {"min_energy", run.min_energy},
      {"monotone_violations", run.monotone_violations},
  };
  if (run.sampled_solution) {
    meta["result"]["best_bitstring"] = run.best_bitstring;
    meta["result"]["best_energy"] = run.best_energy;
  }
  if (!run.energy_estimate.empty()) {
    meta["result"]["energy_estimate"] = run.energy_estimate;
  }
  meta["cost"] = {
      {"total_samples", run.cost.total_samples},
      {"commutator_samples", run.cost.commutator_samples},
      {"energy_samples", run.cost.energy_samples},
      {"solution_samples", run.cost.solution_samples},
      {"per_layer_strings", run.cost.per_layer_strings},
      {"shots_per_string", run.cost.shots_per_string},
  };
#ifdef _OPENMP
  meta["threads"] = omp_get_max_threads();
#else
  meta["threads"] = 1;
#endif
  return meta.dump(2) + "\n";
}

std::string critical_dt_report_json(const CriticalDtReport& report) {
  json j;
  j["dt_c"] = report.dt_c;
  j["bounded"] = report.bounded;
  j["failed_at_lo"] = report.failed_at_lo;
  j["verified_at_dtc"] = report.verified_at_dtc;
  j["verified_violation_above"] = report.verified_violation_above;
  j["instances"] = report.instances;
  j["options"] = {{"lo", report.options.lo},
                  {"hi", report.options.hi},
                  {"resolution", report.options.resolution},
                  {"layers", report.options.layers},
                  {"violation_tol", report.options.violation_tol}};
  auto& trace = j["search_trace"] = json::array();
  for (const auto& [dt, ok] : report.search_trace) {
    trace.push_back({{"dt", dt}, {"monotone", ok}});
  }
  return j.dump(2) + "\n";
}

std::string threshold_report_json(const ThresholdReport& report) {
  json j;
  j["n"] = report.n;
  j["dt"] = report.dt;
  j["ell_max"] = report.ell_max;
  j["thresholds"] = {{"r_A", kRatioThreshold}, {"phi", kPhiThreshold}};
  j["mean_layers_to_rA"] = report.mean_layers_ra;
  j["std_layers_to_rA"] = report.std_layers_ra;
  j["mean_layers_to_phi"] = report.mean_layers_phi;
  j["std_layers_to_phi"] = report.std_layers_phi;
  j["rejected"] = report.rejected;
  auto& rows = j["per_instance"] = json::array();
  for (const InstanceThreshold& row : report.per_instance) {
    rows.push_back({{"name", row.name},
                    {"layers_to_rA", row.layers_to_ra},
                    {"layers_to_phi", row.layers_to_phi},
                    {"censored_rA", row.censored_ra},
                    {"censored_phi", row.censored_phi}});
  }
  return j.dump(2) + "\n";
}

std::string cost_report_json(const CostReport& report) {
  json j;
  j["total_samples"] = report.total_samples;
  j["commutator_samples"] = report.commutator_samples;
  j["energy_samples"] = report.energy_samples;
  j["solution_samples"] = report.solution_samples;
  j["shots_per_string"] = report.shots_per_string;
  j["strings_per_layer"] = report.strings_per_layer;
  j["string_bound_n_n_minus_1"] = report.string_bound;
  j["layers_executed"] = report.layers_executed;
  j["degree"] = report.degree;
  j["identity_ok"] = report.identity_ok;
  j["scaling"] = report.scaling_note;
  return j.dump(2) + "\n";
}

std::string aggregate_to_csv(const AggregateTrace& agg) {
  std::ostringstream out;
  out << "layer,mean_beta,std_beta,mean_rA,mean_phi\n";
  for (std::size_t k = 0; k < agg.mean_beta.size(); ++k) {
    out << (k + 1) << ',' << fmt(agg.mean_beta[k]) << ',' << fmt(agg.std_beta[k]) << ','
        << fmt(agg.mean_ra[k]) << ',' << fmt(agg.mean_phi[k]) << '\n';
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace falqon
