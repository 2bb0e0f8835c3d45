// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#include "falqon/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace falqon {

namespace {

// Sample standard deviation over instance values (0 for a single instance).
double std_dev(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double acc = 0.0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / (xs.size() - 1));
}

double mean_of(const std::vector<double>& xs) {
  double acc = 0.0;
  for (double x : xs) acc += x;
  return xs.empty() ? 0.0 : acc / xs.size();
}

}  // namespace

std::vector<PreparedInstance> prepare_instances(const std::vector<Graph>& graphs) {
  std::vector<PreparedInstance> prepared(graphs.size());
  std::vector<std::string> errors(graphs.size());
  const auto count = static_cast<long long>(graphs.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      prepared[i].graph = graphs[i];
      prepared[i].hp = build_problem(graphs[i]);
      prepared[i].comm = build_commutator(graphs[i]);
      prepared[i].ground = brute_force_maxcut(graphs[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();  // exceptions must not escape the parallel region
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) {
      throw std::invalid_argument("instance " + graphs[i].name + ": " + errors[i]);
    }
  }
  return prepared;
}

int default_layer_horizon(int n) { return 100 + 25 * n; }

bool monotone_over_corpus(const std::vector<PreparedInstance>& instances, double dt,
                          int layers, double tol) {
  bool all_monotone = true;
  const auto count = static_cast<long long>(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    bool skip;
#pragma omp atomic read
    skip = all_monotone;
    if (!skip) continue;

    RunConfig cfg;
    cfg.dt = dt;
    cfg.max_layers = layers;
    cfg.stop_eps = 0.0;  // run the full horizon
    cfg.final_samples = 0;
    cfg.stop_condition = [tol](const FeedbackRun& partial) {
      const std::size_t k = partial.energy.size() - 1;
      return partial.energy[k] > partial.energy[k - 1] + tol;
    };
    const FeedbackRun run =
        run_falqon(instances[i].hp, instances[i].comm, instances[i].ground, cfg);
    if (!run.monotone_violations.empty()) {
#pragma omp atomic write
      all_monotone = false;
    }
  }
  return all_monotone;
}

CriticalDtReport find_critical_dt(const std::vector<PreparedInstance>& instances,
                                  const CriticalDtOptions& opt) {
  if (instances.empty()) {
    throw std::invalid_argument("critical-dt search needs at least one instance");
  }
  if (!(opt.lo < opt.hi) || !(opt.resolution > 0.0)) {
    throw std::invalid_argument("critical-dt search needs lo < hi and a positive resolution");
  }
  CriticalDtReport report;
  report.options = opt;
  if (report.options.layers <= 0) {
    report.options.layers = default_layer_horizon(instances.front().graph.n);
  }
  report.instances = static_cast<int>(instances.size());
  const int layers = report.options.layers;

  auto probe = [&](double dt) {
    const bool ok = monotone_over_corpus(instances, dt, layers, opt.violation_tol);
    report.search_trace.emplace_back(dt, ok);
    return ok;
  };

  if (!probe(opt.lo)) {
    report.failed_at_lo = true;
    report.dt_c = opt.lo;
    report.bounded = true;
    return report;
  }
  if (probe(opt.hi)) {
    // Monotone everywhere in range (e.g. an edgeless corpus).
    report.bounded = false;
    report.dt_c = opt.hi;
    report.verified_at_dtc = true;
    return report;
  }

  double lo = opt.lo;  // passing
  double hi = opt.hi;  // failing
  while (hi - lo > opt.resolution) {
    const double mid = 0.5 * (lo + hi);
    if (probe(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  report.dt_c = lo;
  report.verified_at_dtc = true;  // lo was probed monotone above
  report.verified_violation_above = !monotone_over_corpus(
      instances, report.dt_c + opt.resolution, layers, opt.violation_tol);
  return report;
}

ThresholdReport layers_to_threshold(const std::vector<PreparedInstance>& corpus, double dt,
                                    int ell_max) {
  if (corpus.empty()) {
    throw std::invalid_argument("threshold sweep needs at least one instance");
  }
  ThresholdReport report;
  report.n = corpus.front().graph.n;
  report.dt = dt;
  report.ell_max = ell_max;

  std::vector<int> keep;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].ground.min_energy == 0.0) {
      report.rejected.push_back(corpus[i].graph.name +
                                ": min_energy = 0, approximation ratio undefined");
    } else {
      keep.push_back(static_cast<int>(i));
    }
  }

  report.per_instance.resize(keep.size());
  const auto count = static_cast<long long>(keep.size());
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < count; ++idx) {
    const PreparedInstance& inst = corpus[keep[idx]];
    RunConfig cfg;
    cfg.dt = dt;
    cfg.max_layers = ell_max;
    cfg.stop_eps = 0.0;
    cfg.final_samples = 0;
    // Crossing tolerance: layer-0 values that equal a threshold analytically
    // (e.g. phi = 2/8 on the n=3 path) land a couple of ulps under it.
    constexpr double kCrossTol = 1e-12;
    cfg.stop_condition = [](const FeedbackRun& partial) {
      return partial.r_A.back() >= kRatioThreshold - kCrossTol &&
             partial.phi.back() >= kPhiThreshold - kCrossTol;
    };
    const FeedbackRun run = run_falqon(inst.hp, inst.comm, inst.ground, cfg);

    InstanceThreshold& row = report.per_instance[idx];
    row.name = inst.graph.name;
    row.layers_to_ra = ell_max + 1;
    row.layers_to_phi = ell_max + 1;
    row.censored_ra = true;
    row.censored_phi = true;
    for (int k = 0; k <= run.layers_executed; ++k) {
      if (row.censored_ra && run.r_A[k] >= kRatioThreshold - kCrossTol) {
        row.layers_to_ra = k;
        row.censored_ra = false;
      }
      if (row.censored_phi && run.phi[k] >= kPhiThreshold - kCrossTol) {
        row.layers_to_phi = k;
        row.censored_phi = false;
      }
    }
  }

  std::vector<double> ra_layers;
  std::vector<double> phi_layers;
  for (const InstanceThreshold& row : report.per_instance) {
    ra_layers.push_back(row.layers_to_ra);
    phi_layers.push_back(row.layers_to_phi);
  }
  report.mean_layers_ra = mean_of(ra_layers);
  report.std_layers_ra = std_dev(ra_layers, report.mean_layers_ra);
  report.mean_layers_phi = mean_of(phi_layers);
  report.std_layers_phi = std_dev(phi_layers, report.mean_layers_phi);
  return report;
}

double evaluate_qaoa(const ProblemHamiltonian& hp, const QaoaParameters& params,
                     const StateVector& psi0) {
  if (params.gammas.size() != params.betas.size()) {
    throw std::invalid_argument("qaoa parameter lists must have equal length");
  }
  StateVector psi = psi0;
  for (std::size_t k = 0; k < params.gammas.size(); ++k) {
    apply_problem_phase(psi, hp, params.gammas[k]);
    apply_mixer(psi, params.betas[k]);
  }
  return expect_hp(psi, hp);
}

QaoaParameters qaoa_params_from_trace(const FeedbackRun& run, double dt) {
  QaoaParameters params;
  for (int k = 1; k <= run.layers_executed; ++k) {
    params.gammas.push_back(dt);
    params.betas.push_back(run.beta[k] * dt);
  }
  return params;
}

CostReport cost_report(const FeedbackRun& run, const Graph& g) {
  CostReport report;
  report.total_samples = run.cost.total_samples;
  report.commutator_samples = run.cost.commutator_samples;
  report.energy_samples = run.cost.energy_samples;
  report.solution_samples = run.cost.solution_samples;
  report.shots_per_string = run.cost.shots_per_string;
  report.strings_per_layer = run.cost.per_layer_strings;
  report.string_bound = g.n * (g.n - 1);
  report.layers_executed = run.layers_executed;

  const auto deg = g.degrees();
  const bool regular =
      !deg.empty() && std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg[0]; });
  report.degree = regular ? deg[0] : -1;

  report.identity_ok =
      run.cost.commutator_samples == static_cast<long long>(run.cost.shots_per_string) *
                                         run.cost.per_layer_strings * run.layers_executed;
  report.scaling_note =
      "commutator bill = m * 2|E| * layers; for d-regular graphs 2|E| = d*n, i.e. O(m*d*l). "
      "Optimizer-driven alternatives scale as O(m*q(l)*l) with gradients or O(m*q(l)) "
      "without, with q(l) the optimizer iteration count (left symbolic here).";
  return report;
}

AggregateTrace aggregate_runs(int n, const std::vector<FeedbackRun>& runs) {
  if (runs.empty()) {
    throw std::invalid_argument("nothing to aggregate");
  }
  const int layers = runs.front().layers_executed;
  for (const FeedbackRun& run : runs) {
    if (run.layers_executed != layers) {
      throw std::invalid_argument("aggregation requires equal-length runs");
    }
  }
  AggregateTrace agg;
  agg.n = n;
  for (int k = 1; k <= layers; ++k) {
    std::vector<double> betas;
    double ra = 0.0;
    double phi = 0.0;
    for (const FeedbackRun& run : runs) {
      betas.push_back(run.beta[k]);
      ra += run.r_A[k];
      phi += run.phi[k];
    }
    const double mb = mean_of(betas);
    agg.mean_beta.push_back(mb);
    agg.std_beta.push_back(std_dev(betas, mb));
    agg.mean_ra.push_back(ra / runs.size());
    agg.mean_phi.push_back(phi / runs.size());
  }
  return agg;
}

}  // namespace falqon
