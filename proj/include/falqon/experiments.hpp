// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "falqon/feedback.hpp"
#include "falqon/graph.hpp"
#include "falqon/hamiltonian.hpp"

namespace falqon {

// Reference thresholds: the best guaranteed classical approximation ratio,
// and the ground-state probability at which four read-out repetitions
// suffice on average.
inline constexpr double kRatioThreshold = 0.932;
inline constexpr double kPhiThreshold = 0.25;

/// Instance with its prebuilt operators, shared across sweep evaluations.
struct PreparedInstance {
  Graph graph;
  ProblemHamiltonian hp;
  CommutatorObservable comm;
  GroundStateSet ground;
};

std::vector<PreparedInstance> prepare_instances(const std::vector<Graph>& graphs);

/// Layer horizon used for the per-size experiment suites.
int default_layer_horizon(int n);

struct CriticalDtOptions {
  double lo = 1e-3;
  double hi = 1.0;
  double resolution = 1e-3;
  int layers = 0;  // 0 => default_layer_horizon(n)
  double violation_tol = 1e-12;
};

struct CriticalDtReport {
  double dt_c = 0.0;
  bool bounded = true;        // false when the predicate still passes at hi
  bool failed_at_lo = false;  // predicate already fails at lo; dt_c meaningless
  bool verified_at_dtc = false;
  bool verified_violation_above = false;
  std::vector<std::pair<double, bool>> search_trace;  // (dt, monotone) per probe
  CriticalDtOptions options;
  int instances = 0;
};

/// True when no instance increases its exact energy by more than tol at any
/// layer of an l-layer run with time step dt.
bool monotone_over_corpus(const std::vector<PreparedInstance>& instances, double dt,
                          int layers, double tol = 1e-12);

/// Bisection for the largest monotonicity-preserving time step on a corpus.
CriticalDtReport find_critical_dt(const std::vector<PreparedInstance>& instances,
                                  const CriticalDtOptions& opt);

struct InstanceThreshold {
  std::string name;
  int layers_to_ra = 0;  // first layer with r_A >= 0.932; ell_max + 1 if censored
  int layers_to_phi = 0;
  bool censored_ra = false;
  bool censored_phi = false;
};

struct ThresholdReport {
  int n = 0;
  double dt = 0.0;
  int ell_max = 0;
  std::vector<InstanceThreshold> per_instance;
  std::vector<std::string> rejected;  // "name: reason", e.g. min_energy = 0
  double mean_layers_ra = 0.0;
  double std_layers_ra = 0.0;
  double mean_layers_phi = 0.0;
  double std_layers_phi = 0.0;
};

/// First-crossing layers for both reference thresholds on each instance,
/// exact estimation, censored crossings reported as ell_max + 1.
ThresholdReport layers_to_threshold(const std::vector<PreparedInstance>& corpus, double dt,
                                    int ell_max);

/// 2 * ell angles: U = U_d(betas[l-1]) U_p(gammas[l-1]) ... U_d(betas[0]) U_p(gammas[0])
/// with U_p(g) = exp(-i g H_p) and U_d(b) = exp(-i b H_d).
struct QaoaParameters {
  std::vector<double> gammas;
  std::vector<double> betas;
};

/// Exact <H_p> after the parameterized circuit. Evaluation only; no
/// optimizer lives here.
double evaluate_qaoa(const ProblemHamiltonian& hp, const QaoaParameters& params,
                     const StateVector& psi0);

/// Angles reproducing a feedback run's circuit: gamma_k = dt and
/// beta_k = (trace coefficient) * dt.
QaoaParameters qaoa_params_from_trace(const FeedbackRun& run, double dt);

struct CostReport {
  long long total_samples = 0;
  long long commutator_samples = 0;
  long long energy_samples = 0;
  long long solution_samples = 0;
  int shots_per_string = 0;
  int strings_per_layer = 0;  // 2|E|
  int string_bound = 0;       // n(n-1)
  int layers_executed = 0;
  int degree = -1;  // vertex degree when the graph is regular, else -1
  bool identity_ok = false;  // commutator_samples == m * 2|E| * layers
  std::string scaling_note;
};

/// Summary of the sampling bill, checking the m * 2|E| * layers identity and
/// reporting both the MaxCut string count and the generic n(n-1) bound.
CostReport cost_report(const FeedbackRun& run, const Graph& g);

/// Per-layer mean/std of beta plus mean r_A and phi across equal-length runs.
struct AggregateTrace {
  int n = 0;
  std::vector<double> mean_beta;
  std::vector<double> std_beta;
  std::vector<double> mean_ra;
  std::vector<double> mean_phi;
};

AggregateTrace aggregate_runs(int n, const std::vector<FeedbackRun>& runs);

}  // namespace falqon
