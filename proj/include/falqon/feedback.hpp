// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "falqon/graph.hpp"
#include "falqon/hamiltonian.hpp"
#include "falqon/statevector.hpp"

namespace falqon {

/// Control law beta = -gain * shape(A). The default shape is the identity;
/// any replacement must satisfy shape(0) = 0 and A * shape(A) > 0 for A != 0
/// to preserve the descent property.
struct FeedbackLaw {
  double gain = 1.0;
  std::function<double(double)> shape;  // empty => identity

  double beta_from(double a) const {
    const double b = -gain * (shape ? shape(a) : a);
    return b == 0.0 ? 0.0 : b;  // normalize -0 so inert traces print as 0
  }
};

enum class Estimator { kExact, kShots };
enum class Variant { kStandard, kKicks, kReference, kIterativeQlc };

/// Random-kick heuristic: a coefficient below beta_c is raised to beta_c with
/// probability clamp((1 - beta) * alpha_k, 0, 1), where
/// alpha_k = amp * sin^2(pi k / (2 l) - pi / 2) decays to zero at the final
/// layer.
struct KickConfig {
  double beta_c = 1.0;
  double amp = 0.1;
};

struct RunConfig {
  double dt = 0.1;
  int max_layers = 100;

  Estimator estimator = Estimator::kExact;
  int shots = 1024;             // m, shots per Pauli string in shot mode
  bool estimate_energy = false; // bill the per-layer Z-basis energy circuit too
  std::uint64_t seed = 0;

  Variant variant = Variant::kStandard;
  KickConfig kick;
  /// Per-layer reference perturbation; empty selects the default alpha_k
  /// schedule for the reference variant. Must cover max_layers when given.
  std::vector<double> lambda_schedule;
  int qlc_iterations = 3;

  double beta_1 = 0.0;
  /// Stop once |beta| stays below stop_eps for stop_patience consecutive
  /// layers; 0 disables early stopping.
  double stop_eps = 1e-6;
  int stop_patience = 5;

  /// Z-basis samples drawn from the final state to pick the best candidate
  /// bitstring; 0 skips the read-out.
  int final_samples = 1024;

  FeedbackLaw law;

  /// Optional driver hook checked after each recorded layer; returning true
  /// ends the run (used by sweep drivers to stop at threshold crossings).
  std::function<bool(const struct FeedbackRun&)> stop_condition;

  void validate() const;
};

/// Sample accounting. total_samples is the feedback-loop bill
/// m * 2|E| * layers (+ energy circuits when enabled); the final solution
/// read-out is tracked separately.
struct CostLedger {
  long long total_samples = 0;
  long long commutator_samples = 0;
  long long energy_samples = 0;
  long long solution_samples = 0;
  int per_layer_strings = 0;  // 2|E|
  int shots_per_string = 0;   // m (0 in exact mode)
};

/// Complete per-layer trace of one feedback run. Index 0 holds the initial
/// state snapshot (beta[0] = 0, A[0] computed exactly as a diagnostic and
/// never billed); index k >= 1 holds the values after layer k.
struct FeedbackRun {
  std::vector<double> beta;
  std::vector<double> A;
  std::vector<double> A_stderr;  // zero in exact mode
  std::vector<double> energy;    // always exact, independent of the estimator
  std::vector<double> energy_estimate;  // shot-mode energy read-out when enabled
  std::vector<double> r_A;       // energy / min_energy, NaN when min_energy = 0
  std::vector<double> phi;
  std::vector<long long> cumulative_samples;

  std::vector<int> monotone_violations;  // layers with energy[k] > energy[k-1] + 1e-12
  int layers_executed = 0;
  bool early_stopped = false;

  StateVector final_state;
  std::uint64_t best_bitstring = 0;
  double best_energy = 0.0;
  bool sampled_solution = false;

  CostLedger cost;

  double dt = 0.0;
  double tau = 0.0;  // feedback delay, 2 * dt
  double min_energy = 0.0;

  double final_beta() const { return beta.empty() ? 0.0 : beta.back(); }
};

/// Kick level for layer k of an l-layer schedule.
double kick_alpha(int k, int ell, double amp);

/// Applies the random-kick rule to a freshly computed coefficient before the
/// layer that uses it executes.
double kick_transform(double beta_k, int k, int ell, const KickConfig& cfg,
                      std::mt19937_64& rng);

struct ShotEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  long long samples_used = 0;
};

/// Shot-noise model of the commutator estimate: each Pauli string is sampled
/// as m independent +-1 outcomes with P(+1) = (1 + <P>)/2; the estimate is the
/// weighted sum of sample means and stderr_ = sqrt(sum w^2 var / m) with the
/// plug-in variance var = 1 - mean^2.
ShotEstimate estimate_commutator_shots(const StateVector& psi, const CommutatorObservable& comm,
                                       int shots, std::mt19937_64& rng);
ShotEstimate estimate_commutator_shots(const StateVector& psi, const CommutatorObservable& comm,
                                       int shots, std::uint64_t seed);

/// The feedback loop: |psi_k> = U_d(beta_k) U_p |psi_(k-1)> with beta_1 seeded
/// from the config and beta_(k+1) = -gain * shape(A_k) thereafter.
FeedbackRun run_falqon(const ProblemHamiltonian& hp, const CommutatorObservable& comm,
                       const GroundStateSet& ground, const RunConfig& cfg);
FeedbackRun run_falqon(const ProblemHamiltonian& hp, const CommutatorObservable& comm,
                       const GroundStateSet& ground, const RunConfig& cfg,
                       StateVector initial);

/// Reference-perturbation variant: the mixer angle at layer k is
/// (lambda_k + beta_k) * dt while the feedback law is unchanged.
FeedbackRun run_with_reference(const ProblemHamiltonian& hp, const CommutatorObservable& comm,
                               const GroundStateSet& ground, const RunConfig& cfg,
                               const std::vector<double>& lambda_schedule);

struct IterativeQlcResult {
  std::vector<FeedbackRun> runs;
  /// One entry per pass whose final beta was not close to zero, in which case
  /// the next pass has no monotonic-improvement guarantee.
  std::vector<std::string> warnings;
};

/// Iterative refinement: pass 0 is standard, pass i >= 1 runs the reference
/// variant with lambda^(i) = lambda^(i-1) + beta^(i-1).
IterativeQlcResult run_iterative_qlc(const ProblemHamiltonian& hp,
                                     const CommutatorObservable& comm,
                                     const GroundStateSet& ground, const RunConfig& cfg,
                                     int iterations);

}  // namespace falqon
