// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#include "falqon/feedback.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "falqon/kernels.hpp"
#include "falqon/rng.hpp"

namespace falqon {

namespace {

constexpr double kMonotoneTol = 1e-12;

double ratio_or_nan(double energy, double min_energy) {
  if (min_energy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return energy / min_energy;
}

// Z-basis energy read-out: mean of diag over m sampled bitstrings.
double sampled_energy(const StateVector& psi, const ProblemHamiltonian& hp, int shots,
                      std::mt19937_64& rng) {
  std::vector<double> cdf(psi.amps.size());
  double acc = 0.0;
  for (std::size_t z = 0; z < psi.amps.size(); ++z) {
    acc += std::norm(psi.amps[z]);
    cdf[z] = acc;
  }
  double sum = 0.0;
  for (int s = 0; s < shots; ++s) {
    const double u = uniform_unit(rng) * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto z = static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
    sum += hp.diag[z];
  }
  return sum / shots;
}

std::vector<double> default_reference_schedule(int layers, double amp) {
  std::vector<double> schedule(layers);
  for (int k = 1; k <= layers; ++k) {
    schedule[k - 1] = kick_alpha(k, layers, amp);
  }
  return schedule;
}

}  // namespace

void RunConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("dt must be positive and finite");
  }
  if (max_layers < 1) {
    throw std::invalid_argument("max_layers must be >= 1");
  }
  if (estimator == Estimator::kShots && shots < 1) {
    throw std::invalid_argument("shot estimator requires at least one shot per string");
  }
  if (law.gain <= 0.0) {
    throw std::invalid_argument("feedback gain must be positive");
  }
  if (stop_patience < 1) {
    throw std::invalid_argument("stop_patience must be >= 1");
  }
  if (final_samples < 0) {
    throw std::invalid_argument("final_samples must be >= 0");
  }
  if ((variant == Variant::kReference || variant == Variant::kIterativeQlc) &&
      !lambda_schedule.empty() && static_cast<int>(lambda_schedule.size()) < max_layers) {
    throw std::invalid_argument("reference schedule shorter than the run: " +
                                std::to_string(lambda_schedule.size()) + " < " +
                                std::to_string(max_layers) + " layers");
  }
}

double kick_alpha(int k, int ell, double amp) {
  const double x = M_PI * k / (2.0 * ell) - M_PI / 2.0;
  const double s = std::sin(x);
  return amp * s * s;
}

double kick_transform(double beta_k, int k, int ell, const KickConfig& cfg,
                      std::mt19937_64& rng) {
  if (k < 1 || k > ell) {
    throw std::invalid_argument("kick layer index out of range");
  }
  if (beta_k >= cfg.beta_c) return beta_k;
  const double p = std::clamp((1.0 - beta_k) * kick_alpha(k, ell, cfg.amp), 0.0, 1.0);
  return uniform_unit(rng) < p ? cfg.beta_c : beta_k;
}

ShotEstimate estimate_commutator_shots(const StateVector& psi, const CommutatorObservable& comm,
                                       int shots, std::mt19937_64& rng) {
  if (shots < 1) {
    throw std::invalid_argument("shot estimator requires at least one shot per string");
  }
  if (psi.n != comm.n) {
    throw std::invalid_argument("estimate_commutator_shots: qubit count mismatch");
  }
  ShotEstimate est;
  double var_acc = 0.0;
  for (const YzTerm& term : comm.terms) {
    const double exact = kernels::expect_yz(psi.amps, psi.n, term.y, term.z);
    const double p_plus = std::clamp(0.5 * (1.0 + exact), 0.0, 1.0);
    long long plus = 0;
    for (int s = 0; s < shots; ++s) {
      if (uniform_unit(rng) < p_plus) ++plus;
    }
    const double mean = 2.0 * static_cast<double>(plus) / shots - 1.0;
    est.value += term.w * mean;
    var_acc += term.w * term.w * (1.0 - mean * mean) / shots;
    est.samples_used += shots;
  }
  est.stderr_ = std::sqrt(std::max(var_acc, 0.0));
  return est;
}

ShotEstimate estimate_commutator_shots(const StateVector& psi, const CommutatorObservable& comm,
                                       int shots, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return estimate_commutator_shots(psi, comm, shots, rng);
}

FeedbackRun run_falqon(const ProblemHamiltonian& hp, const CommutatorObservable& comm,
                       const GroundStateSet& ground, const RunConfig& cfg) {
  return run_falqon(hp, comm, ground, cfg, init_mixer_ground(hp.n));
}

FeedbackRun run_falqon(const ProblemHamiltonian& hp, const CommutatorObservable& comm,
                       const GroundStateSet& ground, const RunConfig& cfg,
                       StateVector initial) {
  cfg.validate();
  if (hp.n != comm.n) {
    throw std::invalid_argument("run_falqon: Hamiltonian and observable disagree on qubits");
  }
  if (initial.amps.size() != hp.diag.size()) {
    throw std::invalid_argument("run_falqon: initial state dimension mismatch");
  }

  const bool shot_mode = cfg.estimator == Estimator::kShots;
  const bool kicks = cfg.variant == Variant::kKicks;
  const bool reference =
      cfg.variant == Variant::kReference || cfg.variant == Variant::kIterativeQlc;

  std::vector<double> schedule;
  if (reference) {
    schedule = cfg.lambda_schedule.empty()
                   ? default_reference_schedule(cfg.max_layers, cfg.kick.amp)
                   : cfg.lambda_schedule;
  }

  std::mt19937_64 kick_rng(derive_seed(cfg.seed, "kicks"));
  std::mt19937_64 shot_rng(derive_seed(cfg.seed, "shots"));
  std::mt19937_64 energy_rng(derive_seed(cfg.seed, "energy"));

  FeedbackRun run;
  run.dt = cfg.dt;
  run.tau = 2.0 * cfg.dt;
  run.min_energy = ground.min_energy;
  run.cost.per_layer_strings = static_cast<int>(comm.term_count());
  run.cost.shots_per_string = shot_mode ? cfg.shots : 0;

  const auto reserve = static_cast<std::size_t>(cfg.max_layers) + 1;
  run.beta.reserve(reserve);
  run.A.reserve(reserve);
  run.A_stderr.reserve(reserve);
  run.energy.reserve(reserve);
  run.r_A.reserve(reserve);
  run.phi.reserve(reserve);
  run.cumulative_samples.reserve(reserve);

  StateVector psi = std::move(initial);

  // Layer-0 snapshot. A is evaluated exactly here as a diagnostic; the
  // protocol seeds beta_1 instead of measuring, so nothing is billed.
  run.beta.push_back(0.0);
  run.A.push_back(expect_commutator(psi, comm));
  run.A_stderr.push_back(0.0);
  run.energy.push_back(expect_hp(psi, hp));
  run.r_A.push_back(ratio_or_nan(run.energy[0], ground.min_energy));
  run.phi.push_back(ground_overlap(psi, ground));
  run.cumulative_samples.push_back(0);

  double beta_k = cfg.beta_1;
  if (kicks) beta_k = kick_transform(beta_k, 1, cfg.max_layers, cfg.kick, kick_rng);
  int quiet_streak = 0;

  for (int k = 1; k <= cfg.max_layers; ++k) {
    StepParams step;
    step.dt = cfg.dt;
    step.beta = beta_k;
    step.lambda = reference ? schedule[k - 1] : 0.0;
    apply_layer(psi, hp, step);
    run.layers_executed = k;

    double a_k;
    double a_err = 0.0;
    if (shot_mode) {
      const ShotEstimate est = estimate_commutator_shots(psi, comm, cfg.shots, shot_rng);
      a_k = est.value;
      a_err = est.stderr_;
      run.cost.commutator_samples += est.samples_used;
    } else {
      a_k = expect_commutator(psi, comm);
    }

    // The energy trace stays exact in shot mode too, so monotonicity
    // diagnostics reflect the algorithm rather than estimation noise.
    const double energy_k = expect_hp(psi, hp);
    if (shot_mode && cfg.estimate_energy) {
      run.energy_estimate.push_back(sampled_energy(psi, hp, cfg.shots, energy_rng));
      run.cost.energy_samples += cfg.shots;
    }

    run.beta.push_back(beta_k);
    run.A.push_back(a_k);
    run.A_stderr.push_back(a_err);
    run.energy.push_back(energy_k);
    run.r_A.push_back(ratio_or_nan(energy_k, ground.min_energy));
    run.phi.push_back(ground_overlap(psi, ground));
    run.cumulative_samples.push_back(run.cost.commutator_samples + run.cost.energy_samples);
    if (energy_k > run.energy[k - 1] + kMonotoneTol) {
      run.monotone_violations.push_back(k);
    }

    double beta_next = cfg.law.beta_from(a_k);
    if (kicks && k < cfg.max_layers) {
      beta_next = kick_transform(beta_next, k + 1, cfg.max_layers, cfg.kick, kick_rng);
    }
    quiet_streak = (std::abs(beta_next) < cfg.stop_eps) ? quiet_streak + 1 : 0;
    beta_k = beta_next;

    if (cfg.stop_eps > 0.0 && quiet_streak >= cfg.stop_patience) {
      run.early_stopped = true;
      break;
    }
    if (cfg.stop_condition && cfg.stop_condition(run)) {
      break;
    }
  }

  run.cost.total_samples = run.cost.commutator_samples + run.cost.energy_samples;

  if (cfg.final_samples > 0) {
    const auto samples =
        sample_bitstrings(psi, cfg.final_samples, derive_seed(cfg.seed, "solution"));
    run.best_bitstring = samples[0];
    run.best_energy = hp.diag[samples[0]];
    for (std::uint64_t z : samples) {
      if (hp.diag[z] < run.best_energy) {
        run.best_energy = hp.diag[z];
        run.best_bitstring = z;
      }
    }
    run.cost.solution_samples = cfg.final_samples;
    run.sampled_solution = true;
  }

  run.final_state = std::move(psi);
  return run;
}

FeedbackRun run_with_reference(const ProblemHamiltonian& hp, const CommutatorObservable& comm,
                               const GroundStateSet& ground, const RunConfig& cfg,
                               const std::vector<double>& lambda_schedule) {
  RunConfig ref = cfg;
  ref.variant = Variant::kReference;
  ref.lambda_schedule = lambda_schedule;
  return run_falqon(hp, comm, ground, ref);
}

IterativeQlcResult run_iterative_qlc(const ProblemHamiltonian& hp,
                                     const CommutatorObservable& comm,
                                     const GroundStateSet& ground, const RunConfig& cfg,
                                     int iterations) {
  if (iterations < 1) {
    throw std::invalid_argument("iterative refinement needs at least one pass");
  }
  // Passes with a lingering final beta have no improvement guarantee.
  constexpr double kEndTol = 1e-3;

  IterativeQlcResult result;
  std::vector<double> lambda(cfg.max_layers, 0.0);

  for (int pass = 0; pass < iterations; ++pass) {
    RunConfig pass_cfg = cfg;
    if (pass == 0) {
      // A single pass is exactly the standard protocol, bit for bit.
      pass_cfg.variant = Variant::kStandard;
      pass_cfg.lambda_schedule.clear();
    } else {
      pass_cfg.seed = derive_seed(cfg.seed, "qlc-pass", static_cast<std::uint64_t>(pass));
      pass_cfg.variant = Variant::kIterativeQlc;
      pass_cfg.lambda_schedule = lambda;
    }
    FeedbackRun run = run_falqon(hp, comm, ground, pass_cfg);

    if (pass + 1 < iterations && std::abs(run.final_beta()) > kEndTol) {
      result.warnings.push_back("pass " + std::to_string(pass) + ": final beta " +
                                std::to_string(run.final_beta()) +
                                " is not near zero; the next pass may not improve <H_p>");
    }
    // lambda^(i+1) = lambda^(i) + beta^(i), padded with zeros when the pass
    // stopped early (beta had converged to zero there).
    for (int k = 1; k <= run.layers_executed; ++k) {
      lambda[k - 1] += run.beta[k];
    }
    result.runs.push_back(std::move(run));
  }
  return result;
}

}  // namespace falqon
