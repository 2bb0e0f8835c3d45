// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#include "falqon/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "falqon/kernels.hpp"
#include "falqon/rng.hpp"

namespace falqon {

namespace {

void check_dims(const StateVector& psi, std::size_t expected, const char* what) {
  if (psi.amps.size() != expected) {
    throw std::invalid_argument(std::string(what) + ": state dimension " +
                                std::to_string(psi.amps.size()) + " does not match " +
                                std::to_string(expected));
  }
}

}  // namespace

StateVector init_mixer_ground(int n, int max_qubits) {
  check_qubit_count(n, max_qubits);
  StateVector psi;
  psi.n = n;
  psi.amps.resize(state_count(n));
  const double scale = 1.0 / std::sqrt(static_cast<double>(state_count(n)));
  for (std::uint64_t z = 0; z < psi.amps.size(); ++z) {
    psi.amps[z] = (std::popcount(z) & 1) ? -scale : scale;
  }
  return psi;
}

StateVector init_basis_state(int n, std::uint64_t z, int max_qubits) {
  check_qubit_count(n, max_qubits);
  if (z >= state_count(n)) {
    throw std::invalid_argument("basis state index out of range");
  }
  StateVector psi;
  psi.n = n;
  psi.amps.assign(state_count(n), 0.0);
  psi.amps[z] = 1.0;
  return psi;
}

void apply_problem_phase(StateVector& psi, const ProblemHamiltonian& hp, double dt) {
  check_dims(psi, hp.diag.size(), "apply_problem_phase");
  kernels::apply_phase(psi.amps, hp.diag, dt);
}

void apply_mixer(StateVector& psi, double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("apply_mixer: non-finite angle");
  }
  kernels::apply_rx_all(psi.amps, psi.n, angle);
}

void apply_layer(StateVector& psi, const ProblemHamiltonian& hp, const StepParams& step) {
  apply_problem_phase(psi, hp, step.dt);
  apply_mixer(psi, (step.beta + step.lambda) * step.dt);
}

double expect_hp(const StateVector& psi, const ProblemHamiltonian& hp) {
  check_dims(psi, hp.diag.size(), "expect_hp");
  return kernels::expect_diag(psi.amps, hp.diag);
}

double expect_commutator(const StateVector& psi, const CommutatorObservable& comm) {
  if (psi.n != comm.n) {
    throw std::invalid_argument("expect_commutator: qubit count mismatch");
  }
  double acc = 0.0;
  for (int q = 0; q < comm.n; ++q) {
    if (comm.by_y[q].empty()) continue;
    acc += kernels::expect_yz_group(psi.amps, psi.n, q, comm.by_y[q]);
  }
  return acc;
}

double expect_pauli(const StateVector& psi, const PauliString& p) {
  p.validate(psi.n);
  std::uint64_t flip = 0;
  std::uint64_t ymask = 0;
  std::uint64_t zmask = 0;
  int y_count = 0;
  for (const auto& [q, op] : p.ops) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (op) {
      case 'X':
        flip |= bit;
        break;
      case 'Y':
        flip |= bit;
        ymask |= bit;
        ++y_count;
        break;
      default:
        zmask |= bit;
        break;
    }
  }
  // (P psi)[z] = psi[z ^ flip] * (-i)^{#Y} * (-1)^{#set Y bits} * (-1)^{#set Z bits}
  static constexpr std::complex<double> kMinusIPow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  const std::complex<double> base = kMinusIPow[y_count & 3];
  std::complex<double> acc = 0.0;
  for (std::uint64_t z = 0; z < psi.amps.size(); ++z) {
    std::complex<double> term = std::conj(psi.amps[z]) * psi.amps[z ^ flip] * base;
    const int sign = (std::popcount(z & ymask) + std::popcount(z & zmask)) & 1;
    acc += sign ? -term : term;
  }
  return acc.real();
}

double norm(const StateVector& psi) { return std::sqrt(kernels::norm_sq(psi.amps)); }

double ground_overlap(const StateVector& psi, const GroundStateSet& ground) {
  double acc = 0.0;
  for (std::uint64_t z : ground.states) {
    if (z >= psi.amps.size()) {
      throw std::invalid_argument("ground_overlap: ground state index out of range");
    }
    acc += std::norm(psi.amps[z]);
  }
  return std::clamp(acc, 0.0, 1.0);
}

std::vector<std::uint64_t> sample_bitstrings(const StateVector& psi, int shots,
                                             std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("sample_bitstrings: shots must be >= 1");
  }
  std::vector<double> cdf(psi.amps.size());
  double acc = 0.0;
  for (std::size_t z = 0; z < psi.amps.size(); ++z) {
    acc += std::norm(psi.amps[z]);
    cdf[z] = acc;
  }
  const double total = acc;

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> samples(shots);
  for (int s = 0; s < shots; ++s) {
    const double u = uniform_unit(rng) * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    samples[s] = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
        it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
  }
  return samples;
}

StateVector with_problem_phase(StateVector psi, const ProblemHamiltonian& hp, double dt) {
  apply_problem_phase(psi, hp, dt);
  return psi;
}

StateVector with_mixer(StateVector psi, double angle) {
  apply_mixer(psi, angle);
  return psi;
}

}  // namespace falqon
