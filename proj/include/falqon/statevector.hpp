// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "falqon/common.hpp"
#include "falqon/graph.hpp"
#include "falqon/hamiltonian.hpp"
#include "falqon/pauli.hpp"

namespace falqon {

/// Dense n-qubit state. amps[z] is the amplitude of computational basis state
/// z with the little-endian bit convention shared with ProblemHamiltonian.
struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amps;

  std::uint64_t dim() const { return amps.size(); }
};

/// Parameters of one Trotter layer U_d((beta + lambda) * dt) U_p(dt).
struct StepParams {
  double dt = 0.0;
  double beta = 0.0;
  double lambda = 0.0;  // reference perturbation, 0 in the standard protocol
};

/// Product of the -1 eigenstates of X on every qubit, the ground state of the
/// mixer: amps[z] = (-1)^popcount(z) / 2^(n/2).
StateVector init_mixer_ground(int n, int max_qubits = kDefaultMaxQubits);

/// Uniform |0...0> basis state; convenience for tests and custom protocols.
StateVector init_basis_state(int n, std::uint64_t z, int max_qubits = kDefaultMaxQubits);

// In-place mutation API. All operations preserve the norm.
void apply_problem_phase(StateVector& psi, const ProblemHamiltonian& hp, double dt);
void apply_mixer(StateVector& psi, double angle);
void apply_layer(StateVector& psi, const ProblemHamiltonian& hp, const StepParams& step);

double expect_hp(const StateVector& psi, const ProblemHamiltonian& hp);
double expect_commutator(const StateVector& psi, const CommutatorObservable& comm);
double expect_pauli(const StateVector& psi, const PauliString& p);
double norm(const StateVector& psi);

/// Total probability of the ground-state bitstrings (the success probability
/// phi), clamped to [0, 1].
double ground_overlap(const StateVector& psi, const GroundStateSet& ground);

/// i.i.d. Z-basis samples from |amps|^2 with a dedicated seeded stream.
std::vector<std::uint64_t> sample_bitstrings(const StateVector& psi, int shots,
                                             std::uint64_t seed);

// Value-returning wrappers over the mutation API.
StateVector with_problem_phase(StateVector psi, const ProblemHamiltonian& hp, double dt);
StateVector with_mixer(StateVector psi, double angle);

}  // namespace falqon
