// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "falqon/common.hpp"
#include "falqon/graph.hpp"

namespace falqon {

/// MaxCut problem Hamiltonian H_p = -sum_{(i,j)} (w/2)(1 - Z_i Z_j), stored as
/// its full diagonal in the computational basis. Bit i of the basis index is
/// the Z eigenvalue sign of qubit i (little-endian, the convention used
/// throughout).
struct ProblemHamiltonian {
  int n = 0;
  std::vector<double> diag;  // diag[z] = <z|H_p|z>, length 2^n
  std::vector<Edge> terms;   // mirrors the graph edges
};

/// Transverse-field mixer H_d = sum_j X_j. Never materialized; evolution under
/// it factorizes into independent single-qubit rotations.
struct MixerHamiltonian {
  int n = 0;
};

/// One two-qubit term w * Y_y Z_z of the commutator observable.
struct YzTerm {
  int y = 0;
  int z = 0;
  double w = 1.0;
};

/// i[H_d, H_p] = sum_{(i,j)} w (Y_i Z_j + Z_i Y_j): two YZ placements per
/// edge, coefficients equal to the edge weights. `by_y` groups the terms by
/// the qubit carrying Y so the expectation kernel makes one pass per qubit.
struct CommutatorObservable {
  int n = 0;
  std::vector<YzTerm> terms;
  std::vector<std::vector<std::pair<int, double>>> by_y;

  std::size_t term_count() const { return terms.size(); }
};

ProblemHamiltonian build_problem(const Graph& g, int max_qubits = kDefaultMaxQubits);
MixerHamiltonian build_mixer(const Graph& g);
CommutatorObservable build_commutator(const Graph& g);

}  // namespace falqon
