// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#include "falqon/hamiltonian.hpp"

namespace falqon {

ProblemHamiltonian build_problem(const Graph& g, int max_qubits) {
  g.validate();
  check_qubit_count(g.n, max_qubits);

  ProblemHamiltonian hp;
  hp.n = g.n;
  hp.terms = g.edges;
  hp.diag.resize(state_count(g.n));
  const auto dim = static_cast<long long>(hp.diag.size());
#pragma omp parallel for schedule(static)
  for (long long z = 0; z < dim; ++z) {
    hp.diag[z] = cut_energy(g, static_cast<std::uint64_t>(z));
  }
  return hp;
}

MixerHamiltonian build_mixer(const Graph& g) {
  g.validate();
  return MixerHamiltonian{g.n};
}

CommutatorObservable build_commutator(const Graph& g) {
  g.validate();
  CommutatorObservable comm;
  comm.n = g.n;
  comm.by_y.resize(g.n);
  for (const Edge& e : g.edges) {
    comm.terms.push_back(YzTerm{e.i, e.j, e.w});
    comm.terms.push_back(YzTerm{e.j, e.i, e.w});
    comm.by_y[e.i].emplace_back(e.j, e.w);
    comm.by_y[e.j].emplace_back(e.i, e.w);
  }
  return comm;
}

}  // namespace falqon
