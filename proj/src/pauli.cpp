// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#include "falqon/pauli.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace falqon {

void PauliString::validate(int n) const {
  std::set<int> qubits;
  for (const auto& [q, op] : ops) {
    if (q < 0 || q >= n) {
      throw std::invalid_argument("Pauli placement on qubit " + std::to_string(q) +
                                  " outside [0, " + std::to_string(n) + ")");
    }
    if (op != 'X' && op != 'Y' && op != 'Z') {
      throw std::invalid_argument(std::string("invalid Pauli letter '") + op + "'");
    }
    if (!qubits.insert(q).second) {
      throw std::invalid_argument("repeated qubit " + std::to_string(q) + " in Pauli string");
    }
  }
}

}  // namespace falqon
