// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace falqon {

// Dense statevector / diagonal storage cap. 2^26 complex doubles is 1 GiB.
inline constexpr int kDefaultMaxQubits = 26;

inline std::uint64_t state_count(int n) { return std::uint64_t{1} << n; }

inline void check_qubit_count(int n, int max_qubits = kDefaultMaxQubits) {
  if (n < 1) {
    throw std::invalid_argument("qubit count must be at least 1, got " + std::to_string(n));
  }
  if (n > max_qubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n) +
                                " exceeds the memory cap of " + std::to_string(max_qubits) +
                                " qubits");
  }
}

}  // namespace falqon
