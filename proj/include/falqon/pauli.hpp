// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

namespace falqon {

/// Tensor product of single-qubit Paulis on distinct qubits, e.g.
/// {{0, 'Y'}, {3, 'Z'}} for Y_0 Z_3. An empty list is the identity.
struct PauliString {
  std::vector<std::pair<int, char>> ops;

  /// Throws std::invalid_argument for repeated qubits, indices outside
  /// [0, n), or letters other than X, Y, Z.
  void validate(int n) const;
};

}  // namespace falqon
