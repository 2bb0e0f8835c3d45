// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "falqon/graph.hpp"

namespace falqon {

struct GenerateOptions {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  int count = 1;
  bool weighted = false;  // weights drawn uniformly in (0, 1)
};

struct GenerateResult {
  std::vector<Graph> graphs;
  /// False when sampling stalled before `count` pairwise nonisomorphic
  /// connected instances were found; `graphs` then holds everything found.
  bool complete = true;
  std::uint64_t attempts = 0;
};

/// Random connected d-regular instances via the pairing model, with
/// rejection of loops, multi-edges, disconnected samples, and isomorphic
/// duplicates. Bit-reproducible for a fixed seed.
GenerateResult generate_regular(const GenerateOptions& opt);

/// Every isomorphism class of connected d-regular graphs on n vertices.
/// Exhaustive, so restricted to small instances (n <= 10 for d <= 3,
/// n <= 8 otherwise).
std::vector<Graph> enumerate_regular_all(int n, int d);

/// Canonical form of the underlying unweighted graph: n followed by the
/// upper-triangular adjacency bits of a canonically relabeled copy, packed
/// into 64-bit words. Two graphs are isomorphic iff their forms compare equal.
std::vector<std::uint64_t> canonical_form(const Graph& g);

}  // namespace falqon
