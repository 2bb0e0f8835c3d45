// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "falqon/common.hpp"

namespace falqon {

struct Edge {
  int i = 0;
  int j = 0;
  double w = 1.0;

  bool operator==(const Edge&) const = default;
};

/// Weighted undirected MaxCut instance. Edges satisfy 0 <= i < j < n, carry
/// finite weights (1 for unweighted graphs), and contain no duplicates.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  std::string name;

  bool operator==(const Graph&) const = default;

  /// Throws std::invalid_argument on self-loops, duplicate edges, indices out
  /// of range, or non-finite weights.
  void validate() const;

  std::vector<int> degrees() const;
  bool is_connected() const;
  bool is_regular(int d) const;
  double total_weight() const;
};

/// Exact minimum of <H_p> over computational basis states, together with all
/// attaining bitstrings. Weighted ties are resolved with a 1e-9 absolute
/// tolerance on the energy.
struct GroundStateSet {
  double min_energy = 0.0;
  std::vector<std::uint64_t> states;

  std::size_t degeneracy() const { return states.size(); }
};

/// Cut energy of bitstring z: -sum_e (w_e / 2) (1 - s_i s_j), where s_i is the
/// Z eigenvalue of bit i of z (little-endian, bit set => s = -1). This is the
/// single arithmetic path shared by the exact solver and the diagonal builder.
double cut_energy(const Graph& g, std::uint64_t z);

/// Exhaustive MaxCut over all 2^n bitstrings.
GroundStateSet brute_force_maxcut(const Graph& g, int max_qubits = kDefaultMaxQubits);

/// JSON instance format: {"name": str, "n": int, "edges": [[i, j, w], ...]}.
Graph parse_graph_json(const std::string& text);
std::string graph_to_json(const Graph& g);

Graph read_graph(const std::string& path);
void write_graph(const Graph& g, const std::string& path);

}  // namespace falqon
