// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <random>

#include "falqon/graph.hpp"
#include "falqon/rng.hpp"
#include "falqon/statevector.hpp"

namespace testutil {

inline double gaussian(std::mt19937_64& rng) {
  // Box-Muller; keeps the draw sequence identical across standard libraries.
  const double u = falqon::uniform_open_unit(rng);
  const double v = falqon::uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

inline falqon::StateVector random_state(int n, std::mt19937_64& rng) {
  falqon::StateVector psi;
  psi.n = n;
  psi.amps.resize(std::uint64_t{1} << n);
  double norm_sq = 0.0;
  for (auto& a : psi.amps) {
    a = {gaussian(rng), gaussian(rng)};
    norm_sq += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (auto& a : psi.amps) a *= scale;
  return psi;
}

/// Random graph on n vertices: each pair becomes an edge with probability
/// dens, weights uniform in (0,1) when weighted.
inline falqon::Graph random_graph(int n, double dens, bool weighted, std::mt19937_64& rng) {
  falqon::Graph g;
  g.n = n;
  g.name = "random";
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (falqon::uniform_unit(rng) < dens) {
        g.edges.push_back({i, j, weighted ? falqon::uniform_open_unit(rng) : 1.0});
      }
    }
  }
  return g;
}

inline falqon::Graph path3() {
  return falqon::Graph{3, {{0, 1, 1.0}, {1, 2, 1.0}}, "path3"};
}

inline falqon::Graph triangle() {
  return falqon::Graph{3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}}, "k3"};
}

inline falqon::Graph complete4() {
  return falqon::Graph{
      4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}}, "k4"};
}

inline falqon::Graph edgeless(int n) { return falqon::Graph{n, {}, "edgeless"}; }

}  // namespace testutil
