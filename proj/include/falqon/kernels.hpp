// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>
#include <utility>

namespace falqon::kernels {

using cplx = std::complex<double>;

// Pairs of (z-qubit, weight) sharing one Y qubit; see CommutatorObservable.
using ZWeights = std::span<const std::pair<int, double>>;

// Parallel kernels fall back to the serial ones below this state size; the
// fork/join overhead dominates on tiny vectors.
inline constexpr std::size_t kParallelCutoff = 4096;

// Plain-loop reference implementations. Kept permanently as the comparison
// baseline for the OpenMP kernels and for small states.
namespace serial {

// amps[z] *= exp(-i * diag[z] * dt)
void apply_phase(std::span<cplx> amps, std::span<const double> diag, double dt);

// exp(-i * angle * X_q) applied to every qubit q in [0, n).
void apply_rx_all(std::span<cplx> amps, int n, double angle);

// sum_z diag[z] * |amps[z]|^2
double expect_diag(std::span<const cplx> amps, std::span<const double> diag);

// <Y_y Z_z>
double expect_yz(std::span<const cplx> amps, int n, int y_qubit, int z_qubit);

// sum over (z, w) in zs of w * <Y_y Z_z>, one pass over the amplitudes.
double expect_yz_group(std::span<const cplx> amps, int n, int y_qubit, ZWeights zs);

double norm_sq(std::span<const cplx> amps);

}  // namespace serial

// OpenMP versions of the kernels above. Compiled without OpenMP they reduce
// to the same loops.
namespace parallel {

void apply_phase(std::span<cplx> amps, std::span<const double> diag, double dt);
void apply_rx_all(std::span<cplx> amps, int n, double angle);
double expect_diag(std::span<const cplx> amps, std::span<const double> diag);
double expect_yz(std::span<const cplx> amps, int n, int y_qubit, int z_qubit);
double expect_yz_group(std::span<const cplx> amps, int n, int y_qubit, ZWeights zs);
double norm_sq(std::span<const cplx> amps);

}  // namespace parallel

inline void apply_phase(std::span<cplx> amps, std::span<const double> diag, double dt) {
  if (amps.size() < kParallelCutoff) {
    serial::apply_phase(amps, diag, dt);
  } else {
    parallel::apply_phase(amps, diag, dt);
  }
}

inline void apply_rx_all(std::span<cplx> amps, int n, double angle) {
  if (amps.size() < kParallelCutoff) {
    serial::apply_rx_all(amps, n, angle);
  } else {
    parallel::apply_rx_all(amps, n, angle);
  }
}

inline double expect_diag(std::span<const cplx> amps, std::span<const double> diag) {
  return amps.size() < kParallelCutoff ? serial::expect_diag(amps, diag)
                                       : parallel::expect_diag(amps, diag);
}

inline double expect_yz(std::span<const cplx> amps, int n, int y_qubit, int z_qubit) {
  return amps.size() < kParallelCutoff ? serial::expect_yz(amps, n, y_qubit, z_qubit)
                                       : parallel::expect_yz(amps, n, y_qubit, z_qubit);
}

inline double expect_yz_group(std::span<const cplx> amps, int n, int y_qubit, ZWeights zs) {
  return amps.size() < kParallelCutoff ? serial::expect_yz_group(amps, n, y_qubit, zs)
                                       : parallel::expect_yz_group(amps, n, y_qubit, zs);
}

inline double norm_sq(std::span<const cplx> amps) {
  return amps.size() < kParallelCutoff ? serial::norm_sq(amps) : parallel::norm_sq(amps);
}

}  // namespace falqon::kernels
