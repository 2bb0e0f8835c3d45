// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#include "falqon/kernels.hpp"

#include <cmath>
#include <cstdint>

namespace falqon::kernels {

namespace {

// Index of the pair partner with bit q clear: spread p across the gap at q.
inline std::uint64_t pair_base(std::uint64_t p, int q) {
  const std::uint64_t low = (std::uint64_t{1} << q) - 1;
  return ((p & ~low) << 1) | (p & low);
}

inline void rotate_pair(cplx& a, cplx& b, double c, double s) {
  // exp(-i t X) on one qubit: (a, b) -> (c a - i s b, -i s a + c b)
  const cplx na(c * a.real() + s * b.imag(), c * a.imag() - s * b.real());
  const cplx nb(c * b.real() + s * a.imag(), c * b.imag() - s * a.real());
  a = na;
  b = nb;
}

}  // namespace

namespace serial {

void apply_phase(std::span<cplx> amps, std::span<const double> diag, double dt) {
  const std::size_t dim = amps.size();
  for (std::size_t z = 0; z < dim; ++z) {
    const double ph = diag[z] * dt;
    amps[z] *= cplx(std::cos(ph), -std::sin(ph));
  }
}

void apply_rx_all(std::span<cplx> amps, int n, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const std::uint64_t pairs = amps.size() >> 1;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    for (std::uint64_t p = 0; p < pairs; ++p) {
      const std::uint64_t z0 = pair_base(p, q);
      rotate_pair(amps[z0], amps[z0 | bit], c, s);
    }
  }
}

double expect_diag(std::span<const cplx> amps, std::span<const double> diag) {
  double acc = 0.0;
  const std::size_t dim = amps.size();
  for (std::size_t z = 0; z < dim; ++z) {
    acc += diag[z] * std::norm(amps[z]);
  }
  return acc;
}

double expect_yz(std::span<const cplx> amps, int n, int y_qubit, int z_qubit) {
  const std::pair<int, double> one{z_qubit, 1.0};
  return expect_yz_group(amps, n, y_qubit, ZWeights{&one, 1});
}

double expect_yz_group(std::span<const cplx> amps, int n, int y_qubit, ZWeights zs) {
  (void)n;
  const std::uint64_t bit = std::uint64_t{1} << y_qubit;
  const std::uint64_t pairs = amps.size() >> 1;
  double acc = 0.0;
  for (std::uint64_t p = 0; p < pairs; ++p) {
    const std::uint64_t z0 = pair_base(p, y_qubit);
    // <Y_q Z_b> contribution of the pair (z0, z0|bit) is
    // -2 s_b(z0) Im(conj(amps[z0|bit]) * amps[z0]).
    const cplx prod = std::conj(amps[z0 | bit]) * amps[z0];
    double signs = 0.0;
    for (const auto& [zq, w] : zs) {
      signs += ((z0 >> zq) & 1) ? -w : w;
    }
    acc += signs * prod.imag();
  }
  return -2.0 * acc;
}

double norm_sq(std::span<const cplx> amps) {
  double acc = 0.0;
  for (const cplx& a : amps) acc += std::norm(a);
  return acc;
}

}  // namespace serial

namespace parallel {

void apply_phase(std::span<cplx> amps, std::span<const double> diag, double dt) {
  const auto dim = static_cast<long long>(amps.size());
#pragma omp parallel for schedule(static)
  for (long long z = 0; z < dim; ++z) {
    const double ph = diag[z] * dt;
    amps[z] *= cplx(std::cos(ph), -std::sin(ph));
  }
}

void apply_rx_all(std::span<cplx> amps, int n, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const auto pairs = static_cast<long long>(amps.size() >> 1);
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
#pragma omp parallel for schedule(static)
    for (long long p = 0; p < pairs; ++p) {
      const std::uint64_t z0 = pair_base(static_cast<std::uint64_t>(p), q);
      rotate_pair(amps[z0], amps[z0 | bit], c, s);
    }
  }
}

double expect_diag(std::span<const cplx> amps, std::span<const double> diag) {
  double acc = 0.0;
  const auto dim = static_cast<long long>(amps.size());
#pragma omp parallel for reduction(+ : acc) schedule(static)
  for (long long z = 0; z < dim; ++z) {
    acc += diag[z] * std::norm(amps[z]);
  }
  return acc;
}

double expect_yz(std::span<const cplx> amps, int n, int y_qubit, int z_qubit) {
  const std::pair<int, double> one{z_qubit, 1.0};
  return expect_yz_group(amps, n, y_qubit, ZWeights{&one, 1});
}

double expect_yz_group(std::span<const cplx> amps, int n, int y_qubit, ZWeights zs) {
  (void)n;
  const std::uint64_t bit = std::uint64_t{1} << y_qubit;
  const auto pairs = static_cast<long long>(amps.size() >> 1);
  double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
  for (long long p = 0; p < pairs; ++p) {
    const std::uint64_t z0 = pair_base(static_cast<std::uint64_t>(p), y_qubit);
    const cplx prod = std::conj(amps[z0 | bit]) * amps[z0];
    double signs = 0.0;
    for (const auto& [zq, w] : zs) {
      signs += ((z0 >> zq) & 1) ? -w : w;
    }
    acc += signs * prod.imag();
  }
  return -2.0 * acc;
}

double norm_sq(std::span<const cplx> amps) {
  double acc = 0.0;
  const auto dim = static_cast<long long>(amps.size());
#pragma omp parallel for reduction(+ : acc) schedule(static)
  for (long long z = 0; z < dim; ++z) {
    acc += std::norm(amps[z]);
  }
  return acc;
}

}  // namespace parallel

}  // namespace falqon::kernels
