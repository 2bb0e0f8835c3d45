// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#include "oracle.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace oracle {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

}  // namespace

Matrix one_qubit_op(const Eigen::Matrix2cd& op, int q, int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  const std::uint64_t bit = std::uint64_t{1} << q;
  for (std::uint64_t z = 0; z < dim; ++z) {
    const int bz = (z >> q) & 1;
    for (int bz2 = 0; bz2 < 2; ++bz2) {
      const std::uint64_t z2 = bz2 ? (z | bit) : (z & ~bit);
      if (op(bz2, bz) != 0.0) {
        m(z2, z) += op(bz2, bz);
      }
    }
  }
  return m;
}

Matrix pauli_x() {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  return x;
}

Matrix pauli_y() {
  Eigen::Matrix2cd y;
  y << 0, -kI, kI, 0;
  return y;
}

Matrix pauli_z() {
  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;
  return z;
}

Matrix dense_problem(const falqon::Graph& g) {
  const std::uint64_t dim = std::uint64_t{1} << g.n;
  Matrix hp = Matrix::Zero(dim, dim);
  const Matrix id = Matrix::Identity(dim, dim);
  Eigen::Matrix2cd z2;
  z2 << 1, 0, 0, -1;
  for (const falqon::Edge& e : g.edges) {
    const Matrix zz = one_qubit_op(z2, e.i, g.n) * one_qubit_op(z2, e.j, g.n);
    hp += -0.5 * e.w * (id - zz);
  }
  return hp;
}

Matrix dense_mixer(int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  Matrix hd = Matrix::Zero(dim, dim);
  Eigen::Matrix2cd x2;
  x2 << 0, 1, 1, 0;
  for (int q = 0; q < n; ++q) {
    hd += one_qubit_op(x2, q, n);
  }
  return hd;
}

Matrix dense_pauli(const falqon::PauliString& p, int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  Matrix m = Matrix::Identity(dim, dim);
  for (const auto& [q, op] : p.ops) {
    Eigen::Matrix2cd local;
    switch (op) {
      case 'X':
        local << 0, 1, 1, 0;
        break;
      case 'Y':
        local << 0, -kI, kI, 0;
        break;
      case 'Z':
        local << 1, 0, 0, -1;
        break;
      default:
        throw std::invalid_argument("bad Pauli letter");
    }
    m = one_qubit_op(local, q, n) * m;
  }
  return m;
}

Matrix dense_commutator(const falqon::Graph& g) {
  const Matrix hp = dense_problem(g);
  const Matrix hd = dense_mixer(g.n);
  return kI * (hd * hp - hp * hd);
}

Matrix expm_unitary(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  const auto& vals = es.eigenvalues();
  const Matrix& vecs = es.eigenvectors();
  Vector phases(vals.size());
  for (Eigen::Index k = 0; k < vals.size(); ++k) {
    phases(k) = std::exp(-kI * t * vals(k));
  }
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

Vector to_eigen(const falqon::StateVector& psi) {
  Vector v(psi.amps.size());
  for (std::size_t z = 0; z < psi.amps.size(); ++z) v(z) = psi.amps[z];
  return v;
}

falqon::StateVector from_eigen(const Vector& v, int n) {
  falqon::StateVector psi;
  psi.n = n;
  psi.amps.resize(v.size());
  for (Eigen::Index z = 0; z < v.size(); ++z) psi.amps[z] = v(z);
  return psi;
}

double expectation(const Vector& psi, const Matrix& op) {
  const std::complex<double> val = psi.adjoint() * op * psi;
  return val.real();
}

Replay replay_feedback(const falqon::Graph& g, double dt, int layers) {
  const int n = g.n;
  const std::uint64_t dim = std::uint64_t{1} << n;
  const Matrix hp = dense_problem(g);
  const Matrix hd = dense_mixer(n);
  const Matrix comm = kI * (hd * hp - hp * hd);
  const Matrix up = expm_unitary(hp, dt);

  // Ground bitstrings of the diagonal problem matrix, for phi.
  double min_energy = 0.0;
  for (std::uint64_t z = 0; z < dim; ++z) {
    min_energy = std::min(min_energy, hp(z, z).real());
  }
  std::vector<std::uint64_t> ground;
  for (std::uint64_t z = 0; z < dim; ++z) {
    if (hp(z, z).real() <= min_energy + 1e-9) ground.push_back(z);
  }

  // Product of the -1 eigenstates of X.
  Vector psi(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::uint64_t z = 0; z < dim; ++z) {
    int bits = 0;
    for (int q = 0; q < n; ++q) bits += (z >> q) & 1;
    psi(z) = (bits % 2 == 1) ? -scale : scale;
  }

  auto phi_of = [&](const Vector& v) {
    double acc = 0.0;
    for (std::uint64_t z : ground) acc += std::norm(v(z));
    return acc;
  };

  Replay replay;
  replay.beta.push_back(0.0);
  replay.A.push_back(expectation(psi, comm));
  replay.energy.push_back(expectation(psi, hp));
  replay.phi.push_back(phi_of(psi));

  double beta = 0.0;
  for (int k = 1; k <= layers; ++k) {
    psi = expm_unitary(hd, beta * dt) * (up * psi);
    const double a = expectation(psi, comm);
    replay.beta.push_back(beta);
    replay.A.push_back(a);
    replay.energy.push_back(expectation(psi, hp));
    replay.phi.push_back(phi_of(psi));
    beta = -a;
  }
  return replay;
}

}  // namespace oracle
