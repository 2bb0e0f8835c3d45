// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "falqon/hamiltonian.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace falqon;

TEST_CASE("problem diagonal on the two-edge path") {
  const auto hp = build_problem(testutil::path3());
  REQUIRE(hp.diag.size() == 8);
  // Little-endian: index 0b010 = 2 flips the middle vertex, cutting both edges.
  const std::vector<double> expected{0, -1, -2, -1, -1, -2, -1, 0};
  for (int z = 0; z < 8; ++z) {
    CHECK(hp.diag[z] == expected[z]);
  }
}

TEST_CASE("problem diagonal for a single edge") {
  const Graph g{2, {{0, 1, 1.0}}, "edge"};
  const auto hp = build_problem(g);
  CHECK(hp.diag == std::vector<double>{0, -1, -1, 0});
}

TEST_CASE("problem diagonal of an edgeless graph is zero") {
  const auto hp = build_problem(testutil::edgeless(3));
  CHECK(std::all_of(hp.diag.begin(), hp.diag.end(), [](double x) { return x == 0.0; }));
}

TEST_CASE("diagonal matches the dense oracle and the exact solver") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testutil::random_graph(5, 0.6, trial % 2 == 1, rng);
    const auto hp = build_problem(g);
    const auto dense = oracle::dense_problem(g);
    for (std::uint64_t z = 0; z < hp.diag.size(); ++z) {
      CHECK(hp.diag[z] == doctest::Approx(dense(z, z).real()).epsilon(1e-14));
    }
    const auto ground = brute_force_maxcut(g);
    CHECK(*std::min_element(hp.diag.begin(), hp.diag.end()) == ground.min_energy);
  }
}

TEST_CASE("memory cap is enforced") {
  CHECK_THROWS_AS(build_problem(testutil::edgeless(10), 8), std::invalid_argument);
}

TEST_CASE("commutator terms on the two-edge path") {
  const auto comm = build_commutator(testutil::path3());
  REQUIRE(comm.term_count() == 4);
  // Y0Z1, Z0Y1, Y1Z2, Z1Y2 with unit coefficients.
  const std::vector<YzTerm> expected{{0, 1, 1.0}, {1, 0, 1.0}, {1, 2, 1.0}, {2, 1, 1.0}};
  for (std::size_t t = 0; t < 4; ++t) {
    CHECK(comm.terms[t].y == expected[t].y);
    CHECK(comm.terms[t].z == expected[t].z);
    CHECK(comm.terms[t].w == expected[t].w);
  }
}

TEST_CASE("commutator term counts") {
  CHECK(build_commutator(testutil::edgeless(4)).term_count() == 0);

  // K4 saturates the generic n(n-1) bound: 2|E| = 12 = 4 * 3.
  const auto k4 = build_commutator(testutil::complete4());
  CHECK(k4.term_count() == 12);
  CHECK(k4.term_count() == static_cast<std::size_t>(4 * (4 - 1)));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testutil::random_graph(5, 0.5, true, rng);
    const auto comm = build_commutator(g);
    CHECK(comm.term_count() == 2 * g.edges.size());
    CHECK(comm.term_count() <= static_cast<std::size_t>(g.n * (g.n - 1)));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      CHECK(comm.terms[2 * e].w == g.edges[e].w);
      CHECK(comm.terms[2 * e + 1].w == g.edges[e].w);
    }
  }
}

TEST_CASE("term-built commutator equals the dense matrix commutator") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 4));  // n in [2, 5]
    const Graph g = testutil::random_graph(n, 0.6, trial % 2 == 1, rng);
    const auto comm = build_commutator(g);

    const std::uint64_t dim = std::uint64_t{1} << n;
    oracle::Matrix from_terms = oracle::Matrix::Zero(dim, dim);
    for (const YzTerm& term : comm.terms) {
      from_terms += term.w * oracle::dense_pauli({{{term.y, 'Y'}, {term.z, 'Z'}}}, n);
    }
    const oracle::Matrix direct = oracle::dense_commutator(g);

    CHECK((from_terms - direct).cwiseAbs().maxCoeff() < 1e-12);
    // Hermiticity of the represented operator.
    CHECK((from_terms - from_terms.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}
