// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0
//
// Times the serial reference kernels against the OpenMP ones on one full-size
// state, plus a complete feedback layer, and prints the speedups.

#include <chrono>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "falqon/graph_gen.hpp"
#include "falqon/hamiltonian.hpp"
#include "falqon/kernels.hpp"
#include "falqon/rng.hpp"
#include "falqon/statevector.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using falqon::kernels::cplx;

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <class F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = now_seconds();
    f();
    const double t1 = now_seconds();
    if (t1 - t0 < best) best = t1 - t0;
  }
  return best;
}

void report(const std::string& name, double serial, double parallel) {
  std::printf("%-24s %10.4f ms %10.4f ms %8.2fx\n", name.c_str(), serial * 1e3,
              parallel * 1e3, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  int n = 20;
  int reps = 5;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--n" && i + 1 < argc) {
      n = std::stoi(argv[++i]);
    } else if (arg == "--reps" && i + 1 < argc) {
      reps = std::stoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: falqon_bench [--n N] [--reps R]\n");
      return 1;
    }
  }

#ifdef _OPENMP
  std::printf("n = %d qubits, best of %d reps, %d OpenMP threads\n", n, reps,
              omp_get_max_threads());
#else
  std::printf("n = %d qubits, best of %d reps, OpenMP disabled\n", n, reps);
#endif

  falqon::GenerateOptions opt;
  opt.n = n;
  opt.d = 3;
  opt.seed = 11;
  const falqon::Graph g = falqon::generate_regular(opt).graphs.at(0);
  const auto hp = falqon::build_problem(g);
  const auto comm = falqon::build_commutator(g);

  falqon::StateVector psi = falqon::init_mixer_ground(n);
  std::mt19937_64 rng(7);
  for (auto& a : psi.amps) {
    a *= cplx(falqon::uniform_unit(rng) + 0.5, falqon::uniform_unit(rng) - 0.5);
  }
  const double scale = 1.0 / falqon::norm(psi);
  for (auto& a : psi.amps) a *= scale;

  namespace k = falqon::kernels;
  std::vector<cplx> work = psi.amps;

  std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  report("apply_phase",
         time_best_of(reps, [&] { k::serial::apply_phase(work, hp.diag, 0.01); }),
         time_best_of(reps, [&] { k::parallel::apply_phase(work, hp.diag, 0.01); }));

  report("apply_rx_all",
         time_best_of(reps, [&] { k::serial::apply_rx_all(work, n, 0.01); }),
         time_best_of(reps, [&] { k::parallel::apply_rx_all(work, n, 0.01); }));

  double sink = 0.0;
  report("expect_diag",
         time_best_of(reps, [&] { sink += k::serial::expect_diag(work, hp.diag); }),
         time_best_of(reps, [&] { sink += k::parallel::expect_diag(work, hp.diag); }));

  report("expect_commutator",
         time_best_of(reps,
                      [&] {
                        for (int q = 0; q < comm.n; ++q) {
                          if (!comm.by_y[q].empty())
                            sink += k::serial::expect_yz_group(work, n, q, comm.by_y[q]);
                        }
                      }),
         time_best_of(reps, [&] {
           for (int q = 0; q < comm.n; ++q) {
             if (!comm.by_y[q].empty())
               sink += k::parallel::expect_yz_group(work, n, q, comm.by_y[q]);
           }
         }));

  report("norm_sq", time_best_of(reps, [&] { sink += k::serial::norm_sq(work); }),
         time_best_of(reps, [&] { sink += k::parallel::norm_sq(work); }));

  // One feedback layer: phase, mixer, commutator and energy read-outs.
  auto layer = [&](bool parallel) {
    if (parallel) {
      k::parallel::apply_phase(work, hp.diag, 0.01);
      k::parallel::apply_rx_all(work, n, 0.01);
      for (int q = 0; q < comm.n; ++q) {
        if (!comm.by_y[q].empty())
          sink += k::parallel::expect_yz_group(work, n, q, comm.by_y[q]);
      }
      sink += k::parallel::expect_diag(work, hp.diag);
    } else {
      k::serial::apply_phase(work, hp.diag, 0.01);
      k::serial::apply_rx_all(work, n, 0.01);
      for (int q = 0; q < comm.n; ++q) {
        if (!comm.by_y[q].empty())
          sink += k::serial::expect_yz_group(work, n, q, comm.by_y[q]);
      }
      sink += k::serial::expect_diag(work, hp.diag);
    }
  };
  report("full layer", time_best_of(reps, [&] { layer(false); }),
         time_best_of(reps, [&] { layer(true); }));

  std::printf("(checksum %g)\n", sink);
  return 0;
}
