// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace falqon {

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream seed from (master seed, purpose tag, index). Runs that
// execute in parallel derive their streams this way so results do not depend
// on scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t index = 0) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the tag
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return mix64(master ^ mix64(h) ^ mix64(index + 0x51ed270bULL));
}

// 53-bit uniform double in [0, 1). Avoids std::uniform_real_distribution so
// that streams are reproducible across standard libraries.
template <class Rng>
double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in the open interval (0, 1).
template <class Rng>
double uniform_open_unit(Rng& rng) {
  double u;
  do {
    u = uniform_unit(rng);
  } while (u == 0.0);
  return u;
}

// Unbiased integer in [0, bound), rejection sampled.
template <class Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t v;
  do {
    v = rng();
  } while (v < threshold);
  return v % bound;
}

// Fisher-Yates with the rejection sampler above; same reproducibility
// rationale as uniform_unit.
template <class T, class Rng>
void shuffle_vector(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace falqon
