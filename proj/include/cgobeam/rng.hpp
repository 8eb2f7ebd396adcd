// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "cgobeam/vec.hpp"

namespace cgo {

/// splitmix64 generator.  Standard-library distributions are
/// implementation-defined, so seeded sampling goes through this to keep
/// results identical across platforms and toolchains.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Vec3 point(double lo, double hi) {
    const double a = uniform(lo, hi);
    const double b = uniform(lo, hi);
    const double c = uniform(lo, hi);
    return {a, b, c};
  }

  /// Uniform direction on the unit sphere (rejection-free, via angles).
  Vec3 direction() {
    const double u = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 6.283185307179586476925287);
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
    return {s * std::cos(phi), s * std::sin(phi), u};
  }
};

}  // namespace cgo
