// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <utility>

#include "cgobeam/errors.hpp"
#include "cgobeam/vec.hpp"

namespace cgo {

/// Isotropic medium (mu, gamma) with gamma = eps + i sigma/omega on top of
/// constant backgrounds mu0, eps0, sigma0.  Perturbations are compactly
/// supported inside support_radius; outside it mu == mu0 and
/// gamma == eps0 + i sigma0/omega exactly.  Immutable after construction.
struct MediumProfile {
  std::function<complexd(const Vec3&)> mu;
  std::function<complexd(const Vec3&)> gamma;
  double mu0 = 1.0;
  double eps0 = 1.0;
  double sigma0 = 0.0;
  double omega = 1.0;
  double support_radius = 1.0;

  complexd gamma0() const { return {eps0, sigma0 / omega}; }
  /// Background wave number k = omega sqrt(mu0 eps0).
  double wave_k() const { return omega * std::sqrt(mu0 * eps0); }

  complexd mu_at(const Vec3& p) const {
    const complexd v = mu(p);
    if (!(v.real() > 0.0))
      throw MediumError("Re mu <= 0 at " + describe(p));
    return v;
  }
  complexd gamma_at(const Vec3& p) const {
    const complexd v = gamma(p);
    if (!(v.real() > 0.0))
      throw MediumError("Re gamma <= 0 at " + describe(p));
    return v;
  }

  static MediumProfile constant(double mu0 = 1.0, double eps0 = 1.0,
                                double sigma0 = 0.0, double omega = 1.0) {
    MediumProfile m;
    m.mu0 = mu0;
    m.eps0 = eps0;
    m.sigma0 = sigma0;
    m.omega = omega;
    m.support_radius = 0.0;
    const complexd g0{eps0, sigma0 / omega};
    m.mu = [mu0](const Vec3&) { return complexd(mu0); };
    m.gamma = [g0](const Vec3&) { return g0; };
    return m;
  }

  /// C-infinity radial bump exp(1 - 1/(1 - t^2)) on t = |x|/support < 1,
  /// zero outside.  bump(0) = 1.
  static double bump(double t) {
    const double t2 = t * t;
    if (t2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t2));
  }

  /// mu = mu0 (1 + mu_amp bump), gamma = gamma0 (1 + gamma_amp bump).
  static MediumProfile radial_bump(double mu_amp, double gamma_amp,
                                   double support = 1.0, double mu0 = 1.0,
                                   double eps0 = 1.0, double sigma0 = 0.0,
                                   double omega = 1.0) {
    MediumProfile m;
    m.mu0 = mu0;
    m.eps0 = eps0;
    m.sigma0 = sigma0;
    m.omega = omega;
    m.support_radius = support;
    const complexd g0{eps0, sigma0 / omega};
    m.mu = [mu0, mu_amp, support](const Vec3& p) {
      return complexd(mu0 * (1.0 + mu_amp * bump(norm(p) / support)));
    };
    m.gamma = [g0, gamma_amp, support](const Vec3& p) {
      return g0 * (1.0 + gamma_amp * bump(norm(p) / support));
    };
    return m;
  }
};

}  // namespace cgo
