// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "cgobeam/coords.hpp"
#include "cgobeam/fd.hpp"
#include "cgobeam/medium.hpp"

namespace cgo {

/// Electric/magnetic complex amplitude pair.
struct EHPair {
  Complex3 E{};
  Complex3 H{};
};

/// Smooth angular profile chi(theta) together with its derivative.
struct AngularProfile {
  std::function<complexd(double)> f;
  std::function<complexd(double)> df;

  complexd operator()(double theta) const { return f(theta); }
};

/// The family chi(theta) = -e^(i rho theta) used for the rendered beams; its
/// unit modulus is what makes the transverse intensity angle-independent.
inline AngularProfile exp_profile(double rho) {
  return {[rho](double t) { return -std::exp(kI * rho * t); },
          [rho](double t) { return -kI * rho * std::exp(kI * rho * t); }};
}

inline AngularProfile zero_profile() {
  return {[](double) { return complexd{}; }, [](double) { return complexd{}; }};
}

/// Parameters of the cylindrical-phase beam.  omega is tied to the wave
/// number through k = omega sqrt(mu0 eps0); rho is the angular frequency of
/// the default profile chi = -e^(i rho theta).
struct CylBeamParams {
  double tau = 10.0;
  double lambda = 0.5;
  double rho = 1.0;
  double k = 1.0;
  MediumProfile medium = MediumProfile::constant();
  AngularProfile chi1 = exp_profile(1.0);
  AngularProfile chi2 = exp_profile(1.0);

  static CylBeamParams make(double tau, double lambda, double rho, double k,
                            MediumProfile medium = MediumProfile::constant()) {
    if (!(tau >= 1.0)) throw ParamError("cylindrical beam requires tau >= 1");
    CylBeamParams p;
    p.tau = tau;
    p.lambda = lambda;
    p.rho = rho;
    p.k = k;
    if (k > 0.0) medium.omega = k / std::sqrt(medium.mu0 * medium.eps0);
    p.medium = std::move(medium);
    p.chi1 = exp_profile(rho);
    p.chi2 = exp_profile(rho);
    return p;
  }
};

/// Leading-order cylindrical accelerating beam,
///   E = tau gamma^(-1/2) (e^((-tau + i lambda)(x1 + i r)) / sqrt(2ir))
///       chi1(theta) (-i, cos, sin)^t
/// and H likewise with mu^(-1/2) and chi2.  The order-one remainder of the
/// full solution is not included; the verify module quantifies the
/// resulting residual instead.
inline EHPair cylindrical_beam(const CylBeamParams& bp, const CylPoint& p) {
  require_off_axis(p.r);
  const Vec3 x = cyl_cart(p);
  const complexd u = std::exp((complexd(-bp.tau, bp.lambda)) * p.z()) /
                     std::sqrt(complexd(0.0, 2.0 * p.r));
  const Complex3 pol{complexd(0.0, -1.0), complexd(std::cos(p.theta)),
                     complexd(std::sin(p.theta))};
  const complexd ce = bp.tau / std::sqrt(bp.medium.gamma_at(x)) * u * bp.chi1(p.theta);
  const complexd ch = bp.tau / std::sqrt(bp.medium.mu_at(x)) * u * bp.chi2(p.theta);
  return {ce * pol, ch * pol};
}

/// Parameters of the log-phase beam.  The construction lives on an extended
/// domain with k = 0; omega remains only as a time-harmonic rendering
/// parameter.  Evaluation is restricted to theta in (0, pi).
struct SphBeamParams {
  double tau = 9.0;
  double lambda = 0.5;
  double rho = 1.0;
  MediumProfile medium = MediumProfile::constant();
  AngularProfile chi1 = exp_profile(1.0);
  AngularProfile chi2 = exp_profile(1.0);

  static SphBeamParams make(double tau, double lambda, double rho,
                            MediumProfile medium = MediumProfile::constant()) {
    if (!(tau >= 1.0)) throw ParamError("spherical beam requires tau >= 1");
    SphBeamParams p;
    p.tau = tau;
    p.lambda = lambda;
    p.rho = rho;
    p.medium = std::move(medium);
    p.chi1 = exp_profile(rho);
    p.chi2 = exp_profile(rho);
    return p;
  }
};

/// True near the principal-branch cut of (x1 - ir)^(tau + 1): the phase
/// degrades as x1 < 0 and r -> 0.  Evaluation stays defined (r > kRMin keeps
/// the argument off the cut); callers may use this to flag pixels.
inline bool near_branch_cut(const CylPoint& p, double r_guard = 1e-3) {
  return p.x1 < 0.0 && p.r < r_guard;
}

/// Leading-order spherical-phase beam,
///   E = tau gamma^(-1/2) (e^(i lambda (x1 - ir))
///       / ((x1 - ir)^(tau + 1) sqrt(2ir))) chi1(theta) (i, cos, sin)^t
/// with the principal branch of w^(tau+1) = e^((tau+1) log w).  Not
/// oscillatory in r; intensity is preserved along every circle of fixed x1.
inline EHPair spherical_beam(const SphBeamParams& bp, const CylPoint& p) {
  require_off_axis(p.r);
  static constexpr double pi = 3.141592653589793238462643;
  if (!(p.theta > 0.0 && p.theta < pi))
    throw DomainError("spherical beam requires theta in (0, pi), got " +
                      std::to_string(p.theta));
  const Vec3 x = cyl_cart(p);
  const complexd w = p.zbar();
  const complexd u = std::exp(kI * bp.lambda * w) /
                     (std::exp((bp.tau + 1.0) * std::log(w)) *
                      std::sqrt(complexd(0.0, 2.0 * p.r)));
  const Complex3 pol{complexd(0.0, 1.0), complexd(std::cos(p.theta)),
                     complexd(std::sin(p.theta))};
  const complexd ce = bp.tau / std::sqrt(bp.medium.gamma_at(x)) * u * bp.chi1(p.theta);
  const complexd ch = bp.tau / std::sqrt(bp.medium.mu_at(x)) * u * bp.chi2(p.theta);
  return {ce * pol, ch * pol};
}

/// TM-polarized mode recovered from a scalar potential psi(r, theta)
/// independent of x1:
///   E = -rhat (d_theta psi)/r + thetahat (d_r psi),
/// derivatives by central differences in (r, theta).
inline Complex3 hertz_tm_field(
    const std::function<complexd(double r, double theta)>& psi,
    const CylPoint& p, const FdScheme& s = {}) {
  require_off_axis(p.r);
  const double h = s.step(p);
  if (p.r - h <= 0.0)
    throw DomainError("stencil crosses the axis at r = " + std::to_string(p.r));
  const complexd dpsi_r = (psi(p.r + h, p.theta) - psi(p.r - h, p.theta)) / (2.0 * h);
  const complexd dpsi_t = (psi(p.r, p.theta + h) - psi(p.r, p.theta - h)) / (2.0 * h);
  if (!finite(dpsi_r) || !finite(dpsi_t))
    throw EvalError("non-finite potential near r = " + std::to_string(p.r));
  const Vec3 rh = rhat(p.theta), th = thetahat(p.theta);
  return (-dpsi_t / p.r) * Complex3::from(rh) + dpsi_r * Complex3::from(th);
}

}  // namespace cgo
