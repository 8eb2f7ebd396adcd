// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "cgobeam/coords.hpp"
#include "cgobeam/eight.hpp"
#include "cgobeam/fd.hpp"
#include "cgobeam/rng.hpp"

namespace cgo {

/// Complex phase phi + i psi built from a limiting Carleman weight.  Three
/// kinds are supported:
///   Linear     phi + i psi = zeta . x        (Cartesian, zeta in C^3)
///   CylLinear  phi + i psi = -(x1 + i r)     (l(z) = -z)
///   LogConj    phi + i psi = -log(x1 - i r)  (l(zbar) = -log zbar,
///                                             principal branch)
/// lambda is the amplitude frequency used by transport_amplitude.
///
/// Linear phases must satisfy zeta . zeta = 0 (bilinear), or the Helmholtz
/// variant zeta . zeta = -k^2 when a wave number is supplied.
struct Phase {
  enum class Kind { Linear, CylLinear, LogConj };

  Kind kind = Kind::CylLinear;
  double lambda = 0.0;
  Complex3 zeta{};       // Linear only
  double wave_k = 0.0;   // Linear only; Helmholtz variant when > 0

  static Phase cyl_linear(double lambda = 0.0) {
    Phase p;
    p.kind = Kind::CylLinear;
    p.lambda = lambda;
    return p;
  }

  static Phase log_conj(double lambda = 0.0) {
    Phase p;
    p.kind = Kind::LogConj;
    p.lambda = lambda;
    return p;
  }

  static Phase linear(const Complex3& zeta, double wave_k = 0.0) {
    const double scale = norm2(zeta);
    const complexd zz = dot(zeta, zeta);
    if (std::abs(zz + wave_k * wave_k) > 1e-12 * scale)
      throw ParamError("linear phase requires zeta.zeta = -k^2 (got |residual| = " +
                       std::to_string(std::abs(zz + wave_k * wave_k)) + ")");
    Phase p;
    p.kind = Kind::Linear;
    p.zeta = zeta;
    p.wave_k = wave_k;
    return p;
  }
};

/// Evaluate phi + i psi at a cylindrical point.
inline complexd phase_eval(const Phase& ph, const CylPoint& p) {
  require_off_axis(p.r);
  switch (ph.kind) {
    case Phase::Kind::CylLinear:
      return -p.z();
    case Phase::Kind::LogConj:
      // Admissible only in the upper half-space theta in (0, pi).
      if (!(p.theta > 0.0 && p.theta < 3.141592653589793238462643))
        throw DomainError("log phase requires theta in (0, pi), got theta = " +
                          std::to_string(p.theta));
      return -std::log(p.zbar());
    case Phase::Kind::Linear:
    default:
      return dot(ph.zeta, cyl_cart(p));
  }
}

inline complexd phase_eval(const Phase& ph, const Vec3& p) {
  if (ph.kind == Phase::Kind::Linear) return dot(ph.zeta, p);
  return phase_eval(ph, cart_cyl(p));
}

/// Residuals of the eikonal pair for real phases phi, psi:
///   res_norm = | |grad psi|^2 - |grad phi|^2 |,  res_orth = |grad phi . grad psi|.
struct EikonalReport {
  double res_norm = 0.0;
  double res_orth = 0.0;
};

/// Eikonal residuals for an arbitrary real phase pair given in cylindrical
/// coordinates.  Used directly for negative controls.
inline EikonalReport eikonal_residuals(
    const std::function<double(const CylPoint&)>& phi,
    const std::function<double(const CylPoint&)>& psi, const CylPoint& p,
    const FdScheme& s = {}) {
  auto wrap = [](const std::function<double(const CylPoint&)>& f) {
    return [&f](const CylPoint& q) { return complexd(f(q)); };
  };
  const Complex3 gphi = cyl_gradient(wrap(phi), p, s);
  const Complex3 gpsi = cyl_gradient(wrap(psi), p, s);
  Vec3 a{gphi.x.real(), gphi.y.real(), gphi.z.real()};
  Vec3 b{gpsi.x.real(), gpsi.y.real(), gpsi.z.real()};
  return {std::abs(norm2(b) - norm2(a)), std::abs(dot(a, b))};
}

/// Eikonal residuals of a Phase.  Cylindrical kinds differentiate in
/// (x1, r, theta); Linear phases have constant gradients and use Cartesian
/// differences.
inline EikonalReport eikonal_residuals(const Phase& ph, const CylPoint& p,
                                       const FdScheme& s = {}) {
  if (ph.kind == Phase::Kind::Linear) {
    const Vec3 x = cyl_cart(p);
    auto phi = [&](const Vec3& q) { return complexd(phase_eval(ph, q).real()); };
    auto psi = [&](const Vec3& q) { return complexd(phase_eval(ph, q).imag()); };
    const Complex3 gphi = fd_grad(phi, x, s);
    const Complex3 gpsi = fd_grad(psi, x, s);
    Vec3 a{gphi.x.real(), gphi.y.real(), gphi.z.real()};
    Vec3 b{gpsi.x.real(), gpsi.y.real(), gpsi.z.real()};
    return {std::abs(norm2(b) - norm2(a)), std::abs(dot(a, b))};
  }
  auto phi = [&](const CylPoint& q) { return phase_eval(ph, q).real(); };
  auto psi = [&](const CylPoint& q) { return phase_eval(ph, q).imag(); };
  return eikonal_residuals(phi, psi, p, s);
}

/// Carleman-weight condition residual for a real weight phi at p:
/// max over sampled directions xi (|xi| = |grad phi|, xi . grad phi = 0) of
///   | <phi'' grad phi, grad phi> + <phi'' xi, xi> |.
/// The Hessian is a second-order finite difference; directions are drawn
/// from a seeded generator, projected and rescaled.
inline double carleman_weight_residual(
    const std::function<double(const Vec3&)>& phi, const Vec3& p,
    int n_dirs = 16, std::uint64_t seed = 1, const FdScheme& s = {}) {
  Complex3 gc = fd_grad([&](const Vec3& q) { return complexd(phi(q)); }, p, s);
  const Vec3 g{gc.x.real(), gc.y.real(), gc.z.real()};
  const double gn = norm(g);
  if (gn < 1e-10)
    throw DomainError("degenerate gradient: |grad phi| = " +
                      std::to_string(gn) + " at " + describe(p));
  const Mat3 H = fd_hessian(phi, p, s);
  const double base = dot(H * g, g);

  Rng rng(seed);
  double worst = 0.0;
  int kept = 0;
  while (kept < n_dirs) {
    Vec3 xi = rng.direction();
    xi = xi - (dot(xi, g) / (gn * gn)) * g;  // project out grad phi
    const double n = norm(xi);
    if (n < 1e-3) continue;  // nearly parallel draw, resample
    xi = (gn / n) * xi;
    worst = std::max(worst, std::abs(base + dot(H * xi, xi)));
    ++kept;
  }
  return worst;
}

/// Leading CGO amplitude for cylindrical phases:
///   CylLinear: (2ir)^(-1/2) e^(i lambda z)    g(theta)
///   LogConj:   (2ir)^(-1/2) e^(i lambda zbar) g(theta)
/// with the principal square root of 2ir.
inline Complex8 transport_amplitude(const Phase& ph,
                                    const std::function<Complex8(double)>& g,
                                    const CylPoint& p) {
  require_off_axis(p.r);
  if (ph.kind == Phase::Kind::Linear)
    throw ParamError("transport_amplitude expects a cylindrical phase kind");
  const complexd root = std::sqrt(complexd(0.0, 2.0 * p.r));
  const complexd arg =
      (ph.kind == Phase::Kind::CylLinear) ? p.z() : p.zbar();
  const complexd factor = std::exp(kI * ph.lambda * arg) / root;
  return factor * g(p.theta);
}

/// Max-component residual of the transport equation
///   [2 grad(phi + i psi) . grad + Lap(phi + i psi)] A
/// at p, all derivatives by central differences in Cartesian coordinates.
inline double transport_residual(const Phase& ph,
                                 const std::function<Complex8(const Vec3&)>& A,
                                 const Vec3& p, const FdScheme& s = {}) {
  auto phase_cart = [&](const Vec3& q) { return phase_eval(ph, q); };
  const Complex3 gph = fd_grad(phase_cart, p, s);
  const complexd lph = fd_laplacian(phase_cart, p, s);

  const double h = s.step(p);
  Complex8 dA[3];
  for (int i = 0; i < 3; ++i) {
    const Vec3 e = axis_unit(i);
    const Complex8 fp = A(p + h * e);
    const Complex8 fm = A(p - h * e);
    if (!finite(fp) || !finite(fm))
      throw EvalError("non-finite amplitude near " + describe(p));
    dA[i] = (1.0 / (2.0 * h)) * (fp - fm);
  }
  const Complex8 Ac = A(p);

  double worst = 0.0;
  for (int c = 0; c < 8; ++c) {
    complexd t = lph * Ac[c];
    for (int i = 0; i < 3; ++i) t += 2.0 * gph[i] * dA[i][c];
    worst = std::max(worst, std::abs(t));
  }
  return worst;
}

}  // namespace cgo
