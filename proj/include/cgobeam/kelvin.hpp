// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "cgobeam/beams.hpp"
#include "cgobeam/coords.hpp"
#include "cgobeam/vec.hpp"

namespace cgo {

/// Sphere inversion K(x) = (R^2/|x|^2) x with respect to the sphere of
/// radius R.  An involution (K^-1 = K) mapping spheres through the origin
/// to hyperplanes.  Jacobian DK = (R^2/|x|^2)(I - 2 rhat rhat^t), so
/// |det DK| = R^6/|x|^6 and DK DK = (R^4/|x|^4) I.
struct KelvinMap {
  double R = 1.0;

  Vec3 apply(const Vec3& x) const {
    const double n2 = norm2(x);
    if (!(n2 > kRMin * kRMin))
      throw DomainError("sphere inversion is singular at the origin, |x| = " +
                        std::to_string(std::sqrt(n2)));
    return (R * R / n2) * x;
  }

  Mat3 jacobian(const Vec3& x) const {
    const double n2 = norm2(x);
    if (!(n2 > kRMin * kRMin))
      throw DomainError("sphere inversion is singular at the origin");
    const Vec3 rh = x / std::sqrt(n2);
    return (R * R / n2) * (Mat3::identity() - 2.0 * Mat3::outer(rh, rh));
  }

  // Self-inverse, and the reflection factor squares to a multiple of I, so
  // D(K^-1)(xt) is just DK(xt).
  Vec3 inverse_apply(const Vec3& xt) const { return apply(xt); }
  Mat3 inverse_jacobian(const Vec3& xt) const { return jacobian(xt); }
};

/// Trivial map, handy as a control for the push-forward law.
struct IdentityMap {
  Vec3 apply(const Vec3& x) const { return x; }
  Mat3 jacobian(const Vec3&) const { return Mat3::identity(); }
  Vec3 inverse_apply(const Vec3& xt) const { return xt; }
  Mat3 inverse_jacobian(const Vec3&) const { return Mat3::identity(); }
};

/// Push-forward of a field-strength (covector-type) field under a
/// diffeomorphism F:
///   (F_* field)(xt) = DF^-1(xt) field(F^-1(xt)).
template <class Map>
Complex3 pushforward_field(const Map& F,
                           const std::function<Complex3(const Vec3&)>& field,
                           const Vec3& xt) {
  return F.inverse_jacobian(xt) * field(F.inverse_apply(xt));
}

/// Push-forward of a pseudovector field (the magnetic field): orientation-
/// reversing maps contribute an extra sign(det DF^-1), without which the
/// transformed pair satisfies the time-reversed system instead.  The sphere
/// inversion is a reflection, so this sign is -1 everywhere.
template <class Map>
Complex3 pushforward_pseudofield(
    const Map& F, const std::function<Complex3(const Vec3&)>& field,
    const Vec3& xt) {
  const Mat3 J = F.inverse_jacobian(xt);
  const double s = J.det() < 0.0 ? -1.0 : 1.0;
  return s * (J * field(F.inverse_apply(xt)));
}

/// Isotropic push-forward material parameters of constant (mu0, gamma0)
/// under the sphere inversion:
///   mu(xt) = (R^2/|xt|^2) mu0,  gamma(xt) = (R^2/|xt|^2) gamma0.
inline std::pair<complexd, complexd> pushforward_params(const KelvinMap& km,
                                                        const Vec3& xt,
                                                        complexd mu0,
                                                        complexd gamma0) {
  const double n2 = norm2(xt);
  if (!(n2 > kRMin * kRMin))
    throw DomainError("push-forward parameters are singular at the origin");
  const double f = km.R * km.R / n2;
  return {f * mu0, f * gamma0};
}

/// Null complex frequency vector
///   zeta = 1/2 ((-tau, tau, 0) + i (s, s, sqrt(2) rho)),  s = sqrt(tau^2 - rho^2),
/// satisfying zeta.zeta = 0 (bilinear) and |zeta|^2 = tau^2.
inline Complex3 make_zeta(double tau, double rho) {
  if (!(rho >= 0.0 && rho < tau))
    throw ParamError("zeta requires 0 <= rho < tau, got rho = " +
                     std::to_string(rho) + ", tau = " + std::to_string(tau));
  const double sq = std::sqrt(tau * tau - rho * rho);
  return {0.5 * complexd(-tau, sq), 0.5 * complexd(tau, sq),
          0.5 * complexd(0.0, std::sqrt(2.0) * rho)};
}

/// Limit of zeta/tau: zhat0 = ((-1, 1, 0) + i (1, 1, 0))/2.  Third
/// component is exactly zero, so the virtual fields below are transverse to
/// x3 at leading order.
inline Complex3 zhat0() {
  return {0.5 * complexd(-1.0, 1.0), 0.5 * complexd(1.0, 1.0), complexd{}};
}

/// Virtual-space beam parameters.  a and b pick the electric/magnetic
/// polarization strengths through zhat0 . a and zhat0 . b; the annulus
/// {R^2/L < |xt| < L} with L > 4R is where the cutoff is identically one
/// and the construction is meaningful.
struct VirtualBeamParams {
  double tau = 4.0;
  double rho = 0.0;
  Vec3 a{-1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
  Vec3 b{-1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
  double eps0 = 1.0;
  double mu0 = 1.0;
  double sigma0 = 0.0;
  double omega = 1.0;
  double R = 5.0;
  double L = 22.5;

  static VirtualBeamParams make(double tau, double rho, const Vec3& a,
                                const Vec3& b, double R = 5.0) {
    if (!(tau >= 1.0)) throw ParamError("virtual beam requires tau >= 1");
    if (!(rho >= 0.0 && rho < tau))
      throw ParamError("virtual beam requires 0 <= rho < tau");
    VirtualBeamParams vp;
    vp.tau = tau;
    vp.rho = rho;
    vp.a = a;
    vp.b = b;
    vp.R = R;
    vp.L = 4.5 * R;
    return vp;
  }

  /// eps0, or eps0 + i sigma0/omega in the lossy variant.
  complexd gamma0() const { return {eps0, sigma0 / omega}; }

  bool in_annulus(const Vec3& xt) const {
    const double n = norm(xt);
    return n > R * R / L && n < L;
  }
};

/// Leading-order virtual-space packet
///   et(xt) = e^((-tau (xt1 - xt2) + i s (xt1 + xt2))/2) e^(i rho xt3)
///            (zhat0 . a) zhat0
/// and ht likewise with b.  Constant modulus on planes xt1 - xt2 = c;
/// oscillates along xt1 + xt2 and xt3.  Throws outside the annulus, where
/// the cutoff region is not modeled.
struct VirtualFields {
  Complex3 e{};
  Complex3 h{};
};

inline VirtualFields virtual_beam(const VirtualBeamParams& vp, const Vec3& xt) {
  if (!vp.in_annulus(xt))
    throw DomainError("virtual beam sampled outside the annulus, |xt| = " +
                      std::to_string(norm(xt)));
  const double s = std::sqrt(vp.tau * vp.tau - vp.rho * vp.rho);
  const complexd expo =
      0.5 * complexd(-vp.tau * (xt.x1 - xt.x2), s * (xt.x1 + xt.x2)) +
      complexd(0.0, vp.rho * xt.x3);
  const complexd u = std::exp(expo);
  const Complex3 z0 = zhat0();
  return {(u * dot(z0, vp.a)) * z0, (u * dot(z0, vp.b)) * z0};
}

/// Physical-space accelerating beam: the virtual packet pushed through the
/// sphere inversion,
///   E(x) = -i tau gamma0^(-1/2) (R^3/|x|^3) (I - 2 rhat rhat^t) et(K(x)),
/// H the same with mu0^(-1/2), ht and the opposite sign (the pseudovector
/// push-forward through the reflection; flipping b recovers the other sign
/// family).  The reflection is real-orthogonal, so
/// |E| = tau |gamma0^(-1/2)| (R^3/|x|^3) |et(K(x))|.
inline EHPair physical_beam(const VirtualBeamParams& vp, const KelvinMap& km,
                            const Vec3& x) {
  const Vec3 xt = km.apply(x);
  const VirtualFields vf = virtual_beam(vp, xt);
  const double n = norm(x);
  const double f = km.R * km.R * km.R / (n * n * n);
  const Vec3 rh = x / n;
  const Mat3 refl = Mat3::identity() - 2.0 * Mat3::outer(rh, rh);
  const complexd ce = -kI * vp.tau / std::sqrt(vp.gamma0());
  const complexd ch = kI * vp.tau / std::sqrt(complexd(vp.mu0));
  return {ce * f * (refl * vf.e), ch * f * (refl * vf.h)};
}

}  // namespace cgo
