// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <string>

#include "cgobeam/errors.hpp"
#include "cgobeam/vec.hpp"

namespace cgo {

/// Cylindrical-axis exclusion radius.  Amplitudes carry a (2ir)^(-1/2)
/// factor and the angular gradient a 1/r factor, both singular on the axis,
/// so every cylindrical-coordinate operation requires r > kRMin.
inline constexpr double kRMin = 1e-6;

/// Cylindrical coordinates (x1, r, theta): x2 = r cos(theta),
/// x3 = r sin(theta), theta in (-pi, pi].  r must stay positive.
struct CylPoint {
  double x1 = 0.0;
  double r = 1.0;
  double theta = 0.0;

  /// z = x1 + i r, the complex variable the phases are functions of.
  complexd z() const { return {x1, r}; }
  complexd zbar() const { return {x1, -r}; }
};

inline std::string describe(const Vec3& p) {
  return "(" + std::to_string(p.x1) + ", " + std::to_string(p.x2) + ", " +
         std::to_string(p.x3) + ")";
}

inline void require_off_axis(double r) {
  if (!(r > kRMin))
    throw DomainError("axis exclusion violated: r = " + std::to_string(r) +
                      " <= " + std::to_string(kRMin));
}

/// Cartesian -> cylindrical.  Throws DomainError on the axis
/// (x2^2 + x3^2 <= kRMin^2).  theta uses the principal atan2 branch, so
/// theta in (-pi, pi] with theta(+0 at x2<0) = pi.
inline CylPoint cart_cyl(const Vec3& p) {
  const double r = std::hypot(p.x2, p.x3);
  require_off_axis(r);
  double x3 = p.x3;
  if (x3 == 0.0) x3 = +0.0;  // keep theta = +pi on the negative x2 half-line
  return {p.x1, r, std::atan2(x3, p.x2)};
}

/// Cylindrical -> Cartesian.
inline Vec3 cyl_cart(const CylPoint& c) {
  require_off_axis(c.r);
  return {c.x1, c.r * std::cos(c.theta), c.r * std::sin(c.theta)};
}

/// Radial and angular unit vectors of the transverse plane at angle theta.
inline Vec3 rhat(double theta) { return {0.0, std::cos(theta), std::sin(theta)}; }
inline Vec3 thetahat(double theta) {
  return {0.0, -std::sin(theta), std::cos(theta)};
}

inline double norm(const CylPoint& c) { return std::hypot(c.x1, c.r); }

}  // namespace cgo
