// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "cgobeam/coords.hpp"
#include "cgobeam/errors.hpp"
#include "cgobeam/vec.hpp"

namespace cgo {

/// Second-order central differencing.  The step applied at a point p is
/// h * max(1, |p|) unless scale_step is cleared, which balances truncation
/// against rounding for the field magnitudes in play here.  Truncation error
/// of every operator below is O(h^2) on C^3 fields.
struct FdScheme {
  double h = 1e-4;
  bool scale_step = true;

  static constexpr int order = 2;

  double step(const Vec3& p) const {
    return scale_step ? h * std::max(1.0, norm(p)) : h;
  }
  double step(const CylPoint& p) const {
    return scale_step ? h * std::max(1.0, norm(p)) : h;
  }
};

namespace detail {

template <class T>
void check_finite(const T& v, const Vec3& p) {
  if (!finite(v))
    throw EvalError("non-finite field value at stencil point " + describe(p));
}

template <class F>
auto eval_checked(F&& f, const Vec3& p) {
  auto v = f(p);
  check_finite(v, p);
  return v;
}

}  // namespace detail

/// Gradient of a complex scalar field.
template <class F>
Complex3 fd_grad(F&& f, const Vec3& p, const FdScheme& s = {}) {
  const double h = s.step(p);
  Complex3 g;
  for (int i = 0; i < 3; ++i) {
    const Vec3 e = axis_unit(i);
    const complexd fp = detail::eval_checked(f, p + h * e);
    const complexd fm = detail::eval_checked(f, p - h * e);
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

/// Divergence of a complex vector field.
template <class F>
complexd fd_div(F&& f, const Vec3& p, const FdScheme& s = {}) {
  const double h = s.step(p);
  complexd d{};
  for (int i = 0; i < 3; ++i) {
    const Vec3 e = axis_unit(i);
    const Complex3 fp = detail::eval_checked(f, p + h * e);
    const Complex3 fm = detail::eval_checked(f, p - h * e);
    d += (fp[i] - fm[i]) / (2.0 * h);
  }
  return d;
}

/// Curl of a complex vector field.
template <class F>
Complex3 fd_curl(F&& f, const Vec3& p, const FdScheme& s = {}) {
  const double h = s.step(p);
  Complex3 d[3];  // d[i] = dF/dx_i
  for (int i = 0; i < 3; ++i) {
    const Vec3 e = axis_unit(i);
    const Complex3 fp = detail::eval_checked(f, p + h * e);
    const Complex3 fm = detail::eval_checked(f, p - h * e);
    d[i] = (1.0 / (2.0 * h)) * (fp - fm);
  }
  return {d[1].z - d[2].y, d[2].x - d[0].z, d[0].y - d[1].x};
}

/// Full Jacobian of a complex vector field; entry (i, j) = dF_i/dx_j.
template <class F>
Mat3c fd_jacobian(F&& f, const Vec3& p, const FdScheme& s = {}) {
  const double h = s.step(p);
  Mat3c J;
  for (int j = 0; j < 3; ++j) {
    const Vec3 e = axis_unit(j);
    const Complex3 fp = detail::eval_checked(f, p + h * e);
    const Complex3 fm = detail::eval_checked(f, p - h * e);
    for (int i = 0; i < 3; ++i) J.m[i][j] = (fp[i] - fm[i]) / (2.0 * h);
  }
  return J;
}

/// Laplacian of a complex scalar field.
template <class F>
complexd fd_laplacian(F&& f, const Vec3& p, const FdScheme& s = {}) {
  const double h = s.step(p);
  const complexd fc = detail::eval_checked(f, p);
  complexd acc{};
  for (int i = 0; i < 3; ++i) {
    const Vec3 e = axis_unit(i);
    const complexd fp = detail::eval_checked(f, p + h * e);
    const complexd fm = detail::eval_checked(f, p - h * e);
    acc += (fp - 2.0 * fc + fm) / (h * h);
  }
  return acc;
}

/// Componentwise Laplacian of a complex vector field.
template <class F>
Complex3 fd_laplacian3(F&& f, const Vec3& p, const FdScheme& s = {}) {
  const double h = s.step(p);
  const Complex3 fc = detail::eval_checked(f, p);
  Complex3 acc;
  for (int i = 0; i < 3; ++i) {
    const Vec3 e = axis_unit(i);
    const Complex3 fp = detail::eval_checked(f, p + h * e);
    const Complex3 fm = detail::eval_checked(f, p - h * e);
    acc = acc + (1.0 / (h * h)) * (fp - 2.0 * fc + fm);
  }
  return acc;
}

/// Hessian of a real scalar field (symmetric by construction of the stencil).
template <class F>
Mat3 fd_hessian(F&& f, const Vec3& p, const FdScheme& s = {}) {
  const double h = s.step(p);
  Mat3 H;
  const double fc = f(p);
  if (!std::isfinite(fc))
    throw EvalError("non-finite field value at stencil point " + describe(p));
  for (int i = 0; i < 3; ++i) {
    const Vec3 ei = axis_unit(i);
    const double fp = f(p + h * ei);
    const double fm = f(p - h * ei);
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw EvalError("non-finite field value near " + describe(p));
    H.m[i][i] = (fp - 2.0 * fc + fm) / (h * h);
    for (int j = i + 1; j < 3; ++j) {
      const Vec3 ej = axis_unit(j);
      const double fpp = f(p + h * ei + h * ej);
      const double fpm = f(p + h * ei - h * ej);
      const double fmp = f(p - h * ei + h * ej);
      const double fmm = f(p - h * ei - h * ej);
      const double v = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
      H.m[i][j] = v;
      H.m[j][i] = v;
    }
  }
  return H;
}

/// Gradient in cylindrical coordinates, returned with Cartesian components:
///   (d_x1 f,
///    cos(theta) d_r f - sin(theta)/r d_theta f,
///    sin(theta) d_r f + cos(theta)/r d_theta f)^t.
/// Partials of f are central differences in (x1, r, theta).
template <class F>
Complex3 cyl_gradient(F&& f, const CylPoint& p, const FdScheme& s = {}) {
  require_off_axis(p.r);
  const double h = s.step(p);
  if (p.r - h <= 0.0)
    throw DomainError("cylindrical stencil crosses the axis at r = " +
                      std::to_string(p.r));
  auto diff = [&](const CylPoint& a, const CylPoint& b) {
    const complexd fa = f(a), fb = f(b);
    if (!finite(fa) || !finite(fb))
      throw EvalError("non-finite field value near (x1, r) = (" +
                      std::to_string(p.x1) + ", " + std::to_string(p.r) + ")");
    return (fa - fb) / (2.0 * h);
  };
  const complexd f1 = diff({p.x1 + h, p.r, p.theta}, {p.x1 - h, p.r, p.theta});
  const complexd fr = diff({p.x1, p.r + h, p.theta}, {p.x1, p.r - h, p.theta});
  const complexd ft = diff({p.x1, p.r, p.theta + h}, {p.x1, p.r, p.theta - h});
  const double c = std::cos(p.theta), sn = std::sin(p.theta);
  return {f1, c * fr - sn / p.r * ft, sn * fr + c / p.r * ft};
}

}  // namespace cgo
