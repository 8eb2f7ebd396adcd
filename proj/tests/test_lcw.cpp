// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "cgobeam/lcw.hpp"
#include "cgobeam/rng.hpp"
#include "doctest.h"

using namespace cgo;

namespace {
constexpr double pi = 3.141592653589793238462643;

// smooth periodic eight-vector profile for transport tests
Complex8 smooth_g(double t) {
  Complex8 g;
  g.s1 = -std::exp(kI * t);
  g.V1 = Complex3{complexd(std::cos(t), 0.2), complexd(std::sin(2 * t)),
                  0.3 * std::exp(kI * 2.0 * t)};
  g.s2 = complexd(1.0, -0.5) * std::cos(t);
  g.V2 = Complex3{complexd(0.4), std::exp(kI * t) * complexd(0, 1),
                  complexd(std::sin(t), std::cos(t))};
  return g;
}

FdScheme tight_scheme() {
  FdScheme s;
  s.h = 3e-5;
  return s;
}
}  // namespace

TEST_CASE("phase values match closed forms") {
  const Phase cyl = Phase::cyl_linear();
  CHECK(phase_eval(cyl, CylPoint{1.0, 2.0, 0.7}) == complexd(-1.0, -2.0));

  const Phase logc = Phase::log_conj();
  // -log(-i) = i pi/2
  const complexd v = phase_eval(logc, CylPoint{0.0, 1.0, pi / 2});
  CHECK(std::abs(v.real() - 0.0) < 1e-15);
  CHECK(std::abs(v.imag() - pi / 2) < 1e-15);

  // real part is -log |z|
  const double e = std::exp(1.0);
  const CylPoint pe{e / std::sqrt(2.0), e / std::sqrt(2.0), 1.0};
  CHECK(phase_eval(logc, pe).real() == doctest::Approx(-1.0));

  // admissible sector only
  CHECK_THROWS_AS(phase_eval(logc, CylPoint{0.0, 1.0, -0.3}), DomainError);
}

TEST_CASE("linear phases enforce the null condition") {
  const Complex3 null_zeta{complexd(1.0), complexd(0.0, 1.0), complexd(0.0)};
  const Phase lin = Phase::linear(null_zeta);
  CHECK(phase_eval(lin, Vec3{2.0, 3.0, -1.0}) == complexd(2.0, 3.0));

  // Helmholtz variant zeta.zeta = -k^2
  const double k = 0.8;
  const Complex3 hz{complexd(1.0), complexd(0.0, std::sqrt(1.0 + k * k)),
                    complexd(0.0)};
  CHECK_NOTHROW(Phase::linear(hz, k));

  const Complex3 bad{complexd(1.0), complexd(1.0), complexd(0.0)};
  CHECK_THROWS_AS(Phase::linear(bad), ParamError);
}

TEST_CASE("eikonal residuals vanish for the admissible phases") {
  const Phase cyl = Phase::cyl_linear();
  const EikonalReport r = eikonal_residuals(cyl, CylPoint{0.5, 1.5, 1.0});
  CHECK(r.res_norm < 1e-10);
  CHECK(r.res_orth < 1e-10);

  const Complex3 null_zeta{complexd(1.0), complexd(0.0, 1.0), complexd(0.0)};
  const EikonalReport rl =
      eikonal_residuals(Phase::linear(null_zeta), CylPoint{0.5, 1.5, 1.0});
  CHECK(rl.res_norm < 1e-9);
  CHECK(rl.res_orth < 1e-9);

  const Phase logc = Phase::log_conj();
  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const CylPoint p{rng.uniform(-2, 2), rng.uniform(0.5, 3),
                     rng.uniform(0.1, pi - 0.1)};
    const EikonalReport q = eikonal_residuals(logc, p, tight_scheme());
    CHECK(q.res_norm < 1e-7);
    CHECK(q.res_orth < 1e-7);
  }
}

TEST_CASE("eikonal negative control reports the exact defect") {
  auto phi = [](const CylPoint& c) { return -c.x1; };
  auto psi = [](const CylPoint& c) { return -2.0 * c.r; };
  Rng rng(7);
  for (int i = 0; i < 5; ++i) {
    const CylPoint p{rng.uniform(-1, 1), rng.uniform(0.5, 2),
                     rng.uniform(0.2, 2.8)};
    const EikonalReport r = eikonal_residuals(phi, psi, p, tight_scheme());
    CHECK(std::abs(r.res_norm - 3.0) < 1e-8);  // |grad psi|^2 - |grad phi|^2 = 3
    CHECK(r.res_orth < 1e-8);
  }
}

TEST_CASE("carleman weight condition") {
  auto flat = [](const Vec3& x) { return -x.x1; };
  CHECK(carleman_weight_residual(flat, Vec3{0.3, 0.1, -0.5}) < 1e-9);

  auto logw = [](const Vec3& x) { return -std::log(norm(x)); };
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    Vec3 p = rng.direction();
    p = rng.uniform(0.5, 3.0) * p;
    const double res =
        carleman_weight_residual(logw, p, 16, 1000 + i, FdScheme{5e-5, true});
    CHECK(res < 1e-6);
  }

  // |x|^2 is not a limiting weight: residual 2|grad|^2 + 2|xi|^2 = 16 here
  auto quad = [](const Vec3& x) { return norm2(x); };
  const double bad = carleman_weight_residual(quad, Vec3{1.0, 0.0, 0.0});
  CHECK(bad >= 16.0 - 1e-6);
  CHECK(bad >= 1.0);

  auto constant = [](const Vec3&) { return 1.0; };
  CHECK_THROWS_AS(carleman_weight_residual(constant, Vec3{1, 0, 0}),
                  DomainError);
}

TEST_CASE("amplitude prefactor uses the principal branch") {
  auto g = [](double) {
    Complex8 v;
    v.s1 = 1.0;
    return v;
  };
  const Phase ph = Phase::cyl_linear(0.0);
  const Complex8 A = transport_amplitude(ph, g, CylPoint{3.7, 0.5, 0.0});
  // (2i r)^{-1/2} at r = 1/2 is i^{-1/2} = e^{-i pi/4}
  CHECK(std::abs(A.s1 - std::exp(complexd(0.0, -pi / 4))) < 1e-14);
  for (int i = 1; i < 8; ++i) CHECK(std::abs(A[i]) == 0.0);
}

TEST_CASE("amplitude modulus is independent of theta and of x1") {
  const Phase ph = Phase::cyl_linear(0.5);
  auto g = [](double t) {
    Complex8 v;
    v.s1 = -std::exp(kI * 2.0 * t);  // unit modulus profile
    return v;
  };
  const double r = 1.3;
  const double a0 =
      std::abs(transport_amplitude(ph, g, CylPoint{0.0, r, 0.3}).s1);
  for (double theta : {0.9, 2.0, -2.4}) {
    CHECK(std::abs(
              std::abs(transport_amplitude(ph, g, CylPoint{0.0, r, theta}).s1) -
              a0) < 1e-14);
  }
  // |e^{i lambda x1}| = 1: modulus ratio over x1 at fixed r is 1
  for (double x1 : {0.5, -1.0, 2.0}) {
    CHECK(std::abs(
              std::abs(transport_amplitude(ph, g, CylPoint{x1, r, 0.3}).s1) / a0 -
              1.0) < 1e-13);
  }
}

TEST_CASE("constructed amplitudes satisfy the transport equation") {
  FdScheme s;
  s.h = 5e-5;
  Rng rng(99);

  const Phase cyl = Phase::cyl_linear(0.5);
  auto A_cyl = [&](const Vec3& x) {
    return transport_amplitude(cyl, smooth_g, cart_cyl(x));
  };
  for (int i = 0; i < 50; ++i) {
    const CylPoint p{rng.uniform(-1, 1), rng.uniform(0.5, 2.5),
                     rng.uniform(-pi + 0.2, pi - 0.2)};
    CHECK(transport_residual(cyl, A_cyl, cyl_cart(p), s) < 1e-6);
  }

  const Phase logc = Phase::log_conj(0.5);
  auto A_log = [&](const Vec3& x) {
    return transport_amplitude(logc, smooth_g, cart_cyl(x));
  };
  for (int i = 0; i < 50; ++i) {
    const CylPoint p{rng.uniform(-1, 1), rng.uniform(0.5, 2.5),
                     rng.uniform(0.15, pi - 0.15)};
    CHECK(transport_residual(logc, A_log, cyl_cart(p), s) < 1e-6);
  }
}

TEST_CASE("transport residual flags a wrong amplitude") {
  const Phase cyl = Phase::cyl_linear(0.5);
  // missing the (2ir)^{-1/2} factor leaves a 1/(2r)-scale defect
  auto A_bad = [&](const Vec3& x) {
    const CylPoint c = cart_cyl(x);
    Complex8 v;
    v.s1 = std::exp(kI * 0.5 * c.z());
    return v;
  };
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    const CylPoint p{rng.uniform(-0.5, 0.5), rng.uniform(0.5, 2.0),
                     rng.uniform(-2.0, 2.0)};
    CHECK(transport_residual(cyl, A_bad, cyl_cart(p)) > 0.1);
  }
}

TEST_CASE("transport residual shrinks at second order in the step") {
  const Phase cyl = Phase::cyl_linear(0.5);
  auto A = [&](const Vec3& x) {
    return transport_amplitude(cyl, smooth_g, cart_cyl(x));
  };
  const Vec3 p = cyl_cart(CylPoint{0.2, 1.1, 0.8});
  auto res_at = [&](double h) {
    FdScheme s;
    s.h = h;
    s.scale_step = false;
    return transport_residual(cyl, A, p, s);
  };
  const double e1 = res_at(1e-3);
  const double e2 = res_at(5e-4);
  const double order = std::log2(e1 / e2);
  CHECK(order > 1.7);
  CHECK(order < 2.3);
}
