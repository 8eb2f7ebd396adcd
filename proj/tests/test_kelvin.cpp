// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "cgobeam/kelvin.hpp"
#include "cgobeam/rng.hpp"
#include "cgobeam/verify.hpp"
#include "doctest.h"

using namespace cgo;

namespace {
constexpr double pi = 3.141592653589793238462643;
}

TEST_CASE("sphere inversion fixes its sphere and is an involution") {
  const KelvinMap km{2.5};
  const Vec3 on{2.5, 0.0, 0.0};
  CHECK(norm(km.apply(on) - on) < 1e-14);

  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    Vec3 x = rng.direction();
    x = rng.uniform(0.1 * km.R, 10.0 * km.R) * x;
    const Vec3 back = km.apply(km.apply(x));
    CHECK(norm(back - x) < 1e-12 * norm(x));
  }
  CHECK_THROWS_AS(km.apply(Vec3{0, 0, 0}), DomainError);
}

TEST_CASE("spheres through the origin map to hyperplanes") {
  const KelvinMap km{1.0};
  // sphere centered (1/2, 0, 0) with radius 1/2 -> plane x1 = 1
  for (int i = 0; i < 20; ++i) {
    const double alpha = 0.2 + (pi - 0.4) * i / 19.0;  // keep off the origin
    const double beta = 0.37 + i;
    const Vec3 x{0.5 + 0.5 * std::cos(alpha),
                 0.5 * std::sin(alpha) * std::cos(beta),
                 0.5 * std::sin(alpha) * std::sin(beta)};
    CHECK(std::abs(km.apply(x).x1 - 1.0) < 1e-10);
  }
}

TEST_CASE("jacobian closed form, determinant, and reflection square") {
  const KelvinMap km{3.0};
  const Mat3 J = km.jacobian(Vec3{3.0, 0.0, 0.0});
  CHECK(J.m[0][0] == doctest::Approx(-1.0));
  CHECK(J.m[1][1] == doctest::Approx(1.0));
  CHECK(J.m[2][2] == doctest::Approx(1.0));
  CHECK(std::abs(J.m[0][1]) + std::abs(J.m[1][0]) + std::abs(J.m[2][1]) < 1e-14);

  // |det DK| = 1/64 at |x| = 2R, independent of R
  for (double R : {1.0, 3.0, 5.0}) {
    const KelvinMap k2{R};
    const Vec3 x = (2.0 * R / std::sqrt(3.0)) * Vec3{1.0, 1.0, 1.0};
    CHECK(std::abs(std::abs(k2.jacobian(x).det()) - 1.0 / 64.0) < 1e-12);
  }

  // DK DK = (R^4/|x|^4) I
  Rng rng(33);
  for (int i = 0; i < 30; ++i) {
    Vec3 x = rng.direction();
    x = rng.uniform(1.0, 9.0) * x;
    const Mat3 JJ = km.jacobian(x) * km.jacobian(x);
    const double f = std::pow(km.R, 4) / std::pow(norm(x), 4);
    CHECK((JJ - f * Mat3::identity()).amax() < 1e-12 * f);
  }
}

TEST_CASE("jacobian agrees with finite differences of the map") {
  const KelvinMap km{5.0};
  Rng rng(44);
  for (int i = 0; i < 100; ++i) {
    Vec3 x = rng.direction();
    x = rng.uniform(1.0, 20.0) * x;
    const double h = 1e-5 * norm(x);
    const Mat3 J = km.jacobian(x);
    for (int j = 0; j < 3; ++j) {
      const Vec3 e = axis_unit(j);
      const Vec3 d = (1.0 / (2.0 * h)) * (km.apply(x + h * e) - km.apply(x - h * e));
      for (int r = 0; r < 3; ++r) CHECK(std::abs(J.m[r][j] - d[r]) < 1e-6);
    }
  }
}

TEST_CASE("push-forward basics") {
  auto field = [](const Vec3& x) {
    return Complex3{complexd(x.x1, 0.2), complexd(std::sin(x.x2)),
                    complexd(x.x3 * x.x1, -1.0)};
  };
  // identity map leaves the field alone
  const Vec3 p{0.7, -0.3, 1.1};
  CHECK(amax(pushforward_field(IdentityMap{}, field, p) - field(p)) == 0.0);

  // linearity at seeded points
  const KelvinMap km{2.0};
  auto field2 = [](const Vec3& x) {
    return Complex3{complexd(std::cos(x.x3)), complexd(0.0, x.x1),
                    complexd(1.0)};
  };
  const complexd alpha{1.3, -0.4};
  auto combo = [&](const Vec3& x) {
    return alpha * field(x) + field2(x);
  };
  Rng rng(55);
  for (int i = 0; i < 20; ++i) {
    Vec3 x = rng.direction();
    x = rng.uniform(0.5, 6.0) * x;
    const Complex3 lhs = pushforward_field(km, combo, x);
    const Complex3 rhs = alpha * pushforward_field(km, field, x) +
                         pushforward_field(km, field2, x);
    CHECK(amax(lhs - rhs) < 1e-12 * std::max(1.0, amax(lhs)));
  }
}

TEST_CASE("push-forward parameters and isotropy") {
  const KelvinMap km{5.0};
  const complexd mu0{1.0}, gamma0{2.0, 0.3};
  auto [muR, gaR] = pushforward_params(km, Vec3{5.0, 0.0, 0.0}, mu0, gamma0);
  CHECK(std::abs(muR - mu0) < 1e-14);
  CHECK(std::abs(gaR - gamma0) < 1e-14);
  auto [mu2, ga2] = pushforward_params(km, Vec3{0.0, 10.0, 0.0}, mu0, gamma0);
  CHECK(std::abs(mu2 - 0.25 * mu0) < 1e-14);
  CHECK(std::abs(ga2 - 0.25 * gamma0) < 1e-14);

  // (DK mu0 DK^t)/|det DK| = (|x|^2/R^2) mu0 I
  Rng rng(66);
  for (int i = 0; i < 20; ++i) {
    Vec3 x = rng.direction();
    x = rng.uniform(1.0, 15.0) * x;
    const Mat3 J = km.jacobian(x);
    const Mat3 tensor =
        (1.0 / std::abs(J.det())) * (J * (1.0 * Mat3::identity()) * J.transposed());
    const double f = norm2(x) / (km.R * km.R);
    CHECK((tensor - f * Mat3::identity()).amax() < 1e-12 * f);
  }
}

TEST_CASE("pushed-forward plane wave satisfies the transformed system") {
  // exact plane wave in the constant background
  const double omega = 2.0, mu0 = 1.0, eps0 = 1.0;
  const double k = omega * std::sqrt(mu0 * eps0);
  const Vec3 dir = (1.0 / std::sqrt(3.0)) * Vec3{1.0, 1.0, 1.0};
  const Vec3 pol = (1.0 / std::sqrt(2.0)) * Vec3{1.0, -1.0, 0.0};
  auto E = [&](const Vec3& x) {
    return std::exp(kI * k * dot(Complex3::from(dir), x)) * Complex3::from(pol);
  };
  auto H = [&](const Vec3& x) {
    const Vec3 hp = std::sqrt(eps0 / mu0) * cross(dir, pol);
    return std::exp(kI * k * dot(Complex3::from(dir), x)) * Complex3::from(hp);
  };

  const KelvinMap km{5.0};
  auto Et = [&](const Vec3& xt) { return pushforward_field(km, E, xt); };
  auto Ht = [&](const Vec3& xt) { return pushforward_pseudofield(km, H, xt); };
  auto mut = [&](const Vec3& xt) {
    return pushforward_params(km, xt, complexd(mu0), complexd(eps0)).first;
  };
  auto gat = [&](const Vec3& xt) {
    return pushforward_params(km, xt, complexd(mu0), complexd(eps0)).second;
  };

  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    Vec3 xt = rng.direction();
    xt = rng.uniform(2.0, 20.0) * xt;  // annulus for L = 4.5 R
    const ResidualReport rep = maxwell_residual(Et, Ht, mut, gat, omega, xt);
    CHECK(rep.relative < 1e-4);
  }

  // control: treating H as a plain vector under the reflection leaves the
  // time-reversed system, an order-one defect
  auto Hwrong = [&](const Vec3& xt) { return pushforward_field(km, H, xt); };
  const Vec3 xt0{3.0, -2.0, 4.0};
  CHECK(maxwell_residual(Et, Hwrong, mut, gat, omega, xt0).relative > 0.5);
}

TEST_CASE("null frequency vector") {
  Rng rng(88);
  for (int i = 0; i < 30; ++i) {
    const double tau = rng.uniform(2.0, 40.0);
    const double rho = rng.uniform(0.0, 0.95) * tau;
    const Complex3 z = make_zeta(tau, rho);
    CHECK(std::abs(dot(z, z)) < 1e-12 * norm2(z));
    CHECK(std::abs(norm2(z) - tau * tau) < 1e-12 * tau * tau);
  }
  // rho = 0: zeta = (tau/2)(-1 + i, 1 + i, 0) and zeta/tau = zhat0
  const double tau = 6.0;
  const Complex3 z0 = make_zeta(tau, 0.0);
  CHECK(std::abs(z0.x - 0.5 * tau * complexd(-1, 1)) < 1e-14);
  CHECK(std::abs(z0.y - 0.5 * tau * complexd(1, 1)) < 1e-14);
  CHECK(std::abs(z0.z) == 0.0);
  CHECK(amax((1.0 / tau) * z0 - zhat0()) < 1e-15);

  CHECK_THROWS_AS(make_zeta(2.0, 2.0), ParamError);
  CHECK_THROWS_AS(make_zeta(2.0, -0.1), ParamError);
}

TEST_CASE("virtual packet structure") {
  const VirtualBeamParams vp =
      VirtualBeamParams::make(4.0, std::sqrt(7.0), Vec3{-1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0.0},
                              Vec3{0.3, 0.4, 0.0}, 5.0);

  // polarization a with zhat0 . a = 0 kills the electric part
  VirtualBeamParams vz = vp;
  vz.a = Vec3{0.0, 0.0, 1.0};
  const Vec3 xt{2.0, 2.5, 1.0};
  CHECK(norm(virtual_beam(vz, xt).e) == 0.0);
  CHECK(norm(virtual_beam(vz, xt).h) > 0.0);

  // modulus constant on planes xt1 - xt2 = c
  const double m0 = norm(virtual_beam(vp, Vec3{2.0, 2.5, 0.3}).e);
  for (const Vec3& q : {Vec3{3.0, 3.5, 0.3}, Vec3{2.0, 2.5, 4.0},
                        Vec3{1.0, 1.5, -2.0}}) {
    CHECK(std::abs(norm(virtual_beam(vp, q).e) - m0) < 1e-12 * m0);
  }

  // fields are parallel to zhat0 with exactly zero third component
  const VirtualFields vf = virtual_beam(vp, xt);
  CHECK(std::abs(vf.e.z) == 0.0);
  CHECK(std::abs(vf.h.z) == 0.0);
  CHECK(std::abs(vf.e.x * vf.h.y - vf.e.y * vf.h.x) <
        1e-14 * (norm(vf.e) * norm(vf.h) + 1e-300));

  // outside the annulus the cutoff region is not modeled
  CHECK_THROWS_AS(virtual_beam(vp, Vec3{0.1, 0.1, 0.0}), DomainError);
  CHECK_THROWS_AS(virtual_beam(vp, Vec3{30.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("physical beam modulus and intensity growth") {
  const Vec3 a{-1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0.0};
  const VirtualBeamParams vp = VirtualBeamParams::make(4.0, std::sqrt(7.0), a, a, 5.0);
  const KelvinMap km{vp.R};

  Rng rng(99);
  for (int i = 0; i < 25; ++i) {
    // draw xt in a comfortable part of the annulus, then map back
    const Vec3 xt{rng.uniform(1.5, 4.0), rng.uniform(1.5, 4.0),
                  rng.uniform(-2.0, 2.0)};
    const Vec3 x = km.apply(xt);
    const EHPair eh = physical_beam(vp, km, x);
    const double expect = vp.tau * std::pow(km.R / norm(x), 3) *
                          norm(virtual_beam(vp, km.apply(x)).e);
    CHECK(std::abs(norm(eh.E) - expect) < 1e-12 * expect);
  }

  // matched virtual modulus, different radii: growth is |x|^3 / |x'|^3
  const Vec3 xt1{2.0, 2.5, 0.5}, xt2{2.0, 2.5, 3.0};  // same xt1 - xt2
  const Vec3 x1 = km.apply(xt1), x2 = km.apply(xt2);
  const double I1 = norm(physical_beam(vp, km, x1).E);
  const double I2 = norm(physical_beam(vp, km, x2).E);
  const double expect_ratio = std::pow(norm(x1) / norm(x2), 3);
  CHECK(std::abs(I2 / I1 - expect_ratio) < 1e-12 * expect_ratio);

  // closed form agrees with the generic push-forward composition
  auto Et = [&](const Vec3& q) {
    const auto [muq, gaq] =
        pushforward_params(km, q, complexd(vp.mu0), vp.gamma0());
    (void)muq;
    return (-kI * vp.tau / std::sqrt(gaq)) * virtual_beam(vp, q).e;
  };
  const Vec3 x = km.apply(Vec3{2.2, 2.9, 1.3});
  const Complex3 composed = pushforward_field(km, Et, x);
  const Complex3 direct = physical_beam(vp, km, x).E;
  CHECK(amax(composed - direct) < 1e-12 * amax(direct));
}

TEST_CASE("lossy variant replaces eps0 by the complex gamma0") {
  VirtualBeamParams vp = VirtualBeamParams::make(
      4.0, 1.0, Vec3{-0.7, -0.7, 0.0}, Vec3{-0.7, -0.7, 0.0}, 5.0);
  vp.sigma0 = 0.5;
  vp.omega = 2.0;
  const KelvinMap km{vp.R};
  const Vec3 x = km.apply(Vec3{2.0, 2.0, 1.0});
  const EHPair eh = physical_beam(vp, km, x);
  const EHPair lossless = physical_beam(
      VirtualBeamParams::make(4.0, 1.0, vp.a, vp.b, 5.0), km, x);
  const double scale =
      std::abs(1.0 / std::sqrt(vp.gamma0()));  // |gamma0^{-1/2}| < 1
  CHECK(norm(eh.E) == doctest::Approx(scale * norm(lossless.E)).epsilon(1e-12));
  CHECK(norm(eh.H) == doctest::Approx(norm(lossless.H)).epsilon(1e-12));
}
