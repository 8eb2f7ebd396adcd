// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "cgobeam/dirac.hpp"
#include "cgobeam/io.hpp"
#include "cgobeam/kelvin.hpp"
#include "cgobeam/lcw.hpp"
#include "cgobeam/presets.hpp"
#include "cgobeam/rng.hpp"
#include "cgobeam/verify.hpp"

namespace cgo {

/// One named quantitative check: pass iff value < threshold (want_less) or
/// value > threshold.  Thresholds are fixed here, not tunable from outside.
struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool want_less = true;

  bool pass() const { return want_less ? value < threshold : value > threshold; }
};

inline constexpr std::uint64_t kDefaultSeed = 20260808;

namespace checks_detail {

constexpr double pi = 3.141592653589793238462643;

inline double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

inline std::vector<Vec3> cyl_points(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vec3> pts;
  for (int i = 0; i < n; ++i)
    pts.push_back(
        cyl_cart({0.0, rng.uniform(0.6, 2.4), rng.uniform(-3.0, 3.0)}));
  return pts;
}

inline std::vector<Vec3> annulus_points(int n, std::uint64_t seed,
                                        const KelvinMap& km) {
  Rng rng(seed);
  std::vector<Vec3> pts;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform(2.5, 6.0);
    const double w = rng.uniform(-1.5, 1.5);
    pts.push_back(km.apply(Vec3{0.5 * (u + w), 0.5 * (u - w),
                                rng.uniform(-3.0, 3.0)}));
  }
  return pts;
}

inline BeamFields cyl_beam_fields(double tau, double k) {
  const CylBeamParams bp = CylBeamParams::make(tau, 0.5, 1.0, k);
  BeamFields bf;
  bf.E = [bp](const Vec3& x) { return cylindrical_beam(bp, cart_cyl(x)).E; };
  bf.H = [bp](const Vec3& x) { return cylindrical_beam(bp, cart_cyl(x)).H; };
  bf.mu = [bp](const Vec3& x) { return bp.medium.mu(x); };
  bf.gamma = [bp](const Vec3& x) { return bp.medium.gamma(x); };
  bf.omega = bp.medium.omega;
  return bf;
}

inline BeamFields physical_beam_fields(double tau) {
  const Vec3 a{-1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
  const VirtualBeamParams vp =
      VirtualBeamParams::make(tau, std::sqrt(7.0), a, a, 5.0);
  const KelvinMap km{vp.R};
  BeamFields bf;
  bf.E = [=](const Vec3& x) { return physical_beam(vp, km, x).E; };
  bf.H = [=](const Vec3& x) { return physical_beam(vp, km, x).H; };
  bf.mu = [=](const Vec3&) { return complexd(vp.mu0); };
  bf.gamma = [=](const Vec3&) { return vp.gamma0(); };
  bf.omega = vp.omega;
  return bf;
}

inline BeamFields plane_wave_fields(double omega) {
  const double k = omega;
  const Vec3 dir = (1.0 / 3.0) * Vec3{2.0, 2.0, 1.0};
  const Vec3 pol = (1.0 / std::sqrt(2.0)) * Vec3{1.0, -1.0, 0.0};
  BeamFields bf;
  bf.E = [=](const Vec3& x) {
    return std::exp(kI * k * dot(Complex3::from(dir), x)) * Complex3::from(pol);
  };
  bf.H = [=](const Vec3& x) {
    return std::exp(kI * k * dot(Complex3::from(dir), x)) *
           Complex3::from(cross(dir, pol));
  };
  bf.mu = [](const Vec3&) { return complexd(1.0); };
  bf.gamma = [](const Vec3&) { return complexd(1.0); };
  bf.omega = omega;
  return bf;
}

}  // namespace checks_detail

/// Eikonal residuals of the two cylindrical phases at 100 seeded admissible
/// points each, plus the broken-pair control with its exact defect.
inline std::vector<CheckResult> eikonal_suite(std::uint64_t seed = kDefaultSeed) {
  using namespace checks_detail;
  const auto start = std::chrono::steady_clock::now();
  const FdScheme s{3e-5, true};
  Rng rng(seed);

  double worst_cyl = 0.0;
  const Phase cyl = Phase::cyl_linear();
  for (int i = 0; i < 100; ++i) {
    const CylPoint p{rng.uniform(-2, 2), rng.uniform(0.5, 3),
                     rng.uniform(-pi + 0.1, pi - 0.1)};
    const EikonalReport r = eikonal_residuals(cyl, p, s);
    worst_cyl = std::max({worst_cyl, r.res_norm, r.res_orth});
  }
  double worst_log = 0.0;
  const Phase logc = Phase::log_conj();
  for (int i = 0; i < 100; ++i) {
    const CylPoint p{rng.uniform(-2, 2), rng.uniform(0.5, 3),
                     rng.uniform(0.1, pi - 0.1)};
    const EikonalReport r = eikonal_residuals(logc, p, s);
    worst_log = std::max({worst_log, r.res_norm, r.res_orth});
  }
  const EikonalReport broken = eikonal_residuals(
      [](const CylPoint& c) { return -c.x1; },
      [](const CylPoint& c) { return -2.0 * c.r; }, CylPoint{0.3, 1.1, 0.9}, s);

  std::vector<CheckResult> out;
  out.push_back({"eikonal cyl-linear worst residual (100 pts)", worst_cyl, 1e-7});
  out.push_back({"eikonal log-conj worst residual (100 pts)", worst_log, 1e-7});
  out.push_back({"eikonal control |res_norm - 3|",
                 std::abs(broken.res_norm - 3.0), 1e-6});
  out.push_back({"eikonal suite runtime [s]", seconds_since(start), 1.0});
  return out;
}

/// Transport residuals of the constructed amplitudes plus the stencil-order
/// measurement.
inline std::vector<CheckResult> transport_suite(
    std::uint64_t seed = kDefaultSeed) {
  using namespace checks_detail;
  const FdScheme s{5e-5, true};
  Rng rng(seed);

  auto g = [](double t) {
    Complex8 v;
    v.s1 = -std::exp(kI * t);
    v.V1 = Complex3{complexd(std::cos(t), 0.2), complexd(std::sin(2 * t)),
                    0.3 * std::exp(kI * 2.0 * t)};
    v.s2 = complexd(1.0, -0.5) * std::cos(t);
    v.V2 = Complex3{complexd(0.4), std::exp(kI * t) * complexd(0, 1),
                    complexd(std::sin(t), std::cos(t))};
    return v;
  };

  const Phase cyl = Phase::cyl_linear(0.5);
  auto A_cyl = [&](const Vec3& x) {
    return transport_amplitude(cyl, g, cart_cyl(x));
  };
  double worst_cyl = 0.0;
  for (int i = 0; i < 50; ++i) {
    const CylPoint p{rng.uniform(-1, 1), rng.uniform(0.5, 2.5),
                     rng.uniform(-pi + 0.2, pi - 0.2)};
    worst_cyl =
        std::max(worst_cyl, transport_residual(cyl, A_cyl, cyl_cart(p), s));
  }

  const Phase logc = Phase::log_conj(0.5);
  auto A_log = [&](const Vec3& x) {
    return transport_amplitude(logc, g, cart_cyl(x));
  };
  double worst_log = 0.0;
  for (int i = 0; i < 50; ++i) {
    const CylPoint p{rng.uniform(-1, 1), rng.uniform(0.5, 2.5),
                     rng.uniform(0.15, pi - 0.15)};
    worst_log =
        std::max(worst_log, transport_residual(logc, A_log, cyl_cart(p), s));
  }

  const Vec3 p0 = cyl_cart({0.2, 1.1, 0.8});
  const double e1 = transport_residual(cyl, A_cyl, p0, FdScheme{1e-3, false});
  const double e2 = transport_residual(cyl, A_cyl, p0, FdScheme{5e-4, false});
  const double order = std::log2(e1 / e2);

  std::vector<CheckResult> out;
  out.push_back({"transport cyl-linear worst residual (50 pts)", worst_cyl, 1e-6});
  out.push_back({"transport log-conj worst residual (50 pts)", worst_log, 1e-6});
  out.push_back({"transport stencil order lower", order, 1.7, false});
  out.push_back({"transport stencil order upper", order, 2.3});
  return out;
}

/// Carleman-weight condition for the admissible weights and the quadratic
/// negative control.
inline std::vector<CheckResult> lcw_suite(std::uint64_t seed = kDefaultSeed) {
  using namespace checks_detail;
  const FdScheme s{5e-5, true};
  Rng rng(seed);

  auto flat = [](const Vec3& x) { return -x.x1; };
  const double r_flat =
      carleman_weight_residual(flat, Vec3{0.3, 0.1, -0.5}, 16, seed, s);

  auto logw = [](const Vec3& x) { return -std::log(norm(x)); };
  double r_log = 0.0;
  for (int i = 0; i < 20; ++i) {
    Vec3 p = rng.direction();
    p = rng.uniform(0.5, 3.0) * p;
    r_log = std::max(r_log,
                     carleman_weight_residual(logw, p, 16, seed + 1 + i, s));
  }

  auto quad = [](const Vec3& x) { return norm2(x); };
  const double r_quad =
      carleman_weight_residual(quad, Vec3{1.0, 0.0, 0.0}, 16, seed, s);

  std::vector<CheckResult> out;
  out.push_back({"carleman weight residual for -x1", r_flat, 1e-6});
  out.push_back({"carleman weight residual for -log|x| (20 pts)", r_log, 1e-6});
  out.push_back({"carleman control residual for |x|^2", r_quad, 1.0, false});
  return out;
}

/// Symbol square, auxiliary-scalar cancellation, and factorization locality.
inline std::vector<CheckResult> dirac_suite(std::uint64_t seed = kDefaultSeed) {
  using namespace checks_detail;
  Rng rng(seed);

  double worst_sq = 0.0;
  for (int i = 0; i < 50; ++i) {
    auto c = [&](bool cpx) {
      return complexd(rng.uniform(-2, 2), cpx ? rng.uniform(-2, 2) : 0.0);
    };
    const bool cpx = i % 2 == 0;
    const Complex3 xi{c(cpx), c(cpx), c(cpx)};
    const Matrix8 P = dirac_symbol(xi);
    const Matrix8 expect = dot(xi, xi) * Matrix8::identity();
    worst_sq = std::max(worst_sq, (P * P - expect).amax() / norm2(xi));
  }

  double worst_b = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double tau = rng.uniform(2.0, 50.0);
    const double lambda = rng.uniform(0.0, 2.0);
    const double k = rng.uniform(0.0, 3.0);
    const double rho = rng.uniform(0.3, 2.5);
    const CylPoint p{rng.uniform(-1, 1), rng.uniform(0.3, 3.0),
                     rng.uniform(-3.0, 3.0)};
    const complexd chi = -std::exp(kI * rho * p.theta);
    const complexd dchi = -kI * rho * std::exp(kI * rho * p.theta);
    const Complex8 g = cancellation_profile(chi, chi, tau, lambda, k, p.theta);
    const Complex8 dg =
        cancellation_profile_dtheta(dchi, dchi, tau, lambda, k, p.theta);
    const auto [b1, b2] = auxiliary_scalars(g, dg, tau, lambda, k, p);
    const double ref = (std::hypot(tau, lambda) * amax(g.V2) + k + 1.0) /
                       std::sqrt(2.0 * p.r);
    worst_b = std::max(worst_b, std::max(std::abs(b1), std::abs(b2)) / ref);
  }

  const MediumProfile m = MediumProfile::radial_bump(0.1, 0.15, 1.0);
  auto chi_cut = [](const Vec3& x) {
    return std::exp(-0.5 * norm2(x - Vec3{0.45, 0.1, -0.15}));
  };
  auto Y = [](const Vec3& x) {
    Complex8 y;
    for (int c = 0; c < 8; ++c) {
      const double a = 0.1 * c;
      y[c] = complexd(
          (1.0 + 0.3 * std::sin(0.6 * x.x1 + a)) * std::exp(0.1 * x.x2),
          0.25 * std::sin(0.3 * x.x3 + a) + 0.1 * std::cos(0.4 * x.x1));
    }
    return y;
  };
  const FdScheme s{7e-4, false};
  double worst_loc = 0.0, min_control = 1e300;
  int kept = 0;
  while (kept < 20) {
    Vec3 p = rng.point(-0.45, 0.45);
    const double n = norm(p);
    if (n < 0.25 || n > 0.55) continue;
    ++kept;
    worst_loc = std::max(worst_loc, locality_residual(m, Y, chi_cut, p, s));
    min_control =
        std::min(min_control, locality_residual(m, Y, chi_cut, p, s, 2.0));
  }

  std::vector<CheckResult> out;
  out.push_back({"dirac symbol square relative error (50 xi)", worst_sq, 1e-12});
  out.push_back(
      {"auxiliary scalar cancellation relative (100 samples)", worst_b, 1e-10});
  out.push_back({"factorization locality residual, bump medium (20 pts)",
                 worst_loc, 1e-4});
  out.push_back({"factorization mismatched-potential control", min_control,
                 1e-2, false});
  return out;
}

/// Inversion geometry, Jacobian closed form, and the pushed plane wave.
inline std::vector<CheckResult> kelvin_suite(std::uint64_t seed = kDefaultSeed) {
  using namespace checks_detail;
  const KelvinMap km{5.0};
  Rng rng(seed);

  double worst_inv = 0.0, worst_jac = 0.0;
  for (int i = 0; i < 100; ++i) {
    Vec3 x = rng.direction();
    x = rng.uniform(0.1 * km.R, 10.0 * km.R) * x;
    worst_inv =
        std::max(worst_inv, norm(km.apply(km.apply(x)) - x) / norm(x));

    const double h = 1e-5 * norm(x);
    const Mat3 J = km.jacobian(x);
    for (int j = 0; j < 3; ++j) {
      const Vec3 e = axis_unit(j);
      const Vec3 d =
          (1.0 / (2.0 * h)) * (km.apply(x + h * e) - km.apply(x - h * e));
      for (int r = 0; r < 3; ++r)
        worst_jac = std::max(worst_jac, std::abs(J.m[r][j] - d[r]));
    }
  }

  const Vec3 x2r = (2.0 * km.R / std::sqrt(3.0)) * Vec3{1.0, 1.0, 1.0};
  const double det_err =
      std::abs(std::abs(km.jacobian(x2r).det()) - 1.0 / 64.0);

  // pushed-forward plane wave against the transformed parameters
  const double omega = 2.0;
  const BeamFields pw = plane_wave_fields(omega);
  auto Et = [&](const Vec3& xt) { return pushforward_field(km, pw.E, xt); };
  auto Ht = [&](const Vec3& xt) {
    return pushforward_pseudofield(km, pw.H, xt);
  };
  auto mut = [&](const Vec3& xt) {
    return pushforward_params(km, xt, complexd(1.0), complexd(1.0)).first;
  };
  auto gat = [&](const Vec3& xt) {
    return pushforward_params(km, xt, complexd(1.0), complexd(1.0)).second;
  };
  double worst_pw = 0.0;
  for (int i = 0; i < 20; ++i) {
    Vec3 xt = rng.direction();
    xt = rng.uniform(2.0, 20.0) * xt;
    worst_pw = std::max(
        worst_pw, maxwell_residual(Et, Ht, mut, gat, omega, xt).relative);
  }

  std::vector<CheckResult> out;
  out.push_back({"inversion involution relative error (100 pts)", worst_inv, 1e-12});
  out.push_back({"jacobian vs finite differences (100 pts)", worst_jac, 1e-6});
  out.push_back({"|det DK| at |x| = 2R vs 1/64", det_err, 1e-14});
  out.push_back({"pushed plane-wave relative residual (20 pts)", worst_pw, 1e-4});
  return out;
}

/// Large-parameter residual scaling for the two beam families plus the
/// tau-independent control.
inline std::vector<CheckResult> residual_suite(
    std::uint64_t seed = kDefaultSeed) {
  using namespace checks_detail;
  const auto start = std::chrono::steady_clock::now();
  const FdScheme s;

  const auto cyl_pts = cyl_points(40, seed);
  auto cyl_family = [](double tau) { return cyl_beam_fields(tau, 1.0); };
  const ScalingResult cyl =
      scaling_study(cyl_family, {10.0, 20.0, 40.0, 80.0}, cyl_pts, s);
  const double ratio =
      cyl.rows[2].median_relative / cyl.rows[0].median_relative;

  const KelvinMap km{5.0};
  auto phys_family = [](double tau) { return physical_beam_fields(tau); };
  const ScalingResult phys = scaling_study(phys_family, {4.0, 8.0, 16.0},
                                           annulus_points(32, seed + 1, km), s);

  auto ctrl_family = [](double) { return plane_wave_fields(2.0); };
  const ScalingResult ctrl =
      scaling_study(ctrl_family, {10.0, 20.0, 40.0}, cyl_pts, s);

  std::vector<CheckResult> out;
  out.push_back({"cyl beam scaling slope lower", cyl.slope, -1.4, false});
  out.push_back({"cyl beam scaling slope upper", cyl.slope, -0.6});
  out.push_back({"cyl beam residual ratio tau 40/10 lower", ratio, 0.15, false});
  out.push_back({"cyl beam residual ratio tau 40/10 upper", ratio, 0.40});
  out.push_back({"kelvin beam scaling slope lower", phys.slope, -1.5, false});
  out.push_back({"kelvin beam scaling slope upper", phys.slope, -0.5});
  out.push_back({"plane-wave control slope lower", ctrl.slope, -0.2, false});
  out.push_back({"plane-wave control slope upper", ctrl.slope, 0.2});
  out.push_back({"residual suite runtime [s]",
                 checks_detail::seconds_since(start), 30.0});
  return out;
}

/// Angle-invariance of the beam intensities and the component power shift.
inline std::vector<CheckResult> nondiffraction_suite(
    std::uint64_t seed = kDefaultSeed) {
  using namespace checks_detail;
  const CylBeamParams bp = CylBeamParams::make(10.0, 0.5, 1.0, 1.0);
  Rng rng(seed);

  double worst_circle = 0.0, worst_sum = 0.0, min_swing = 1e300;
  for (int c = 0; c < 6; ++c) {
    const double x1 = rng.uniform(-0.1, 0.1);
    const double r = rng.uniform(0.5, 2.4);
    double i_max = 0.0, i_min = 1e300;
    double s_max = 0.0, s_min = 1e300;
    double e2_max = 0.0, e2_min = 1e300;
    for (int j = 0; j < 360; ++j) {
      const double theta = -pi + 2 * pi * j / 360.0;
      const Complex3 E = cylindrical_beam(bp, {x1, r, theta}).E;
      const double I = norm(E);
      const double S = std::norm(E.y) + std::norm(E.z);
      i_max = std::max(i_max, I);
      i_min = std::min(i_min, I);
      s_max = std::max(s_max, S);
      s_min = std::min(s_min, S);
      e2_max = std::max(e2_max, std::abs(E.y));
      e2_min = std::min(e2_min, std::abs(E.y));
    }
    worst_circle = std::max(worst_circle, (i_max - i_min) / i_max);
    worst_sum = std::max(worst_sum, (s_max - s_min) / s_max);
    min_swing = std::min(min_swing, e2_max - e2_min);
  }

  std::vector<CheckResult> out;
  out.push_back(
      {"|E| deviation over circles (6 circles x 360)", worst_circle, 1e-12});
  out.push_back({"|E2|^2 + |E3|^2 angular deviation", worst_sum, 1e-12});
  out.push_back({"|E2| angular swing (power shift)", min_swing, 0.0, false});
  return out;
}

/// Structural reproduction of the three rendered configurations.
inline std::vector<CheckResult> figures_suite(
    const std::string& outdir, std::uint64_t seed = kDefaultSeed) {
  FigureOptions opt;
  opt.seed = seed;
  const auto all = run_figures("all", outdir, opt);

  const auto& f1 = all.at("fig1").metrics;
  const auto& f2 = all.at("fig2").metrics;
  const auto& f4 = all.at("fig4").metrics;

  std::vector<CheckResult> out;
  out.push_back({"fig1 top-decile annulus containment",
                 f1.at("decile_in_annulus"), 0.9, false});
  out.push_back({"fig1 off-plane decay |E(0.1)|/|E(0)| vs e^-1",
                 std::abs(f1.at("axial_decay_ratio") - std::exp(-1.0)), 1e-12});
  out.push_back({"fig2 ring intensity deviation", f2.at("ring_deviation"), 1e-12});
  out.push_back({"fig4 peak growth (later front / earlier front)",
                 f4.at("peak_b") / f4.at("peak_a"), 1.0, false});
  out.push_back({"fig4 half-max lobe area shrink (later / earlier)",
                 f4.at("lobe_area_b") / f4.at("lobe_area_a"), 1.0});
  out.push_back({"fig4 half-max lobe pixel shrink (later / earlier)",
                 f4.at("lobe_px_b") / f4.at("lobe_px_a"), 1.0});
  out.push_back({"fig4 lobe dominance (half-max fraction, earlier)",
                 f4.at("lobe_px_a") / f4.at("valid_px_a"), 0.05});
  out.push_back({"fig4 lobe dominance (half-max fraction, later)",
                 f4.at("lobe_px_b") / f4.at("valid_px_b"), 0.05});
  return out;
}

/// Byte-level determinism of repeated figure runs with a fixed seed.
inline std::vector<CheckResult> determinism_suite(
    const std::string& outdir, std::uint64_t seed = kDefaultSeed) {
  FigureOptions opt;
  opt.seed = seed;
  const std::string d1 = outdir + "/run1";
  const std::string d2 = outdir + "/run2";
  const auto r1 = run_figures("all", d1, opt);
  const auto r2 = run_figures("all", d2, opt);

  int mismatches = 0, files = 0;
  for (const auto& [name, res] : r1) {
    const auto& other = r2.at(name);
    for (std::size_t i = 0; i < res.files.size(); ++i) {
      ++files;
      if (slurp(res.files[i]) != slurp(other.files[i])) ++mismatches;
    }
  }
  std::vector<CheckResult> out;
  out.push_back({"figure artifacts compared", double(files), 8.0, false});
  out.push_back({"byte mismatches across repeated runs", double(mismatches), 0.5});
  return out;
}

}  // namespace cgo
