// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "cgobeam/fd.hpp"
#include "cgobeam/vec.hpp"

namespace cgo {

using FieldC3 = std::function<Complex3(const Vec3&)>;
using FieldC1 = std::function<complexd(const Vec3&)>;

/// Pointwise residuals of the time-harmonic system
///   curl E - i omega mu H = 0,   curl H + i omega gamma E = 0
/// plus the compatibility divergences div(gamma E), div(mu H).  Residuals
/// are max-component absolute values.
///
/// `relative` divides the worst residual by field_scale, which is the larger
/// of omega max(|mu|, |gamma|) max(|E|, |H|) and the fields' finite-difference
/// gradient scale.  For fields oscillating at the background wave number the
/// two coincide; for large-parameter packets the gradient scale is what the
/// first-order terms of the system actually carry, and dividing by it is what
/// makes leading-order truncation errors comparable across the parameter
/// sweep.
struct ResidualReport {
  double r_faraday = 0.0;
  double r_ampere = 0.0;
  double r_divE = 0.0;
  double r_divH = 0.0;
  double field_scale = 0.0;
  double relative = 0.0;
  bool degenerate = false;

  double worst() const {
    return std::max({r_faraday, r_ampere, r_divE, r_divH});
  }
};

inline ResidualReport maxwell_residual(const FieldC3& E, const FieldC3& H,
                                       const FieldC1& mu, const FieldC1& gamma,
                                       double omega, const Vec3& p,
                                       const FdScheme& s = {}) {
  const Mat3c JE = fd_jacobian(E, p, s);
  const Mat3c JH = fd_jacobian(H, p, s);
  auto curl_of = [](const Mat3c& J) {
    return Complex3{J.m[2][1] - J.m[1][2], J.m[0][2] - J.m[2][0],
                    J.m[1][0] - J.m[0][1]};
  };
  const Complex3 Ep = E(p), Hp = H(p);
  const complexd mup = mu(p), gap = gamma(p);

  ResidualReport rep;
  rep.r_faraday = amax(curl_of(JE) - kI * omega * mup * Hp);
  rep.r_ampere = amax(curl_of(JH) + kI * omega * gap * Ep);
  rep.r_divE = std::abs(
      fd_div([&](const Vec3& q) { return gamma(q) * E(q); }, p, s));
  rep.r_divH =
      std::abs(fd_div([&](const Vec3& q) { return mu(q) * H(q); }, p, s));

  const double coeff = omega * std::max(std::abs(mup), std::abs(gap));
  const double f = std::max(amax(Ep), amax(Hp));
  rep.field_scale = std::max({coeff * f, JE.amax(), JH.amax()});
  if (rep.field_scale > 0.0) {
    rep.relative = rep.worst() / rep.field_scale;
  } else {
    rep.degenerate = true;
  }
  return rep;
}

/// One row of a large-parameter scaling study.
struct ScalingRow {
  double tau = 0.0;
  double median_relative = 0.0;
  double p90_relative = 0.0;
  int failures = 0;
};

struct ScalingResult {
  std::vector<ScalingRow> rows;
  double slope = 0.0;  // least-squares slope of log(median) vs log(tau)
};

/// Fields of a beam at one tau value, together with its medium.
struct BeamFields {
  FieldC3 E;
  FieldC3 H;
  FieldC1 mu;
  FieldC1 gamma;
  double omega = 1.0;
};

/// Evaluate the relative residual of beam_family(tau) over the sample
/// points for each tau, reporting per-tau medians and the fitted log-log
/// slope.  Points that fail to evaluate are excluded and counted; more than
/// 20% failures for any tau is an error.
inline ScalingResult scaling_study(
    const std::function<BeamFields(double)>& beam_family,
    const std::vector<double>& taus, const std::vector<Vec3>& samples,
    const FdScheme& s = {}) {
  if (taus.size() < 3) throw ParamError("scaling study needs >= 3 tau values");
  if (!std::is_sorted(taus.begin(), taus.end()))
    throw ParamError("scaling study requires monotone tau values");
  if (samples.size() < 30)
    throw ParamError("scaling study requires >= 30 sample points");

  ScalingResult out;
  for (double tau : taus) {
    const BeamFields bf = beam_family(tau);
    std::vector<double> rel;
    int failures = 0;
    for (const Vec3& p : samples) {
      try {
        const ResidualReport r =
            maxwell_residual(bf.E, bf.H, bf.mu, bf.gamma, bf.omega, p, s);
        if (r.degenerate) throw EvalError("degenerate field scale");
        rel.push_back(r.relative);
      } catch (const Error&) {
        ++failures;
      }
    }
    if (failures * 5 > static_cast<int>(samples.size()))
      throw EvalError("more than 20% of sample points failed at tau = " +
                      std::to_string(tau));
    std::sort(rel.begin(), rel.end());
    ScalingRow row;
    row.tau = tau;
    row.failures = failures;
    row.median_relative = rel[rel.size() / 2];
    row.p90_relative = rel[std::min(rel.size() - 1, (rel.size() * 9) / 10)];
    out.rows.push_back(row);
  }

  // least-squares fit in log-log coordinates
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(out.rows.size());
  for (const auto& r : out.rows) {
    const double x = std::log(r.tau), y = std::log(r.median_relative);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return out;
}

/// Moduli of a field sampled along a trajectory, with summary statistics.
struct IntensityProfile {
  std::vector<double> arc;     // arc parameter per sample
  std::vector<double> value;   // |field|
  double max_deviation = 0.0;  // (max - min) / max, 0 when max == 0
  bool increasing = false;     // strictly increasing along the trajectory
};

inline IntensityProfile intensity_profile(const FieldC3& field,
                                          const std::vector<Vec3>& trajectory) {
  IntensityProfile out;
  double arc = 0.0;
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    if (i > 0) arc += norm(trajectory[i] - trajectory[i - 1]);
    out.arc.push_back(arc);
    out.value.push_back(norm(field(trajectory[i])));
  }
  if (!out.value.empty()) {
    const auto [mn, mx] = std::minmax_element(out.value.begin(), out.value.end());
    out.max_deviation = (*mx > 0.0) ? (*mx - *mn) / *mx : 0.0;
    out.increasing = out.value.size() > 1;
    for (std::size_t i = 1; i < out.value.size(); ++i)
      if (!(out.value[i] > out.value[i - 1])) {
        out.increasing = false;
        break;
      }
  }
  return out;
}

/// Circle {x1, r fixed} sampled at n angles in [theta0, theta1].
inline std::vector<Vec3> circle_points(double x1, double r, int n,
                                       double theta0 = 0.0,
                                       double theta1 = 6.283185307179586476925287) {
  std::vector<Vec3> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = theta0 + (theta1 - theta0) * (n == 1 ? 0.0 : double(i) / (n - 1));
    pts.push_back(cyl_cart({x1, r, t}));
  }
  return pts;
}

}  // namespace cgo
