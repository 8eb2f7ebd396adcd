// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cgobeam/coords.hpp"
#include "cgobeam/errors.hpp"
#include "cgobeam/vec.hpp"

namespace cgo {

/// Rectangular grid on an axis-aligned plane.  axis picks the normal
/// (0 = x1, 1 = x2, 2 = x3); u and v run over the remaining coordinates in
/// cyclic order.  An optional in-plane radial window [mask_r_in, mask_r_out]
/// turns the plane into an annulus slice: points outside are masked by
/// design, not missing.
struct PlaneSpec {
  int axis = 0;
  double offset = 0.0;
  double u0 = -1.0, u1 = 1.0;
  double v0 = -1.0, v1 = 1.0;
  int nu = 64, nv = 64;
  double mask_r_in = 0.0;
  double mask_r_out = 1e300;

  Vec3 point(double u, double v) const {
    Vec3 p;
    p[axis] = offset;
    p[(axis + 1) % 3] = u;
    p[(axis + 2) % 3] = v;
    return p;
  }
  bool masked(double u, double v) const {
    const double r = std::hypot(u, v);
    return r < mask_r_in || r > mask_r_out;
  }
};

/// Sphere sampled on polar angles relative to a configurable polar axis.
/// u = polar angle in [0, pi] measured from `pole`, v = azimuth in [-pi, pi).
struct SphereSpec {
  Vec3 center{};
  double radius = 1.0;
  Vec3 pole{0.0, 0.0, 1.0};
  int nu = 64, nv = 64;

  Vec3 point(double u, double v) const {
    // orthonormal frame (t1, t2, pn)
    Vec3 pn = pole / norm(pole);
    Vec3 seed = std::abs(pn.x3) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 t1 = cross(seed, pn);
    t1 = t1 / norm(t1);
    const Vec3 t2 = cross(pn, t1);
    const double su = std::sin(u), cu = std::cos(u);
    return center + radius * (cu * pn + su * (std::cos(v) * t1 + std::sin(v) * t2));
  }
};

/// Circle {x1, r fixed} sampled at ntheta angles over [theta0, theta1).
struct CircleSpec {
  double x1 = 0.0;
  double r = 1.0;
  int ntheta = 360;
  double theta0 = 0.0;
  double theta1 = 6.283185307179586476925287;

  Vec3 point(double theta) const { return cyl_cart({x1, r, theta}); }
};

using GridSpec = std::variant<PlaneSpec, SphereSpec, CircleSpec>;

inline int grid_nu(const GridSpec& g) {
  return std::visit(
      [](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, CircleSpec>)
          return 1;
        else
          return s.nu;
      },
      g);
}
inline int grid_nv(const GridSpec& g) {
  return std::visit(
      [](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, CircleSpec>)
          return s.ntheta;
        else
          return s.nv;
      },
      g);
}

enum class PointStatus : unsigned char { Ok, Masked, Missing };

/// Sampled complex vector field on a grid.  values and status are row-major
/// with index i * nv + j; meta carries the full provenance (parameters,
/// seed, grid and any assumed defaults) as printable key/value pairs.
struct FieldRaster {
  GridSpec grid;
  int nu = 0, nv = 0;
  std::vector<Complex3> values;
  std::vector<PointStatus> status;
  std::vector<double> us, vs;  // parameter coordinates per grid line
  std::map<std::string, std::string> meta;

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * nv + j;
  }
  Vec3 point(int i, int j) const {
    return std::visit(
        [&](const auto& s) -> Vec3 {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, CircleSpec>)
            return s.point(vs[j]);
          else
            return s.point(us[i], vs[j]);
        },
        grid);
  }
  std::size_t count(PointStatus st) const {
    std::size_t n = 0;
    for (auto v : status)
      if (v == st) ++n;
    return n;
  }
};

/// Field evaluated on a grid.  The callable returns nullopt for points it
/// excludes by design (masked); domain guard violations throw DomainError
/// and are recorded as missing.  More than 5% missing among the non-masked
/// points is an error naming the most frequent violated constraint.
using MaskedField = std::function<std::optional<Complex3>(const Vec3&)>;

inline FieldRaster sample_grid(const GridSpec& spec, const MaskedField& field) {
  FieldRaster raster;
  raster.grid = spec;
  raster.nu = grid_nu(spec);
  raster.nv = grid_nv(spec);

  // parameter lines
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CircleSpec>) {
          if (s.ntheta < 2) throw ParamError("circle needs >= 2 samples");
        } else {
          if (s.nu < 2 || s.nv < 2)
            throw ParamError("grid resolution must be at least 2 x 2");
        }
        if constexpr (std::is_same_v<T, PlaneSpec>) {
          if (s.u1 <= s.u0 || s.v1 <= s.v0)
            throw ParamError("degenerate plane ranges");
          for (int i = 0; i < s.nu; ++i)
            raster.us.push_back(s.u0 + (s.u1 - s.u0) * (i + 0.5) / s.nu);
          for (int j = 0; j < s.nv; ++j)
            raster.vs.push_back(s.v0 + (s.v1 - s.v0) * (j + 0.5) / s.nv);
        } else if constexpr (std::is_same_v<T, SphereSpec>) {
          if (!(s.radius > 0.0)) throw ParamError("degenerate sphere radius");
          static constexpr double pi = 3.141592653589793238462643;
          for (int i = 0; i < s.nu; ++i)
            raster.us.push_back(pi * (i + 0.5) / s.nu);
          for (int j = 0; j < s.nv; ++j)
            raster.vs.push_back(-pi + 2.0 * pi * (j + 0.5) / s.nv);
        } else {
          if (s.theta1 <= s.theta0) throw ParamError("degenerate circle range");
          raster.us.push_back(0.0);
          for (int j = 0; j < s.ntheta; ++j)
            raster.vs.push_back(s.theta0 +
                                (s.theta1 - s.theta0) * j / double(s.ntheta));
        }
      },
      spec);

  raster.values.assign(static_cast<std::size_t>(raster.nu) * raster.nv, {});
  raster.status.assign(raster.values.size(), PointStatus::Ok);

  std::map<std::string, int> constraint_counts;
  std::size_t missing = 0, considered = 0;
  for (int i = 0; i < raster.nu; ++i) {
    for (int j = 0; j < raster.nv; ++j) {
      const std::size_t idx = raster.index(i, j);
      // design-level mask for annulus slices
      if (const auto* pl = std::get_if<PlaneSpec>(&spec);
          pl && pl->masked(raster.us[i], raster.vs[j])) {
        raster.status[idx] = PointStatus::Masked;
        continue;
      }
      const Vec3 p = raster.point(i, j);
      ++considered;
      try {
        const auto v = field(p);
        if (!v.has_value()) {
          raster.status[idx] = PointStatus::Masked;
          --considered;
        } else if (!finite(*v)) {
          raster.status[idx] = PointStatus::Missing;
          ++missing;
          ++constraint_counts["non-finite value"];
        } else {
          raster.values[idx] = *v;
        }
      } catch (const DomainError& e) {
        raster.status[idx] = PointStatus::Missing;
        ++missing;
        ++constraint_counts[e.what()];
      } catch (const EvalError& e) {
        raster.status[idx] = PointStatus::Missing;
        ++missing;
        ++constraint_counts[e.what()];
      }
    }
  }

  if (considered > 0 && missing * 20 > considered) {
    std::string worst;
    int worst_n = -1;
    for (const auto& [msg, n] : constraint_counts)
      if (n > worst_n) {
        worst = msg;
        worst_n = n;
      }
    throw DomainError("grid sampling lost " + std::to_string(missing) + "/" +
                      std::to_string(considered) +
                      " points (> 5%); most frequent: " + worst);
  }
  raster.meta["missing"] = std::to_string(missing);
  raster.meta["masked"] = std::to_string(raster.count(PointStatus::Masked));
  return raster;
}

/// Adapt a plain field to the masked interface.
inline MaskedField plain_field(const std::function<Complex3(const Vec3&)>& f) {
  return [f](const Vec3& p) -> std::optional<Complex3> { return f(p); };
}

}  // namespace cgo
