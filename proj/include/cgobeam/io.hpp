// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cgobeam/grid.hpp"

namespace cgo {

enum class Quantity { Re, Im, Abs, Abs2 };
enum class Component { C0, C1, C2, Norm };
enum class Normalization { Linear, Log };

inline std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::Re: return "re";
    case Quantity::Im: return "im";
    case Quantity::Abs: return "abs";
    default: return "abs2";
  }
}
inline std::string to_string(Component c) {
  switch (c) {
    case Component::C0: return "c0";
    case Component::C1: return "c1";
    case Component::C2: return "c2";
    default: return "norm";
  }
}

/// Scalar selection out of a sampled Complex3.
inline double select_value(const Complex3& v, Quantity q, Component c) {
  if (c == Component::Norm) {
    const double n = norm(v);
    switch (q) {
      case Quantity::Abs: return n;
      case Quantity::Abs2: return n * n;
      default:
        throw ParamError("re/im require a concrete component, not norm");
    }
  }
  const complexd s = v[static_cast<int>(c)];
  switch (q) {
    case Quantity::Re: return s.real();
    case Quantity::Im: return s.imag();
    case Quantity::Abs: return std::abs(s);
    default: return std::norm(s);
  }
}

namespace detail {
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace detail

/// Write a raster as CSV: provenance comment lines, then the header
///   u,v,x1,x2,x3,re0,im0,re1,im1,re2,im2
/// and one row per grid point in row-major order.  Masked or missing points
/// emit nan value fields.  17 significant digits, so a round trip is exact.
inline void export_csv(const FieldRaster& raster, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  for (const auto& [key, val] : raster.meta) out << "# " << key << " = " << val << "\n";
  out << "u,v,x1,x2,x3,re0,im0,re1,im1,re2,im2\n";
  for (int i = 0; i < raster.nu; ++i) {
    for (int j = 0; j < raster.nv; ++j) {
      const std::size_t idx = raster.index(i, j);
      const Vec3 p = raster.point(i, j);
      const double u = std::holds_alternative<CircleSpec>(raster.grid)
                           ? raster.vs[j]
                           : raster.us[i];
      const double v = std::holds_alternative<CircleSpec>(raster.grid)
                           ? 0.0
                           : raster.vs[j];
      out << detail::fmt17(u) << ',' << detail::fmt17(v) << ','
          << detail::fmt17(p.x1) << ',' << detail::fmt17(p.x2) << ','
          << detail::fmt17(p.x3);
      if (raster.status[idx] == PointStatus::Ok) {
        const Complex3& val = raster.values[idx];
        for (int c = 0; c < 3; ++c)
          out << ',' << detail::fmt17(val[c].real()) << ','
              << detail::fmt17(val[c].imag());
      } else {
        for (int c = 0; c < 6; ++c) out << ",nan";
      }
      out << '\n';
    }
  }
  if (!out) throw IoError("write failure on '" + path + "'");
}

/// Parsed CSV row set, enough to re-render or compare.
struct CsvTable {
  std::vector<std::array<double, 11>> rows;
  std::vector<std::string> comments;
};

inline CsvTable parse_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  CsvTable table;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      table.comments.push_back(line);
      continue;
    }
    if (!header_seen) {
      header_seen = true;  // column header
      continue;
    }
    std::array<double, 11> row{};
    std::stringstream ss(line);
    std::string cell;
    for (int c = 0; c < 11; ++c) {
      if (!std::getline(ss, cell, ','))
        throw IoError("short row in '" + path + "'");
      row[c] = (cell == "nan") ? std::numeric_limits<double>::quiet_NaN()
                               : std::strtod(cell.c_str(), nullptr);
    }
    table.rows.push_back(row);
  }
  return table;
}

namespace detail {

struct Rgb {
  std::uint8_t r, g, b;
};

inline Rgb lerp(const Rgb& a, const Rgb& b, double t) {
  auto ch = [&](double x, double y) {
    return static_cast<std::uint8_t>(std::lround(x + (y - x) * t));
  };
  return {ch(a.r, b.r), ch(a.g, b.g), ch(a.b, b.b)};
}

/// Diverging blue-white-red map on [0, 1] for signed quantities.
inline Rgb diverging(double t) {
  const Rgb lo{59, 76, 192}, mid{245, 245, 245}, hi{180, 4, 38};
  if (t < 0.5) return lerp(lo, mid, 2.0 * t);
  return lerp(mid, hi, 2.0 * t - 1.0);
}

/// Sequential dark-to-bright map on [0, 1] for magnitudes.
inline Rgb sequential(double t) {
  static const Rgb stops[4] = {{0, 0, 4}, {87, 16, 110}, {249, 140, 10},
                               {252, 255, 164}};
  const double x = std::clamp(t, 0.0, 1.0) * 3.0;
  const int k = std::min(2, static_cast<int>(x));
  return lerp(stops[k], stops[k + 1], x - k);
}

inline constexpr Rgb kMaskedColor{70, 70, 70};
inline constexpr Rgb kMissingColor{255, 0, 255};

}  // namespace detail

/// Normalization bounds actually used by a render, for the sidecar.
struct RenderInfo {
  double lo = 0.0, hi = 0.0;
  Quantity quantity{};
  Component component{};
  Normalization normalization{};
};

/// Render a raster to a binary P6 pixmap (maxval 255, row-major, nv columns
/// by nu rows).  re/im use the diverging map with symmetric bounds; abs/abs2
/// use the sequential map.  Log normalization compresses abs/abs2 onto the
/// top 6 decades.  A sidecar '<path>.meta.txt' records the provenance and
/// the bounds so a render is reproducible from its artifacts.
inline RenderInfo render_pixmap(const FieldRaster& raster, Quantity q,
                                Component comp, Normalization nrm,
                                const std::string& path) {
  const std::size_t n = raster.values.size();
  if (n == 0) throw ParamError("empty raster");
  if (nrm == Normalization::Log && (q == Quantity::Re || q == Quantity::Im))
    throw ParamError("log normalization applies to abs/abs2 quantities");

  std::vector<double> vals(n, 0.0);
  double vmax = 0.0, vmin = std::numeric_limits<double>::infinity();
  std::size_t ok = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (raster.status[i] != PointStatus::Ok) continue;
    const double v = select_value(raster.values[i], q, comp);
    vals[i] = v;
    vmax = std::max(vmax, std::abs(v));
    vmin = std::min(vmin, std::abs(v));
    ++ok;
  }
  if (ok == 0) throw ParamError("raster has no valid points to render");

  RenderInfo info;
  info.quantity = q;
  info.component = comp;
  info.normalization = nrm;

  const bool signed_q = (q == Quantity::Re || q == Quantity::Im);
  if (nrm == Normalization::Linear) {
    info.hi = vmax;
    info.lo = signed_q ? -vmax : 0.0;
  } else {
    const double top = std::log10(std::max(vmax, 1e-300));
    info.hi = top;
    info.lo = top - 6.0;
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "P6\n" << raster.nv << " " << raster.nu << "\n255\n";
  for (int i = 0; i < raster.nu; ++i) {
    for (int j = 0; j < raster.nv; ++j) {
      const std::size_t idx = raster.index(i, j);
      detail::Rgb c{};
      if (raster.status[idx] == PointStatus::Masked) {
        c = detail::kMaskedColor;
      } else if (raster.status[idx] == PointStatus::Missing) {
        c = detail::kMissingColor;
      } else {
        double t;
        if (nrm == Normalization::Linear) {
          t = (info.hi > info.lo) ? (vals[idx] - info.lo) / (info.hi - info.lo)
                                  : 0.5;
        } else {
          const double lv = std::log10(std::max(std::abs(vals[idx]), 1e-300));
          t = (lv - info.lo) / (info.hi - info.lo);
        }
        t = std::clamp(t, 0.0, 1.0);
        c = signed_q ? detail::diverging(t) : detail::sequential(t);
      }
      const char px[3] = {static_cast<char>(c.r), static_cast<char>(c.g),
                          static_cast<char>(c.b)};
      out.write(px, 3);
    }
  }
  if (!out) throw IoError("write failure on '" + path + "'");

  std::ofstream side(path + ".meta.txt");
  if (!side) throw IoError("cannot open sidecar for '" + path + "'");
  side << "quantity = " << to_string(q) << "\n"
       << "component = " << to_string(comp) << "\n"
       << "normalization = "
       << (nrm == Normalization::Linear ? "linear" : "log") << "\n"
       << "bound_lo = " << detail::fmt17(info.lo) << "\n"
       << "bound_hi = " << detail::fmt17(info.hi) << "\n";
  for (const auto& [key, val] : raster.meta)
    side << key << " = " << val << "\n";
  if (!side) throw IoError("write failure on sidecar for '" + path + "'");
  return info;
}

/// Byte content of a file, for determinism checks.
inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cgo
