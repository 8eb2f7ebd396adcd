// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace cgo {

using complexd = std::complex<double>;

inline constexpr complexd kI{0.0, 1.0};

/// Real 3-vector; doubles both as a spatial point (x1, x2, x3) and as a real
/// direction/polarization vector.
struct Vec3 {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
  }
  friend Vec3 operator*(double s, const Vec3& v) {
    return {s * v.x1, s * v.x2, s * v.x3};
  }
  friend Vec3 operator/(const Vec3& v, double s) { return (1.0 / s) * v; }
  Vec3 operator-() const { return {-x1, -x2, -x3}; }

  double operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
  double& operator[](int i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
};

using Point3 = Vec3;

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3,
          a.x1 * b.x2 - a.x2 * b.x1};
}
inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

inline Vec3 axis_unit(int i) {
  Vec3 e;
  e[i] = 1.0;
  return e;
}

inline bool finite(const Vec3& v) {
  return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3);
}

/// Complex 3-vector holding field amplitudes (E, H, zeta, ...).
struct Complex3 {
  complexd x{}, y{}, z{};

  friend Complex3 operator+(const Complex3& a, const Complex3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Complex3 operator-(const Complex3& a, const Complex3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Complex3 operator*(const complexd& s, const Complex3& v) {
    return {s * v.x, s * v.y, s * v.z};
  }
  friend Complex3 operator*(double s, const Complex3& v) {
    return complexd(s) * v;
  }
  Complex3 operator-() const { return {-x, -y, -z}; }

  complexd operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  complexd& operator[](int i) {
    return i == 0 ? x : (i == 1 ? y : z);
  }

  static Complex3 from(const Vec3& v) {
    return {complexd(v.x1), complexd(v.x2), complexd(v.x3)};
  }
};

/// Bilinear dot product (no conjugation): sum a_i b_i.
inline complexd dot(const Complex3& a, const Complex3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline complexd dot(const Complex3& a, const Vec3& b) {
  return a.x * b.x1 + a.y * b.x2 + a.z * b.x3;
}
/// Hermitian dot product: sum conj(a_i) b_i.
inline complexd hdot(const Complex3& a, const Complex3& b) {
  return std::conj(a.x) * b.x + std::conj(a.y) * b.y + std::conj(a.z) * b.z;
}
inline Complex3 cross(const Complex3& a, const Complex3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}
/// Hermitian squared norm; >= 0, zero iff all components vanish.
inline double norm2(const Complex3& v) {
  return std::norm(v.x) + std::norm(v.y) + std::norm(v.z);
}
inline double norm(const Complex3& v) { return std::sqrt(norm2(v)); }
/// Largest component modulus.
inline double amax(const Complex3& v) {
  return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

inline bool finite(const complexd& c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}
inline bool finite(const Complex3& v) {
  return finite(v.x) && finite(v.y) && finite(v.z);
}

/// Real 3x3 matrix (row major).
struct Mat3 {
  double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

  static Mat3 identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = 1.0;
    return r;
  }
  /// Outer product a b^t.
  static Mat3 outer(const Vec3& a, const Vec3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a[i] * b[j];
    return r;
  }

  friend Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
  }
  friend Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
    return r;
  }
  friend Mat3 operator*(double s, const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = s * a.m[i][j];
    return r;
  }
  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r.m[i][j] += a.m[i][k] * b.m[k][j];
    return r;
  }
  friend Vec3 operator*(const Mat3& a, const Vec3& v) {
    Vec3 r;
    for (int i = 0; i < 3; ++i)
      r[i] = a.m[i][0] * v.x1 + a.m[i][1] * v.x2 + a.m[i][2] * v.x3;
    return r;
  }
  friend Complex3 operator*(const Mat3& a, const Complex3& v) {
    Complex3 r;
    for (int i = 0; i < 3; ++i)
      r[i] = a.m[i][0] * v.x + a.m[i][1] * v.y + a.m[i][2] * v.z;
    return r;
  }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }
  double det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  double amax() const {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(m[i][j]));
    return r;
  }
};

/// Complex 3x3 matrix; used for Jacobians of complex vector fields.
struct Mat3c {
  complexd m[3][3]{};

  double amax() const {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(m[i][j]));
    return r;
  }
};

}  // namespace cgo
