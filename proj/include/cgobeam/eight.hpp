// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>

#include "cgobeam/vec.hpp"

namespace cgo {

/// Block-structured complex 8-vector X = (x1, X1^t, x2, X2^t)^t with scalar
/// blocks s1, s2 and vector blocks V1, V2.  The augmented Maxwell system
/// stores (Phi, H^t, Psi, E^t)^t in this layout.
struct Complex8 {
  complexd s1{};
  Complex3 V1{};
  complexd s2{};
  Complex3 V2{};

  complexd operator[](int i) const {
    switch (i) {
      case 0: return s1;
      case 1: return V1.x;
      case 2: return V1.y;
      case 3: return V1.z;
      case 4: return s2;
      case 5: return V2.x;
      case 6: return V2.y;
      default: return V2.z;
    }
  }
  complexd& operator[](int i) {
    switch (i) {
      case 0: return s1;
      case 1: return V1.x;
      case 2: return V1.y;
      case 3: return V1.z;
      case 4: return s2;
      case 5: return V2.x;
      case 6: return V2.y;
      default: return V2.z;
    }
  }

  friend Complex8 operator+(const Complex8& a, const Complex8& b) {
    Complex8 r;
    for (int i = 0; i < 8; ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend Complex8 operator-(const Complex8& a, const Complex8& b) {
    Complex8 r;
    for (int i = 0; i < 8; ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend Complex8 operator*(const complexd& s, const Complex8& a) {
    Complex8 r;
    for (int i = 0; i < 8; ++i) r[i] = s * a[i];
    return r;
  }
  friend Complex8 operator*(double s, const Complex8& a) {
    return complexd(s) * a;
  }
};

inline double amax(const Complex8& v) {
  double r = 0.0;
  for (int i = 0; i < 8; ++i) r = std::max(r, std::abs(v[i]));
  return r;
}

inline bool finite(const Complex8& v) {
  for (int i = 0; i < 8; ++i)
    if (!finite(v[i])) return false;
  return true;
}

/// Dense complex 8x8 matrix (row major).
struct Matrix8 {
  std::array<std::array<complexd, 8>, 8> m{};

  static Matrix8 identity() {
    Matrix8 r;
    for (int i = 0; i < 8; ++i) r.m[i][i] = 1.0;
    return r;
  }

  friend Matrix8 operator+(const Matrix8& a, const Matrix8& b) {
    Matrix8 r;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
  }
  friend Matrix8 operator-(const Matrix8& a, const Matrix8& b) {
    Matrix8 r;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
    return r;
  }
  friend Matrix8 operator*(const complexd& s, const Matrix8& a) {
    Matrix8 r;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) r.m[i][j] = s * a.m[i][j];
    return r;
  }
  friend Matrix8 operator*(const Matrix8& a, const Matrix8& b) {
    Matrix8 r;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        complexd acc{};
        for (int k = 0; k < 8; ++k) acc += a.m[i][k] * b.m[k][j];
        r.m[i][j] = acc;
      }
    return r;
  }
  friend Complex8 operator*(const Matrix8& a, const Complex8& v) {
    Complex8 r;
    for (int i = 0; i < 8; ++i) {
      complexd acc{};
      for (int j = 0; j < 8; ++j) acc += a.m[i][j] * v[j];
      r[i] = acc;
    }
    return r;
  }

  /// Plain transpose, no conjugation.
  Matrix8 transposed() const {
    Matrix8 r;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  double amax() const {
    double r = 0.0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) r = std::max(r, std::abs(m[i][j]));
    return r;
  }
};

}  // namespace cgo
