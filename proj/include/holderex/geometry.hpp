// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace holderex {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double t) const { return {x * t, y * t}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
};

inline Vec2 operator*(double t, Vec2 v) { return v * t; }

/// Angle of v in [0, 2pi).
inline double arg_angle(Vec2 v) {
  double t = std::atan2(v.y, v.x);
  if (t < 0.0) t += kTwoPi;
  return t;
}

/// Symmetric 2x2 matrix; only the three independent entries are stored,
/// so symmetry holds by construction.
struct SymMatrix2 {
  double a11 = 1.0;
  double a12 = 0.0;
  double a22 = 1.0;

  static SymMatrix2 identity() { return {1.0, 0.0, 1.0}; }

  double det() const { return a11 * a22 - a12 * a12; }
  double trace() const { return a11 + a22; }

  Vec2 apply(Vec2 v) const { return {a11 * v.x + a12 * v.y, a12 * v.x + a22 * v.y}; }

  /// <A v, v>
  double quadratic_form(Vec2 v) const {
    return a11 * v.x * v.x + 2.0 * a12 * v.x * v.y + a22 * v.y * v.y;
  }

  double eig_min() const {
    const double m = 0.5 * (a11 + a22);
    const double d = 0.5 * (a11 - a22);
    return m - std::sqrt(d * d + a12 * a12);
  }

  double eig_max() const {
    const double m = 0.5 * (a11 + a22);
    const double d = 0.5 * (a11 - a22);
    return m + std::sqrt(d * d + a12 * a12);
  }

  bool positive_definite() const { return a11 > 0.0 && det() > 0.0; }
};

/// J(t)^* A J(t) with J the counterclockwise rotation by t.  The result is
/// symmetric for symmetric A; the off-diagonal entry is formed once so the
/// stored matrix is symmetric to the last bit.
inline SymMatrix2 rotate_conjugate(const SymMatrix2& a, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // Columns of J.
  const Vec2 j1{c, s};
  const Vec2 j2{-s, c};
  SymMatrix2 p;
  p.a11 = a.quadratic_form(j1);
  p.a22 = a.quadratic_form(j2);
  p.a12 = a.apply(j1).dot(j2);
  return p;
}

struct DiskDomain {
  Vec2 center{0.0, 0.0};
  double radius = 1.0;

  DiskDomain() = default;
  DiskDomain(Vec2 c, double r) : center(c), radius(r) {
    if (!(r > 0.0)) throw std::invalid_argument("DiskDomain: radius must be positive");
  }

  bool contains(Vec2 p, double slack = 1e-12) const {
    return (p - center).norm() <= radius * (1.0 + slack);
  }

  double boundary_distance(Vec2 p) const { return radius - (p - center).norm(); }
};

/// A scalar function on the plane with optional analytic gradient.  Fields
/// without a gradient fall back to central differences where one is needed.
struct ScalarField2 {
  std::function<double(Vec2)> value;
  std::function<Vec2(Vec2)> gradient;  // may be empty

  double operator()(Vec2 p) const { return value(p); }
  bool has_gradient() const { return static_cast<bool>(gradient); }
};

inline Vec2 gradient_fd(const ScalarField2& f, Vec2 p, double h = 1e-5) {
  return {(f.value({p.x + h, p.y}) - f.value({p.x - h, p.y})) / (2.0 * h),
          (f.value({p.x, p.y + h}) - f.value({p.x, p.y - h})) / (2.0 * h)};
}

inline Vec2 gradient_of(const ScalarField2& f, Vec2 p) {
  return f.has_gradient() ? f.gradient(p) : gradient_fd(f, p);
}

}  // namespace holderex
