// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "holderex/angular_profile.hpp"

namespace holderex {

/// A 2pi-periodic function held as nodal values on a uniform grid of n
/// points (n a power of two, n >= 16), optionally tagged with closed-form
/// value/derivative callables.  Functions without the closed form are
/// treated as their piecewise-linear periodic interpolant.
struct PeriodicFunction {
  std::vector<double> values;
  std::function<double(double)> analytic;        // optional
  std::function<double(double)> analytic_deriv;  // optional
  double freq_hint = 16.0;  // oscillation scale used to size quadrature panels

  explicit PeriodicFunction(std::vector<double> nodal);
  PeriodicFunction(int n, std::function<double(double)> f,
                   std::function<double(double)> df, double freq);

  int n() const { return static_cast<int>(values.size()); }
  double node(int i) const { return kTwoPi * i / n(); }
  bool has_closed_form() const { return static_cast<bool>(analytic); }

  /// Value at any angle: closed form when tagged, periodic linear
  /// interpolation of the nodal values otherwise.
  double eval(double theta) const;
};

struct WirtingerResult {
  double constant = 0.0;          // optimal Rayleigh quotient value
  PeriodicFunction minimizer;     // discrete eigenfunction, unit mass norm
  double amplitude = 0.0;         // C of the fitted closed-form family
  double phase = 0.0;             // phi of the fitted closed-form family
  int iterations = 0;
};

/// The sharp constant (2pi / \int a)^2: the minimum of
///   \int (1/a) (w')^2 / \int a w^2
/// over 2pi-periodic w with a-weighted mean zero.
double wirtinger_constant(const AngularProfile& a);

/// The equality family w(theta) = C cos((2pi/\int a) \int_0^theta a + phi),
/// sampled on n nodes with the closed form attached.  Throws ZeroAmplitude
/// when C = 0.
PeriodicFunction minimizer(const AngularProfile& a, double C, double phi, int n);

/// Weighted mean \int a w (the constraint functional).
double weighted_mean(const AngularProfile& a, const PeriodicFunction& w);

/// w minus its a-weighted mean, so that \int a w = 0.
PeriodicFunction project_constraint(const AngularProfile& a, const PeriodicFunction& w);

/// Rayleigh quotient \int (1/a)(w')^2 / \int a w^2.
double rayleigh_quotient(const AngularProfile& a, const PeriodicFunction& w);

/// Slack RHS - LHS of the weighted Wirtinger inequality
///   \int a w^2 <= ((1/2pi) \int a)^2 \int (1/a) (w')^2.
/// Nonnegative (up to quadrature tolerance) for every admissible w, zero
/// exactly on the minimizer family.  Throws ConstraintViolated when
/// |\int a w| > 1e-8.
double check_inequality(const AngularProfile& a, const PeriodicFunction& w);

/// Quadrature tolerance documented for check_inequality: the slack of an
/// admissible function may be reported as low as -kWirtingerSlackTol.
inline constexpr double kWirtingerSlackTol = 1e-8;

/// Discrete oracle: assembles periodic P1 stiffness/mass forms for the
/// quotient, deflates the a-weighted constant direction, and runs inverse
/// iteration (shift 0) for the smallest constrained eigenpair.  Converges to
/// wirtinger_constant(a) as n grows.  Throws EigenIterationDiverged past 500
/// iterations.
WirtingerResult rayleigh_minimize(const AngularProfile& a, int n);

/// Distance (in the a-weighted L2 norm, both inputs normalized) between a
/// discrete minimizer and the closed-form family, maximizing correlation
/// over a 4096-point phase grid first.
double minimizer_mismatch(const AngularProfile& a, const PeriodicFunction& discrete);

}  // namespace holderex
