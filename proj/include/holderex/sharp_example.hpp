// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "holderex/coeff_field.hpp"
#include "holderex/geometry.hpp"

namespace holderex {

/// The extremal construction on the unit disk: the angular coefficient field
///   A(x) = (1/k) I + (k - 1/k) x x^T / |x|^2
/// together with its exact solution
///   u(x) = |x|^ab cos(ab \int_0^{arg x} k),    ab = 2pi (\int_0^{2pi} k)^{-1},
/// whose Holder exponent is exactly ab.
struct SharpExample {
  AngularProfile k;
  CoefficientField field;
  double alpha_bar = 1.0;

  /// The exact solution with its analytic gradient (polar derivatives mapped
  /// through the frame rotation).  The gradient is undefined at the origin.
  ScalarField2 solution() const;
};

SharpExample build(const AngularProfile& k);

double eval_solution(const SharpExample& ex, Vec2 x);

/// Max over a grid of test_n^2 compactly supported smooth bumps v of
/// |\int_B <A grad u, grad v> dx|: the weak residual of u against the field.
/// Near zero exactly when u is a weak solution.  Gradients of u come from
/// the handle when present, central differences (h = 1e-5) otherwise;
/// quadrature is polar about the domain center with inner cutoff 1e-6.
double weak_residual(const CoefficientField& field, const ScalarField2& u, int test_n);

/// One bump of the weak_residual family: exp(1/(s^2-1)) on s = |x-c|/r < 1,
/// zero outside.  Exposed so tests can integrate against the same family.
ScalarField2 bump_function(Vec2 center, double radius);

}  // namespace holderex
