// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "holderex/coeff_field.hpp"

namespace holderex {

struct ExponentGrids {
  int center_n = 17;
  int radius_n = 12;
  int quad_n = 256;
};

struct PsBounds {
  double symmetric = 1.0;                  // L^{-1/2}
  std::optional<double> isotropic;         // (4/pi) arctan L^{-1/2}
  std::optional<double> unit_det;          // Lambda^{-1}
};

/// The full exponent bundle for one field.  alpha / alpha_bar are capped at
/// 1 (the estimate yields Holder continuity with exponent min(alpha, 1));
/// the raw formula values are kept alongside.
struct ExponentReport {
  double alpha = 1.0;
  double alpha_raw = 1.0;
  double alpha_bar = 1.0;
  double alpha_bar_raw = 1.0;
  PsBounds ps;
  EllipticityBounds bounds;
  ExponentGrids grids;
};

struct CircleSample {
  Vec2 center;
  double r = 0.0;
  double average = 0.0;
};

/// (2pi)^{-1} \int_{|xi|=1} a_ij(center + r xi) xi_i xi_j dsigma, by the
/// quad_n-point periodic trapezoidal rule (half-step offset nodes).  Always
/// lies in [1/Lambda, Lambda].
double circle_average(const CoefficientField& field, Vec2 center, double r, int quad_n);

/// All (center, radius) circle averages used by the exponent estimators:
/// centers on a uniform Cartesian grid over the domain (one grid step of
/// boundary margin, the domain center always included), radii uniform in
/// (0, dist(center, boundary)).  Samples of one center are contiguous and
/// ordered by increasing radius.
std::vector<CircleSample> sample_circle_averages(const CoefficientField& field,
                                                 const ExponentGrids& grids, int threads = 1);

/// alpha of the main estimate: 2pi (sup over centers, ess sup over radii of
/// the circle integral)^{-1}, discretized on the grids.  Returns the raw
/// (uncapped) value.
double alpha_estimate(const CoefficientField& field, int center_grid_n, int radius_grid_n,
                      int quad_n, int threads = 1);

/// The least-upper-bound variant: the inner ess sup is localized r -> 0
/// (running maxima from the smallest radii, then the infimum over the
/// threshold).  Raw (uncapped) value; always >= alpha_estimate.
double alpha_bar_estimate(const CoefficientField& field, int center_grid_n, int radius_grid_n,
                          int quad_n, int threads = 1);

/// Piccinini-Spagnolo comparison values for ellipticity ratio L =
/// Lambda/lambda: L^{-1/2} always; (4/pi) arctan L^{-1/2} for isotropic
/// fields; Lambda^{-1} for unit-determinant fields.
PsBounds ps_bounds(const EllipticityBounds& bounds, bool isotropic, bool unit_det);

/// Runs validate + both estimators + ps_bounds and assembles the report.
ExponentReport exponent_report(const CoefficientField& field, const ExponentGrids& grids,
                               int threads = 1);

}  // namespace holderex
