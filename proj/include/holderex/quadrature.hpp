// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "holderex/geometry.hpp"

namespace holderex::quad {

// 6-point Gauss-Legendre rule on [-1, 1].
inline constexpr double kGauss6Nodes[6] = {
    -0.9324695142031521, -0.6612093864662645, -0.2386191860831969,
    0.2386191860831969,  0.6612093864662645,  0.9324695142031521};
inline constexpr double kGauss6Weights[6] = {
    0.1713244923791704, 0.3607615730481386, 0.4679139345726910,
    0.4679139345726910, 0.3607615730481386, 0.1713244923791704};

/// Composite 6-point Gauss on [lo, hi] with a fixed number of equal panels.
template <class F>
double gauss_panels(double lo, double hi, int panels, F&& f) {
  if (panels < 1) panels = 1;
  const double w = (hi - lo) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * w;
    const double mid = a + 0.5 * w;
    double s = 0.0;
    for (int g = 0; g < 6; ++g) s += kGauss6Weights[g] * f(mid + 0.5 * w * kGauss6Nodes[g]);
    total += 0.5 * w * s;
  }
  return total;
}

/// Composite Gauss on [lo, hi] with panel width at most max_width.  Resolves
/// integrands with oscillation scale ~1/max_width to machine accuracy.
template <class F>
double gauss_max_width(double lo, double hi, double max_width, F&& f) {
  const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_width)));
  return gauss_panels(lo, hi, panels, f);
}

/// Integral over [0, 2pi) split at the given sorted breakpoints (jump
/// locations of the integrand), composite Gauss between them.  max_freq is
/// the highest oscillation frequency of the smooth pieces; panel widths are
/// chosen so Gauss-6 resolves it fully.
template <class F>
double periodic_split(const std::vector<double>& breakpoints, double max_freq, F&& f) {
  const double width = 1.0 / std::max(1.0, max_freq);
  if (breakpoints.empty()) return gauss_max_width(0.0, kTwoPi, width, f);
  double total = 0.0;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = (i + 1 < breakpoints.size()) ? breakpoints[i + 1] : breakpoints[0] + kTwoPi;
    if (b > a) total += gauss_max_width(a, b, width, f);
  }
  return total;
}

/// Mean of f over [0, 2pi) by the n-point periodic trapezoidal rule with
/// half-step offset nodes (same weights and accuracy; the offset keeps nodes
/// away from sector boundaries of piecewise-constant data).
template <class F>
double periodic_mean(int n, F&& f) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += f(kTwoPi * (i + 0.5) / n);
  return s / n;
}

/// Integral of f over [r_lo, r_hi] (r_lo > 0) with panels that shrink
/// geometrically toward r_lo; suitable for integrands with a power
/// singularity at the origin.
template <class F>
double radial_geometric(double r_lo, double r_hi, double ratio, F&& f) {
  double total = 0.0;
  double a = r_lo;
  while (a < r_hi) {
    double b = std::min(a * ratio, r_hi);
    if (b - a < 1e-300) break;
    double s = 0.0;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int g = 0; g < 6; ++g) s += kGauss6Weights[g] * f(mid + half * kGauss6Nodes[g]);
    total += half * s;
    a = b;
  }
  return total;
}

}  // namespace holderex::quad
