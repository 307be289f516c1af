// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#include "holderex/alpha_bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "holderex/errors.hpp"

namespace holderex {

double circle_average(const CoefficientField& field, Vec2 center, double r, int quad_n) {
  if (quad_n < 32) throw std::invalid_argument("circle_average: quad_n must be >= 32");
  if (!(r > 0.0)) throw std::invalid_argument("circle_average: r must be positive");
  if ((center - field.domain().center).norm() + r > field.domain().radius * (1.0 + 1e-12))
    throw CircleOutsideDomain("circle_average: circle leaves the domain");
  double sum = 0.0;
  for (int i = 0; i < quad_n; ++i) {
    const double phi = kTwoPi * (i + 0.5) / quad_n;
    const Vec2 xi{std::cos(phi), std::sin(phi)};
    const SymMatrix2 a = eval_matrix(field, center + r * xi);
    // Rayleigh quotient of the direction: mathematically <A xi, xi> for the
    // unit vector xi, but exact (== 1 for the identity) in floating point.
    sum += a.quadratic_form(xi) / xi.norm2();
  }
  return sum / quad_n;
}

namespace {

std::vector<Vec2> center_grid(const DiskDomain& dom, int center_n) {
  std::vector<Vec2> centers;
  const double span = 2.0 * dom.radius;
  const double margin = span / center_n;  // one grid step
  for (int j = 0; j < center_n; ++j) {
    for (int i = 0; i < center_n; ++i) {
      const Vec2 p{dom.center.x - dom.radius + span * (i + 0.5) / center_n,
                   dom.center.y - dom.radius + span * (j + 0.5) / center_n};
      if ((p - dom.center).norm() <= dom.radius - margin) centers.push_back(p);
    }
  }
  // The estimators must see the domain center: for angular fields it is the
  // only point whose circle averages realize the profile mean.
  bool has_center = false;
  for (const Vec2& p : centers)
    if ((p - dom.center).norm() == 0.0) has_center = true;
  if (!has_center) centers.push_back(dom.center);
  return centers;
}

}  // namespace

std::vector<CircleSample> sample_circle_averages(const CoefficientField& field,
                                                 const ExponentGrids& grids, int threads) {
  if (grids.center_n < 8 || grids.radius_n < 8 || grids.quad_n < 64)
    throw std::invalid_argument("sample_circle_averages: grids must be >= (8, 8, 64)");
  const DiskDomain& dom = field.domain();
  const std::vector<Vec2> centers = center_grid(dom, grids.center_n);

  std::vector<CircleSample> samples(centers.size() * grids.radius_n);
  auto fill_range = [&](std::size_t c_lo, std::size_t c_hi) {
    for (std::size_t c = c_lo; c < c_hi; ++c) {
      const double d = dom.boundary_distance(centers[c]);
      for (int t = 0; t < grids.radius_n; ++t) {
        const double r = d * (t + 0.5) / grids.radius_n;
        samples[c * grids.radius_n + t] = {centers[c], r,
                                           circle_average(field, centers[c], r, grids.quad_n)};
      }
    }
  };
  if (threads <= 1) {
    fill_range(0, centers.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (centers.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(centers.size(), t * chunk);
      const std::size_t hi = std::min(centers.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(fill_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return samples;
}

namespace {

double alpha_from_samples(const std::vector<CircleSample>& samples) {
  double worst = 0.0;
  for (const auto& s : samples) worst = std::max(worst, s.average);
  return 1.0 / worst;
}

double alpha_bar_from_samples(const std::vector<CircleSample>& samples, int radius_n) {
  double worst = 0.0;
  for (std::size_t c = 0; c * radius_n < samples.size(); ++c) {
    // Running maxima from the smallest radii; the infimum over thresholds of
    // the running maximum is its first entry (the r -> 0 localization).
    double running = 0.0, localized = 0.0;
    for (int t = 0; t < radius_n; ++t) {
      running = std::max(running, samples[c * radius_n + t].average);
      if (t == 0) localized = running;
      localized = std::min(localized, running);
    }
    worst = std::max(worst, localized);
  }
  return 1.0 / worst;
}

}  // namespace

double alpha_estimate(const CoefficientField& field, int center_grid_n, int radius_grid_n,
                      int quad_n, int threads) {
  return alpha_from_samples(
      sample_circle_averages(field, {center_grid_n, radius_grid_n, quad_n}, threads));
}

double alpha_bar_estimate(const CoefficientField& field, int center_grid_n, int radius_grid_n,
                          int quad_n, int threads) {
  return alpha_bar_from_samples(
      sample_circle_averages(field, {center_grid_n, radius_grid_n, quad_n}, threads),
      radius_grid_n);
}

PsBounds ps_bounds(const EllipticityBounds& bounds, bool isotropic, bool unit_det) {
  if (!(bounds.lambda > 0.0) || bounds.lambda > bounds.Lambda)
    throw std::invalid_argument("ps_bounds: need 0 < lambda <= Lambda");
  const double L = bounds.Lambda / bounds.lambda;
  PsBounds out;
  out.symmetric = 1.0 / std::sqrt(L);
  if (isotropic) out.isotropic = 4.0 / std::numbers::pi * std::atan(1.0 / std::sqrt(L));
  if (unit_det) out.unit_det = 1.0 / bounds.Lambda;
  return out;
}

ExponentReport exponent_report(const CoefficientField& field, const ExponentGrids& grids,
                               int threads) {
  ExponentReport rep;
  rep.grids = grids;
  rep.bounds = validate(field, 64);
  const auto samples = sample_circle_averages(field, grids, threads);
  rep.alpha_raw = alpha_from_samples(samples);
  rep.alpha_bar_raw = alpha_bar_from_samples(samples, grids.radius_n);
  rep.alpha = std::min(1.0, rep.alpha_raw);
  rep.alpha_bar = std::min(1.0, rep.alpha_bar_raw);
  const bool unit_det = true;  // validate() enforces det A = 1
  const bool isotropic = field.variant() == CoefficientField::Variant::identity;
  rep.ps = ps_bounds(rep.bounds, isotropic, unit_det);
  return rep;
}

}  // namespace holderex
