// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#include "holderex/sharp_example.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "holderex/errors.hpp"
#include "holderex/quadrature.hpp"

namespace holderex {

SharpExample build(const AngularProfile& k) {
  SharpExample ex{k,
                  CoefficientField::angular(k, {0.0, 0.0}, DiskDomain({0.0, 0.0}, 1.0)),
                  kTwoPi / k.integral()};
  return ex;
}

double eval_solution(const SharpExample& ex, Vec2 x) {
  const double rho = x.norm();
  if (rho == 0.0) return 0.0;
  const double phase = ex.alpha_bar * ex.k.cumulative(arg_angle(x));
  return std::pow(rho, ex.alpha_bar) * std::cos(phase);
}

ScalarField2 SharpExample::solution() const {
  const AngularProfile prof = k;
  const double ab = alpha_bar;
  ScalarField2 u;
  u.value = [prof, ab](Vec2 x) {
    const double rho = x.norm();
    if (rho == 0.0) return 0.0;
    return std::pow(rho, ab) * std::cos(ab * prof.cumulative(arg_angle(x)));
  };
  u.gradient = [prof, ab](Vec2 x) -> Vec2 {
    const double rho = x.norm();
    if (rho == 0.0) throw Error("sharp solution: gradient undefined at the origin");
    const double theta = arg_angle(x);
    const double phase = ab * prof.cumulative(theta);
    const double u_rho = ab * std::pow(rho, ab - 1.0) * std::cos(phase);
    const double u_theta_over_rho = -ab * prof(theta) * std::pow(rho, ab - 1.0) * std::sin(phase);
    const double c = std::cos(theta), s = std::sin(theta);
    // grad u = J(theta) (u_rho, u_theta / rho)
    return {c * u_rho - s * u_theta_over_rho, s * u_rho + c * u_theta_over_rho};
  };
  return u;
}

ScalarField2 bump_function(Vec2 center, double radius) {
  ScalarField2 v;
  v.value = [center, radius](Vec2 x) {
    const double s2 = (x - center).norm2() / (radius * radius);
    if (s2 >= 1.0) return 0.0;
    return std::exp(1.0 / (s2 - 1.0));
  };
  v.gradient = [center, radius](Vec2 x) -> Vec2 {
    const Vec2 d = x - center;
    const double s2 = d.norm2() / (radius * radius);
    if (s2 >= 1.0) return {0.0, 0.0};
    const double e = std::exp(1.0 / (s2 - 1.0));
    const double den = (s2 - 1.0) * (s2 - 1.0);
    const double f = -2.0 * e / (den * radius * radius);
    return {f * d.x, f * d.y};
  };
  return v;
}

namespace {

// |\int <A grad u, grad v>| over the support annulus/cone of one bump.
double residual_against(const CoefficientField& field, const ScalarField2& u,
                        const ScalarField2& v, Vec2 bump_center, double bump_radius) {
  const Vec2 origin = field.domain().center;
  const double dist = (bump_center - origin).norm();
  constexpr double kInnerCutoff = 1e-6;
  const double r_lo = std::max(kInnerCutoff, dist - bump_radius);
  const double r_hi = std::min(field.domain().radius, dist + bump_radius);

  // Angular cone covering the support, full circle when it wraps the origin.
  double theta_c = 0.0, theta_half = std::numbers::pi;
  if (dist > bump_radius) {
    theta_c = arg_angle(bump_center - origin);
    theta_half = std::asin(std::min(1.0, bump_radius / dist)) + 1e-3;
  }

  const double max_freq = field.variant() == CoefficientField::Variant::angular
                              ? field.profile().max_frequency() + 8.0
                              : 8.0;
  auto grad_u = [&](Vec2 x) { return u.has_gradient() ? u.gradient(x) : gradient_fd(u, x); };

  const double width = 1.0 / max_freq;
  const std::size_t pieces =
      field.variant() == CoefficientField::Variant::angular ? field.profile().piece_count() : 0;
  const double lo = theta_c - theta_half, hi = theta_c + theta_half;

  double total = quad::radial_geometric(r_lo, r_hi, 1.06, [&](double rho) {
    // One theta sweep per radial node, split at profile jumps.
    auto integrand = [&](double t) {
      const Vec2 x = origin + Vec2{rho * std::cos(t), rho * std::sin(t)};
      const Vec2 gv = v.gradient(x);
      if (gv.x == 0.0 && gv.y == 0.0) return 0.0;
      const SymMatrix2 a = eval_matrix(field, x);
      const double val = a.apply(grad_u(x)).dot(gv);
      if (!std::isfinite(val)) throw QuadratureBreakdown("weak_residual: non-finite integrand");
      return val;
    };
    double ring = 0.0;
    if (pieces > 1) {
      const double sector = kTwoPi / static_cast<double>(pieces);
      double a0 = lo;
      for (long j = static_cast<long>(std::ceil(lo / sector)); j * sector < hi - 1e-13; ++j) {
        const double b = j * sector;
        if (b > a0 + 1e-13) {
          ring += quad::gauss_max_width(a0, b, width, integrand);
          a0 = b;
        }
      }
      if (hi > a0 + 1e-15) ring += quad::gauss_max_width(a0, hi, width, integrand);
    } else {
      ring = quad::gauss_max_width(lo, hi, width, integrand);
    }
    return ring * rho;
  });
  return std::abs(total);
}

}  // namespace

double weak_residual(const CoefficientField& field, const ScalarField2& u, int test_n) {
  if (test_n < 8) throw std::invalid_argument("weak_residual: test_n must be >= 8");
  const DiskDomain& dom = field.domain();
  double worst = 0.0;
  for (int j = 0; j < test_n; ++j) {
    for (int i = 0; i < test_n; ++i) {
      const Vec2 c{dom.center.x - dom.radius + 2.0 * dom.radius * (i + 0.5) / test_n,
                   dom.center.y - dom.radius + 2.0 * dom.radius * (j + 0.5) / test_n};
      const double d = dom.boundary_distance(c);
      if (d <= 0.05 * dom.radius) continue;
      const double r = std::min(0.35 * dom.radius, 0.8 * d);
      const ScalarField2 v = bump_function(c, r);
      worst = std::max(worst, residual_against(field, u, v, c, r));
    }
  }
  return worst;
}

}  // namespace holderex
