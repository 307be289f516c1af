// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#include "holderex/coeff_field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "holderex/errors.hpp"

namespace holderex {

CoefficientField CoefficientField::identity(DiskDomain domain) {
  CoefficientField f;
  f.variant_ = Variant::identity;
  f.domain_ = domain;
  return f;
}

CoefficientField CoefficientField::angular(AngularProfile profile, Vec2 center,
                                           DiskDomain domain) {
  CoefficientField f;
  f.variant_ = Variant::angular;
  f.domain_ = domain;
  f.profile_ = std::move(profile);
  f.angular_center_ = center;
  return f;
}

CoefficientField CoefficientField::grid_sampled(GridData grid, DiskDomain domain) {
  if (grid.nx < 1 || grid.ny < 1 ||
      grid.cells.size() != static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny))
    throw std::invalid_argument("CoefficientField: grid dimensions do not match cell count");
  CoefficientField f;
  f.variant_ = Variant::grid;
  f.domain_ = domain;
  f.grid_ = std::move(grid);
  return f;
}

SymMatrix2 eval_matrix(const CoefficientField& field, Vec2 x) {
  if (!field.domain().contains(x))
    throw PointOutsideDomain("eval_matrix: point outside the field domain");
  switch (field.variant()) {
    case CoefficientField::Variant::identity:
      return SymMatrix2::identity();
    case CoefficientField::Variant::angular: {
      const Vec2 d = x - field.angular_center();
      const double r2 = d.norm2();
      if (r2 == 0.0)
        throw AngularCenterSingularity("eval_matrix: angular field undefined at its center");
      const double k = field.profile()(arg_angle(d));
      const double inv_k = 1.0 / k;
      const double c = (k - inv_k) / r2;
      return {inv_k + c * d.x * d.x, c * d.x * d.y, inv_k + c * d.y * d.y};
    }
    case CoefficientField::Variant::grid: {
      const auto& g = field.grid();
      const Vec2 lo = field.domain().center - Vec2{field.domain().radius, field.domain().radius};
      const double span = 2.0 * field.domain().radius;
      auto clampi = [](int v, int n) { return v < 0 ? 0 : (v >= n ? n - 1 : v); };
      const int i = clampi(static_cast<int>((x.x - lo.x) / span * g.nx), g.nx);
      const int j = clampi(static_cast<int>((x.y - lo.y) / span * g.ny), g.ny);
      return g.cells[static_cast<std::size_t>(j) * g.nx + i];
    }
  }
  throw Error("eval_matrix: unreachable");
}

namespace {

void check_sample(const SymMatrix2& a, double det_tol) {
  if (!(a.a11 > 0.0) || !(a.det() > 0.0))
    throw NonPositiveDefinite("validate: sampled matrix is not positive definite");
  if (std::abs(a.det() - 1.0) > det_tol)
    throw DeterminantViolation("validate: |det A - 1| = " + std::to_string(std::abs(a.det() - 1.0)) +
                               " exceeds tolerance");
}

}  // namespace

EllipticityBounds validate(const CoefficientField& field, int sample_n) {
  if (sample_n < 16) throw std::invalid_argument("validate: sample_n must be >= 16");
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  auto absorb = [&](const SymMatrix2& a, double det_tol) {
    check_sample(a, det_tol);
    lo = std::min(lo, a.eig_min());
    hi = std::max(hi, a.eig_max());
  };
  if (field.variant() == CoefficientField::Variant::grid) {
    for (const auto& cell : field.grid().cells) absorb(cell, kDetTolGrid);
    return {lo, hi};
  }
  const DiskDomain& dom = field.domain();
  const double span = 2.0 * dom.radius;
  for (int j = 0; j < sample_n; ++j) {
    for (int i = 0; i < sample_n; ++i) {
      // Cell-centered samples; never lands exactly on the angular center of
      // a centered field, where the formula is undefined.
      const Vec2 p{dom.center.x - dom.radius + span * (i + 0.5) / sample_n,
                   dom.center.y - dom.radius + span * (j + 0.5) / sample_n};
      if (!dom.contains(p)) continue;
      if (field.variant() == CoefficientField::Variant::angular &&
          (p - field.angular_center()).norm2() == 0.0)
        continue;
      absorb(eval_matrix(field, p), kDetTolClosedForm);
    }
  }
  return {lo, hi};
}

SymMatrix2 polar_conjugate(const CoefficientField& field, Vec2 center, double rho, double theta) {
  if (!(rho > 0.0)) throw std::invalid_argument("polar_conjugate: rho must be positive");
  const Vec2 x = center + Vec2{rho * std::cos(theta), rho * std::sin(theta)};
  if (!field.domain().contains(x))
    throw PointOutsideDomain("polar_conjugate: polar point outside the field domain");
  return rotate_conjugate(eval_matrix(field, x), theta);
}

CoefficientField CoefficientField::from_json(const nlohmann::json& j) {
  DiskDomain domain;
  if (j.contains("domain")) {
    const auto& d = j.at("domain");
    const auto c = d.at("center").get<std::vector<double>>();
    if (c.size() != 2) throw std::invalid_argument("field json: domain center must be [x, y]");
    domain = DiskDomain({c[0], c[1]}, d.at("radius").get<double>());
  }
  const auto variant = j.at("variant").get<std::string>();
  if (variant == "identity") return identity(domain);
  if (variant == "angular") {
    const auto& a = j.at("angular");
    Vec2 center{0.0, 0.0};
    if (a.contains("center")) {
      const auto c = a.at("center").get<std::vector<double>>();
      if (c.size() != 2) throw std::invalid_argument("field json: angular center must be [x, y]");
      center = {c[0], c[1]};
    }
    return angular(AngularProfile::from_json(a.at("profile")), center, domain);
  }
  if (variant == "grid") {
    const auto& g = j.at("grid");
    GridData grid;
    grid.nx = g.at("nx").get<int>();
    grid.ny = g.at("ny").get<int>();
    const auto a11 = g.at("a11").get<std::vector<double>>();
    const auto a12 = g.at("a12").get<std::vector<double>>();
    const auto a22 = g.at("a22").get<std::vector<double>>();
    if (a11.size() != a12.size() || a11.size() != a22.size())
      throw std::invalid_argument("field json: grid entry arrays differ in length");
    grid.cells.resize(a11.size());
    for (std::size_t i = 0; i < a11.size(); ++i) grid.cells[i] = {a11[i], a12[i], a22[i]};
    return grid_sampled(std::move(grid), domain);
  }
  throw std::invalid_argument("field json: unknown variant '" + variant + "'");
}

void CoefficientField::to_json(nlohmann::json& j) const {
  j["domain"] = {{"center", {domain_.center.x, domain_.center.y}}, {"radius", domain_.radius}};
  switch (variant_) {
    case Variant::identity:
      j["variant"] = "identity";
      break;
    case Variant::angular: {
      j["variant"] = "angular";
      nlohmann::json p;
      profile_.to_json(p);
      j["angular"] = {{"profile", p}, {"center", {angular_center_.x, angular_center_.y}}};
      break;
    }
    case Variant::grid: {
      j["variant"] = "grid";
      std::vector<double> a11, a12, a22;
      a11.reserve(grid_.cells.size());
      for (const auto& c : grid_.cells) {
        a11.push_back(c.a11);
        a12.push_back(c.a12);
        a22.push_back(c.a22);
      }
      j["grid"] = {{"nx", grid_.nx}, {"ny", grid_.ny}, {"a11", a11}, {"a12", a12}, {"a22", a22}};
      break;
    }
  }
}

}  // namespace holderex
