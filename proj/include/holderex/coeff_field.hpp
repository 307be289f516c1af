// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "holderex/angular_profile.hpp"
#include "holderex/geometry.hpp"

namespace holderex {

struct EllipticityBounds {
  double lambda = 1.0;
  double Lambda = 1.0;
};

/// Per-cell matrices on a Cartesian grid covering the domain bounding box,
/// evaluated by nearest cell.  Interpolation is deliberately absent: it
/// would not preserve the unit determinant.
struct GridData {
  int nx = 0;
  int ny = 0;
  std::vector<SymMatrix2> cells;  // row-major, cells[j * nx + i]
};

/// Symmetric unit-determinant coefficient field A(x) on a disk.
///
/// Variants: the identity; the angular family
///   A(x) = (1/k) I + (k - 1/k) (x-c)(x-c)^T / |x-c|^2,   k = k(arg(x-c)),
/// singular only at its center c; and grid-sampled data.
class CoefficientField {
 public:
  enum class Variant { identity, angular, grid };

  static CoefficientField identity(DiskDomain domain);
  static CoefficientField angular(AngularProfile profile, Vec2 center, DiskDomain domain);
  static CoefficientField grid_sampled(GridData grid, DiskDomain domain);

  Variant variant() const { return variant_; }
  const DiskDomain& domain() const { return domain_; }
  const AngularProfile& profile() const { return profile_; }
  Vec2 angular_center() const { return angular_center_; }
  const GridData& grid() const { return grid_; }

  static CoefficientField from_json(const nlohmann::json& j);
  void to_json(nlohmann::json& j) const;

 private:
  CoefficientField() = default;

  Variant variant_ = Variant::identity;
  DiskDomain domain_;
  AngularProfile profile_ = AngularProfile::constant(1.0);
  Vec2 angular_center_{0.0, 0.0};
  GridData grid_;
};

/// A(x).  Throws PointOutsideDomain when x is not in the closed disk and
/// AngularCenterSingularity at the angular center, where the formula is
/// undefined.
SymMatrix2 eval_matrix(const CoefficientField& field, Vec2 x);

/// Samples the field (sample_n^2 Cartesian points inside the disk, or every
/// grid cell), checks det A = 1 and positive definiteness, and returns the
/// observed eigenvalue range.  For unit-determinant fields the returned
/// bounds satisfy lambda * Lambda = 1.
EllipticityBounds validate(const CoefficientField& field, int sample_n);

/// P(center + rho e^{i theta}) = J(theta)^* A J(theta): the coefficient
/// matrix seen in the polar frame about `center`.  det P = 1 and P = P^*.
SymMatrix2 polar_conjugate(const CoefficientField& field, Vec2 center, double rho, double theta);

/// Tolerance on |det A - 1| for closed-form and grid-sampled variants.
inline constexpr double kDetTolClosedForm = 1e-12;
inline constexpr double kDetTolGrid = 1e-10;

}  // namespace holderex
