// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "holderex/geometry.hpp"

namespace holderex {

/// A 2pi-periodic positive weight k(theta).  Two computable families stand
/// in for bounded measurable data: a finite Fourier series and a
/// piecewise-constant function on a uniform angular partition.  Both admit
/// exact integrals and exact cumulative integrals.
class AngularProfile {
 public:
  enum class Kind { fourier, piecewise };

  /// k(theta) = mean + sum_j cos_coeffs[j] cos((j+1) theta) + sin_coeffs[j] sin((j+1) theta).
  static AngularProfile fourier(double mean, std::vector<double> cos_coeffs,
                                std::vector<double> sin_coeffs);

  /// Constant value values[j] on [2pi j/p, 2pi (j+1)/p), right-continuous at
  /// the sector boundaries.
  static AngularProfile piecewise(std::vector<double> values);

  static AngularProfile constant(double c) { return piecewise({c}); }

  Kind kind() const { return kind_; }

  /// k(theta), theta any real (reduced mod 2pi).
  double operator()(double theta) const;

  /// Integral over one period.
  double integral() const;

  /// Cumulative integral from 0 to theta, exact for both families and
  /// defined for all real theta (adds whole-period integrals as needed).
  double cumulative(double theta) const;

  double k_min() const { return k_min_; }
  double k_max() const { return k_max_; }

  /// Jump locations in [0, 2pi); empty for the Fourier family.
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  /// Highest harmonic present (0 for piecewise); used to size quadrature panels.
  double max_frequency() const;

  std::size_t piece_count() const { return kind_ == Kind::piecewise ? values_.size() : 0; }
  const std::vector<double>& piece_values() const { return values_; }
  double mean_coefficient() const { return mean_; }
  const std::vector<double>& cos_coefficients() const { return cos_; }
  const std::vector<double>& sin_coefficients() const { return sin_; }

  static AngularProfile from_json(const nlohmann::json& j);
  void to_json(nlohmann::json& j) const;

 private:
  AngularProfile() = default;
  void compute_bounds();

  Kind kind_ = Kind::piecewise;
  // Fourier representation.
  double mean_ = 1.0;
  std::vector<double> cos_;
  std::vector<double> sin_;
  // Piecewise representation.
  std::vector<double> values_;
  std::vector<double> breakpoints_;

  double k_min_ = 1.0;
  double k_max_ = 1.0;
};

}  // namespace holderex
