// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#include "holderex/angular_profile.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace holderex {

namespace {

double reduce_mod_2pi(double theta, double* whole_turns = nullptr) {
  double turns = std::floor(theta / kTwoPi);
  double t = theta - turns * kTwoPi;
  if (t >= kTwoPi) {  // rounding right at the seam
    t -= kTwoPi;
    turns += 1.0;
  }
  if (whole_turns) *whole_turns = turns;
  return t;
}

}  // namespace

AngularProfile AngularProfile::fourier(double mean, std::vector<double> cos_coeffs,
                                       std::vector<double> sin_coeffs) {
  AngularProfile p;
  p.kind_ = Kind::fourier;
  p.mean_ = mean;
  p.cos_ = std::move(cos_coeffs);
  p.sin_ = std::move(sin_coeffs);
  p.compute_bounds();
  return p;
}

AngularProfile AngularProfile::piecewise(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("AngularProfile: no piecewise values");
  AngularProfile p;
  p.kind_ = Kind::piecewise;
  p.values_ = std::move(values);
  const std::size_t n = p.values_.size();
  p.breakpoints_.resize(n);
  for (std::size_t j = 0; j < n; ++j) p.breakpoints_[j] = kTwoPi * j / n;
  p.compute_bounds();
  return p;
}

void AngularProfile::compute_bounds() {
  if (kind_ == Kind::piecewise) {
    k_min_ = k_max_ = values_[0];
    for (double v : values_) {
      k_min_ = std::min(k_min_, v);
      k_max_ = std::max(k_max_, v);
    }
  } else {
    // Dense sample; the families used in practice have few harmonics, so
    // 1 << 14 points resolve the extrema far beyond the checking tolerance.
    const int n = 1 << 14;
    k_min_ = k_max_ = (*this)(0.0);
    for (int i = 1; i < n; ++i) {
      const double v = (*this)(kTwoPi * i / n);
      k_min_ = std::min(k_min_, v);
      k_max_ = std::max(k_max_, v);
    }
  }
  if (!(k_min_ > 0.0))
    throw std::invalid_argument("AngularProfile: profile must be bounded away from zero");
}

double AngularProfile::operator()(double theta) const {
  const double t = reduce_mod_2pi(theta);
  if (kind_ == Kind::piecewise) {
    const std::size_t n = values_.size();
    auto j = static_cast<std::size_t>(t / kTwoPi * static_cast<double>(n));
    if (j >= n) j = n - 1;
    return values_[j];
  }
  double v = mean_;
  for (std::size_t j = 0; j < cos_.size(); ++j) v += cos_[j] * std::cos((j + 1) * t);
  for (std::size_t j = 0; j < sin_.size(); ++j) v += sin_[j] * std::sin((j + 1) * t);
  return v;
}

double AngularProfile::integral() const {
  if (kind_ == Kind::piecewise) {
    double s = 0.0;
    for (double v : values_) s += v;
    return s * kTwoPi / static_cast<double>(values_.size());
  }
  return mean_ * kTwoPi;
}

double AngularProfile::cumulative(double theta) const {
  double turns = 0.0;
  const double t = reduce_mod_2pi(theta, &turns);
  double base = turns * integral();
  if (kind_ == Kind::fourier) {
    double v = mean_ * t;
    for (std::size_t j = 0; j < cos_.size(); ++j) {
      const double m = static_cast<double>(j + 1);
      v += cos_[j] * std::sin(m * t) / m;
    }
    for (std::size_t j = 0; j < sin_.size(); ++j) {
      const double m = static_cast<double>(j + 1);
      v += sin_[j] * (1.0 - std::cos(m * t)) / m;
    }
    return base + v;
  }
  const std::size_t n = values_.size();
  const double width = kTwoPi / static_cast<double>(n);
  auto j = static_cast<std::size_t>(t / kTwoPi * static_cast<double>(n));
  if (j >= n) j = n - 1;
  double s = 0.0;
  for (std::size_t i = 0; i < j; ++i) s += values_[i] * width;
  s += values_[j] * (t - breakpoints_[j]);
  return base + s;
}

double AngularProfile::max_frequency() const {
  if (kind_ == Kind::piecewise) return 0.0;
  return static_cast<double>(std::max(cos_.size(), sin_.size()));
}

AngularProfile AngularProfile::from_json(const nlohmann::json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "fourier") {
    std::vector<double> c, s;
    if (j.contains("cos")) c = j.at("cos").get<std::vector<double>>();
    if (j.contains("sin")) s = j.at("sin").get<std::vector<double>>();
    return fourier(j.at("mean").get<double>(), std::move(c), std::move(s));
  }
  if (kind == "piecewise") return piecewise(j.at("values").get<std::vector<double>>());
  throw std::invalid_argument("AngularProfile: unknown kind '" + kind + "'");
}

void AngularProfile::to_json(nlohmann::json& j) const {
  if (kind_ == Kind::fourier) {
    j = {{"kind", "fourier"}, {"mean", mean_}, {"cos", cos_}, {"sin", sin_}};
  } else {
    j = {{"kind", "piecewise"}, {"values", values_}};
  }
}

}  // namespace holderex
