// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace holderex {

/// Base class for all failures raised by the toolkit.  Configuration
/// problems throw ConfigError, contract violations on inputs throw
/// std::invalid_argument, and everything below signals a numerical or
/// domain failure discovered while running.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PointOutsideDomain : Error {
  using Error::Error;
};

struct AngularCenterSingularity : Error {
  using Error::Error;
};

struct DeterminantViolation : Error {
  using Error::Error;
};

struct NonPositiveDefinite : Error {
  using Error::Error;
};

struct ZeroAmplitude : Error {
  using Error::Error;
};

struct ConstraintViolated : Error {
  using Error::Error;
};

struct EigenIterationDiverged : Error {
  using Error::Error;
};

struct CircleOutsideDomain : Error {
  using Error::Error;
};

struct CenterOutsideDomain : Error {
  using Error::Error;
};

struct InvalidMeshSize : Error {
  using Error::Error;
};

struct SolverStagnation : Error {
  using Error::Error;
};

struct SingularSystem : Error {
  using Error::Error;
};

struct DegenerateWindow : Error {
  using Error::Error;
};

struct QuadratureBreakdown : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace holderex
