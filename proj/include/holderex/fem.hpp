// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <vector>

#include "holderex/coeff_field.hpp"
#include "holderex/geometry.hpp"

namespace holderex {

/// Conforming triangulation of a disk: polar rings with radial spacing ~h
/// away from the center, geometrically graded rings below radius ~h, and a
/// small fan-triangulated polygon of radius h^2/R capping the center so no
/// vertex sits on the coefficient singularity.  Angular counts halve ring by
/// ring toward the center (power-of-two multiples of a base count), with
/// conforming 2:1 transition strips.
struct Mesh {
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> triangles;  // positively oriented
  std::vector<char> boundary;                 // per-vertex flag
  double h = 0.0;
  DiskDomain domain;
  double cap_radius = 0.0;

  double area(int t) const;
  Vec2 barycenter(int t) const;
  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t triangle_count() const { return triangles.size(); }
};

/// Nodal P1 field on a mesh.  Holds a non-owning pointer; the mesh must
/// outlive the field.
struct SolutionField {
  const Mesh* mesh = nullptr;
  std::vector<double> values;

  /// Point evaluation by barycentric interpolation (linear scan for the
  /// containing triangle; fine at this scale).
  double eval(Vec2 p) const;
};

/// align_divisions > 0 forces every ring's angular count to be a multiple of
/// it, so element boundaries align with the jump angles of a
/// piecewise-constant profile with that many sectors.
Mesh build_mesh(const DiskDomain& domain, double h, int align_divisions = 0);

/// Dirichlet solve of (a_ij u_xi)_xj = 0: P1 elements, coefficients frozen
/// at barycenters (cap triangles of angular fields use the ring-averaged
/// matrix), Jacobi-preconditioned CG to relative residual 1e-10.
SolutionField solve_dirichlet(const CoefficientField& field, const Mesh& mesh,
                              const std::function<double(Vec2)>& g);

/// Relative residual of the interior equations at the given nodal values.
double galerkin_residual(const CoefficientField& field, const Mesh& mesh,
                         const std::vector<double>& values);

/// \int <A grad u_h, grad u_h> over the whole mesh.
double discrete_energy(const CoefficientField& field, const Mesh& mesh,
                       const std::vector<double>& values);

/// Relative L2(mesh) distance between a nodal field and an exact function
/// (degree-4 quadrature per triangle).
double l2_error(const Mesh& mesh, const std::vector<double>& values,
                const std::function<double(Vec2)>& exact);

inline constexpr double kCgRelTol = 1e-10;

}  // namespace holderex
