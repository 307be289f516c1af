// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#include "holderex/fem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "holderex/errors.hpp"
#include "holderex/quadrature.hpp"

namespace holderex {

namespace {

double signed_area(Vec2 a, Vec2 b, Vec2 c) {
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

}  // namespace

double Mesh::area(int t) const {
  const auto& tri = triangles[t];
  return signed_area(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
}

Vec2 Mesh::barycenter(int t) const {
  const auto& tri = triangles[t];
  return (vertices[tri[0]] + vertices[tri[1]] + vertices[tri[2]]) * (1.0 / 3.0);
}

double SolutionField::eval(Vec2 p) const {
  double best_violation = -std::numeric_limits<double>::infinity();
  double best_value = 0.0;
  for (std::size_t t = 0; t < mesh->triangles.size(); ++t) {
    const auto& tri = mesh->triangles[t];
    const Vec2 a = mesh->vertices[tri[0]], b = mesh->vertices[tri[1]], c = mesh->vertices[tri[2]];
    const double full = signed_area(a, b, c);
    const double l0 = signed_area(p, b, c) / full;
    const double l1 = signed_area(a, p, c) / full;
    const double l2 = signed_area(a, b, p) / full;
    const double violation = std::min({l0, l1, l2});
    if (violation > best_violation) {
      best_violation = violation;
      best_value = l0 * values[tri[0]] + l1 * values[tri[1]] + l2 * values[tri[2]];
      if (violation >= 0.0) return best_value;
    }
  }
  if (best_violation > -1e-9) return best_value;  // rounding at edges
  throw PointOutsideDomain("SolutionField::eval: point not covered by the mesh");
}

namespace {

int nearest_pow2_count(double target, int base, int cap) {
  int n = base;
  // pick the power-of-two multiple of base nearest to target in log scale
  while (2 * n <= cap && static_cast<double>(n) * std::numbers::sqrt2 < target) n *= 2;
  return n;
}

void push_ccw(Mesh& mesh, int a, int b, int c) {
  if (signed_area(mesh.vertices[a], mesh.vertices[b], mesh.vertices[c]) < 0.0) std::swap(b, c);
  const double ar = signed_area(mesh.vertices[a], mesh.vertices[b], mesh.vertices[c]);
  if (!(ar > 1e-14)) throw Error("build_mesh: degenerate triangle");
  mesh.triangles.push_back({a, b, c});
}

}  // namespace

Mesh build_mesh(const DiskDomain& domain, double h, int align_divisions) {
  const double R = domain.radius;
  if (!(h > 0.0) || h >= R / 4.0)
    throw InvalidMeshSize("build_mesh: need 0 < h < radius/4");

  int base = 8;
  if (align_divisions > 0)
    base = align_divisions * std::max(1, (8 + align_divisions - 1) / align_divisions);

  Mesh mesh;
  mesh.h = h;
  mesh.domain = domain;
  mesh.cap_radius = h * h / R;

  // Ring radii, outside in: uniform spacing ~h down to radius ~h, then
  // geometric halving, then a bridge so consecutive ratios stay <= 2.
  std::vector<double> radii;
  const int uniform_rings = std::max(2, static_cast<int>(std::lround(R / h)));
  for (int j = 0; j < uniform_rings; ++j)
    radii.push_back(R * static_cast<double>(uniform_rings - j) / uniform_rings);
  double r = radii.back();
  while (r / 2.0 > 2.0 * mesh.cap_radius) {
    r /= 2.0;
    radii.push_back(r);
  }
  if (r > 2.0 * mesh.cap_radius) radii.push_back(std::sqrt(r * mesh.cap_radius));
  radii.push_back(mesh.cap_radius);

  // Angular counts: nearest power-of-two multiple of base, never increasing
  // inward and at most halving between consecutive rings.
  const int n_out = nearest_pow2_count(kTwoPi * R / h, base, 1 << 20);
  std::vector<int> counts(radii.size());
  counts[0] = n_out;
  for (std::size_t j = 1; j < radii.size(); ++j) {
    int want = nearest_pow2_count(kTwoPi * radii[j] / h, base, n_out);
    counts[j] = std::max(want, counts[j - 1] / 2);
    counts[j] = std::min(counts[j], counts[j - 1]);
    counts[j] = std::max(counts[j], base);
  }

  std::vector<int> ring_start(radii.size());
  for (std::size_t j = 0; j < radii.size(); ++j) {
    ring_start[j] = static_cast<int>(mesh.vertices.size());
    for (int i = 0; i < counts[j]; ++i) {
      const double t = kTwoPi * i / counts[j];
      mesh.vertices.push_back(domain.center + Vec2{radii[j] * std::cos(t), radii[j] * std::sin(t)});
      mesh.boundary.push_back(j == 0 ? 1 : 0);
    }
  }

  for (std::size_t j = 0; j + 1 < radii.size(); ++j) {
    const int no = counts[j], ni = counts[j + 1];
    const int so = ring_start[j], si = ring_start[j + 1];
    if (ni == no) {
      for (int i = 0; i < no; ++i) {
        const int o0 = so + i, o1 = so + (i + 1) % no;
        const int i0 = si + i, i1 = si + (i + 1) % no;
        push_ccw(mesh, o0, o1, i1);
        push_ccw(mesh, o0, i1, i0);
      }
    } else {
      // 2:1 transition: inner sector i spans outer vertices 2i .. 2i+2.
      for (int i = 0; i < ni; ++i) {
        const int o0 = so + 2 * i, o1 = so + (2 * i + 1) % no, o2 = so + (2 * i + 2) % no;
        const int i0 = si + i, i1 = si + (i + 1) % ni;
        push_ccw(mesh, o0, o1, i0);
        push_ccw(mesh, i0, o1, i1);
        push_ccw(mesh, o1, o2, i1);
      }
    }
  }

  // Cap polygon: fan triangulation from its first vertex keeps the center
  // vertex-free.
  const int cs = ring_start.back();
  const int cn = counts.back();
  for (int i = 1; i + 1 < cn; ++i) push_ccw(mesh, cs, cs + i, cs + i + 1);

  return mesh;
}

namespace {

struct P1Gradients {
  Vec2 g[3];
  double area;
};

P1Gradients element_gradients(const Mesh& mesh, int t) {
  const auto& tri = mesh.triangles[t];
  const Vec2 a = mesh.vertices[tri[0]], b = mesh.vertices[tri[1]], c = mesh.vertices[tri[2]];
  const double area2 = 2.0 * signed_area(a, b, c);
  P1Gradients out;
  out.area = 0.5 * area2;
  out.g[0] = {(b.y - c.y) / area2, (c.x - b.x) / area2};
  out.g[1] = {(c.y - a.y) / area2, (a.x - c.x) / area2};
  out.g[2] = {(a.y - b.y) / area2, (b.x - a.x) / area2};
  return out;
}

// Coefficient frozen at the barycenter; cap triangles of an angular field
// take the ring-averaged matrix instead (the formula has no trace at the
// singularity and the cap is a measure-zero-scale patch).
class FrozenCoefficient {
 public:
  FrozenCoefficient(const CoefficientField& field, const Mesh& mesh)
      : field_(field), mesh_(mesh) {
    if (field.variant() == CoefficientField::Variant::angular) {
      const AngularProfile& k = field.profile();
      cap_average_.a11 = quad::periodic_mean(512, [&](double t) {
        const double kv = k(t), ik = 1.0 / kv, c = std::cos(t);
        return ik + (kv - ik) * c * c;
      });
      cap_average_.a22 = quad::periodic_mean(512, [&](double t) {
        const double kv = k(t), ik = 1.0 / kv, s = std::sin(t);
        return ik + (kv - ik) * s * s;
      });
      cap_average_.a12 = quad::periodic_mean(512, [&](double t) {
        const double kv = k(t), ik = 1.0 / kv;
        return (kv - ik) * std::sin(t) * std::cos(t);
      });
    }
  }

  SymMatrix2 at(int t) const {
    const Vec2 b = mesh_.barycenter(t);
    if (field_.variant() == CoefficientField::Variant::angular &&
        (b - field_.angular_center()).norm() < mesh_.cap_radius)
      return cap_average_;
    return eval_matrix(field_, b);
  }

 private:
  const CoefficientField& field_;
  const Mesh& mesh_;
  SymMatrix2 cap_average_ = SymMatrix2::identity();
};

struct Csr {
  std::vector<int> row_ptr, col;
  std::vector<double> val;

  void matvec(const std::vector<double>& x, std::vector<double>& y) const {
    const std::size_t n = row_ptr.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) s += val[k] * x[col[k]];
      y[i] = s;
    }
  }
};

Csr csr_from_triplets(int n, std::vector<std::array<double, 3>>& trip) {
  // trip entries are (row, col, value) with row/col stored as doubles
  std::sort(trip.begin(), trip.end(), [](const auto& a, const auto& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  Csr m;
  m.row_ptr.assign(n + 1, 0);
  for (std::size_t k = 0; k < trip.size();) {
    std::size_t k2 = k;
    double s = 0.0;
    while (k2 < trip.size() && trip[k2][0] == trip[k][0] && trip[k2][1] == trip[k][1])
      s += trip[k2++][2];
    m.col.push_back(static_cast<int>(trip[k][1]));
    m.val.push_back(s);
    ++m.row_ptr[static_cast<int>(trip[k][0]) + 1];
    k = k2;
  }
  for (int i = 0; i < n; ++i) m.row_ptr[i + 1] += m.row_ptr[i];
  return m;
}

}  // namespace

SolutionField solve_dirichlet(const CoefficientField& field, const Mesh& mesh,
                              const std::function<double(Vec2)>& g) {
  const int nv = static_cast<int>(mesh.vertices.size());
  std::vector<int> dof(nv, -1);
  int n_dof = 0;
  for (int v = 0; v < nv; ++v)
    if (!mesh.boundary[v]) dof[v] = n_dof++;

  std::vector<double> values(nv, 0.0);
  for (int v = 0; v < nv; ++v)
    if (mesh.boundary[v]) values[v] = g(mesh.vertices[v]);

  const FrozenCoefficient coeff(field, mesh);
  std::vector<std::array<double, 3>> trip;
  trip.reserve(mesh.triangles.size() * 9);
  std::vector<double> rhs(n_dof, 0.0);
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto grads = element_gradients(mesh, static_cast<int>(t));
    const SymMatrix2 a = coeff.at(static_cast<int>(t));
    const auto& tri = mesh.triangles[t];
    for (int i = 0; i < 3; ++i) {
      if (dof[tri[i]] < 0) continue;
      for (int j = 0; j < 3; ++j) {
        const double kij = grads.area * a.apply(grads.g[j]).dot(grads.g[i]);
        if (dof[tri[j]] >= 0)
          trip.push_back({static_cast<double>(dof[tri[i]]), static_cast<double>(dof[tri[j]]), kij});
        else
          rhs[dof[tri[i]]] -= kij * values[tri[j]];
      }
    }
  }
  const Csr K = csr_from_triplets(n_dof, trip);

  std::vector<double> diag(n_dof, 0.0);
  for (int i = 0; i < n_dof; ++i)
    for (int k = K.row_ptr[i]; k < K.row_ptr[i + 1]; ++k)
      if (K.col[k] == i) diag[i] = K.val[k];
  for (double d : diag)
    if (!(d > 0.0)) throw SingularSystem("solve_dirichlet: nonpositive diagonal entry");

  // Jacobi-preconditioned CG.
  std::vector<double> x(n_dof, 0.0), r = rhs, z(n_dof), p(n_dof), ap(n_dof);
  auto dot = [](const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
  };
  const double b_norm = std::sqrt(dot(rhs, rhs));
  if (b_norm > 0.0) {
    for (int i = 0; i < n_dof; ++i) z[i] = r[i] / diag[i];
    p = z;
    double rz = dot(r, z);
    const long cap = 20L * n_dof;
    bool converged = false;
    for (long it = 0; it < cap; ++it) {
      K.matvec(p, ap);
      const double p_ap = dot(p, ap);
      if (!(p_ap > 0.0)) throw SingularSystem("solve_dirichlet: CG found a nonpositive direction");
      const double alpha = rz / p_ap;
      for (int i = 0; i < n_dof; ++i) {
        x[i] += alpha * p[i];
        r[i] -= alpha * ap[i];
      }
      if (std::sqrt(dot(r, r)) <= kCgRelTol * b_norm) {
        converged = true;
        break;
      }
      for (int i = 0; i < n_dof; ++i) z[i] = r[i] / diag[i];
      const double rz_new = dot(r, z);
      const double beta = rz_new / rz;
      rz = rz_new;
      for (int i = 0; i < n_dof; ++i) p[i] = z[i] + beta * p[i];
    }
    if (!converged) throw SolverStagnation("solve_dirichlet: CG exceeded 20 * n_dof iterations");
  }

  for (int v = 0; v < nv; ++v)
    if (dof[v] >= 0) values[v] = x[dof[v]];
  return {&mesh, std::move(values)};
}

double galerkin_residual(const CoefficientField& field, const Mesh& mesh,
                         const std::vector<double>& values) {
  const int nv = static_cast<int>(mesh.vertices.size());
  std::vector<double> residual(nv, 0.0), scale(nv, 0.0);
  const FrozenCoefficient coeff(field, mesh);
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto grads = element_gradients(mesh, static_cast<int>(t));
    const SymMatrix2 a = coeff.at(static_cast<int>(t));
    const auto& tri = mesh.triangles[t];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double kij = grads.area * a.apply(grads.g[j]).dot(grads.g[i]);
        residual[tri[i]] += kij * values[tri[j]];
        scale[tri[i]] += std::abs(kij * values[tri[j]]);
      }
    }
  }
  double num = 0.0, den = 0.0;
  for (int v = 0; v < nv; ++v) {
    if (mesh.boundary[v]) continue;
    num += residual[v] * residual[v];
    den += scale[v] * scale[v];
  }
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

double discrete_energy(const CoefficientField& field, const Mesh& mesh,
                       const std::vector<double>& values) {
  const FrozenCoefficient coeff(field, mesh);
  double total = 0.0;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto grads = element_gradients(mesh, static_cast<int>(t));
    const auto& tri = mesh.triangles[t];
    Vec2 gu{0.0, 0.0};
    for (int i = 0; i < 3; ++i) gu = gu + values[tri[i]] * grads.g[i];
    total += grads.area * coeff.at(static_cast<int>(t)).quadratic_form(gu);
  }
  return total;
}

namespace {

// Dunavant degree-4 rule, 6 points.
constexpr double kTriNodes[6][3] = {
    {0.108103018168070, 0.445948490915965, 0.445948490915965},
    {0.445948490915965, 0.108103018168070, 0.445948490915965},
    {0.445948490915965, 0.445948490915965, 0.108103018168070},
    {0.816847572980459, 0.091576213509771, 0.091576213509771},
    {0.091576213509771, 0.816847572980459, 0.091576213509771},
    {0.091576213509771, 0.091576213509771, 0.816847572980459}};
constexpr double kTriWeights[6] = {0.223381589678011, 0.223381589678011, 0.223381589678011,
                                   0.109951743655322, 0.109951743655322, 0.109951743655322};

}  // namespace

double l2_error(const Mesh& mesh, const std::vector<double>& values,
                const std::function<double(Vec2)>& exact) {
  double err2 = 0.0, ref2 = 0.0;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    const Vec2 a = mesh.vertices[tri[0]], b = mesh.vertices[tri[1]], c = mesh.vertices[tri[2]];
    const double area = signed_area(a, b, c);
    for (int q = 0; q < 6; ++q) {
      const Vec2 p = kTriNodes[q][0] * a + kTriNodes[q][1] * b + kTriNodes[q][2] * c;
      const double uh = kTriNodes[q][0] * values[tri[0]] + kTriNodes[q][1] * values[tri[1]] +
                        kTriNodes[q][2] * values[tri[2]];
      const double ue = exact(p);
      err2 += area * kTriWeights[q] * (uh - ue) * (uh - ue);
      ref2 += area * kTriWeights[q] * ue * ue;
    }
  }
  return ref2 > 0.0 ? std::sqrt(err2 / ref2) : std::sqrt(err2);
}

}  // namespace holderex
