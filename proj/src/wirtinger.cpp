// Copyright (c) the holderex authors.
// SPDX-License-Identifier: Apache-2.0

#include "holderex/wirtinger.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "holderex/errors.hpp"
#include "holderex/quadrature.hpp"

namespace holderex {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Calls f(theta, weight) on composite Gauss-6 nodes over [t0, t1], splitting
// at the profile's jump angles and keeping panels small enough for the given
// oscillation frequency.
template <class F>
void gauss_nodes_plain(double t0, double t1, double max_width, F&& f) {
  const int panels = std::max(1, static_cast<int>(std::ceil((t1 - t0) / max_width)));
  const double w = (t1 - t0) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = t0 + (p + 0.5) * w;
    for (int g = 0; g < 6; ++g)
      f(mid + 0.5 * w * quad::kGauss6Nodes[g], 0.5 * w * quad::kGauss6Weights[g]);
  }
}

template <class F>
void gauss_nodes_split(const AngularProfile& a, double t0, double t1, double max_freq, F&& f) {
  const double width = 1.0 / std::max(1.0, max_freq);
  const std::size_t p = a.piece_count();
  if (p <= 1) {
    gauss_nodes_plain(t0, t1, width, f);
    return;
  }
  const double sector = kTwoPi / static_cast<double>(p);
  double lo = t0;
  auto j = static_cast<long>(std::ceil(t0 / sector - 1e-13));
  for (; j * sector < t1 - 1e-13; ++j) {
    const double b = j * sector;
    if (b > lo + 1e-13) {
      gauss_nodes_plain(lo, b, width, f);
      lo = b;
    }
  }
  if (t1 > lo + 1e-15) gauss_nodes_plain(lo, t1, width, f);
}

struct QuotientIntegrals {
  double mean = 0.0;   // \int a w
  double mass = 0.0;   // \int a w^2
  double energy = 0.0; // \int (1/a) (w')^2
};

QuotientIntegrals integrate_quotient(const AngularProfile& a, const PeriodicFunction& w) {
  QuotientIntegrals out;
  if (w.has_closed_form() && w.analytic_deriv) {
    const double freq = a.max_frequency() + 2.0 * w.freq_hint + 4.0;
    gauss_nodes_split(a, 0.0, kTwoPi, freq, [&](double t, double wt) {
      const double av = a(t);
      const double v = w.analytic(t);
      const double dv = w.analytic_deriv(t);
      out.mean += wt * av * v;
      out.mass += wt * av * v * v;
      out.energy += wt * dv * dv / av;
    });
    return out;
  }
  // P1 interpolant path: w linear per segment, w' constant per segment.
  const int n = w.n();
  const double h = kTwoPi / n;
  for (int i = 0; i < n; ++i) {
    const double t0 = h * i;
    const double w0 = w.values[i];
    const double w1 = w.values[(i + 1) % n];
    const double slope = (w1 - w0) / h;
    gauss_nodes_split(a, t0, t0 + h, a.max_frequency() + 1.0, [&](double t, double wt) {
      const double av = a(t);
      const double v = w0 + slope * (t - t0);
      out.mean += wt * av * v;
      out.mass += wt * av * v * v;
      out.energy += wt * slope * slope / av;
    });
  }
  return out;
}

// Cyclic tridiagonal pencil of the discrete quotient on periodic P1
// elements, plus the a-weighted constraint vector c = M 1.
struct Pencil {
  int n = 0;
  std::vector<double> kd, ke;  // stiffness diagonal, superdiagonal (ke[i]: i <-> i+1 mod n)
  std::vector<double> md, me;  // mass
  std::vector<double> c;
  double c_total = 0.0;  // c^T 1 = \int a

  void matvec(const std::vector<double>& d, const std::vector<double>& e,
              const std::vector<double>& x, std::vector<double>& y) const {
    for (int i = 0; i < n; ++i) {
      const int prev = (i + n - 1) % n;
      y[i] = d[i] * x[i] + e[i] * x[(i + 1) % n] + e[prev] * x[prev];
    }
  }
};

Pencil assemble_pencil(const AngularProfile& a, int n) {
  Pencil p;
  p.n = n;
  p.kd.assign(n, 0.0);
  p.ke.assign(n, 0.0);
  p.md.assign(n, 0.0);
  p.me.assign(n, 0.0);
  const double h = kTwoPi / n;
  for (int e = 0; e < n; ++e) {
    const double t0 = h * e;
    const int i0 = e, i1 = (e + 1) % n;
    double s_inv = 0.0;   // \int_e 1/a
    double m00 = 0.0, m01 = 0.0, m11 = 0.0;
    gauss_nodes_split(a, t0, t0 + h, a.max_frequency() + 1.0, [&](double t, double wt) {
      const double av = a(t);
      const double n1 = (t - t0) / h;  // hat of node i1 on this element
      const double n0 = 1.0 - n1;
      s_inv += wt / av;
      m00 += wt * av * n0 * n0;
      m01 += wt * av * n0 * n1;
      m11 += wt * av * n1 * n1;
    });
    const double k_loc = s_inv / (h * h);
    p.kd[i0] += k_loc;
    p.kd[i1] += k_loc;
    p.ke[e] -= k_loc;
    p.md[i0] += m00;
    p.md[i1] += m11;
    p.me[e] += m01;
  }
  p.c.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const int prev = (i + n - 1) % n;
    p.c[i] = p.md[i] + p.me[i] + p.me[prev];
    p.c_total += p.c[i];
  }
  return p;
}

// LDL^T of the SPD tridiagonal obtained by grounding node n-1 of the cyclic
// stiffness matrix (its kernel is the constant vector, removed by the pin).
struct PinnedStiffness {
  int m = 0;  // n - 1 unknowns
  std::vector<double> diag;  // factored pivots
  std::vector<double> lower; // multipliers

  explicit PinnedStiffness(const Pencil& p) {
    m = p.n - 1;
    diag.resize(m);
    lower.assign(m, 0.0);
    for (int i = 0; i < m; ++i) diag[i] = p.kd[i];
    for (int i = 1; i < m; ++i) {
      const double off = p.ke[i - 1];
      lower[i] = off / diag[i - 1];
      diag[i] -= lower[i] * off;
      if (!(diag[i] > 0.0)) throw SingularSystem("rayleigh_minimize: pinned stiffness not SPD");
    }
  }

  // Solves K y = b with y[n-1] = 0; b must be orthogonal to the kernel.
  void solve(const std::vector<double>& b, std::vector<double>& y,
             const std::vector<double>& ke) const {
    y.resize(m + 1);
    y[0] = b[0];
    for (int i = 1; i < m; ++i) y[i] = b[i] - lower[i] * y[i - 1];
    for (int i = 0; i < m; ++i) y[i] /= diag[i];
    for (int i = m - 2; i >= 0; --i) y[i] -= ke[i] / diag[i] * y[i + 1];
    y[m] = 0.0;
  }
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

PeriodicFunction::PeriodicFunction(std::vector<double> nodal) : values(std::move(nodal)) {
  if (values.size() < 16 || !power_of_two(static_cast<int>(values.size())))
    throw std::invalid_argument("PeriodicFunction: n must be a power of two >= 16");
}

PeriodicFunction::PeriodicFunction(int n, std::function<double(double)> f,
                                   std::function<double(double)> df, double freq)
    : analytic(std::move(f)), analytic_deriv(std::move(df)), freq_hint(freq) {
  if (n < 16 || !power_of_two(n))
    throw std::invalid_argument("PeriodicFunction: n must be a power of two >= 16");
  values.resize(n);
  for (int i = 0; i < n; ++i) values[i] = analytic(kTwoPi * i / n);
}

double PeriodicFunction::eval(double theta) const {
  if (analytic) return analytic(theta);
  const int m = n();
  double t = theta / kTwoPi * m;
  t -= std::floor(t / m) * m;
  int i = static_cast<int>(t);
  if (i >= m) i = m - 1;
  const double frac = t - i;
  return values[i] * (1.0 - frac) + values[(i + 1) % m] * frac;
}

double wirtinger_constant(const AngularProfile& a) {
  const double total = a.integral();
  const double q = kTwoPi / total;
  return q * q;
}

PeriodicFunction minimizer(const AngularProfile& a, double C, double phi, int n) {
  if (C == 0.0) throw ZeroAmplitude("minimizer: amplitude C must be nonzero");
  const double scale = kTwoPi / a.integral();
  auto value = [a, C, phi, scale](double t) { return C * std::cos(scale * a.cumulative(t) + phi); };
  auto deriv = [a, C, phi, scale](double t) {
    return -C * scale * a(t) * std::sin(scale * a.cumulative(t) + phi);
  };
  const double freq = scale * a.k_max() + a.max_frequency();
  return PeriodicFunction(n, value, deriv, freq);
}

double weighted_mean(const AngularProfile& a, const PeriodicFunction& w) {
  return integrate_quotient(a, w).mean;
}

PeriodicFunction project_constraint(const AngularProfile& a, const PeriodicFunction& w) {
  const double shift = weighted_mean(a, w) / a.integral();
  if (w.has_closed_form()) {
    auto f = w.analytic;
    PeriodicFunction out(w.n(), [f, shift](double t) { return f(t) - shift; }, w.analytic_deriv,
                         w.freq_hint);
    return out;
  }
  std::vector<double> shifted = w.values;
  for (double& v : shifted) v -= shift;
  return PeriodicFunction(std::move(shifted));
}

double rayleigh_quotient(const AngularProfile& a, const PeriodicFunction& w) {
  const auto q = integrate_quotient(a, w);
  if (!(q.mass > 0.0)) throw std::invalid_argument("rayleigh_quotient: w vanishes");
  return q.energy / q.mass;
}

double check_inequality(const AngularProfile& a, const PeriodicFunction& w) {
  const auto q = integrate_quotient(a, w);
  if (std::abs(q.mean) > 1e-8)
    throw ConstraintViolated("check_inequality: weighted mean " + std::to_string(q.mean) +
                             " exceeds 1e-8; project the function first");
  const double mean_a = a.integral() / kTwoPi;
  return mean_a * mean_a * q.energy - q.mass;
}

WirtingerResult rayleigh_minimize(const AngularProfile& a, int n) {
  if (n < 64) throw std::invalid_argument("rayleigh_minimize: n must be >= 64");
  if (!power_of_two(n)) throw std::invalid_argument("rayleigh_minimize: n must be a power of two");

  const Pencil p = assemble_pencil(a, n);
  const PinnedStiffness factor(p);

  auto deflate = [&](std::vector<double>& x) {
    const double t = dot(p.c, x) / p.c_total;
    for (double& v : x) v -= t;
  };
  std::vector<double> x(n), b(n), y, tmp(n);
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    x[i] = std::cos(t) + 0.25 * std::sin(t);
  }
  deflate(x);
  p.matvec(p.md, p.me, x, tmp);
  double mnorm = std::sqrt(dot(x, tmp));
  for (double& v : x) v /= mnorm;

  constexpr int kMaxIter = 500;
  constexpr double kStagnationTol = 1e-12;
  double lambda = 0.0, lambda_prev = -1.0;
  int iter = 0;
  bool converged = false;
  for (iter = 1; iter <= kMaxIter; ++iter) {
    p.matvec(p.md, p.me, x, b);  // b = M x
    factor.solve(b, y, p.ke);
    deflate(y);
    p.matvec(p.md, p.me, y, tmp);
    mnorm = std::sqrt(dot(y, tmp));
    if (!(mnorm > 0.0)) throw EigenIterationDiverged("rayleigh_minimize: iterate collapsed");
    for (int i = 0; i < n; ++i) x[i] = y[i] / mnorm;
    p.matvec(p.kd, p.ke, x, tmp);
    lambda = dot(x, tmp);
    if (lambda_prev >= 0.0 && std::abs(lambda - lambda_prev) <= kStagnationTol * std::abs(lambda)) {
      converged = true;
      break;
    }
    lambda_prev = lambda;
  }
  if (!converged)
    throw EigenIterationDiverged("rayleigh_minimize: no stagnation within 500 iterations");

  // Fit the closed-form family C cos(scale * Theta + phi) to the eigenvector.
  const double scale = kTwoPi / a.integral();
  double scc = 0.0, scs = 0.0, sss = 0.0, rc = 0.0, rs = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = scale * a.cumulative(kTwoPi * i / n);
    const double cz = std::cos(z), sz = std::sin(z);
    scc += cz * cz;
    scs += cz * sz;
    sss += sz * sz;
    rc += x[i] * cz;
    rs += x[i] * sz;
  }
  const double det = scc * sss - scs * scs;
  double A = 0.0, B = 0.0;
  if (std::abs(det) > 1e-14) {
    A = (rc * sss - rs * scs) / det;
    B = (rs * scc - rc * scs) / det;
  }
  double amplitude = std::hypot(A, B);
  double phase = std::atan2(-B, A);

  WirtingerResult out{lambda, PeriodicFunction(x), amplitude, phase, iter};
  return out;
}

double minimizer_mismatch(const AngularProfile& a, const PeriodicFunction& discrete) {
  const int n = discrete.n();
  const Pencil p = assemble_pencil(a, n);
  std::vector<double> d = discrete.values;

  const double scale = kTwoPi / a.integral();
  std::vector<double> wc(n), ws(n);
  for (int i = 0; i < n; ++i) {
    const double z = scale * a.cumulative(kTwoPi * i / n);
    wc[i] = std::cos(z);
    ws[i] = std::sin(z);
  }
  std::vector<double> tmp(n);
  auto m_inner = [&](const std::vector<double>& u, const std::vector<double>& v) {
    p.matvec(p.md, p.me, v, tmp);
    return dot(u, tmp);
  };
  const double dd = m_inner(d, d);
  for (double& v : d) v /= std::sqrt(dd);
  const double dc = m_inner(d, wc), ds = m_inner(d, ws);
  const double cc = m_inner(wc, wc), cs = m_inner(wc, ws), ss = m_inner(ws, ws);

  // w_phi = cos(phi) wc - sin(phi) ws; maximize |<d, w_phi>| / ||w_phi||.
  double best_corr = -1.0, best_phi = 0.0;
  constexpr int kPhiGrid = 4096;
  for (int g = 0; g < kPhiGrid; ++g) {
    const double phi = kTwoPi * g / kPhiGrid;
    const double cp = std::cos(phi), sp = std::sin(phi);
    const double num = std::abs(cp * dc - sp * ds);
    const double den = std::sqrt(cp * cp * cc - 2.0 * cp * sp * cs + sp * sp * ss);
    const double corr = num / den;
    if (corr > best_corr) {
      best_corr = corr;
      best_phi = phi;
    }
  }
  const double cp = std::cos(best_phi), sp = std::sin(best_phi);
  const double den = std::sqrt(cp * cp * cc - 2.0 * cp * sp * cs + sp * sp * ss);
  const double corr_signed = (cp * dc - sp * ds) / den;
  // || d_hat - sign * w_hat ||_M^2 = 2 - 2 |corr|.
  (void)corr_signed;
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs(best_corr)));
}

}  // namespace holderex
