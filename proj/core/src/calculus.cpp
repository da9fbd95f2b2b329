#include "tubeb/calculus.hpp"

#include <cmath>

namespace tubeb {

MultiIndex MultiIndex::unit(int n, int j, int m) {
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  k[static_cast<std::size_t>(j)] = m;
  return MultiIndex(std::move(k));
}

int MultiIndex::order() const {
  int s = 0;
  for (int v : k) s += v;
  return s;
}

int MultiIndex::prime_order() const {
  int s = 0;
  for (std::size_t j = 0; j + 1 < k.size(); ++j) s += k[j];
  return s;
}

double MultiIndex::angular_weight() const {
  return k.back() + 0.5 * prime_order();
}

double MultiIndex::size_weight() const {
  return angular_weight() + 0.5 * prime_order();
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double factorial(int m) {
  double f = 1.0;
  for (int j = 2; j <= m; ++j) f *= j;
  return f;
}

/**
 * Largest contour radius for coordinate k whose worst-case boundary-distance
 * cost stays below `budget`: moving z_n by r costs at most r; moving z_j
 * (j < n) costs at most 2|y_j| r + r^2.
 */
double safe_radius(const TubePoint& z, int k, double budget) {
  const int n = z.n();
  if (k == n - 1) return budget;
  const double yj = std::fabs(z[k].imag());
  return -yj + std::sqrt(yj * yj + budget);
}

}  // namespace

cplx holo_derivative(const Evaluator& f, const TubePoint& z, const MultiIndex& gamma,
                     int nodes) {
  const int n = z.n();
  if (gamma.n() != n) throw ConfigError("holo_derivative: multi-index dimension mismatch");
  require_interior(z, "holo_derivative");
  if (gamma.order() == 0) return f(z);

  std::vector<int> active;
  for (int k = 0; k < n; ++k) {
    if (gamma.k[static_cast<std::size_t>(k)] > 0) active.push_back(k);
  }
  const int a = static_cast<int>(active.size());
  const double budget = (a <= 2) ? rho(z) / 4.0 : rho(z) / (2.0 * a);

  std::vector<double> radii(active.size());
  for (std::size_t t = 0; t < active.size(); ++t) {
    radii[t] = safe_radius(z, active[t], budget);
    if (!(radii[t] > 1e-150)) {
      throw ContourEscapesDomain("holo_derivative: no admissible contour radius at rho(z) = " +
                                 std::to_string(rho(z)));
    }
  }

  // Tensor-product trapezoid rule over the active coordinates.
  std::vector<int> idx(active.size(), 0);
  cplx acc(0.0, 0.0);
  TubePoint p = z;
  while (true) {
    cplx phase(1.0, 0.0);
    for (std::size_t t = 0; t < active.size(); ++t) {
      const double theta = kTwoPi * idx[t] / nodes;
      const int k = active[t];
      const int g = gamma.k[static_cast<std::size_t>(k)];
      p[k] = z[k] + radii[t] * std::polar(1.0, theta);
      phase *= std::polar(1.0, -g * theta);
    }
    const cplx v = f(p);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NonFiniteError("holo_derivative: non-finite value on the contour");
    }
    acc += v * phase;

    std::size_t t = 0;
    while (t < idx.size() && ++idx[t] == nodes) {
      idx[t] = 0;
      ++t;
    }
    if (t == idx.size()) break;
  }

  cplx scale(1.0, 0.0);
  for (std::size_t t = 0; t < active.size(); ++t) {
    const int g = gamma.k[static_cast<std::size_t>(active[t])];
    scale *= factorial(g) / (nodes * std::pow(radii[t], g));
  }
  return acc * scale;
}

namespace {

Evaluator lop_evaluator(const FunctionHandle& f, const MultiIndex& gamma) {
  return [f, gamma](const TubePoint& u) -> cplx {
    if (f.exact_lop) {
      if (const auto v = f.exact_lop(u, gamma)) return *v;
    }
    if (gamma.order() == 0) return f.eval(u);
    const int n = gamma.n();
    int j = 0;
    while (gamma.k[static_cast<std::size_t>(j)] == 0) ++j;
    MultiIndex inner = gamma;
    --inner.k[static_cast<std::size_t>(j)];
    const Evaluator g = lop_evaluator(f, inner);
    const cplx dn = holo_derivative(g, u, MultiIndex::unit(n, n - 1));
    if (j == n - 1) return dn;
    const cplx dj = holo_derivative(g, u, MultiIndex::unit(n, j));
    return dj + 2.0 * u[j].imag() * dn;
  };
}

}  // namespace

cplx lop(const FunctionHandle& f, const TubePoint& z, const MultiIndex& gamma) {
  if (!f.holomorphic) throw ConfigError("lop: requires a holomorphic handle");
  return lop_evaluator(f, gamma)(z);
}

BergmanMatrix bergman_matrix(const TubePoint& z) {
  require_interior(z, "bergman_matrix");
  const int n = z.n();
  const double r = rho(z);
  BergmanMatrix M;
  M.n = n;
  M.b.assign(static_cast<std::size_t>(n) * n, 0.0);
  M.binv.assign(static_cast<std::size_t>(n) * n, 0.0);

  std::vector<double> y(static_cast<std::size_t>(n - 1));
  double y2 = 0.0;
  for (int j = 0; j + 1 < n; ++j) {
    y[static_cast<std::size_t>(j)] = z[j].imag();
    y2 += y[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
  }
  const double yn = z[n - 1].imag();
  const double inv_r2 = 1.0 / (r * r);

  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      const double base = (i == j) ? r / 2.0 : 0.0;
      M.b[static_cast<std::size_t>(i * n + j)] =
          (base + y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) * inv_r2;
      M.binv[static_cast<std::size_t>(i * n + j)] = (i == j) ? 2.0 * r : 0.0;
    }
    M.b[static_cast<std::size_t>(i * n + (n - 1))] = -0.5 * y[static_cast<std::size_t>(i)] * inv_r2;
    M.b[static_cast<std::size_t>((n - 1) * n + i)] = -0.5 * y[static_cast<std::size_t>(i)] * inv_r2;
    M.binv[static_cast<std::size_t>(i * n + (n - 1))] = 4.0 * r * y[static_cast<std::size_t>(i)];
    M.binv[static_cast<std::size_t>((n - 1) * n + i)] = 4.0 * r * y[static_cast<std::size_t>(i)];
  }
  M.b[static_cast<std::size_t>((n - 1) * n + (n - 1))] = 0.25 * inv_r2;
  M.binv[static_cast<std::size_t>((n - 1) * n + (n - 1))] = 4.0 * r * (yn + y2);
  M.det = std::pow(2.0 * r, -(n + 1));
  return M;
}

namespace {

/** L_j f for j = 0..n-1 (the last entry is L_n f), exact when the handle allows. */
std::vector<cplx> l_values(const FunctionHandle& f, const TubePoint& z) {
  const int n = z.n();
  std::vector<cplx> L(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    L[static_cast<std::size_t>(j)] = lop(f, z, MultiIndex::unit(n, j));
  }
  return L;
}

}  // namespace

double invariant_gradient_norm(const FunctionHandle& f, const TubePoint& z) {
  const int n = z.n();
  const double r = rho(z);
  const std::vector<cplx> L = l_values(f, z);
  double s = 2.0 * r * std::norm(L[static_cast<std::size_t>(n - 1)]);
  for (int j = 0; j + 1 < n; ++j) s += std::norm(L[static_cast<std::size_t>(j)]);
  return std::sqrt(4.0 * r * s);
}

double invariant_gradient_norm_matrix(const FunctionHandle& f, const TubePoint& z) {
  const int n = z.n();
  const BergmanMatrix M = bergman_matrix(z);
  const std::vector<cplx> L = l_values(f, z);

  // Plain Wirtinger derivatives from the tangential operators:
  // d_n f = L_n f, d_j f = L_j f - 2 y_j L_n f.
  std::vector<cplx> d(static_cast<std::size_t>(n));
  d[static_cast<std::size_t>(n - 1)] = L[static_cast<std::size_t>(n - 1)];
  for (int j = 0; j + 1 < n; ++j) {
    d[static_cast<std::size_t>(j)] =
        L[static_cast<std::size_t>(j)] - 2.0 * z[j].imag() * L[static_cast<std::size_t>(n - 1)];
  }

  cplx s(0.0, 0.0);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      s += M.inv_at(j, k) * std::conj(d[static_cast<std::size_t>(j)]) *
           d[static_cast<std::size_t>(k)];
    }
  }
  return std::sqrt(2.0 * s.real());
}

namespace {

cplx mixed_wirtinger_step(const Evaluator& g, const TubePoint& z, int i, int j, double h) {
  const double r = rho(z);
  const int n = z.n();

  // Worst-case boundary-distance cost of the stencil shifts.
  double cost = 0.0;
  for (int k : {i, j}) {
    if (k == n - 1) {
      cost += h;
    } else {
      cost += 2.0 * std::fabs(z[k].imag()) * h + h * h;
    }
  }
  if (cost >= 0.5 * r) {
    throw StepTooSmall("mixed_wirtinger: finite-difference stencil would leave the domain");
  }

  auto shifted = [&](int coord, int re_or_im, double step) {
    TubePoint p = z;
    p[coord] += (re_or_im == 0) ? cplx(step, 0.0) : cplx(0.0, step);
    return p;
  };
  auto second_mixed = [&](int ci, int ri, int cj, int rj) -> cplx {
    if (ci == cj && ri == rj) {
      const TubePoint plus = shifted(ci, ri, h);
      const TubePoint minus = shifted(ci, ri, -h);
      return (g(plus) - 2.0 * g(z) + g(minus)) / (h * h);
    }
    TubePoint pp = shifted(ci, ri, h);
    pp[cj] += (rj == 0) ? cplx(h, 0.0) : cplx(0.0, h);
    TubePoint pm = shifted(ci, ri, h);
    pm[cj] += (rj == 0) ? cplx(-h, 0.0) : cplx(0.0, -h);
    TubePoint mp = shifted(ci, ri, -h);
    mp[cj] += (rj == 0) ? cplx(h, 0.0) : cplx(0.0, h);
    TubePoint mm = shifted(ci, ri, -h);
    mm[cj] += (rj == 0) ? cplx(-h, 0.0) : cplx(0.0, -h);
    return (g(pp) - g(pm) - g(mp) + g(mm)) / (4.0 * h * h);
  };

  // d2/dz_i dconj(z_j) = (1/4)[(dx_i dx_j + dy_i dy_j) + i (dx_i dy_j - dy_i dx_j)]
  if (i == j) {
    return 0.25 * (second_mixed(i, 0, j, 0) + second_mixed(i, 1, j, 1));
  }
  const cplx xx = second_mixed(i, 0, j, 0);
  const cplx yy = second_mixed(i, 1, j, 1);
  const cplx xy = second_mixed(i, 0, j, 1);
  const cplx yx = second_mixed(i, 1, j, 0);
  return 0.25 * ((xx + yy) + cplx(0.0, 1.0) * (xy - yx));
}

double default_wirtinger_step(const TubePoint& z) {
  return std::max(1e-6, 1e-3 * std::min(rho(z), 1.0));
}

// One Richardson extrapolation of the central stencil: cancels the O(h^2)
// truncation term while the step stays large enough to dodge roundoff.
cplx mixed_wirtinger_rich(const Evaluator& g, const TubePoint& z, int i, int j, double h) {
  return (4.0 * mixed_wirtinger_step(g, z, i, j, 0.5 * h) -
          mixed_wirtinger_step(g, z, i, j, h)) /
         3.0;
}

}  // namespace

cplx mixed_wirtinger(const Evaluator& g, const TubePoint& z, int i, int j) {
  return mixed_wirtinger_rich(g, z, i, j, default_wirtinger_step(z));
}

double numerical_real_jacobian(const RealMap& F, const std::vector<double>& x, double h) {
  const std::size_t m = x.size();
  std::vector<double> jac(m * m);
  for (std::size_t j = 0; j < m; ++j) {
    const double step = h * (1.0 + std::fabs(x[j]));
    std::vector<double> xp = x, xm = x;
    xp[j] += step;
    xm[j] -= step;
    const std::vector<double> fp = F(xp);
    const std::vector<double> fm = F(xm);
    if (fp.size() != m || fm.size() != m) {
      throw ConfigError("numerical_real_jacobian: map must preserve dimension");
    }
    for (std::size_t i = 0; i < m; ++i) jac[i * m + j] = (fp[i] - fm[i]) / (2.0 * step);
  }

  // determinant by partial-pivot elimination
  double det = 1.0;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < m; ++r) {
      if (std::fabs(jac[r * m + c]) > std::fabs(jac[piv * m + c])) piv = r;
    }
    if (jac[piv * m + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < m; ++k) std::swap(jac[piv * m + k], jac[c * m + k]);
      det = -det;
    }
    det *= jac[c * m + c];
    for (std::size_t r = c + 1; r < m; ++r) {
      const double factor = jac[r * m + c] / jac[c * m + c];
      for (std::size_t k = c; k < m; ++k) jac[r * m + k] -= factor * jac[c * m + k];
    }
  }
  return det;
}

cplx invariant_laplacian(const Evaluator& g, const TubePoint& z) {
  require_interior(z, "invariant_laplacian");
  const int n = z.n();
  const double r = rho(z);

  const double h = default_wirtinger_step(z);
  auto w = [&](int i, int j) { return mixed_wirtinger_rich(g, z, i, j, h); };

  double y2 = 0.0;
  cplx acc(0.0, 0.0);
  for (int j = 0; j + 1 < n; ++j) {
    const double yj = z[j].imag();
    y2 += yj * yj;
    acc += w(j, j);
    acc += 2.0 * yj * (w(n - 1, j) + w(j, n - 1));
  }
  const double yn = z[n - 1].imag();
  acc += 2.0 * (yn + y2) * w(n - 1, n - 1);
  return 8.0 * r * acc;
}

}  // namespace tubeb
