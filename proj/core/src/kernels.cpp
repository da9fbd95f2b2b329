#include "tubeb/kernels.hpp"

#include <cmath>

#include "tubeb/calculus.hpp"
#include "tubeb/special.hpp"

namespace tubeb {

double KernelParams::coefficient() const { return kernel_constant(cfg.n, cfg.alpha); }

cplx kernel(const TubePoint& z, const TubePoint& w, const KernelParams& kp) {
  return kp.coefficient() * rho_pow(rho(z, w), -kp.exponent());
}

cplx modified_kernel(const TubePoint& z, const TubePoint& w, const KernelParams& kp) {
  const TubePoint base = base_point(kp.cfg.n);
  return kernel(z, w, kp) - kernel(base, w, kp);
}

IntegralResult project(const FunctionHandle& f, const TubePoint& z, const KernelParams& kp,
                       const QuadratureSpec& spec) {
  kp.validate();
  require_interior(z, "project");
  return integrate_tube([&](const TubePoint& w) { return kernel(z, w, kp) * f(w); }, kp.cfg,
                        spec);
}

IntegralResult t_alpha(const FunctionHandle& f, const TubePoint& z, const KernelParams& kp,
                       const QuadratureSpec& spec) {
  return project(f, z, kp, spec);
}

IntegralResult modified_project(const FunctionHandle& f, const TubePoint& z,
                                const KernelParams& kp, const QuadratureSpec& spec) {
  kp.validate();
  require_interior(z, "modified_project");
  return integrate_tube([&](const TubePoint& w) { return modified_kernel(z, w, kp) * f(w); },
                        kp.cfg, spec);
}

namespace {

/**
 * Tangential kernel derivatives in the z slot, exact from the closed form:
 *   L_j K = (q c / 2) (conj(w_j) - conj(z_j)) rho(z,w)^{-q-1},  j < n,
 *   L_n K = (i q c / 2) rho(z,w)^{-q-1},
 * with q = n+1+alpha and c the kernel coefficient.
 */
cplx kernel_l_derivative(const TubePoint& z, const TubePoint& w, const KernelParams& kp, int j) {
  const double q = kp.exponent();
  const cplx r_pow = rho_pow(rho(z, w), -(q + 1.0));
  const double scale = 0.5 * q * kp.coefficient();
  if (j == kp.cfg.n - 1) return cplx(0.0, scale) * r_pow;
  return scale * (std::conj(w[j]) - std::conj(z[j])) * r_pow;
}

}  // namespace

double modified_project_gradient(const FunctionHandle& f, const TubePoint& z,
                                 const KernelParams& kp, const QuadratureSpec& spec) {
  kp.validate();
  require_interior(z, "modified_project_gradient");
  const int n = kp.cfg.n;
  const double r = rho(z);

  double s = 0.0;
  for (int j = 0; j < n; ++j) {
    const IntegralResult d = integrate_tube(
        [&](const TubePoint& w) { return kernel_l_derivative(z, w, kp, j) * f(w); }, kp.cfg,
        spec);
    s += ((j == n - 1) ? 2.0 * r : 1.0) * std::norm(d.value);
  }
  return std::sqrt(4.0 * r * s);
}

IntegralResult berezin(const FunctionHandle& f, const TubePoint& z, const KernelParams& kp,
                       const QuadratureSpec& spec) {
  kp.validate();
  require_interior(z, "berezin");
  const double k_diag = kp.coefficient() * std::pow(rho(z), -kp.exponent());
  return integrate_tube(
      [&](const TubePoint& w) { return f(w) * std::norm(kernel(z, w, kp)) / k_diag; }, kp.cfg,
      spec);
}

IntegralResult hankel(const FunctionHandle& f, const FunctionHandle& g, const TubePoint& z,
                      const KernelParams& kp, const QuadratureSpec& spec) {
  IntegralResult proj = project(product(f, g), z, kp, spec);
  proj.value = f(z) * g(z) - proj.value;
  return proj;
}

IntegralResult t_general(const FunctionHandle& f, const TubePoint& z, const OperatorParams& op,
                         const KernelParams& kp, const QuadratureSpec& spec) {
  kp.validate();
  require_interior(z, "t_general");
  const int n = kp.cfg.n;
  if (!op.gamma_prime.empty() && static_cast<int>(op.gamma_prime.size()) != n - 1) {
    throw ConfigError("t_general: gamma_prime must have n-1 entries");
  }
  int gp_total = 0;
  for (int g : op.gamma_prime) {
    if (g < 0) throw ConfigError("t_general: gamma_prime entries must be nonnegative");
    gp_total += g;
  }
  const double expo = n + 1 + op.a + op.b + 0.5 * gp_total;
  const double front = std::pow(rho(z), op.a);

  return integrate_tube(
      [&, expo, front](const TubePoint& w) {
        double angular = 1.0;
        for (std::size_t j = 0; j < op.gamma_prime.size(); ++j) {
          if (op.gamma_prime[j] > 0) {
            angular *= std::pow(std::abs(z[static_cast<int>(j)] - w[static_cast<int>(j)]),
                                op.gamma_prime[j]);
          }
        }
        const double core = std::pow(std::abs(rho(z, w)), -expo) * std::pow(rho(w), op.b);
        return front * angular * core * f(w);
      },
      kp.cfg, spec);
}

RepresentationResult representation_check(const FunctionHandle& f, const TubePoint& z, int N,
                                          const KernelParams& kp, const QuadratureSpec& spec) {
  kp.validate();
  require_interior(z, "representation_check");
  if (N < 0) throw ConfigError("representation_check: N must be nonnegative");
  const int n = kp.cfg.n;
  const MultiIndex gamma = MultiIndex::unit(n, n - 1, N);

  const IntegralResult t = integrate_tube(
      [&](const TubePoint& w) {
        return kernel(z, w, kp) * std::pow(rho(w), static_cast<double>(N)) * lop(f, w, gamma);
      },
      kp.cfg, spec);

  const double gamma_ratio = 1.0 / pochhammer(1.0 + kp.cfg.alpha, N);
  const cplx two_i(0.0, 2.0);
  RepresentationResult res;
  res.expected = f(z);
  res.with_plus = std::pow(two_i, N) * gamma_ratio * t.value;
  res.with_minus = std::pow(-two_i, N) * gamma_ratio * t.value;
  res.std_error = std::pow(2.0, N) * gamma_ratio * t.std_error;
  res.raw = t;
  return res;
}

DivergenceReport kernel_l1_divergence(const KernelParams& kp, const std::vector<double>& radii,
                                      const QuadratureSpec& spec) {
  kp.validate();
  if (radii.empty()) throw ConfigError("kernel_l1_divergence: need at least one radius");
  for (std::size_t k = 1; k < radii.size(); ++k) {
    if (!(radii[k] > radii[k - 1]) || !(radii[0] > 0.0)) {
      throw ConfigError("kernel_l1_divergence: radii must be positive increasing");
    }
  }
  const TubePoint base = base_point(kp.cfg.n);
  const double contrast_expo = kp.cfg.n + 2 + kp.cfg.alpha;

  auto truncated = [&](double R, bool divergent_kernel) {
    return integrate_tube(
        [&, R, divergent_kernel](const TubePoint& w) -> cplx {
          double norm2 = 0.0;
          for (int j = 0; j < w.n(); ++j) norm2 += std::norm(w[j]);
          if (norm2 >= R * R || rho(w) <= 1.0 / R) return cplx(0.0, 0.0);
          const double m = divergent_kernel
                               ? std::abs(kernel(base, w, kp))
                               : std::pow(std::abs(rho(base, w)), -contrast_expo);
          return cplx(m, 0.0);
        },
        kp.cfg, spec);
  };

  DivergenceReport rep;
  rep.radii = radii;
  for (double R : radii) {
    const IntegralResult div = truncated(R, true);
    const IntegralResult con = truncated(R, false);
    rep.truncated.push_back(div.value.real());
    rep.truncated_stderr.push_back(div.std_error);
    rep.contrast.push_back(con.value.real());
    rep.contrast_stderr.push_back(con.std_error);
  }
  return rep;
}

}  // namespace tubeb
