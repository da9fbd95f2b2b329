#include "tubeb/functions.hpp"

#include <cmath>

#include "tubeb/special.hpp"

namespace tubeb {

FunctionHandle make_rho_power(const TubePoint& u0, double m, const DomainConfig& cfg) {
  cfg.validate();
  require_interior(u0, "make_rho_power");
  if (!(m > 0.0)) throw ConfigError("make_rho_power: exponent m must be positive");
  const int n = cfg.n;

  FunctionHandle h;
  h.holomorphic = true;
  h.eval = [u0, m](const TubePoint& w) { return rho_pow(rho(w, u0), -m); };
  h.exact_lop = [u0, m, n](const TubePoint& w,
                           const MultiIndex& gamma) -> std::optional<cplx> {
    if (gamma.n() != n) return std::nullopt;
    if (gamma.order() == 0) return rho_pow(rho(w, u0), -m);
    if (gamma.prime_order() == 0) {
      // L_n^N f = (m)_N (i/2)^N rho(w, u0)^{-m-N}
      const int N = gamma.k.back();
      return pochhammer(m, N) * std::pow(cplx(0.0, 0.5), N) * rho_pow(rho(w, u0), -m - N);
    }
    if (gamma.order() == 1) {
      // single L_j:  -(m/2) (conj(w_j) - conj(u0_j)) rho(w, u0)^{-m-1}
      for (int j = 0; j + 1 < n; ++j) {
        if (gamma.k[static_cast<std::size_t>(j)] == 1) {
          return -(m / 2.0) * (std::conj(w[j]) - std::conj(u0[j])) *
                 rho_pow(rho(w, u0), -m - 1.0);
        }
      }
    }
    return std::nullopt;
  };
  h.in_ap = [m, n](double p, double lambda) { return p * m - lambda > n + 1.0; };
  h.decay_exponent = m;
  return h;
}

FunctionHandle make_bounded_symbol(SymbolKind kind, const DomainConfig& cfg) {
  cfg.validate();
  FunctionHandle h;
  h.sup_bound = 1.0;
  switch (kind) {
    case SymbolKind::constant:
      h.holomorphic = true;
      h.eval = [](const TubePoint&) { return cplx(1.0, 0.0); };
      h.exact_lop = [](const TubePoint&, const MultiIndex& gamma) -> std::optional<cplx> {
        return gamma.order() == 0 ? std::optional<cplx>(cplx(1.0, 0.0))
                                  : std::optional<cplx>(cplx(0.0, 0.0));
      };
      break;
    case SymbolKind::phase:
      h.eval = [](const TubePoint& z) {
        return std::exp(cplx(0.0, z.last().real()));
      };
      break;
    case SymbolKind::smoothstep:
      h.eval = [](const TubePoint& z) {
        const double r = rho(z);
        return cplx(r / (1.0 + r), 0.0);
      };
      break;
  }
  return h;
}

FunctionHandle make_metric_bump(const TubePoint& center, double radius,
                                const DomainConfig& cfg) {
  cfg.validate();
  require_interior(center, "make_metric_bump");
  if (!(radius > 0.0)) throw ConfigError("make_metric_bump: radius must be positive");
  FunctionHandle h;
  h.sup_bound = 1.0;
  h.eval = [center, radius](const TubePoint& z) {
    const double s = beta(z, center) / radius;
    if (s >= 1.0) return cplx(0.0, 0.0);
    return cplx(std::exp(1.0 - 1.0 / (1.0 - s * s)), 0.0);
  };
  return h;
}

double st_decay_check(const FunctionHandle& f, double t, std::span<const TubePoint> grid) {
  double sup = 0.0;
  for (const TubePoint& z : grid) {
    const TubePoint base = base_point(z.n());
    const double v = std::pow(std::abs(rho(z, base)), t) * std::abs(f(z));
    if (v > sup) sup = v;
  }
  return sup;
}

FunctionHandle combine(cplx a, const FunctionHandle& f, cplx b, const FunctionHandle& g) {
  FunctionHandle h;
  h.holomorphic = f.holomorphic && g.holomorphic;
  h.eval = [a, fe = f.eval, b, ge = g.eval](const TubePoint& z) {
    return a * fe(z) + b * ge(z);
  };
  if (f.exact_lop && g.exact_lop) {
    h.exact_lop = [a, fl = f.exact_lop, b, gl = g.exact_lop](
                      const TubePoint& z, const MultiIndex& gamma) -> std::optional<cplx> {
      const auto u = fl(z, gamma);
      const auto v = gl(z, gamma);
      if (u && v) return a * *u + b * *v;
      return std::nullopt;
    };
  }
  if (f.sup_bound && g.sup_bound) {
    h.sup_bound = std::abs(a) * *f.sup_bound + std::abs(b) * *g.sup_bound;
  }
  return h;
}

FunctionHandle conjugate(const FunctionHandle& f) {
  FunctionHandle h;
  h.eval = [fe = f.eval](const TubePoint& z) { return std::conj(fe(z)); };
  h.sup_bound = f.sup_bound;
  h.decay_exponent = f.decay_exponent;
  return h;
}

FunctionHandle product(const FunctionHandle& f, const FunctionHandle& g) {
  FunctionHandle h;
  h.holomorphic = f.holomorphic && g.holomorphic;
  h.eval = [fe = f.eval, ge = g.eval](const TubePoint& z) { return fe(z) * ge(z); };
  if (f.sup_bound && g.sup_bound) h.sup_bound = *f.sup_bound * *g.sup_bound;
  return h;
}

FunctionHandle abs_squared(const FunctionHandle& f) {
  FunctionHandle h;
  h.eval = [fe = f.eval](const TubePoint& z) {
    return cplx(std::norm(fe(z)), 0.0);
  };
  if (f.sup_bound) h.sup_bound = *f.sup_bound * *f.sup_bound;
  return h;
}

FunctionHandle compose_tau(const FunctionHandle& f, const TubePoint& v) {
  FunctionHandle h;
  h.holomorphic = f.holomorphic;
  h.eval = [fe = f.eval, map = tau(v)](const TubePoint& z) { return fe(map(z)); };
  h.sup_bound = f.sup_bound;
  return h;
}

}  // namespace tubeb
