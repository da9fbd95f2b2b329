#include "tubeb/oscillation.hpp"

#include <algorithm>
#include <cmath>

#include "tubeb/calculus.hpp"
#include "tubeb/rng.hpp"

namespace tubeb {

void OscillationParams::validate() const {
  if (!(r > 0.0)) throw ConfigError("OscillationParams: radius must be positive");
  if (!(p >= 1.0)) throw ConfigError("OscillationParams: exponent p must be at least 1");
}

IntegralResult ball_mean(const FunctionHandle& f, const TubePoint& z,
                         const OscillationParams& op, const DomainConfig& cfg,
                         const QuadratureSpec& spec) {
  op.validate();
  const IntegralResult vol =
      integrate_ball([](const TubePoint&) { return cplx(1.0, 0.0); }, z, op.r, cfg, spec);
  IntegralResult num = integrate_ball([&](const TubePoint& w) { return f(w); }, z, op.r, cfg, spec);
  const double v = vol.value.real();
  // Same sample stream in both integrals: the ratio is exact for constants.
  num.value /= v;
  num.std_error /= v;
  num.divergence_warning = num.divergence_warning || vol.divergence_warning;
  return num;
}

OscStat mean_oscillation_centered(const FunctionHandle& f, const TubePoint& z, cplx center,
                                  const OscillationParams& op, const DomainConfig& cfg,
                                  const QuadratureSpec& spec) {
  op.validate();
  const IntegralResult vol =
      integrate_ball([](const TubePoint&) { return cplx(1.0, 0.0); }, z, op.r, cfg, spec);
  const IntegralResult pmom = integrate_ball(
      [&](const TubePoint& w) { return cplx(std::pow(std::abs(f(w) - center), op.p), 0.0); }, z,
      op.r, cfg, spec);
  const double v = vol.value.real();
  const double ratio = std::max(0.0, pmom.value.real() / v);
  OscStat s;
  s.value = std::pow(ratio, 1.0 / op.p);
  // delta-method error through x -> x^{1/p}; conservative fallback near zero
  const double se_ratio = pmom.std_error / v;
  s.std_error = (s.value > 1e-12) ? se_ratio / (op.p * std::pow(s.value, op.p - 1.0))
                                  : std::pow(se_ratio, 1.0 / op.p);
  return s;
}

OscStat mean_oscillation(const FunctionHandle& f, const TubePoint& z,
                         const OscillationParams& op, const DomainConfig& cfg,
                         const QuadratureSpec& spec) {
  const IntegralResult mean = ball_mean(f, z, op, cfg, spec);
  return mean_oscillation_centered(f, z, mean.value, op, cfg, spec);
}

double oscillation_sup(const FunctionHandle& f, const TubePoint& z, double r, long samples,
                       std::uint64_t seed) {
  if (!(r > 0.0)) throw ConfigError("oscillation_sup: radius must be positive");
  const cplx fz = f(z);
  double best = 0.0;
  for (long k = 0; k < samples; ++k) {
    const TubePoint w = ball_point(z, r, k, seed);
    best = std::max(best, std::abs(f(w) - fz));
  }
  return best;
}

double bmo_seminorm(const FunctionHandle& f, const OscillationParams& op,
                    const DomainConfig& cfg, const QuadratureSpec& spec) {
  op.validate();
  if (op.grid.empty()) throw ConfigError("bmo_seminorm: empty grid");
  double best = 0.0;
  for (const TubePoint& z : op.grid) {
    best = std::max(best, mean_oscillation(f, z, op, cfg, spec).value);
  }
  return best;
}

double bloch_seminorm(const FunctionHandle& f, const std::vector<TubePoint>& grid) {
  if (grid.empty()) throw ConfigError("bloch_seminorm: empty grid");
  double best = 0.0;
  for (const TubePoint& z : grid) best = std::max(best, invariant_gradient_norm(f, z));
  return best;
}

std::pair<FunctionHandle, FunctionHandle> bmo_decompose(const FunctionHandle& f,
                                                        const OscillationParams& op,
                                                        const DomainConfig& cfg,
                                                        const QuadratureSpec& spec) {
  op.validate();
  FunctionHandle f1;
  f1.eval = [f, op, cfg, spec](const TubePoint& z) { return ball_mean(f, z, op, cfg, spec).value; };
  f1.holomorphic = false;
  f1.sup_bound = f.sup_bound;

  FunctionHandle f2;
  f2.eval = [f, f1](const TubePoint& z) { return f.eval(z) - f1.eval(z); };
  f2.holomorphic = false;
  return {f1, f2};
}

std::vector<TrendPoint> vmo_trend(const FunctionHandle& f, const OscillationParams& op,
                                  const DomainConfig& cfg, const QuadratureSpec& spec) {
  op.validate();
  std::vector<TrendPoint> out;
  out.reserve(op.grid.size());
  for (const TubePoint& z : op.grid) {
    TrendPoint t;
    t.rho_z = rho(z);
    double norm2 = 0.0;
    for (int j = 0; j < z.n(); ++j) norm2 += std::norm(z[j]);
    t.abs_z = std::sqrt(norm2);
    t.mo = mean_oscillation(f, z, op, cfg, spec).value;
    out.push_back(t);
  }
  return out;
}

std::vector<TubePoint> make_grid(int n, int size, std::uint64_t seed) {
  if (n < 1) throw ConfigError("make_grid: dimension must be positive");
  if (size < 1) throw ConfigError("make_grid: size must be positive");
  std::vector<TubePoint> grid;
  grid.reserve(static_cast<std::size_t>(size));
  grid.push_back(base_point(n));

  // Log ladder over rho(z), decorated with bounded transverse offsets.
  const int ladder = std::min(size / 3, 40);
  for (int j = 0; j < ladder && static_cast<int>(grid.size()) < size; ++j) {
    const double t = (ladder > 1) ? -2.0 + 4.0 * j / (ladder - 1.0) : 0.0;
    const double rho_z = std::pow(10.0, t);
    std::vector<cplx> z(static_cast<std::size_t>(n));
    double y2 = 0.0;
    for (int k = 0; k + 1 < n; ++k) {
      const double yk = 0.2 * std::sin(1.0 + j + k);
      const double xk = 0.3 * std::cos(1.0 + 2 * j + k);
      z[static_cast<std::size_t>(k)] = cplx(xk, yk);
      y2 += yk * yk;
    }
    z[static_cast<std::size_t>(n - 1)] = cplx(0.4 * std::sin(3.0 * j), rho_z + y2);
    grid.emplace_back(std::move(z));
  }

  // Pullback points with radial concentration toward the ball boundary.
  for (long k = 0; static_cast<int>(grid.size()) < size; ++k) {
    SampleStream stream(seed, 0x67726964ULL + static_cast<std::uint64_t>(k));
    const double one_minus = std::pow(10.0, -3.0 * stream.u01());
    const double rad = std::sqrt(1.0 - one_minus);
    std::vector<cplx> xi(static_cast<std::size_t>(n));
    double norm2 = 0.0;
    for (auto& c : xi) {
      c = cplx(stream.normal(), stream.normal());
      norm2 += std::norm(c);
    }
    const double scale = rad / std::sqrt(norm2);
    for (auto& c : xi) c *= scale;
    grid.push_back(cayley(BallPoint(xi)));
  }
  return grid;
}

}  // namespace tubeb
