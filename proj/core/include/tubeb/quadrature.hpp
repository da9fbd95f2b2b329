#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "tubeb/cayley.hpp"
#include "tubeb/domain.hpp"
#include "tubeb/errors.hpp"

namespace tubeb {

/**
 * Seeded Monte-Carlo configuration. Identical spec => bit-identical sample
 * stream => bit-identical result, independent of `jobs` (reduction order is
 * fixed by a static partition into chunks).
 */
struct QuadratureSpec {
  long samples = 100000;
  std::uint64_t seed = 42;
  std::optional<double> kappa;  // importance exponent; defaults to alpha
  bool stratified = true;
  int jobs = 1;

  void validate() const;
  double kappa_or(double alpha) const { return kappa ? *kappa : alpha; }
  QuadratureSpec with_samples(long m) const {
    QuadratureSpec s = *this;
    s.samples = m;
    return s;
  }
  QuadratureSpec with_seed(std::uint64_t sd) const {
    QuadratureSpec s = *this;
    s.seed = sd;
    return s;
  }
};

struct IntegralResult {
  cplx value{0.0, 0.0};
  double std_error = 0.0;  // Monte-Carlo standard error (serialized as "stderr")
  long samples_used = 0;
  bool divergence_warning = false;
};

using TubeIntegrand = std::function<cplx(const TubePoint&)>;

/**
 * \int_{T_B} f(w) rho(w)^alpha dV(w) by pullback through the Cayley map:
 * xi is drawn in the unit ball with density (1 - |xi|^2)^kappa / Z(n, kappa),
 * w = Phi(xi), and each sample carries the weight
 *   Z(n,kappa) * J_R(Phi)(xi) * (1-|xi|^2)^(alpha-kappa) / |1+xi_n|^(2 alpha).
 * Stratified mode splits the radial quantile into 32 equal-probability
 * contiguous strata; samples are then rounded up to a multiple of 32.
 */
IntegralResult integrate_tube(const TubeIntegrand& f, const DomainConfig& cfg,
                              const QuadratureSpec& spec);

/**
 * \int_{D(z,r)} f(w) rho(w)^alpha dV(w) over the invariant-metric ball:
 * eta uniform in the Euclidean ball of radius tanh(r), pushed through the
 * ball automorphism at Phi^{-1}(z) and then through Phi. Every generated
 * point satisfies beta(z, w) < r by construction.
 */
IntegralResult integrate_ball(const TubeIntegrand& f, const TubePoint& z, double r,
                              const DomainConfig& cfg, const QuadratureSpec& spec);

/** V_alpha(D(z,r)) = integrate_ball(1). */
double ball_volume(const TubePoint& z, double r, const DomainConfig& cfg,
                   const QuadratureSpec& spec);

/**
 * k-th point of the deterministic D(z,r) sample stream used by
 * integrate_ball (without the weight). Exposed for sup-style estimators
 * that need ball points rather than integrals.
 */
TubePoint ball_point(const TubePoint& z, double r, long index, std::uint64_t seed);

}  // namespace tubeb
