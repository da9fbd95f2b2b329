#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tubeb/functions.hpp"
#include "tubeb/quadrature.hpp"

namespace tubeb {

/** Radius/exponent/grid bundle for the oscillation estimators. */
struct OscillationParams {
  double r = 1.0;
  double p = 2.0;
  std::vector<TubePoint> grid;

  void validate() const;
};

/** A sampled scalar with its Monte-Carlo standard error. */
struct OscStat {
  double value = 0.0;
  double std_error = 0.0;
};

/** Integral mean of f over the metric ball D(z, r) against dV_alpha. */
IntegralResult ball_mean(const FunctionHandle& f, const TubePoint& z,
                         const OscillationParams& op, const DomainConfig& cfg,
                         const QuadratureSpec& spec);

/** MO_r(f)(z) = ( (1/|D|) \int_D |f - mean|^p dV_alpha )^{1/p}, mean = ball mean. */
OscStat mean_oscillation(const FunctionHandle& f, const TubePoint& z,
                         const OscillationParams& op, const DomainConfig& cfg,
                         const QuadratureSpec& spec);

/** Same p-oscillation but around an arbitrary center value. */
OscStat mean_oscillation_centered(const FunctionHandle& f, const TubePoint& z, cplx center,
                                  const OscillationParams& op, const DomainConfig& cfg,
                                  const QuadratureSpec& spec);

/**
 * Sampled sup of |f(z) - f(w)| over w in D(z, r): a lower bound for
 * omega_r(f)(z) that stabilizes under sample refinement.
 */
double oscillation_sup(const FunctionHandle& f, const TubePoint& z, double r, long samples,
                       std::uint64_t seed);

/** Grid maximum of MO_r(f). */
double bmo_seminorm(const FunctionHandle& f, const OscillationParams& op,
                    const DomainConfig& cfg, const QuadratureSpec& spec);

/** Grid maximum of the invariant gradient size (holomorphic f). */
double bloch_seminorm(const FunctionHandle& f, const std::vector<TubePoint>& grid);

/**
 * Constructive two-part splitting f = f1 + f2 with f1(z) = ball mean of f
 * at z and f2 = f - f1 (closure composition, so the recombination is exact
 * up to one floating-point rounding).
 */
std::pair<FunctionHandle, FunctionHandle> bmo_decompose(const FunctionHandle& f,
                                                        const OscillationParams& op,
                                                        const DomainConfig& cfg,
                                                        const QuadratureSpec& spec);

/** One MO_r sample decorated with its location scales (boundary-trend report). */
struct TrendPoint {
  double rho_z = 0.0;
  double abs_z = 0.0;
  double mo = 0.0;
};

std::vector<TrendPoint> vmo_trend(const FunctionHandle& f, const OscillationParams& op,
                                  const DomainConfig& cfg, const QuadratureSpec& spec);

/**
 * Deterministic interior grid: a log ladder covering rho(z) from 1e-2 to
 * 1e2 plus quasi-uniform pullback points Phi(xi) with radial concentration
 * toward |xi| -> 1. Always contains the base point.
 */
std::vector<TubePoint> make_grid(int n, int size, std::uint64_t seed);

}  // namespace tubeb
