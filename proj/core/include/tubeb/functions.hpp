#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "tubeb/cayley.hpp"
#include "tubeb/domain.hpp"
#include "tubeb/multiindex.hpp"

namespace tubeb {

/**
 * A test function on the tube together with whatever certificates it carries:
 * exact anisotropic derivatives, membership in the weighted Bergman scale,
 * decay class, and sup bound. Missing certificates simply mean callers fall
 * back to numerics. Handles are immutable once built and safe to share.
 */
struct FunctionHandle {
  std::function<cplx(const TubePoint&)> eval;
  bool holomorphic = false;

  /** Exact L^gamma derivative when available for this gamma, else nullopt. */
  std::function<std::optional<cplx>(const TubePoint&, const MultiIndex&)> exact_lop;

  /** Claimed membership in A^p_lambda as a predicate of (p, lambda). */
  std::function<bool(double p, double lambda)> in_ap;

  /** Largest t with sup |rho(z, i)|^t |f(z)| finite, when known. */
  std::optional<double> decay_exponent;

  /** Certified sup norm, when the function is bounded. */
  std::optional<double> sup_bound;

  cplx operator()(const TubePoint& z) const { return eval(z); }
};

/**
 * f(w) = rho(w, u0)^{-m} for an interior anchor u0 and m > 0. Holomorphic,
 * with exact derivatives along the last coordinate,
 *   L_n^N f = (m)_N (i/2)^N rho(w, u0)^{-m-N},
 * and exact first-order L_j f = -(m/2)(conj(w_j) - conj(u0_j)) rho(w,u0)^{-m-1}.
 * Lies in A^p_lambda iff p m - lambda > n + 1; decays like |rho(., i)|^{-m}.
 */
FunctionHandle make_rho_power(const TubePoint& u0, double m, const DomainConfig& cfg);

enum class SymbolKind {
  constant,    // 1
  phase,       // exp(i Re z_n), non-holomorphic, |f| = 1
  smoothstep,  // rho(z) / (1 + rho(z)), non-holomorphic, values in (0, 1)
};

/** Bounded symbols used as non-holomorphic test inputs; sup bound certified. */
FunctionHandle make_bounded_symbol(SymbolKind kind, const DomainConfig& cfg);

/** Smooth bump supported on the metric ball beta(., center) < radius. */
FunctionHandle make_metric_bump(const TubePoint& center, double radius,
                                const DomainConfig& cfg);

/** sup over the grid of |rho(z, i)|^t |f(z)|. */
double st_decay_check(const FunctionHandle& f, double t, std::span<const TubePoint> grid);

/** a f + b g; keeps holomorphy and exact derivatives when both sides have them. */
FunctionHandle combine(cplx a, const FunctionHandle& f, cplx b, const FunctionHandle& g);

/** Pointwise complex conjugate; anti-holomorphic for holomorphic input. */
FunctionHandle conjugate(const FunctionHandle& f);

/** Pointwise product f * g. */
FunctionHandle product(const FunctionHandle& f, const FunctionHandle& g);

/** |f|^2 as a real-valued C^2 function. */
FunctionHandle abs_squared(const FunctionHandle& f);

/** f o tau_v (holomorphy preserved; exact derivatives dropped). */
FunctionHandle compose_tau(const FunctionHandle& f, const TubePoint& v);

}  // namespace tubeb
