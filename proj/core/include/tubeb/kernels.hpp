#pragma once

#include <vector>

#include "tubeb/domain.hpp"
#include "tubeb/functions.hpp"
#include "tubeb/quadrature.hpp"

namespace tubeb {

/** Parameters of the weighted kernel family K_alpha. */
struct KernelParams {
  DomainConfig cfg;

  double exponent() const { return cfg.n + 1 + cfg.alpha; }
  double coefficient() const;  // Gamma(n+1+alpha) / (2^{n+1} pi^n Gamma(alpha+1))
  void validate() const { cfg.validate(); }
};

/** Parameters of the dominating integral operator family T_{a,b,gamma'}. */
struct OperatorParams {
  double a = 0.0;
  double b = 0.0;
  std::vector<int> gamma_prime;  // n-1 entries; empty means all zero
};

/** K_alpha(z,w) = c_alpha * rho(z,w)^{-(n+1+alpha)}. */
cplx kernel(const TubePoint& z, const TubePoint& w, const KernelParams& kp);

/** K_alpha(z,w) - K_alpha(i,w); vanishes identically in w at z = i. */
cplx modified_kernel(const TubePoint& z, const TubePoint& w, const KernelParams& kp);

/** P_alpha f(z) = \int K_alpha(z,w) f(w) dV_alpha(w). */
IntegralResult project(const FunctionHandle& f, const TubePoint& z, const KernelParams& kp,
                       const QuadratureSpec& spec);

/** Same integral as project; reproduces holomorphic integrable functions. */
IntegralResult t_alpha(const FunctionHandle& f, const TubePoint& z, const KernelParams& kp,
                       const QuadratureSpec& spec);

/** P~_alpha f(z) = \int (K_alpha(z,w) - K_alpha(i,w)) f(w) dV_alpha(w). */
IntegralResult modified_project(const FunctionHandle& f, const TubePoint& z,
                                const KernelParams& kp, const QuadratureSpec& spec);

/**
 * Size of the invariant gradient of z -> P~_alpha f(z), computed by exact
 * differentiation of the kernel under the integral sign (three Monte-Carlo
 * integrals sharing the sample stream).
 */
double modified_project_gradient(const FunctionHandle& f, const TubePoint& z,
                                 const KernelParams& kp, const QuadratureSpec& spec);

/** Berezin transform B_alpha f(z) = \int f |K_alpha(z,w)|^2 / K_alpha(z,z) dV_alpha(w). */
IntegralResult berezin(const FunctionHandle& f, const TubePoint& z, const KernelParams& kp,
                       const QuadratureSpec& spec);

/** Hankel value (I - P_alpha)(f g)(z) = f(z) g(z) - P_alpha(f g)(z) for holomorphic g. */
IntegralResult hankel(const FunctionHandle& f, const FunctionHandle& g, const TubePoint& z,
                      const KernelParams& kp, const QuadratureSpec& spec);

/**
 * T_{a,b,gamma'} f(z) = rho(z)^a \int |(z'-w')^{gamma'}| rho(w)^b
 *                        |rho(z,w)|^{-(n+1+a+b+|gamma'|/2)} f(w) dV_alpha(w).
 */
IntegralResult t_general(const FunctionHandle& f, const TubePoint& z, const OperatorParams& op,
                         const KernelParams& kp, const QuadratureSpec& spec);

/**
 * Both candidate reconstructions of f(z) from T_alpha(rho^N L_n^N f)(z):
 * the derivative-based representation holds with exactly one of the
 * constants (2i)^N or (-2i)^N; the caller adjudicates.
 */
struct RepresentationResult {
  cplx expected;    // f(z)
  cplx with_plus;   // (+2i)^N Gamma(1+alpha)/Gamma(1+alpha+N) * T-value
  cplx with_minus;  // (-2i)^N Gamma(1+alpha)/Gamma(1+alpha+N) * T-value
  double std_error = 0.0;
  IntegralResult raw;  // T_alpha(rho^N L_n^N f)(z)
};

RepresentationResult representation_check(const FunctionHandle& f, const TubePoint& z, int N,
                                          const KernelParams& kp, const QuadratureSpec& spec);

/**
 * Truncated absolute masses of the kernel at the base point: for each R_k,
 *   I_k = \int_{|w| < R_k, rho(w) > 1/R_k} |K_alpha(i, w)| dV_alpha(w)
 * (divergent as R_k grows: the values increase without a Cauchy plateau),
 * next to the same truncations of the convergent contrast integrand
 * |rho(i,w)|^{-(n+2+alpha)} which must stabilize. All levels share one
 * sample stream, so the truncated values are exactly monotone in k.
 */
struct DivergenceReport {
  std::vector<double> radii;
  std::vector<double> truncated;
  std::vector<double> truncated_stderr;
  std::vector<double> contrast;
  std::vector<double> contrast_stderr;
};

DivergenceReport kernel_l1_divergence(const KernelParams& kp, const std::vector<double>& radii,
                                      const QuadratureSpec& spec);

}  // namespace tubeb
