#pragma once

#include <functional>
#include <vector>

#include "tubeb/domain.hpp"
#include "tubeb/functions.hpp"
#include "tubeb/multiindex.hpp"

namespace tubeb {

using Evaluator = std::function<cplx(const TubePoint&)>;

/**
 * Mixed holomorphic partial d^gamma f at an interior z via tensor-product
 * Cauchy contours (trapezoid rule, `nodes` points per active coordinate).
 * Contour radii share a boundary-distance budget of rho(z)/2 across the
 * active coordinates so the whole polydisc stays in the domain; throws
 * ContourEscapesDomain when no admissible radius exists and NonFiniteError
 * when f is non-finite on the contour.
 */
cplx holo_derivative(const Evaluator& f, const TubePoint& z, const MultiIndex& gamma,
                     int nodes = 32);

/**
 * Anisotropic derivative L^gamma f with L_n = d/dz_n and
 * L_j = d/dz_j + 2 y_j d/dz_n (j < n), composed right to left in the order
 * of the product L_1^{g_1} ... L_n^{g_n} (the coefficient of L_j varies with
 * the point, so the order is part of the contract). Uses the handle's exact
 * derivative when available, otherwise nested contour differentiation.
 */
cplx lop(const FunctionHandle& f, const TubePoint& z, const MultiIndex& gamma);

/**
 * Metric tensor of the domain at z (real symmetric positive definite):
 * entries, inverse, and determinant det = (2 rho(z))^{-(n+1)}.
 */
struct BergmanMatrix {
  int n = 0;
  std::vector<double> b;     // row-major n x n
  std::vector<double> binv;  // row-major n x n
  double det = 0.0;

  double at(int i, int j) const { return b[static_cast<std::size_t>(i * n + j)]; }
  double inv_at(int i, int j) const { return binv[static_cast<std::size_t>(i * n + j)]; }
};
BergmanMatrix bergman_matrix(const TubePoint& z);

/**
 * Invariant gradient length: |grad f(z)|^2 =
 *   4 rho(z) ( 2 rho(z) |L_n f|^2 + sum_{j<n} |L_j f|^2 ).
 */
double invariant_gradient_norm(const FunctionHandle& f, const TubePoint& z);

/** Same quantity through the inverse metric tensor, 2 sum b^{jk} conj(d_j f) d_k f. */
double invariant_gradient_norm_matrix(const FunctionHandle& f, const TubePoint& z);

/**
 * Invariant Laplacian of a C^2 function:
 *   8 rho(z) { sum_{j<n} d2/dz_j dbar_j + sum_{j<n} 2 y_j (d2/dz_n dbar_j +
 *   d2/dz_j dbar_n) + 2 (y_n + |y'|^2) d2/dz_n dbar_n } g.
 * Mixed Wirtinger second derivatives use Richardson-extrapolated central
 * differences with base step h = max(1e-6, 1e-3 min(rho(z), 1)); throws
 * StepTooSmall when the stencil would leave the domain. Annihilates
 * holomorphic functions.
 */
cplx invariant_laplacian(const Evaluator& g, const TubePoint& z);

/**
 * Mixed Wirtinger second derivative d^2 g / dz_i dconj(z_j) by
 * Richardson-extrapolated central differences.
 */
cplx mixed_wirtinger(const Evaluator& g, const TubePoint& z, int i, int j);

using RealMap = std::function<std::vector<double>(const std::vector<double>&)>;

/**
 * Determinant of the numerical Jacobian of F: R^m -> R^m at x, by central
 * differences with per-coordinate step h*(1+|x_i|).
 */
double numerical_real_jacobian(const RealMap& F, const std::vector<double>& x, double h = 1e-6);

}  // namespace tubeb
