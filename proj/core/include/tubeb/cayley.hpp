#pragma once

#include <vector>

#include "tubeb/domain.hpp"

namespace tubeb {

/** Point of the unit ball B_n of C^n; |xi| < 1 enforced at construction. */
struct BallPoint {
  std::vector<cplx> xi;

  BallPoint() = default;
  explicit BallPoint(std::vector<cplx> coords, double tol = 1e-12);

  int n() const { return static_cast<int>(xi.size()); }
  cplx& operator[](int k) { return xi[static_cast<std::size_t>(k)]; }
  const cplx& operator[](int k) const { return xi[static_cast<std::size_t>(k)]; }
  double norm_sq() const;
};

/**
 * Biholomorphism of the unit ball onto the tube:
 *
 *   Phi(xi) = ( sqrt(2) xi' / (1 + xi_n),
 *               i (1 - xi_n)/(1 + xi_n) - i (xi'.xi') / (1 + xi_n)^2 ),
 *
 * Phi(0) = (0', i). Its inverse is
 *
 *   Phi^{-1}(w) = ( sqrt(2) i w' / D, (i - w_n - (i/2) w'.w') / D ),
 *   D = i + w_n + (i/2) w'.w'.
 *
 * Key identities (a.b denotes the bilinear dot product):
 *   rho(Phi(xi), Phi(eta)) = (1 - <xi, eta>) / ((1 + xi_n)(1 + conj(eta_n))),
 *   1 - <Phi^{-1}(z), Phi^{-1}(w)> = rho(z, w) / (rho(z, i) rho(i, w)),
 *   1 + [Phi^{-1}(z)]_n = 1 / rho(z, i),
 *   rho(Phi(xi)) = (1 - |xi|^2) / |1 + xi_n|^2.
 */
TubePoint cayley(const BallPoint& xi);
BallPoint cayley_inv(const TubePoint& w);

/** Real Jacobian of Phi at xi: 2^{n+1} / |1 + xi_n|^{2(n+1)}. */
double cayley_jacobian(const BallPoint& xi);

/** Real Jacobian of Phi^{-1} at z: 1 / (2^{n+1} |rho(z, i)|^{2(n+1)}). */
double cayley_jacobian_inverse(const TubePoint& z);

/** rho(Phi(xi)) evaluated through the ball (stable near the boundary). */
double rho_of_cayley(const BallPoint& xi);

/** Standard ball involution phi_a (phi_0 = -id, phi_a(0) = a, phi_a(a) = 0). */
BallPoint ball_automorphism(const BallPoint& a, const BallPoint& w);

/**
 * Affine automorphism of the tube translating z to rho(z) * (0', i):
 * a shear in the y' direction followed by a real translation; it preserves
 * the two-point pairing, rho(h_z(u), h_z(v)) = rho(u, v), and has unit
 * complex Jacobian.
 */
TubePoint base_translation(const TubePoint& z, const TubePoint& u);

/** sigma_z = dilate(rho(z)^{-1/2}) o base_translation(z, .); sigma_z(z) = (0', i). */
struct SigmaMap {
  TubePoint center;
  double scale;  // rho(z)^{-1/2}

  TubePoint operator()(const TubePoint& u) const;
  /** Complex Jacobian determinant, constant in u: rho(z)^{-(n+1)/2}. */
  double complex_jacobian() const;
};
SigmaMap sigma(const TubePoint& z);

/** tau_z = Phi o phi_{Phi^{-1}(z)} o Phi^{-1}; involution with tau_z(z) = (0', i). */
struct TauMap {
  BallPoint a;

  TubePoint operator()(const TubePoint& u) const;
};
TauMap tau(const TubePoint& z);

/** Bergman-type distance transported from the ball: atanh |phi_xi(eta)|. */
double beta(const TubePoint& z, const TubePoint& w);
double beta_ball(const BallPoint& xi, const BallPoint& eta);

}  // namespace tubeb
