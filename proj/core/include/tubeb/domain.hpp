#pragma once

#include <complex>
#include <vector>

#include "tubeb/errors.hpp"

namespace tubeb {

using cplx = std::complex<double>;

/**
 * Tube domain over the parabolic base:
 *
 *   T = { z = x + iy in C^n : y_n > |y'|^2 },   y' = (y_1, ..., y_{n-1}).
 *
 * The pairing
 *
 *   rho(z, w) = ((z' - conj(w')) . (z' - conj(w')) - 2i (z_n - conj(w_n))) / 4
 *
 * uses the bilinear dot product a.a = sum a_k^2 (not the Hermitian norm).
 * On the diagonal rho(z, z) = y_n - |y'|^2 > 0 characterizes membership,
 * and Re rho(z, w) > 0 holds for every pair of interior points.
 */
struct DomainConfig {
  int n = 2;           // complex dimension, >= 1
  double alpha = 0.0;  // weight exponent in dV_alpha = rho(w)^alpha dV, > -1

  void validate() const {
    if (n < 1) throw ConfigError("DomainConfig: dimension n must be >= 1");
    if (!(alpha > -1.0)) throw ConfigError("DomainConfig: weight alpha must be > -1");
  }
};

struct TubePoint {
  std::vector<cplx> z;

  TubePoint() = default;
  explicit TubePoint(std::vector<cplx> coords) : z(std::move(coords)) {}

  int n() const { return static_cast<int>(z.size()); }
  cplx& operator[](int k) { return z[static_cast<std::size_t>(k)]; }
  const cplx& operator[](int k) const { return z[static_cast<std::size_t>(k)]; }
  cplx last() const { return z.back(); }
};

/** The base point (0', i). */
TubePoint base_point(int n);

/** Two-point pairing rho(z, w); Hermitian: rho(z, w) = conj(rho(w, z)). */
cplx rho(const TubePoint& z, const TubePoint& w);

/** Boundary distance function rho(z) = rho(z, z) = y_n - |y'|^2 (real). */
double rho(const TubePoint& z);

/** Membership test rho(z) > 0. */
bool contains(const TubePoint& z);

/** Throws DomainError unless z is interior. */
void require_interior(const TubePoint& z, const char* where);

/**
 * Principal-branch power rho^e for pairing values. Interior pairs satisfy
 * Re rho > 0, so the principal branch is continuous; the guard enforces it.
 */
cplx rho_pow(cplx rho_value, double exponent);

/** Anisotropic dilation delta_t(u) = (t u', t^2 u_n); rho scales by t^2. */
TubePoint dilate(double t, const TubePoint& u);

}  // namespace tubeb
