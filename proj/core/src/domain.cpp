#include "tubeb/domain.hpp"

#include <cmath>
#include <string>

namespace tubeb {

TubePoint base_point(int n) {
  std::vector<cplx> z(static_cast<std::size_t>(n), cplx(0.0, 0.0));
  z.back() = cplx(0.0, 1.0);
  return TubePoint(std::move(z));
}

cplx rho(const TubePoint& z, const TubePoint& w) {
  const int n = z.n();
  cplx s(0.0, 0.0);
  for (int k = 0; k + 1 < n; ++k) {
    const cplx d = z[k] - std::conj(w[k]);
    s += d * d;
  }
  s -= cplx(0.0, 2.0) * (z[n - 1] - std::conj(w[n - 1]));
  return 0.25 * s;
}

double rho(const TubePoint& z) {
  const int n = z.n();
  double s = z[n - 1].imag();
  for (int k = 0; k + 1 < n; ++k) {
    const double y = z[k].imag();
    s -= y * y;
  }
  return s;
}

bool contains(const TubePoint& z) { return rho(z) > 0.0; }

void require_interior(const TubePoint& z, const char* where) {
  if (!contains(z)) {
    throw DomainError(std::string(where) + ": point is not interior (rho(z) = " +
                      std::to_string(rho(z)) + ")");
  }
}

cplx rho_pow(cplx rho_value, double exponent) {
  if (!(rho_value.real() > 0.0)) {
    throw DomainError("rho_pow: Re rho <= 0, principal branch not certified");
  }
  return std::pow(rho_value, exponent);
}

TubePoint dilate(double t, const TubePoint& u) {
  TubePoint v = u;
  const int n = u.n();
  for (int k = 0; k + 1 < n; ++k) v[k] *= t;
  v[n - 1] *= t * t;
  return v;
}

}  // namespace tubeb
