#include "tubeb/cayley.hpp"

#include <cmath>
#include <string>

namespace tubeb {

namespace {

cplx dot_bilinear(const std::vector<cplx>& a, const std::vector<cplx>& b, int count) {
  cplx s(0.0, 0.0);
  for (int k = 0; k < count; ++k) s += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
  return s;
}

cplx dot_hermitian(const std::vector<cplx>& a, const std::vector<cplx>& b, int count) {
  cplx s(0.0, 0.0);
  for (int k = 0; k < count; ++k)
    s += a[static_cast<std::size_t>(k)] * std::conj(b[static_cast<std::size_t>(k)]);
  return s;
}

}  // namespace

BallPoint::BallPoint(std::vector<cplx> coords, double tol) : xi(std::move(coords)) {
  if (norm_sq() >= 1.0 + tol) {
    throw DomainError("BallPoint: |xi|^2 = " + std::to_string(norm_sq()) + " >= 1");
  }
}

double BallPoint::norm_sq() const {
  double s = 0.0;
  for (const cplx& c : xi) s += std::norm(c);
  return s;
}

TubePoint cayley(const BallPoint& p) {
  const int n = p.n();
  const cplx one_plus = 1.0 + p[n - 1];
  std::vector<cplx> w(static_cast<std::size_t>(n));
  cplx sq(0.0, 0.0);
  for (int k = 0; k + 1 < n; ++k) {
    w[static_cast<std::size_t>(k)] = std::sqrt(2.0) * p[k] / one_plus;
    sq += p[k] * p[k];
  }
  w[static_cast<std::size_t>(n - 1)] =
      cplx(0.0, 1.0) * (1.0 - p[n - 1]) / one_plus - cplx(0.0, 1.0) * sq / (one_plus * one_plus);
  return TubePoint(std::move(w));
}

BallPoint cayley_inv(const TubePoint& w) {
  const int n = w.n();
  cplx sq(0.0, 0.0);
  for (int k = 0; k + 1 < n; ++k) sq += w[k] * w[k];
  const cplx i1(0.0, 1.0);
  const cplx den = i1 + w[n - 1] + 0.5 * i1 * sq;
  std::vector<cplx> xi(static_cast<std::size_t>(n));
  for (int k = 0; k + 1 < n; ++k) {
    xi[static_cast<std::size_t>(k)] = std::sqrt(2.0) * i1 * w[k] / den;
  }
  xi[static_cast<std::size_t>(n - 1)] = (i1 - w[n - 1] - 0.5 * i1 * sq) / den;
  return BallPoint(std::move(xi));
}

double cayley_jacobian(const BallPoint& p) {
  const int n = p.n();
  return std::pow(2.0, n + 1) / std::pow(std::norm(1.0 + p[n - 1]), n + 1);
}

double cayley_jacobian_inverse(const TubePoint& z) {
  const int n = z.n();
  const cplx r = rho(z, base_point(n));
  return 1.0 / (std::pow(2.0, n + 1) * std::pow(std::norm(r), n + 1));
}

double rho_of_cayley(const BallPoint& p) {
  const int n = p.n();
  return (1.0 - p.norm_sq()) / std::norm(1.0 + p[n - 1]);
}

BallPoint ball_automorphism(const BallPoint& a, const BallPoint& w) {
  const int n = a.n();
  const double na2 = a.norm_sq();
  std::vector<cplx> out(static_cast<std::size_t>(n));
  if (na2 == 0.0) {
    for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = -w[k];
    return BallPoint(std::move(out));
  }
  const cplx ip = dot_hermitian(w.xi, a.xi, n);  // <w, a>
  const double s = std::sqrt(1.0 - na2);
  const cplx proj = ip / na2;
  const cplx den = 1.0 - ip;
  for (int k = 0; k < n; ++k) {
    const cplx pw = proj * a[k];
    const cplx qw = w[k] - pw;
    out[static_cast<std::size_t>(k)] = (a[k] - pw - s * qw) / den;
  }
  return BallPoint(std::move(out));
}

TubePoint base_translation(const TubePoint& z, const TubePoint& u) {
  const int n = z.n();
  std::vector<cplx> out(static_cast<std::size_t>(n));
  cplx cross(0.0, 0.0);   // u' . conj(z') and u' . z'
  cplx cross_conj(0.0, 0.0);
  double abs2 = 0.0;
  cplx zsq(0.0, 0.0), zbar_sq(0.0, 0.0);
  for (int k = 0; k + 1 < n; ++k) {
    out[static_cast<std::size_t>(k)] = u[k] - z[k];
    cross_conj += u[k] * std::conj(z[k]);
    cross += u[k] * z[k];
    abs2 += std::norm(z[k]);
    zsq += z[k] * z[k];
    zbar_sq += std::conj(z[k]) * std::conj(z[k]);
  }
  const cplx i1(0.0, 1.0);
  out[static_cast<std::size_t>(n - 1)] = u[n - 1] - z[n - 1].real() - i1 * cross_conj +
                                         i1 * cross + 0.5 * i1 * abs2 + 0.25 * i1 * zbar_sq -
                                         0.75 * i1 * zsq;
  return TubePoint(std::move(out));
}

TubePoint SigmaMap::operator()(const TubePoint& u) const {
  return dilate(scale, base_translation(center, u));
}

double SigmaMap::complex_jacobian() const {
  return std::pow(scale, center.n() + 1);
}

SigmaMap sigma(const TubePoint& z) {
  require_interior(z, "sigma");
  return SigmaMap{z, 1.0 / std::sqrt(rho(z))};
}

TubePoint TauMap::operator()(const TubePoint& u) const {
  return cayley(ball_automorphism(a, cayley_inv(u)));
}

TauMap tau(const TubePoint& z) {
  require_interior(z, "tau");
  return TauMap{cayley_inv(z)};
}

double beta_ball(const BallPoint& xi, const BallPoint& eta) {
  const BallPoint moved = ball_automorphism(xi, eta);
  const double m2 = moved.norm_sq();
  if (m2 <= 0.0) return 0.0;
  const double m = std::sqrt(m2);
  // atanh(m) through 1 - m^2 for accuracy when m is close to 1:
  // 1 - m^2 = (1 - |xi|^2)(1 - |eta|^2) / |1 - <eta, xi>|^2 computed directly.
  const cplx ip = [&] {
    cplx s(0.0, 0.0);
    for (int k = 0; k < eta.n(); ++k) s += eta[k] * std::conj(xi[k]);
    return s;
  }();
  const double one_minus =
      (1.0 - xi.norm_sq()) * (1.0 - eta.norm_sq()) / std::norm(1.0 - ip);
  return 0.5 * std::log((1.0 + m) * (1.0 + m) / one_minus);
}

double beta(const TubePoint& z, const TubePoint& w) {
  return beta_ball(cayley_inv(z), cayley_inv(w));
}

}  // namespace tubeb
