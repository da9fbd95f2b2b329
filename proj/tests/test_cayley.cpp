#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "tubeb/cayley.hpp"
#include "tubeb/domain.hpp"
#include "tubeb/errors.hpp"
#include "tubeb/rng.hpp"

using namespace tubeb;

namespace {

BallPoint random_ball(int n, std::uint64_t seed, std::uint64_t index, double max_rad = 0.9) {
  SampleStream rng(seed, index);
  std::vector<cplx> xi(static_cast<std::size_t>(n));
  double norm2 = 0.0;
  for (auto& c : xi) {
    c = cplx(rng.normal(), rng.normal());
    norm2 += std::norm(c);
  }
  const double rad = max_rad * std::pow(rng.u01(), 1.0 / (2.0 * n));
  const double scale = rad / std::sqrt(norm2);
  for (auto& c : xi) c *= scale;
  return BallPoint(std::move(xi));
}

double dist(const TubePoint& a, const TubePoint& b) {
  double m = 0.0;
  for (int k = 0; k < a.n(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double dist(const BallPoint& a, const BallPoint& b) {
  double m = 0.0;
  for (int k = 0; k < a.n(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace

TEST_CASE("ball point construction rejects clearly exterior points") {
  CHECK_NOTHROW(BallPoint({cplx(0.6, 0.0), cplx(0.0, 0.5)}));
  CHECK_THROWS_AS(BallPoint({cplx(1.1, 0.0)}), DomainError);
  CHECK_THROWS_AS(BallPoint({cplx(0.8, 0.0), cplx(0.0, 0.7)}), DomainError);
  // Boundary values within the roundoff slack are admitted; the interior
  // invariant is enforced where it matters, on the tube side.
  CHECK_NOTHROW(BallPoint({cplx(1.0, 0.0)}));
}

TEST_CASE("the origin maps to the base point") {
  const TubePoint z = cayley(BallPoint({cplx(0, 0), cplx(0, 0), cplx(0, 0)}));
  CHECK(dist(z, base_point(3)) <= 1e-15);
}

TEST_CASE("forward map matches a frozen reference point at n=2") {
  // Frozen from an independent numpy evaluation of the component formulas.
  const BallPoint xi({cplx(0.2, 0.1), cplx(-0.3, 0.25)});
  const TubePoint z = cayley(xi);
  CHECK(z[0].real() == doctest::Approx(0.42234432179468001).epsilon(1e-14));
  CHECK(z[0].imag() == doctest::Approx(0.051193251126627877).epsilon(1e-14));
  CHECK(z[1].real() == doctest::Approx(0.92659855449315121).epsilon(1e-14));
  CHECK(z[1].imag() == doctest::Approx(1.4460596629880633).epsilon(1e-14));
  CHECK(cayley_jacobian(xi) == doctest::Approx(47.434370333284853).epsilon(1e-13));
}

TEST_CASE("round trips in both directions") {
  for (int n : {1, 2, 4}) {
    for (std::uint64_t k = 0; k < 200; ++k) {
      const BallPoint xi = random_ball(n, 5, k, 0.95);
      const TubePoint z = cayley(xi);
      CHECK(contains(z));
      CHECK(dist(cayley_inv(z), xi) <= 1e-11);
      CHECK(dist(cayley(cayley_inv(z)), z) <= 1e-11 * (1.0 + dist(z, base_point(n))));
    }
  }
}

TEST_CASE("boundary distance through the ball") {
  for (std::uint64_t k = 0; k < 100; ++k) {
    const BallPoint xi = random_ball(3, 7, k, 0.97);
    const double direct = rho(cayley(xi));
    const double via_ball = rho_of_cayley(xi);
    const double closed = (1.0 - xi.norm_sq()) / std::norm(1.0 + xi[2]);
    CHECK(via_ball == doctest::Approx(closed).epsilon(1e-12));
    CHECK(direct == doctest::Approx(closed).epsilon(1e-10));
  }
}

TEST_CASE("forward and inverse Jacobians are reciprocal at matched points") {
  for (int n : {1, 3}) {
    for (std::uint64_t k = 0; k < 100; ++k) {
      const BallPoint xi = random_ball(n, 9, k);
      const TubePoint z = cayley(xi);
      CHECK(cayley_jacobian(xi) * cayley_jacobian_inverse(z) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("ball involution: special values and self-inverse") {
  const int n = 2;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const BallPoint a = random_ball(n, 13, 2 * k, 0.85);
    const BallPoint w = random_ball(n, 13, 2 * k + 1, 0.95);

    CHECK(ball_automorphism(a, a).norm_sq() <= 1e-24);
    CHECK(dist(ball_automorphism(a, BallPoint({cplx(0, 0), cplx(0, 0)})), a) <= 1e-13);

    const BallPoint once = ball_automorphism(a, w);
    CHECK(once.norm_sq() < 1.0);
    CHECK(dist(ball_automorphism(a, once), w) <= 1e-11);
  }
}

TEST_CASE("affine normalization translates z to its vertical representative") {
  const int n = 3;
  for (std::uint64_t k = 0; k < 100; ++k) {
    SampleStream rng(17, k);
    std::vector<cplx> coords(n);
    double y2 = 0.0;
    for (int j = 0; j + 1 < n; ++j) {
      const double yj = rng.normal();
      coords[static_cast<std::size_t>(j)] = cplx(rng.normal(), yj);
      y2 += yj * yj;
    }
    coords[static_cast<std::size_t>(n - 1)] = cplx(rng.normal(), y2 + 0.1 + rng.u01());
    const TubePoint z(coords);

    const TubePoint image = base_translation(z, z);
    for (int j = 0; j + 1 < n; ++j) CHECK(std::abs(image[j]) <= 1e-13);
    CHECK(std::abs(image.last() - cplx(0.0, rho(z))) <= 1e-13);

    // Pairing preservation.
    const TubePoint u = cayley(random_ball(n, 19, 2 * k));
    const TubePoint v = cayley(random_ball(n, 19, 2 * k + 1));
    const cplx before = rho(u, v);
    const cplx after = rho(base_translation(z, u), base_translation(z, v));
    CHECK(std::abs(after - before) <= 1e-12 * std::abs(before));
  }
}

TEST_CASE("normalizing map sends z to the base point and rescales the pairing") {
  const int n = 2;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const TubePoint z = cayley(random_ball(n, 29, 3 * k));
    const SigmaMap s = sigma(z);

    CHECK(dist(s(z), base_point(n)) <= 1e-12);
    CHECK(s.complex_jacobian() ==
          doctest::Approx(std::pow(rho(z), -0.5 * (n + 1))).epsilon(1e-12));

    const TubePoint u = cayley(random_ball(n, 29, 3 * k + 1));
    const TubePoint v = cayley(random_ball(n, 29, 3 * k + 2));
    const cplx expected = rho(u, v) / rho(z);
    CHECK(std::abs(rho(s(u), s(v)) - expected) <= 1e-12 * std::abs(expected));
  }
}

TEST_CASE("point symmetry is an involution fixing nothing but the metric") {
  const int n = 2;
  for (std::uint64_t k = 0; k < 50; ++k) {
    const TubePoint z = cayley(random_ball(n, 31, 2 * k, 0.8));
    const TubePoint u = cayley(random_ball(n, 31, 2 * k + 1, 0.9));
    const TauMap t = tau(z);
    CHECK(dist(t(z), base_point(n)) <= 1e-11);
    CHECK(dist(t(t(u)), u) <= 1e-9 * (1.0 + dist(u, base_point(n))));
  }
}

TEST_CASE("distance: axioms on random points") {
  const int n = 3;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const TubePoint z = cayley(random_ball(n, 41, 2 * k));
    const TubePoint w = cayley(random_ball(n, 41, 2 * k + 1));
    CHECK(beta(z, z) <= 1e-12);
    CHECK(beta(z, w) == doctest::Approx(beta(w, z)).epsilon(1e-10));
    CHECK(beta(z, w) >= 0.0);
  }
}

TEST_CASE("distance against the pairing-only closed form") {
  // atanh sqrt(1 - rho(z) rho(w) / |rho(z,w)|^2): an independent route that
  // never touches the ball model.
  for (int n : {1, 2}) {
    for (std::uint64_t k = 0; k < 100; ++k) {
      const TubePoint z = cayley(random_ball(n, 43, 2 * k, 0.85));
      const TubePoint w = cayley(random_ball(n, 43, 2 * k + 1, 0.85));
      const double q = rho(z) * rho(w) / std::norm(rho(z, w));
      const double closed = std::atanh(std::sqrt(std::max(0.0, 1.0 - q)));
      CHECK(beta(z, w) == doctest::Approx(closed).epsilon(1e-9));
    }
  }
}

TEST_CASE("distance: vertical closed values and the ball special case") {
  for (double y : {0.25, 3.0, 10.0}) {
    const TubePoint zy({cplx(0.0, y)});
    CHECK(beta(base_point(1), zy) ==
          doctest::Approx(0.5 * std::abs(std::log(y))).epsilon(1e-12));
  }
  for (double t : {0.1, 0.5, 0.9}) {
    const BallPoint origin({cplx(0, 0), cplx(0, 0)});
    const BallPoint e1t({cplx(t, 0.0), cplx(0, 0)});
    CHECK(beta_ball(origin, e1t) == doctest::Approx(std::atanh(t)).epsilon(1e-12));
  }
}
