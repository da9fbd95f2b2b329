#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "tubeb/calculus.hpp"
#include "tubeb/cayley.hpp"
#include "tubeb/domain.hpp"
#include "tubeb/errors.hpp"
#include "tubeb/functions.hpp"
#include "tubeb/rng.hpp"

using namespace tubeb;

namespace {

TubePoint benign_point(int n, std::uint64_t index) {
  // Small transverse part, rho(z) near 1: comfortable for finite differences.
  SampleStream rng(7, index);
  std::vector<cplx> z(static_cast<std::size_t>(n));
  double y2 = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    const double yk = 0.15 * (2.0 * rng.u01() - 1.0);
    z[static_cast<std::size_t>(k)] = cplx(0.3 * (2.0 * rng.u01() - 1.0), yk);
    y2 += yk * yk;
  }
  z[static_cast<std::size_t>(n - 1)] =
      cplx(0.4 * (2.0 * rng.u01() - 1.0), y2 + 0.6 + 1.2 * rng.u01());
  return TubePoint(std::move(z));
}

}  // namespace

TEST_CASE("multi-index bookkeeping") {
  const MultiIndex g = MultiIndex::unit(3, 1, 2);
  CHECK(g.n() == 3);
  CHECK(g.k == std::vector<int>{0, 2, 0});
  CHECK(g.order() == 2);
  CHECK(g.prime_order() == 2);
  CHECK(g.angular_weight() == doctest::Approx(1.0));
  CHECK(g.size_weight() == doctest::Approx(2.0));

  const MultiIndex last = MultiIndex::unit(3, 2, 3);
  CHECK(last.prime_order() == 0);
  CHECK(last.angular_weight() == doctest::Approx(3.0));
  CHECK(last.size_weight() == doctest::Approx(3.0));
}

TEST_CASE("contour derivative of polynomials is exact to roundoff") {
  const Evaluator sq = [](const TubePoint& z) { return z.last() * z.last(); };
  for (std::uint64_t k = 0; k < 10; ++k) {
    const TubePoint z = benign_point(2, k);
    const cplx d1 = holo_derivative(sq, z, MultiIndex::unit(2, 1, 1));
    CHECK(std::abs(d1 - 2.0 * z.last()) <= 1e-10 * (1.0 + std::abs(z.last())));
    const cplx d2 = holo_derivative(sq, z, MultiIndex::unit(2, 1, 2));
    CHECK(std::abs(d2 - cplx(2.0, 0.0)) <= 1e-10);
    const cplx d3 = holo_derivative(sq, z, MultiIndex::unit(2, 1, 3));
    CHECK(std::abs(d3) <= 1e-9);
  }
}

TEST_CASE("contour derivative handles mixed indices and entire functions") {
  const Evaluator f = [](const TubePoint& z) { return z[0] * z[0] * z[0] * z[1]; };
  const Evaluator e = [](const TubePoint& z) { return std::exp(cplx(0, 1) * z.last()); };
  for (std::uint64_t k = 0; k < 10; ++k) {
    const TubePoint z = benign_point(2, 20 + k);
    const cplx mixed = holo_derivative(f, z, MultiIndex({2, 1}));
    CHECK(std::abs(mixed - 6.0 * z[0]) <= 1e-9 * (1.0 + std::abs(z[0])));

    const cplx d2e = holo_derivative(e, z, MultiIndex::unit(2, 1, 2));
    const cplx expected = -std::exp(cplx(0, 1) * z.last());
    CHECK(std::abs(d2e - expected) <= 1e-9 * std::abs(expected));
  }
}

TEST_CASE("contour derivative validates inputs and guards the boundary") {
  const Evaluator f = [](const TubePoint& z) { return z.last(); };
  const TubePoint z = benign_point(2, 40);
  CHECK_THROWS_AS(holo_derivative(f, z, MultiIndex({1})), ConfigError);

  // Huge transverse imaginary part: no representable radius survives.
  const TubePoint squeezed({cplx(0.0, 1e8), cplx(0.0, 1e16 + 4.0)});
  CHECK(contains(squeezed));
  CHECK_THROWS_AS(holo_derivative(f, squeezed, MultiIndex::unit(2, 0, 1)),
                  ContourEscapesDomain);

  const Evaluator bad = [](const TubePoint&) {
    return cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  };
  CHECK_THROWS_AS(holo_derivative(bad, z, MultiIndex::unit(2, 1, 1)), NonFiniteError);
}

TEST_CASE("anisotropic derivative: mixed order against the closed form") {
  DomainConfig cfg;
  cfg.n = 2;
  const TubePoint u0 = base_point(2);
  const double m = 1.5;
  const FunctionHandle f = make_rho_power(u0, m, cfg);

  for (std::uint64_t k = 0; k < 10; ++k) {
    const TubePoint z = benign_point(2, 60 + k);
    // L^(1,1) = L_1 (L_2 f) = m (i/2) * (-(m+1)/2) conj(z_1) rho^{-m-2}.
    const cplx expected = m * cplx(0.0, 0.5) * (-(m + 1.0) / 2.0) * std::conj(z[0]) *
                          rho_pow(rho(z, u0), -m - 2.0);
    const cplx got = lop(f, z, MultiIndex({1, 1}));
    CHECK(std::abs(got - expected) <= 1e-7 * std::abs(expected));
  }
}

TEST_CASE("anisotropic derivative requires a holomorphic handle") {
  DomainConfig cfg;
  cfg.n = 1;
  const FunctionHandle f = conjugate(make_rho_power(base_point(1), 2.0, cfg));
  CHECK_THROWS_AS(lop(f, base_point(1), MultiIndex::unit(1, 0, 1)), ConfigError);
}

TEST_CASE("metric tensor: inverse, symmetry, determinant, positivity") {
  for (int n : {1, 2, 4}) {
    for (std::uint64_t k = 0; k < 20; ++k) {
      const TubePoint z = benign_point(n, 80 + k);
      const BergmanMatrix M = bergman_matrix(z);
      REQUIRE(M.n == n);

      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          CHECK(M.at(i, j) == doctest::Approx(M.at(j, i)).epsilon(1e-13));
          double dot = 0.0;
          for (int t = 0; t < n; ++t) dot += M.at(i, t) * M.inv_at(t, j);
          CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-11).scale(1.0));
        }
      }
      CHECK(M.det == doctest::Approx(std::pow(2.0 * rho(z), -(n + 1))).epsilon(1e-12));

      // Positive quadratic form on an arbitrary direction.
      SampleStream rng(91, k);
      double q = 0.0;
      std::vector<double> v(static_cast<std::size_t>(n));
      for (auto& c : v) c = rng.normal();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          q += v[static_cast<std::size_t>(i)] * M.at(i, j) * v[static_cast<std::size_t>(j)];
      CHECK(q > 0.0);
    }
  }
}

TEST_CASE("invariant gradient: direct sum formula equals the matrix route") {
  DomainConfig cfg;
  for (int n : {1, 2, 3}) {
    cfg.n = n;
    const FunctionHandle f = make_rho_power(base_point(n), 2.0, cfg);
    for (std::uint64_t k = 0; k < 15; ++k) {
      const TubePoint z = benign_point(n, 120 + k);
      const double a = invariant_gradient_norm(f, z);
      const double b = invariant_gradient_norm_matrix(f, z);
      CHECK(a == doctest::Approx(b).epsilon(1e-9));
      CHECK(a > 0.0);
    }
  }
}

TEST_CASE("invariant gradient of the last coordinate at n=1") {
  FunctionHandle zn;
  zn.holomorphic = true;
  zn.eval = [](const TubePoint& z) { return z.last(); };
  for (std::uint64_t k = 0; k < 10; ++k) {
    const TubePoint z = benign_point(1, 150 + k);
    // |L_n z_n| = 1, so the norm is sqrt(8) rho(z).
    CHECK(invariant_gradient_norm(zn, z) ==
          doctest::Approx(std::sqrt(8.0) * rho(z)).epsilon(1e-9));
  }
}

TEST_CASE("mixed Wirtinger derivatives on model functions") {
  const Evaluator mod_sq = [](const TubePoint& z) { return cplx(std::norm(z.last()), 0.0); };
  const Evaluator holo = [](const TubePoint& z) { return z.last() * z.last(); };
  const Evaluator constant = [](const TubePoint&) { return cplx(3.0, -1.0); };

  for (std::uint64_t k = 0; k < 10; ++k) {
    const TubePoint z = benign_point(2, 170 + k);
    CHECK(std::abs(mixed_wirtinger(mod_sq, z, 1, 1) - cplx(1.0, 0.0)) <= 1e-7);
    CHECK(std::abs(mixed_wirtinger(holo, z, 1, 1)) <= 1e-7);
    CHECK(std::abs(mixed_wirtinger(constant, z, 0, 1)) <= 1e-15);
  }
}

TEST_CASE("mixed Wirtinger step guard near the boundary") {
  const Evaluator g = [](const TubePoint& z) { return cplx(std::norm(z[0]), 0.0); };
  // rho = 1e-9 but y_1 = 10: any usable step walks out of the domain.
  const TubePoint z({cplx(0.0, 10.0), cplx(0.0, 100.0 + 1e-9)});
  CHECK(contains(z));
  CHECK_THROWS_AS(mixed_wirtinger(g, z, 0, 0), StepTooSmall);
}

TEST_CASE("invariant Laplacian annihilates holomorphic functions") {
  DomainConfig cfg;
  for (int n : {1, 2}) {
    cfg.n = n;
    const FunctionHandle f = make_rho_power(base_point(n), static_cast<double>(n + 1), cfg);
    for (std::uint64_t k = 0; k < 8; ++k) {
      const TubePoint z = benign_point(n, 190 + k);
      CHECK(std::abs(invariant_laplacian(f.eval, z)) <= 1e-6);
    }
  }
}

TEST_CASE("invariant Laplacian of |f|^2 doubles the squared gradient") {
  DomainConfig cfg;
  cfg.n = 2;
  const FunctionHandle f = make_rho_power(base_point(2), 1.0, cfg);
  const FunctionHandle f2 = abs_squared(f);
  for (std::uint64_t k = 0; k < 8; ++k) {
    const TubePoint z = benign_point(2, 210 + k);
    const double grad = invariant_gradient_norm(f, z);
    const double rhs = 2.0 * grad * grad;
    const cplx lap = invariant_laplacian(f2.eval, z);
    CHECK(std::abs(lap.imag()) <= 1e-6 * rhs);
    CHECK(lap.real() == doctest::Approx(rhs).epsilon(1e-4));
  }
}

TEST_CASE("numerical real Jacobian of a linear map") {
  const RealMap linear = [](const std::vector<double>& x) {
    return std::vector<double>{2.0 * x[0] + x[1], 3.0 * x[1]};
  };
  CHECK(numerical_real_jacobian(linear, {0.4, -1.2}) == doctest::Approx(6.0).epsilon(1e-8));

  const RealMap twist = [](const std::vector<double>& x) {
    return std::vector<double>{x[0] * std::cos(x[1]), x[0] * std::sin(x[1])};
  };
  // det = x0 at (2, 0.7).
  CHECK(numerical_real_jacobian(twist, {2.0, 0.7}) == doctest::Approx(2.0).epsilon(1e-7));
}
