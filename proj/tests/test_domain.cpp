#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "tubeb/domain.hpp"
#include "tubeb/errors.hpp"
#include "tubeb/rng.hpp"

using namespace tubeb;

namespace {

// Random interior point: free x and y', then y_n = |y'|^2 + positive margin.
TubePoint random_interior(int n, std::uint64_t seed, std::uint64_t index) {
  SampleStream rng(seed, index);
  std::vector<cplx> z(static_cast<std::size_t>(n));
  double y2 = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    const double yk = rng.normal();
    z[static_cast<std::size_t>(k)] = cplx(rng.normal(), yk);
    y2 += yk * yk;
  }
  z[static_cast<std::size_t>(n - 1)] = cplx(rng.normal(), y2 + 0.05 + 3.0 * rng.u01());
  return TubePoint(std::move(z));
}

}  // namespace

TEST_CASE("base point sits at (0', i)") {
  const TubePoint b = base_point(3);
  CHECK(b.n() == 3);
  CHECK(b[0] == cplx(0.0, 0.0));
  CHECK(b[1] == cplx(0.0, 0.0));
  CHECK(b.last() == cplx(0.0, 1.0));
  CHECK(contains(b));
  CHECK(rho(b) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pairing matches a frozen reference value at n=2") {
  // Frozen from an independent numpy evaluation of the defining formula.
  const TubePoint z({cplx(0.3, 0.7), cplx(0.1, 1.2)});
  const TubePoint w({cplx(-0.2, 0.4), cplx(0.5, 0.9)});
  const cplx r = rho(z, w);
  CHECK(r.real() == doctest::Approx(0.81).epsilon(1e-14));
  CHECK(r.imag() == doctest::Approx(0.475).epsilon(1e-14));
  CHECK(rho(z) == doctest::Approx(0.71).epsilon(1e-14));
}

TEST_CASE("pairing is Hermitian and diagonal-consistent") {
  for (int n : {1, 2, 4}) {
    for (std::uint64_t k = 0; k < 100; ++k) {
      const TubePoint z = random_interior(n, 11, 2 * k);
      const TubePoint w = random_interior(n, 11, 2 * k + 1);
      const cplx a = rho(z, w);
      const cplx b = std::conj(rho(w, z));
      CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));

      const cplx d = rho(z, z);
      CHECK(d.real() == doctest::Approx(rho(z)).epsilon(1e-12));
      CHECK(std::abs(d.imag()) <= 1e-12 * (1.0 + std::abs(d)));
    }
  }
}

TEST_CASE("interior pairs keep a positive real part") {
  long violations = 0;
  for (std::uint64_t k = 0; k < 2000; ++k) {
    const TubePoint z = random_interior(3, 23, 2 * k);
    const TubePoint w = random_interior(3, 23, 2 * k + 1);
    if (!(rho(z, w).real() > 0.0)) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("membership and the interior guard") {
  const TubePoint inside({cplx(0.0, 0.5), cplx(0.0, 0.5)});  // rho = 0.25
  CHECK(contains(inside));
  CHECK_NOTHROW(require_interior(inside, "test"));

  const TubePoint boundary({cplx(0.0, 1.0), cplx(0.0, 1.0)});  // y_n = |y'|^2
  CHECK_FALSE(contains(boundary));
  CHECK_THROWS_AS(require_interior(boundary, "test"), DomainError);

  const TubePoint outside({cplx(0.0, 2.0), cplx(0.0, 1.0)});
  CHECK_FALSE(contains(outside));
  CHECK_THROWS_AS(require_interior(outside, "test"), DomainError);
}

TEST_CASE("principal-branch power: value, multiplicativity, guard") {
  const cplx r(0.8, 0.45);
  const cplx direct = std::exp(cplx(-2.5, 0.0) * std::log(r));
  CHECK(std::abs(rho_pow(r, -2.5) - direct) <= 1e-14 * std::abs(direct));

  const cplx prod = rho_pow(r, 1.3) * rho_pow(r, -0.4);
  CHECK(std::abs(prod - rho_pow(r, 0.9)) <= 1e-13 * std::abs(prod));

  CHECK(rho_pow(r, 0.0) == cplx(1.0, 0.0));
  CHECK_THROWS_AS(rho_pow(cplx(-0.1, 0.5), 2.0), DomainError);
  CHECK_THROWS_AS(rho_pow(cplx(0.0, 1.0), 2.0), DomainError);
}

TEST_CASE("anisotropic dilation scales rho by t^2") {
  for (int n : {1, 3}) {
    for (std::uint64_t k = 0; k < 50; ++k) {
      const TubePoint u = random_interior(n, 37, 2 * k);
      const TubePoint v = random_interior(n, 37, 2 * k + 1);
      for (double t : {0.5, 2.0, 7.0}) {
        CHECK(rho(dilate(t, u)) == doctest::Approx(t * t * rho(u)).epsilon(1e-13));
        const cplx lhs = rho(dilate(t, u), dilate(t, v));
        const cplx rhs = t * t * rho(u, v);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));
      }
    }
  }
}

TEST_CASE("configuration validation") {
  DomainConfig good;
  good.n = 1;
  good.alpha = -0.5;
  CHECK_NOTHROW(good.validate());

  DomainConfig bad_n = good;
  bad_n.n = 0;
  CHECK_THROWS_AS(bad_n.validate(), ConfigError);

  DomainConfig bad_alpha = good;
  bad_alpha.alpha = -1.0;
  CHECK_THROWS_AS(bad_alpha.validate(), ConfigError);
}
