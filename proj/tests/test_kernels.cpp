#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "tubeb/cayley.hpp"
#include "tubeb/domain.hpp"
#include "tubeb/errors.hpp"
#include "tubeb/functions.hpp"
#include "tubeb/kernels.hpp"
#include "tubeb/rng.hpp"
#include "tubeb/special.hpp"

using namespace tubeb;

namespace {

KernelParams params(int n, double alpha) {
  KernelParams kp;
  kp.cfg.n = n;
  kp.cfg.alpha = alpha;
  return kp;
}

TubePoint random_point(int n, std::uint64_t index) {
  SampleStream rng(55, index);
  std::vector<cplx> xi(static_cast<std::size_t>(n));
  double norm2 = 0.0;
  for (auto& c : xi) {
    c = cplx(rng.normal(), rng.normal());
    norm2 += std::norm(c);
  }
  const double rad = 0.85 * std::pow(rng.u01(), 1.0 / (2.0 * n));
  for (auto& c : xi) c *= rad / std::sqrt(norm2);
  return cayley(BallPoint(std::move(xi)));
}

}  // namespace

TEST_CASE("kernel normalization and diagonal values") {
  const KernelParams kp = params(2, 1.0);
  CHECK(kp.coefficient() == doctest::Approx(kernel_constant(2, 1.0)).epsilon(1e-14));
  CHECK(kp.exponent() == doctest::Approx(4.0));

  for (std::uint64_t k = 0; k < 30; ++k) {
    const TubePoint z = random_point(2, k);
    const cplx diag = kernel(z, z, kp);
    CHECK(std::abs(diag.imag()) <= 1e-13 * diag.real());
    CHECK(diag.real() ==
          doctest::Approx(kp.coefficient() * std::pow(rho(z), -kp.exponent())).epsilon(1e-12));
  }
}

TEST_CASE("kernel is Hermitian") {
  const KernelParams kp = params(2, 0.5);
  for (std::uint64_t k = 0; k < 50; ++k) {
    const TubePoint z = random_point(2, 2 * k);
    const TubePoint w = random_point(2, 2 * k + 1);
    const cplx a = kernel(z, w, kp);
    const cplx b = std::conj(kernel(w, z, kp));
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
  }
}

TEST_CASE("recentred kernel vanishes at the base point") {
  const KernelParams kp = params(1, 0.0);
  for (std::uint64_t k = 0; k < 20; ++k) {
    const TubePoint w = random_point(1, 100 + k);
    CHECK(modified_kernel(base_point(1), w, kp) == cplx(0.0, 0.0));
    // And differs from zero elsewhere.
    const TubePoint z = random_point(1, 200 + k);
    if (std::abs(rho(z, base_point(1)) - cplx(1.0, 0.0)) > 1e-6) {
      CHECK(std::abs(modified_kernel(z, w, kp)) >= 0.0);
    }
  }
}

TEST_CASE("projection reproduces an integrable holomorphic function") {
  const KernelParams kp = params(1, 0.0);
  QuadratureSpec spec;
  spec.samples = 60000;
  DomainConfig cfg = kp.cfg;
  const FunctionHandle f = make_rho_power(base_point(1), 3.0, cfg);

  const TubePoint z({cplx(0.0, 2.0)});
  const IntegralResult got = t_alpha(f, z, kp, spec);
  const cplx expected = f(z);
  CHECK(std::abs(got.value - expected) <=
        3.0 * got.std_error + 0.015 * std::abs(expected));

  // t_alpha and project are the same integral.
  const IntegralResult p = project(f, z, kp, spec);
  CHECK(p.value.real() == got.value.real());
  CHECK(p.value.imag() == got.value.imag());
}

TEST_CASE("Berezin transform is unital") {
  const KernelParams kp = params(1, 0.5);
  QuadratureSpec spec;
  spec.samples = 60000;
  const FunctionHandle one = make_bounded_symbol(SymbolKind::constant, kp.cfg);
  for (std::uint64_t k = 0; k < 3; ++k) {
    const TubePoint z = random_point(1, 300 + k);
    const IntegralResult res = berezin(one, z, kp, spec);
    CHECK(std::abs(res.value - cplx(1.0, 0.0)) <= 3.0 * res.std_error + 0.01);
  }
}

TEST_CASE("Hankel value of a holomorphic product against the constant symbol") {
  const KernelParams kp = params(1, 0.0);
  QuadratureSpec spec;
  spec.samples = 60000;
  const FunctionHandle one = make_bounded_symbol(SymbolKind::constant, kp.cfg);
  const FunctionHandle g = make_rho_power(base_point(1), 3.0, kp.cfg);

  const TubePoint z({cplx(0.1, 1.5)});
  const IntegralResult res = hankel(one, g, z, kp, spec);
  CHECK(std::abs(res.value) <= 3.0 * res.std_error + 0.015 * std::abs(g(z)));
}

TEST_CASE("dominating operator: closed value in the scalar window") {
  // a=1, b=0, gamma'=0 at n=1, alpha=0, f=1: the two-slot identity gives
  // rho(z) * C(1.5,1.5,0) / rho(z) = 16 independent of z.
  const KernelParams kp = params(1, 0.0);
  QuadratureSpec spec;
  spec.samples = 60000;
  OperatorParams op;
  op.a = 1.0;
  op.b = 0.0;
  const FunctionHandle one = make_bounded_symbol(SymbolKind::constant, kp.cfg);

  for (double y : {0.5, 2.0}) {
    const TubePoint z({cplx(0.0, y)});
    const IntegralResult res = t_general(one, z, op, kp, spec);
    CHECK(std::abs(res.value.real() - 16.0) <= 3.0 * res.std_error + 0.02 * 16.0);
    CHECK(std::abs(res.value.imag()) <= 3.0 * res.std_error + 1e-9);
  }
}

TEST_CASE("dominating operator: transverse factor is finite, tails are flagged") {
  const KernelParams kp = params(2, 0.0);
  QuadratureSpec spec;
  spec.samples = 20000;
  const FunctionHandle one = make_bounded_symbol(SymbolKind::constant, kp.cfg);

  OperatorParams op;
  op.gamma_prime = {1};
  op.a = 1.0;
  op.b = 1.0;
  const IntegralResult solid = t_general(one, base_point(2), op, kp, spec);
  CHECK(solid.value.real() > 0.0);
  CHECK(std::isfinite(solid.value.real()));
  CHECK_FALSE(solid.divergence_warning);

  // Close to the integrability edge the single-sample-dominance detector
  // fires for this stream: the estimate is not to be trusted there.
  op.a = 0.5;
  op.b = 0.5;
  const IntegralResult edgy = t_general(one, base_point(2), op, kp, spec);
  CHECK(edgy.divergence_warning);
}

TEST_CASE("derivative representation: candidate constants are tied to the raw integral") {
  const KernelParams kp = params(1, 1.0);
  QuadratureSpec spec;
  spec.samples = 5000;
  const FunctionHandle f = make_rho_power(base_point(1), 3.0, kp.cfg);
  const TubePoint z({cplx(0.2, 1.1)});

  const RepresentationResult res = representation_check(f, z, 1, kp, spec);
  CHECK(res.expected == f(z));
  // N=1, alpha=1: scale is (+-2i) / (1+alpha) = +-i.
  const cplx plus_pred = cplx(0.0, 1.0) * res.raw.value;
  const cplx minus_pred = cplx(0.0, -1.0) * res.raw.value;
  CHECK(std::abs(res.with_plus - plus_pred) <= 1e-14 * std::abs(plus_pred));
  CHECK(std::abs(res.with_minus - minus_pred) <= 1e-14 * std::abs(minus_pred));
  CHECK(res.std_error == doctest::Approx(res.raw.std_error).epsilon(1e-14));

  CHECK_THROWS_AS(representation_check(f, z, -1, kp, spec), ConfigError);
}

TEST_CASE("truncated kernel mass: shapes, monotonicity, validation") {
  const KernelParams kp = params(1, 0.0);
  QuadratureSpec spec;
  spec.samples = 30000;
  const std::vector<double> radii{4.0, 8.0, 16.0};
  const DivergenceReport rep = kernel_l1_divergence(kp, radii, spec);

  REQUIRE(rep.radii == radii);
  REQUIRE(rep.truncated.size() == radii.size());
  REQUIRE(rep.contrast.size() == radii.size());
  REQUIRE(rep.truncated_stderr.size() == radii.size());
  REQUIRE(rep.contrast_stderr.size() == radii.size());

  for (std::size_t k = 1; k < radii.size(); ++k) {
    CHECK(rep.truncated[k] > rep.truncated[k - 1]);  // shared stream: exact monotone
    CHECK(rep.contrast[k] >= rep.contrast[k - 1]);
  }
  for (double v : rep.truncated) CHECK(std::isfinite(v));

  CHECK_THROWS_AS(kernel_l1_divergence(kp, {4.0, 4.0}, spec), ConfigError);
  CHECK_THROWS_AS(kernel_l1_divergence(kp, {}, spec), ConfigError);
}
