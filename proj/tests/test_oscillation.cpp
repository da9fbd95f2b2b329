#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "tubeb/cayley.hpp"
#include "tubeb/domain.hpp"
#include "tubeb/errors.hpp"
#include "tubeb/functions.hpp"
#include "tubeb/oscillation.hpp"
#include "tubeb/quadrature.hpp"

using namespace tubeb;

namespace {

OscillationParams osc_params(double r = 1.0, double p = 2.0) {
  OscillationParams op;
  op.r = r;
  op.p = p;
  return op;
}

QuadratureSpec small_spec(long samples = 2000) {
  QuadratureSpec spec;
  spec.samples = samples;
  return spec;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(osc_params().validate());
  CHECK_THROWS_AS(osc_params(0.0).validate(), ConfigError);
  CHECK_THROWS_AS(osc_params(1.0, 0.5).validate(), ConfigError);
}

TEST_CASE("ball mean of a constant is exactly that constant") {
  DomainConfig cfg;
  cfg.n = 2;
  const FunctionHandle one = make_bounded_symbol(SymbolKind::constant, cfg);
  const IntegralResult m =
      ball_mean(one, base_point(2), osc_params(), cfg, small_spec());
  CHECK(m.value.real() == 1.0);
  CHECK(m.value.imag() == 0.0);
}

TEST_CASE("oscillation of a constant vanishes with zero spread") {
  DomainConfig cfg;
  cfg.n = 1;
  const FunctionHandle one = make_bounded_symbol(SymbolKind::constant, cfg);
  const OscStat mo = mean_oscillation(one, base_point(1), osc_params(), cfg, small_spec());
  CHECK(mo.value == 0.0);
  CHECK(mo.std_error == 0.0);

  const std::vector<TubePoint> grid = make_grid(1, 6, 2);
  OscillationParams op = osc_params();
  op.grid = grid;
  CHECK(bmo_seminorm(one, op, cfg, small_spec()) == 0.0);
}

TEST_CASE("the ball mean is the best p=2 center") {
  DomainConfig cfg;
  cfg.n = 1;
  const FunctionHandle st = make_bounded_symbol(SymbolKind::smoothstep, cfg);
  const OscillationParams op = osc_params();
  const QuadratureSpec spec = small_spec(8000);

  for (double y : {1.0, 3.0}) {
    const TubePoint z({cplx(0.0, y)});
    const OscStat centered_at_mean = mean_oscillation(st, z, op, cfg, spec);
    const cplx off_center = st(z) + cplx(0.25, 0.0);
    const OscStat shifted = mean_oscillation_centered(st, z, off_center, op, cfg, spec);
    CHECK(centered_at_mean.value <=
          shifted.value + 3.0 * (centered_at_mean.std_error + shifted.std_error) + 1e-12);
  }
}

TEST_CASE("sampled sup oscillation grows with the sample prefix") {
  DomainConfig cfg;
  cfg.n = 2;
  const FunctionHandle ph = make_bounded_symbol(SymbolKind::phase, cfg);
  const TubePoint z = base_point(2);
  const double s50 = oscillation_sup(ph, z, 0.8, 50, 31);
  const double s200 = oscillation_sup(ph, z, 0.8, 200, 31);
  CHECK(s50 >= 0.0);
  CHECK(s200 >= s50);  // same stream prefix, larger pool
  CHECK(s200 <= 2.0 + 1e-12);  // |f| = 1 caps the spread at 2

  CHECK_THROWS_AS(oscillation_sup(ph, z, -0.5, 50, 31), ConfigError);
}

TEST_CASE("gradient seminorm of the last coordinate has a closed grid value") {
  FunctionHandle zn;
  zn.holomorphic = true;
  zn.eval = [](const TubePoint& z) { return z.last(); };

  const std::vector<TubePoint> grid = make_grid(1, 25, 3);
  double max_rho = 0.0;
  for (const TubePoint& z : grid) max_rho = std::max(max_rho, rho(z));
  // |grad z_n| = sqrt(8) rho(z) in dimension one.
  CHECK(bloch_seminorm(zn, grid) ==
        doctest::Approx(std::sqrt(8.0) * max_rho).epsilon(1e-9));

  CHECK_THROWS_AS(bloch_seminorm(zn, {}), ConfigError);
}

TEST_CASE("gradient seminorm of the anchored power at the base point") {
  DomainConfig cfg;
  cfg.n = 2;
  const FunctionHandle f = make_rho_power(base_point(2), 1.0, cfg);
  const std::vector<TubePoint> only_base{base_point(2)};
  CHECK(bloch_seminorm(f, only_base) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("interior grid: determinism, membership, coverage") {
  const int n = 2;
  const std::vector<TubePoint> g1 = make_grid(n, 40, 9);
  const std::vector<TubePoint> g2 = make_grid(n, 40, 9);
  REQUIRE(static_cast<int>(g1.size()) == 40);

  for (std::size_t k = 0; k < g1.size(); ++k) {
    CHECK(contains(g1[k]));
    for (int j = 0; j < n; ++j) CHECK(g1[k][j] == g2[k][j]);
  }

  // First entry is the base point.
  CHECK(g1[0][0] == cplx(0.0, 0.0));
  CHECK(g1[0][1] == cplx(0.0, 1.0));

  double lo = 1e300;
  double hi = 0.0;
  for (const TubePoint& z : g1) {
    lo = std::min(lo, rho(z));
    hi = std::max(hi, rho(z));
  }
  CHECK(lo <= 0.011);
  CHECK(hi >= 99.0);

  const std::vector<TubePoint> other = make_grid(n, 40, 10);
  bool differs = false;
  for (std::size_t k = 0; k < g1.size() && !differs; ++k) {
    for (int j = 0; j < n; ++j) {
      if (g1[k][j] != other[k][j]) {
        differs = true;
        break;
      }
    }
  }
  CHECK(differs);
}

TEST_CASE("two-part splitting recombines exactly") {
  DomainConfig cfg;
  cfg.n = 2;
  const FunctionHandle ph = make_bounded_symbol(SymbolKind::phase, cfg);
  const auto [f1, f2] = bmo_decompose(ph, osc_params(), cfg, small_spec());

  const std::vector<TubePoint> grid = make_grid(2, 12, 17);
  for (const TubePoint& z : grid) {
    const cplx whole = ph(z);
    const cplx sum = f1(z) + f2(z);
    CHECK(std::abs(sum - whole) <= 1e-14 * (1.0 + std::abs(whole)));
  }
}

TEST_CASE("boundary trend report covers the grid with finite statistics") {
  DomainConfig cfg;
  cfg.n = 1;
  const FunctionHandle st = make_bounded_symbol(SymbolKind::smoothstep, cfg);
  OscillationParams op = osc_params();
  op.grid = make_grid(1, 8, 21);
  const std::vector<TrendPoint> trend = vmo_trend(st, op, cfg, small_spec());
  REQUIRE(trend.size() == op.grid.size());
  for (const TrendPoint& t : trend) {
    CHECK(t.rho_z > 0.0);
    CHECK(t.abs_z >= 0.0);
    CHECK(t.mo >= 0.0);
    CHECK(std::isfinite(t.mo));
  }
}
