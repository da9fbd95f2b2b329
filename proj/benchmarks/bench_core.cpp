#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "tubeb/calculus.hpp"
#include "tubeb/cayley.hpp"
#include "tubeb/domain.hpp"
#include "tubeb/functions.hpp"
#include "tubeb/quadrature.hpp"

namespace {

using tubeb::cplx;

tubeb::TubePoint sample(int n) {
  std::vector<cplx> z(static_cast<std::size_t>(n));
  double y2 = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    z[static_cast<std::size_t>(k)] = cplx(0.2 + 0.1 * k, 0.3 - 0.05 * k);
    y2 += z[static_cast<std::size_t>(k)].imag() * z[static_cast<std::size_t>(k)].imag();
  }
  z[static_cast<std::size_t>(n - 1)] = cplx(0.4, y2 + 1.1);
  return tubeb::TubePoint(std::move(z));
}

void BM_pairing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tubeb::TubePoint z = sample(n);
  const tubeb::TubePoint w = tubeb::base_point(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tubeb::rho(z, w));
  }
}
BENCHMARK(BM_pairing)->Arg(1)->Arg(2)->Arg(4);

void BM_cayley_roundtrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tubeb::TubePoint z = sample(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tubeb::cayley(tubeb::cayley_inv(z)));
  }
}
BENCHMARK(BM_cayley_roundtrip)->Arg(1)->Arg(4);

void BM_metric_distance(benchmark::State& state) {
  const tubeb::TubePoint z = sample(2);
  const tubeb::TubePoint w = tubeb::base_point(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tubeb::beta(z, w));
  }
}
BENCHMARK(BM_metric_distance);

void BM_contour_derivative(benchmark::State& state) {
  tubeb::DomainConfig cfg;
  cfg.n = 2;
  tubeb::FunctionHandle f = tubeb::make_rho_power(tubeb::base_point(2), 2.0, cfg);
  f.exact_lop = nullptr;  // force the numeric path
  const tubeb::TubePoint z = sample(2);
  const tubeb::MultiIndex g = tubeb::MultiIndex::unit(2, 1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tubeb::lop(f, z, g));
  }
}
BENCHMARK(BM_contour_derivative);

void BM_invariant_laplacian(benchmark::State& state) {
  tubeb::DomainConfig cfg;
  cfg.n = 2;
  const tubeb::FunctionHandle f =
      tubeb::abs_squared(tubeb::make_rho_power(tubeb::base_point(2), 1.0, cfg));
  const tubeb::TubePoint z = sample(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tubeb::invariant_laplacian(f.eval, z));
  }
}
BENCHMARK(BM_invariant_laplacian);

void BM_tube_integral(benchmark::State& state) {
  tubeb::DomainConfig cfg;
  cfg.n = 1;
  tubeb::QuadratureSpec spec;
  spec.samples = state.range(0);
  const tubeb::TubePoint base = tubeb::base_point(1);
  const tubeb::TubeIntegrand f = [&](const tubeb::TubePoint& w) {
    return tubeb::rho_pow(tubeb::rho(base, w), -2.0) * tubeb::rho_pow(tubeb::rho(w, base), -2.0);
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(tubeb::integrate_tube(f, cfg, spec));
  }
  state.SetItemsProcessed(state.iterations() * spec.samples);
}
BENCHMARK(BM_tube_integral)->Arg(1024)->Arg(16384);

}  // namespace

BENCHMARK_MAIN();
