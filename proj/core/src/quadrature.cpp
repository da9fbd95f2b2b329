#include "tubeb/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>
#include <vector>

#include "tubeb/rng.hpp"
#include "tubeb/special.hpp"

namespace tubeb {

void QuadratureSpec::validate() const {
  if (samples < 1) throw ConfigError("QuadratureSpec: samples must be positive");
  if (kappa && !(*kappa > -1.0)) throw ConfigError("QuadratureSpec: kappa must exceed -1");
  if (jobs < 1) throw ConfigError("QuadratureSpec: jobs must be positive");
}

namespace {

constexpr int kChunks = 32;  // fixed partition; also the radial strata when stratified

struct ChunkStats {
  cplx sum{0.0, 0.0};
  double sum_norm = 0.0;  // sum of |x|^2
  double sum_abs = 0.0;   // sum of |x|
  double max_abs = 0.0;
  long count = 0;
};

struct Accumulated {
  cplx value{0.0, 0.0};
  double std_error = 0.0;
  long samples_used = 0;
  bool divergence_warning = false;
};

/** Draw a unit direction in C^n from 2n gaussians; returns |g| scaling applied. */
void draw_direction(SampleStream& stream, std::vector<cplx>& dir) {
  double norm2 = 0.0;
  for (auto& c : dir) {
    const double a = stream.normal();
    const double b = stream.normal();
    c = cplx(a, b);
    norm2 += a * a + b * b;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : dir) c *= inv;
}

/**
 * Run the fixed-partition chunked reduction: `sample_value(k, stream)` must be
 * a pure function of (seed, k). Chunks may run on worker threads; combining
 * happens in chunk order, so the result is independent of `jobs`.
 */
template <typename SampleFn>
Accumulated reduce_samples(long total, int jobs, bool stratified, const SampleFn& sample_value) {
  std::vector<ChunkStats> stats(kChunks);
  const long per = total / kChunks;

  auto run_chunk = [&](int c) {
    ChunkStats& s = stats[static_cast<std::size_t>(c)];
    const long lo = per * c;
    const long hi = (c == kChunks - 1) ? total : per * (c + 1);
    for (long k = lo; k < hi; ++k) {
      const cplx x = sample_value(k);
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
        throw NonFiniteError("integrator: sample " + std::to_string(k) +
                             " evaluated non-finitely");
      }
      s.sum += x;
      const double a2 = std::norm(x);
      s.sum_norm += a2;
      const double a = std::sqrt(a2);
      s.sum_abs += a;
      if (a > s.max_abs) s.max_abs = a;
      ++s.count;
    }
  };

  if (jobs <= 1) {
    for (int c = 0; c < kChunks; ++c) run_chunk(c);
  } else {
    std::exception_ptr err;
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    std::mutex err_mu;
    const int workers = std::min(jobs, kChunks);
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (int c = next.fetch_add(1); c < kChunks; c = next.fetch_add(1)) {
          try {
            run_chunk(c);
          } catch (...) {
            std::lock_guard<std::mutex> g(err_mu);
            if (!err) err = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }

  Accumulated out;
  cplx sum(0.0, 0.0);
  double sum_norm = 0.0, sum_abs = 0.0, max_abs = 0.0;
  long count = 0;
  double var_strat = 0.0;
  bool strat_ok = stratified;
  cplx half_sum(0.0, 0.0);
  long half_count = 0;
  for (int c = 0; c < kChunks; ++c) {
    const ChunkStats& s = stats[static_cast<std::size_t>(c)];
    sum += s.sum;
    sum_norm += s.sum_norm;
    sum_abs += s.sum_abs;
    max_abs = std::max(max_abs, s.max_abs);
    count += s.count;
    if (c < kChunks / 2) {
      half_sum += s.sum;
      half_count += s.count;
    }
    if (s.count >= 2) {
      const double vs =
          (s.sum_norm - std::norm(s.sum) / static_cast<double>(s.count)) / (s.count - 1.0);
      var_strat += std::max(0.0, vs) / static_cast<double>(s.count);
    } else {
      strat_ok = false;
    }
  }
  out.samples_used = count;
  out.value = sum / static_cast<double>(count);

  if (strat_ok) {
    // equal-probability strata, equal counts: Var = (1/S^2) sum_s Var_s / c_s
    out.std_error = std::sqrt(var_strat) / kChunks;
  } else if (count >= 2) {
    const double v = (sum_norm - std::norm(sum) / static_cast<double>(count)) / (count - 1.0);
    out.std_error = std::sqrt(std::max(0.0, v) / static_cast<double>(count));
  }

  // Divergence heuristics: the running mean must be Cauchy under doubling and
  // no single sample may dominate the absolute mass.
  if (count >= 64) {
    const cplx m_half = half_sum / static_cast<double>(half_count);
    const double drift = std::abs(out.value - m_half);
    if (drift > 6.0 * out.std_error + 1e-14 * std::abs(out.value)) out.divergence_warning = true;
    if (max_abs > 0.2 * sum_abs) out.divergence_warning = true;
  }
  return out;
}

}  // namespace

IntegralResult integrate_tube(const TubeIntegrand& f, const DomainConfig& cfg,
                              const QuadratureSpec& spec) {
  cfg.validate();
  spec.validate();
  const int n = cfg.n;
  const double alpha = cfg.alpha;
  const double kappa = spec.kappa_or(alpha);
  if (!(kappa > -1.0)) throw ConfigError("integrate_tube: kappa must exceed -1");

  long total = spec.samples;
  if (spec.stratified) total = ((total + kChunks - 1) / kChunks) * kChunks;
  const double z_mass = ball_weight_mass(n, kappa);

  auto sample_value = [&](long k) -> cplx {
    SampleStream stream(spec.seed, static_cast<std::uint64_t>(k));
    double u = stream.u01();
    if (spec.stratified) {
      const long s = k / (total / kChunks);
      u = (static_cast<double>(s) + u) / kChunks;
    }
    double v = inv_inc_beta(static_cast<double>(n), kappa + 1.0, u);
    if (v > 1.0 - 1e-16) v = 1.0 - 1e-16;

    std::vector<cplx> xi(static_cast<std::size_t>(n));
    draw_direction(stream, xi);
    const double rad = std::sqrt(v);
    for (auto& c : xi) c *= rad;

    const BallPoint bp(xi);
    const TubePoint w = cayley(bp);
    const double one_minus = 1.0 - v;
    const double an2 = std::norm(1.0 + xi[static_cast<std::size_t>(n - 1)]);
    const double weight = z_mass * cayley_jacobian(bp) * std::pow(one_minus, alpha - kappa) /
                          std::pow(an2, alpha);
    return weight * f(w);
  };

  const Accumulated acc = reduce_samples(total, spec.jobs, spec.stratified, sample_value);
  IntegralResult res;
  res.value = acc.value;
  res.std_error = acc.std_error;
  res.samples_used = acc.samples_used;
  res.divergence_warning = acc.divergence_warning;
  return res;
}

namespace {

struct BallSampler {
  int n;
  BallPoint a;
  double t;  // Euclidean radius tanh(r)

  BallSampler(const TubePoint& z, double r)
      : n(z.n()), a(cayley_inv(z)), t(std::tanh(r)) {}

  BallPoint draw(long k, std::uint64_t seed, bool stratified, long total) const {
    SampleStream stream(seed, static_cast<std::uint64_t>(k));
    double u = stream.u01();
    if (stratified && total > 0) {
      const long s = k / (total / kChunks);
      u = (static_cast<double>(s) + u) / kChunks;
    }
    std::vector<cplx> eta(static_cast<std::size_t>(n));
    draw_direction(stream, eta);
    const double rad = t * std::pow(u, 1.0 / (2.0 * n));
    for (auto& c : eta) c *= rad;
    return ball_automorphism(a, BallPoint(eta));
  }

  double jac_phi_a(const BallPoint& eta_pre) const {
    // eta_pre is the pre-image; the automorphism Jacobian at that point
    cplx inner(0.0, 0.0);
    for (int j = 0; j < n; ++j) inner += eta_pre[j] * std::conj(a[j]);
    const double denom = std::norm(1.0 - inner);
    return std::pow((1.0 - a.norm_sq()) / denom, n + 1);
  }
};

}  // namespace

IntegralResult integrate_ball(const TubeIntegrand& f, const TubePoint& z, double r,
                              const DomainConfig& cfg, const QuadratureSpec& spec) {
  cfg.validate();
  spec.validate();
  require_interior(z, "integrate_ball");
  if (!(r > 0.0)) throw ConfigError("integrate_ball: radius must be positive");
  const int n = cfg.n;
  if (z.n() != n) throw ConfigError("integrate_ball: point dimension mismatch");
  const double alpha = cfg.alpha;

  long total = spec.samples;
  if (spec.stratified) total = ((total + kChunks - 1) / kChunks) * kChunks;

  const BallSampler sampler(z, r);
  const double vol_e = euclidean_ball_volume(n, sampler.t);

  auto sample_value = [&](long k) -> cplx {
    SampleStream stream(spec.seed, static_cast<std::uint64_t>(k));
    double u = stream.u01();
    if (spec.stratified) {
      const long s = k / (total / kChunks);
      u = (static_cast<double>(s) + u) / kChunks;
    }
    std::vector<cplx> eta(static_cast<std::size_t>(n));
    draw_direction(stream, eta);
    const double rad = sampler.t * std::pow(u, 1.0 / (2.0 * n));
    for (auto& c : eta) c *= rad;
    const BallPoint eta_bp(eta);
    const BallPoint xi = ball_automorphism(sampler.a, eta_bp);
    const TubePoint w = cayley(xi);
    const double rho_w = rho_of_cayley(xi);
    const double weight =
        vol_e * std::pow(rho_w, alpha) * sampler.jac_phi_a(eta_bp) * cayley_jacobian(xi);
    return weight * f(w);
  };

  const Accumulated acc = reduce_samples(total, spec.jobs, spec.stratified, sample_value);
  IntegralResult res;
  res.value = acc.value;
  res.std_error = acc.std_error;
  res.samples_used = acc.samples_used;
  res.divergence_warning = acc.divergence_warning;
  return res;
}

double ball_volume(const TubePoint& z, double r, const DomainConfig& cfg,
                   const QuadratureSpec& spec) {
  return integrate_ball([](const TubePoint&) { return cplx(1.0, 0.0); }, z, r, cfg, spec)
      .value.real();
}

TubePoint ball_point(const TubePoint& z, double r, long index, std::uint64_t seed) {
  const BallSampler sampler(z, r);
  return cayley(sampler.draw(index, seed, false, 0));
}

}  // namespace tubeb
