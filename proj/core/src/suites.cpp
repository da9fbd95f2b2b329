#include "tubeb/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tubeb/calculus.hpp"
#include "tubeb/cayley.hpp"
#include "tubeb/domain.hpp"
#include "tubeb/errors.hpp"
#include "tubeb/functions.hpp"
#include "tubeb/kernels.hpp"
#include "tubeb/oscillation.hpp"
#include "tubeb/quadrature.hpp"
#include "tubeb/rng.hpp"
#include "tubeb/special.hpp"

namespace tubeb {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct Task {
  std::string id;
  std::function<CheckReport()> run;
};

CheckReport error_report(const std::string& id, const std::string& what) {
  CheckReport c;
  c.id = id;
  c.anchor = "check raised: " + what;
  c.provenance = "reference";
  c.observed = std::numeric_limits<double>::quiet_NaN();
  c.pass = false;
  return c;
}

// Runs every task, serially or on `jobs` threads; report order always
// matches task order and failures inside a check become failed reports.
std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<CheckReport> out(tasks.size());
  auto run_one = [&](std::size_t k) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport rep;
    try {
      rep = tasks[k].run();
    } catch (const std::exception& e) {
      rep = error_report(tasks[k].id, e.what());
    }
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out[k] = std::move(rep);
  };
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) run_one(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      run_one(k);
    }
  };
  std::vector<std::thread> pool;
  const int width = std::min<int>(jobs, static_cast<int>(tasks.size()));
  pool.reserve(static_cast<std::size_t>(width));
  for (int t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

// Lazily computed value shared by several checks of one suite; safe under
// the check-level thread pool. A throwing maker leaves the flag unset, so
// each interested check re-attempts and reports the error itself.
template <typename T>
class Shared {
 public:
  explicit Shared(std::function<T()> make) : state_(std::make_shared<State>()) {
    state_->make = std::move(make);
  }
  const T& get() const {
    State& s = *state_;
    std::call_once(s.flag, [&s] { s.value.emplace(s.make()); });
    return *s.value;
  }

 private:
  struct State {
    std::function<T()> make;
    std::once_flag flag;
    std::optional<T> value;
  };
  std::shared_ptr<State> state_;
};

// Stream tags xor-ed into the seed keep the point sets of different checks
// disjoint while staying reproducible for a given --seed.
enum : std::uint64_t {
  kTagRoundBall = 0x7452b001ULL,
  kTagRoundTube = 0x7452b002ULL,
  kTagPairFwd = 0x7452b003ULL,
  kTagPairInv = 0x7452b004ULL,
  kTagDenom = 0x7452b005ULL,
  kTagDefect = 0x7452b006ULL,
  kTagJacFwd = 0x7452b007ULL,
  kTagJacInv = 0x7452b008ULL,
  kTagJacSigma = 0x7452b009ULL,
  kTagBetaZero = 0x7452b00aULL,
  kTagBetaSym = 0x7452b00bULL,
  kTagBetaTau = 0x7452b00cULL,
  kTagGradBand = 0x7452b00dULL,
  kTagKernelPts = 0x7452b00eULL,
  kTagKernelPairs = 0x7452b00fULL,
  kTagLipschitz = 0x7452b010ULL,
};

BallPoint draw_ball(int n, double max_rad, SampleStream& rng) {
  std::vector<cplx> xi(static_cast<std::size_t>(n));
  double nrm2 = 0.0;
  for (auto& c : xi) {
    c = cplx(rng.normal(), rng.normal());
    nrm2 += std::norm(c);
  }
  const double rad = max_rad * std::pow(rng.u01(), 1.0 / (2.0 * n));
  const double nrm = std::sqrt(nrm2);
  for (auto& c : xi) c = (nrm > 0.0) ? c * (rad / nrm) : cplx(0.0, 0.0);
  return BallPoint(std::move(xi));
}

// Small |xi'| and moderate |xi_n| keep rho and the y'-dependent Laplacian
// coefficients in a band where finite differences are trustworthy.
BallPoint draw_near_vertical(int n, double prime_rad, double last_rad, SampleStream& rng) {
  std::vector<cplx> xi(static_cast<std::size_t>(n));
  for (int j = 0; j + 1 < n; ++j) {
    xi[static_cast<std::size_t>(j)] =
        std::polar(prime_rad * std::sqrt(rng.u01()), 2.0 * kPi * rng.u01());
  }
  xi[static_cast<std::size_t>(n - 1)] =
      std::polar(last_rad * std::sqrt(rng.u01()), 2.0 * kPi * rng.u01());
  return BallPoint(std::move(xi));
}

BallPoint ball_at(int n, double max_rad, std::uint64_t seed, std::uint64_t tag,
                  std::uint64_t k) {
  SampleStream rng(seed ^ tag, k);
  return draw_ball(n, max_rad, rng);
}

TubePoint tube_at(int n, double max_rad, std::uint64_t seed, std::uint64_t tag,
                  std::uint64_t k) {
  return cayley(ball_at(n, max_rad, seed, tag, k));
}

TubePoint vertical_point(int n, double height) {
  std::vector<cplx> z(static_cast<std::size_t>(n), cplx(0.0, 0.0));
  z[static_cast<std::size_t>(n - 1)] = cplx(0.0, height);
  return TubePoint(std::move(z));
}

cplx hermitian_inner(const BallPoint& a, const BallPoint& b) {
  cplx s(0.0, 0.0);
  for (int j = 0; j < a.n(); ++j) s += a[j] * std::conj(b[j]);
  return s;
}

std::vector<double> flatten(const std::vector<cplx>& v) {
  std::vector<double> x(2 * v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    x[2 * j] = v[j].real();
    x[2 * j + 1] = v[j].imag();
  }
  return x;
}

std::vector<cplx> unflatten(const std::vector<double>& x) {
  std::vector<cplx> v(x.size() / 2);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = cplx(x[2 * j], x[2 * j + 1]);
  return v;
}

// Partial-pivot determinant of a row-major m x m complex matrix.
cplx complex_det(std::vector<cplx> a, int m) {
  cplx det(1.0, 0.0);
  for (int c = 0; c < m; ++c) {
    int piv = c;
    for (int r = c + 1; r < m; ++r) {
      if (std::abs(a[static_cast<std::size_t>(r * m + c)]) >
          std::abs(a[static_cast<std::size_t>(piv * m + c)]))
        piv = r;
    }
    if (std::abs(a[static_cast<std::size_t>(piv * m + c)]) == 0.0) return cplx(0.0, 0.0);
    if (piv != c) {
      for (int k = 0; k < m; ++k)
        std::swap(a[static_cast<std::size_t>(piv * m + k)],
                  a[static_cast<std::size_t>(c * m + k)]);
      det = -det;
    }
    const cplx pivot = a[static_cast<std::size_t>(c * m + c)];
    det *= pivot;
    for (int r = c + 1; r < m; ++r) {
      const cplx f = a[static_cast<std::size_t>(r * m + c)] / pivot;
      for (int k = c; k < m; ++k)
        a[static_cast<std::size_t>(r * m + k)] -= f * a[static_cast<std::size_t>(c * m + k)];
    }
  }
  return det;
}

// d/dxi_j (f o Phi) at the ball origin by one Cauchy contour.
cplx ball_partial_at_zero(const FunctionHandle& f, int n, int j) {
  const int nodes = 32;
  const double r = 0.3;
  cplx acc(0.0, 0.0);
  for (int k = 0; k < nodes; ++k) {
    const double th = 2.0 * kPi * k / nodes;
    std::vector<cplx> xi(static_cast<std::size_t>(n), cplx(0.0, 0.0));
    xi[static_cast<std::size_t>(j)] = std::polar(r, th);
    acc += f(cayley(BallPoint(std::move(xi)))) * std::polar(1.0, -th);
  }
  return acc / (static_cast<double>(nodes) * r);
}

// The last-coordinate function z_n with its exact first-order derivatives:
// L_n z_n = 1 and L_j z_n = 2 y_j.
FunctionHandle coordinate_last(int n) {
  FunctionHandle f;
  f.holomorphic = true;
  f.eval = [n](const TubePoint& z) { return z[n - 1]; };
  f.exact_lop = [n](const TubePoint& z, const MultiIndex& g) -> std::optional<cplx> {
    if (g.order() == 0) return z[n - 1];
    if (g.order() == 1) {
      if (g.k[static_cast<std::size_t>(n - 1)] == 1) return cplx(1.0, 0.0);
      for (int j = 0; j + 1 < n; ++j) {
        if (g.k[static_cast<std::size_t>(j)] == 1) return cplx(0.0, 2.0 * z[j].imag());
      }
    }
    return std::nullopt;
  };
  f.in_ap = [](double, double) { return false; };
  return f;
}

// ---------------------------------------------------------------- identities

std::vector<Task> identities_tasks(const SuiteConfig& cfg) {
  const int n = cfg.domain.n;
  const std::uint64_t seed = cfg.quad.seed;
  const long count = 10000;
  const double tol = 1e-10;
  const TubePoint base = base_point(n);

  std::vector<Task> ts;

  ts.push_back({"cayley-roundtrip-ball", [=] {
                  long bad = 0;
                  for (long k = 0; k < count; ++k) {
                    const BallPoint xi = ball_at(n, 0.9, seed, kTagRoundBall, (std::uint64_t)k);
                    const BallPoint back = cayley_inv(cayley(xi));
                    double err = 0.0;
                    for (int j = 0; j < n; ++j) err = std::max(err, std::abs(back[j] - xi[j]));
                    if (!(err <= tol)) ++bad;
                  }
                  return make_count_check(
                      "cayley-roundtrip-ball",
                      "Phi^{-1}(Phi(xi)) = xi to 1e-10 on 10^4 ball points", bad, "identity");
                }});

  ts.push_back({"cayley-roundtrip-tube", [=] {
                  long bad = 0;
                  for (long k = 0; k < count; ++k) {
                    const TubePoint z = tube_at(n, 0.9, seed, kTagRoundTube, (std::uint64_t)k);
                    const TubePoint back = cayley(cayley_inv(z));
                    double err = 0.0;
                    for (int j = 0; j < n; ++j) err = std::max(err, std::abs(back[j] - z[j]));
                    if (!(err <= tol)) ++bad;
                  }
                  return make_count_check(
                      "cayley-roundtrip-tube",
                      "Phi(Phi^{-1}(z)) = z to 1e-10 on 10^4 tube points", bad, "identity");
                }});

  ts.push_back({"pairing-transport-forward", [=] {
                  long bad = 0;
                  for (long k = 0; k < count; ++k) {
                    SampleStream rng(seed ^ kTagPairFwd, (std::uint64_t)k);
                    const BallPoint xi = draw_ball(n, 0.9, rng);
                    const BallPoint eta = draw_ball(n, 0.9, rng);
                    const cplx lhs = rho(cayley(xi), cayley(eta));
                    const cplx rhs = (1.0 - hermitian_inner(xi, eta)) /
                                     ((1.0 + xi[n - 1]) * std::conj(1.0 + eta[n - 1]));
                    if (!(std::abs(lhs - rhs) <= tol)) ++bad;
                  }
                  return make_count_check(
                      "pairing-transport-forward",
                      "rho(Phi xi, Phi eta) = (1-<xi,eta>)/((1+xi_n) conj(1+eta_n)) to 1e-10",
                      bad, "identity");
                }});

  ts.push_back({"pairing-transport-inverse", [=] {
                  long bad = 0;
                  for (long k = 0; k < count; ++k) {
                    SampleStream rng(seed ^ kTagPairInv, (std::uint64_t)k);
                    const TubePoint z = cayley(draw_ball(n, 0.9, rng));
                    const TubePoint w = cayley(draw_ball(n, 0.9, rng));
                    const cplx lhs = 1.0 - hermitian_inner(cayley_inv(z), cayley_inv(w));
                    const cplx rhs = rho(z, w) / (rho(z, base) * rho(base, w));
                    if (!(std::abs(lhs - rhs) <= tol)) ++bad;
                  }
                  return make_count_check(
                      "pairing-transport-inverse",
                      "1 - <Phi^{-1}z, Phi^{-1}w> = rho(z,w)/(rho(z,i) rho(i,w)) to 1e-10", bad,
                      "identity");
                }});

  ts.push_back({"denominator-transport", [=] {
                  long bad = 0;
                  for (long k = 0; k < count; ++k) {
                    const TubePoint z = tube_at(n, 0.9, seed, kTagDenom, (std::uint64_t)k);
                    const cplx lhs = 1.0 + cayley_inv(z)[n - 1];
                    const cplx rhs = 1.0 / rho(z, base);
                    if (!(std::abs(lhs - rhs) <= tol)) ++bad;
                  }
                  return make_count_check("denominator-transport",
                                          "1 + (Phi^{-1}z)_n = 1/rho(z,i) to 1e-10", bad,
                                          "identity");
                }});

  ts.push_back({"defect-pullback", [=] {
                  long bad = 0;
                  for (long k = 0; k < count; ++k) {
                    const BallPoint xi = ball_at(n, 0.9, seed, kTagDefect, (std::uint64_t)k);
                    const double lhs = rho(cayley(xi));
                    const double rhs =
                        (1.0 - xi.norm_sq()) / std::norm(1.0 + xi[n - 1]);
                    if (!(std::fabs(lhs - rhs) <= tol)) ++bad;
                  }
                  return make_count_check("defect-pullback",
                                          "rho(Phi xi) = (1-|xi|^2)/|1+xi_n|^2 to 1e-10", bad,
                                          "identity");
                }});

  return ts;
}

// ----------------------------------------------------------------- jacobians

std::vector<Task> jacobians_tasks(const SuiteConfig& cfg) {
  const int n = cfg.domain.n;
  const std::uint64_t seed = cfg.quad.seed;
  const long count = 100;
  const double rel = 1e-6;

  std::vector<Task> ts;

  ts.push_back({"cayley-jacobian-forward", [=] {
                  long bad = 0;
                  RealMap fwd = [](const std::vector<double>& x) {
                    return flatten(cayley(BallPoint(unflatten(x))).z);
                  };
                  for (long k = 0; k < count; ++k) {
                    const BallPoint xi = ball_at(n, 0.8, seed, kTagJacFwd, (std::uint64_t)k);
                    const double num = numerical_real_jacobian(fwd, flatten(xi.xi));
                    const double expected = cayley_jacobian(xi);
                    if (!(std::fabs(num - expected) <= rel * std::fabs(expected))) ++bad;
                  }
                  return make_count_check(
                      "cayley-jacobian-forward",
                      "numerical real Jacobian of Phi matches 2^{n+1}/|1+xi_n|^{2(n+1)} to "
                      "rel 1e-6 at 100 points",
                      bad, "closed-form");
                }});

  ts.push_back({"cayley-jacobian-inverse", [=] {
                  long bad = 0;
                  RealMap inv = [](const std::vector<double>& x) {
                    return flatten(cayley_inv(TubePoint(unflatten(x))).xi);
                  };
                  for (long k = 0; k < count; ++k) {
                    const TubePoint z =
                        cayley(ball_at(n, 0.8, seed, kTagJacInv, (std::uint64_t)k));
                    const double num = numerical_real_jacobian(inv, flatten(z.z));
                    const double expected = cayley_jacobian_inverse(z);
                    if (!(std::fabs(num - expected) <= rel * std::fabs(expected))) ++bad;
                  }
                  return make_count_check(
                      "cayley-jacobian-inverse",
                      "numerical real Jacobian of Phi^{-1} matches "
                      "1/(2^{n+1}|rho(z,i)|^{2(n+1)}) to rel 1e-6 at 100 points",
                      bad, "closed-form");
                }});

  ts.push_back({"sigma-complex-jacobian", [=] {
                  long bad = 0;
                  const double h = 1e-3;
                  for (long k = 0; k < count; ++k) {
                    SampleStream rng(seed ^ kTagJacSigma, (std::uint64_t)k);
                    const TubePoint z = cayley(draw_ball(n, 0.7, rng));
                    const TubePoint u = cayley(draw_ball(n, 0.7, rng));
                    const SigmaMap s = sigma(z);
                    std::vector<cplx> jac(static_cast<std::size_t>(n * n));
                    for (int c = 0; c < n; ++c) {
                      TubePoint up = u, um = u;
                      up[c] += h;
                      um[c] -= h;
                      const TubePoint fp = s(up);
                      const TubePoint fm = s(um);
                      for (int r = 0; r < n; ++r)
                        jac[static_cast<std::size_t>(r * n + c)] =
                            (fp[r] - fm[r]) / (2.0 * h);
                    }
                    const cplx det = complex_det(std::move(jac), n);
                    const double expected = s.complex_jacobian();
                    if (!(std::abs(det - expected) <= rel * std::fabs(expected))) ++bad;
                  }
                  return make_count_check(
                      "sigma-complex-jacobian",
                      "complex Jacobian of sigma_z equals rho(z)^{-(n+1)/2} to rel 1e-6 at "
                      "100 points",
                      bad, "closed-form");
                }});

  return ts;
}

// ------------------------------------------------------------- forelli-rudin

std::vector<Task> forelli_rudin_tasks(const SuiteConfig& cfg) {
  const DomainConfig dom = cfg.domain;
  const int n = dom.n;
  const double alpha = dom.alpha;
  const double rel = cfg.rel_tol;
  const QuadratureSpec quad = cfg.quad;
  const TubePoint base = base_point(n);

  struct Case {
    const char* name;
    double r, s, t;
  };
  const std::vector<Case> cases = {{"diag", n + 1.0, n + 1.0, alpha},
                                   {"shifted", n + 2.0, n + 3.0, alpha + 2.0}};

  std::vector<Task> ts;
  for (const Case& c : cases) {
    const double expected = fr_constant(n, c.r, c.s, c.t);
    Shared<IntegralResult> shared([=] {
      TubeIntegrand f = [=](const TubePoint& w) {
        // dV_alpha already carries rho(w)^alpha; lift it to rho(w)^t.
        return std::pow(rho(w), c.t - alpha) * rho_pow(rho(base, w), -c.r) *
               rho_pow(rho(w, base), -c.s);
      };
      return integrate_tube(f, dom, quad);
    });
    const std::string tag = c.name;
    ts.push_back({"fr-" + tag + "-real", [=] {
                    const IntegralResult& res = shared.get();
                    return make_check(
                        "fr-" + tag + "-real",
                        "two-slot integral at z=u=i, (r,s,t)=(" + format_double(c.r) + "," +
                            format_double(c.s) + "," + format_double(c.t) +
                            ") equals 2^{n+1} pi^n G(1+t) G(r+s-t-n-1)/(G(r) G(s))",
                        expected, "closed-form", res.value.real(), res.std_error, rel);
                  }});
    ts.push_back({"fr-" + tag + "-imag", [=] {
                    const IntegralResult& res = shared.get();
                    return make_check("fr-" + tag + "-imag",
                                      "imaginary part of the two-slot integral vanishes", 0.0,
                                      "closed-form", res.value.imag(), res.std_error, 0.0,
                                      1e-9 * expected);
                  }});
  }
  return ts;
}

// -------------------------------------------------------------------- metric

std::vector<Task> metric_tasks(const SuiteConfig& cfg) {
  const DomainConfig dom = cfg.domain;
  const int n = dom.n;
  const double alpha = dom.alpha;
  const std::uint64_t seed = cfg.quad.seed;
  const long count = 1000;
  const double tol = 1e-8;
  const TubePoint base = base_point(n);

  std::vector<Task> ts;

  ts.push_back({"beta-diagonal-zero", [=] {
                  long bad = 0;
                  for (long k = 0; k < count; ++k) {
                    const TubePoint z = tube_at(n, 0.9, seed, kTagBetaZero, (std::uint64_t)k);
                    if (!(beta(z, z) <= tol)) ++bad;
                  }
                  return make_count_check("beta-diagonal-zero",
                                          "beta(z,z) = 0 to 1e-8 on 10^3 points", bad,
                                          "identity");
                }});

  ts.push_back({"beta-symmetry", [=] {
                  long bad = 0;
                  for (long k = 0; k < count; ++k) {
                    SampleStream rng(seed ^ kTagBetaSym, (std::uint64_t)k);
                    const TubePoint z = cayley(draw_ball(n, 0.9, rng));
                    const TubePoint w = cayley(draw_ball(n, 0.9, rng));
                    if (!(std::fabs(beta(z, w) - beta(w, z)) <= tol)) ++bad;
                  }
                  return make_count_check("beta-symmetry",
                                          "beta(z,w) = beta(w,z) to 1e-8 on 10^3 pairs", bad,
                                          "identity");
                }});

  ts.push_back({"beta-tau-invariance", [=] {
                  long bad = 0;
                  for (long k = 0; k < count; ++k) {
                    SampleStream rng(seed ^ kTagBetaTau, (std::uint64_t)k);
                    const TubePoint v = cayley(draw_ball(n, 0.85, rng));
                    const TubePoint z = cayley(draw_ball(n, 0.85, rng));
                    const TubePoint w = cayley(draw_ball(n, 0.85, rng));
                    const TauMap tv = tau(v);
                    if (!(std::fabs(beta(tv(z), tv(w)) - beta(z, w)) <= tol)) ++bad;
                  }
                  return make_count_check(
                      "beta-tau-invariance",
                      "beta(tau_v z, tau_v w) = beta(z,w) to 1e-8 on 10^3 triples", bad,
                      "identity");
                }});

  for (const double y : {2.0, 5.0, 10.0}) {
    const std::string id = "beta-vertical-" + std::to_string(static_cast<int>(y));
    ts.push_back({id, [=] {
                    const double observed = beta(base, vertical_point(n, y));
                    return make_check(id, "beta(i, (0', iy)) = |log y|/2 for vertical points",
                                      0.5 * std::fabs(std::log(y)), "closed-form", observed,
                                      0.0, 0.0, tol);
                  }});
  }

  // Volume transport: V_alpha(D(z, r)) / rho(z)^{n+1+alpha} is constant in z.
  const QuadratureSpec vol_spec = cfg.quad.with_samples(std::max(100000L, cfg.quad.samples));
  const double expo = n + 1 + alpha;
  Shared<std::vector<IntegralResult>> volumes([=] {
    std::vector<IntegralResult> vols;
    TubeIntegrand one = [](const TubePoint&) { return cplx(1.0, 0.0); };
    for (int j = 0; j <= 4; ++j) {
      const double rho_j = std::pow(10.0, -2.0 + j);
      vols.push_back(integrate_ball(one, vertical_point(n, rho_j), 1.0, dom, vol_spec));
    }
    return vols;
  });
  for (int j = 1; j <= 4; ++j) {
    const std::string id = "ball-volume-scale-" + std::to_string(j);
    ts.push_back({id, [=] {
                    const std::vector<IntegralResult>& vols = volumes.get();
                    const double r0 = vols[0].value.real() / std::pow(1e-2, expo);
                    const double rj =
                        vols[(std::size_t)j].value.real() / std::pow(10.0, (-2.0 + j) * expo);
                    const double se =
                        std::hypot(vols[(std::size_t)j].std_error /
                                       std::pow(10.0, (-2.0 + j) * expo),
                                   vols[0].std_error / std::pow(1e-2, expo));
                    return make_check(
                        id, "V_alpha(D(z,1))/rho(z)^{n+1+alpha} constant over 5 decades (5%)",
                        r0, "identity", rj, se, 0.05);
                  }});
  }

  return ts;
}

// -------------------------------------------------------- gradient-laplacian

std::vector<Task> gradient_laplacian_tasks(const SuiteConfig& cfg) {
  const DomainConfig dom = cfg.domain;
  const int n = dom.n;
  const std::uint64_t seed = cfg.quad.seed;
  const TubePoint base = base_point(n);

  std::vector<Task> ts;

  struct Rep {
    const char* name;
    FunctionHandle f;
  };
  const std::vector<Rep> reps = {{"power", make_rho_power(base, n + 1.0, dom)},
                                 {"coordinate", coordinate_last(n)}};
  for (const Rep& rep : reps) {
    const std::string id = std::string("gradient-transport-") + rep.name;
    const FunctionHandle f = rep.f;
    ts.push_back({id, [=] {
                    const double lhs = invariant_gradient_norm(f, base);
                    double s = 0.0;
                    for (int j = 0; j < n; ++j) s += std::norm(ball_partial_at_zero(f, n, j));
                    const double rhs = std::sqrt(2.0) * std::sqrt(s);
                    return make_check(id,
                                      "invariant gradient at the base point equals sqrt(2) "
                                      "times |grad(f o Phi)(0)|",
                                      rhs, "identity", lhs, 0.0, 1e-6);
                  }});
  }

  const FunctionHandle f1 = make_rho_power(base, 1.0, dom);

  ts.push_back({"laplacian-tau-invariance", [=] {
                  const FunctionHandle g = abs_squared(f1);
                  long bad = 0;
                  for (long k = 0; k < 50; ++k) {
                    SampleStream rng(seed ^ kTagGradBand, (std::uint64_t)(1000 + k));
                    const TubePoint z = cayley(draw_near_vertical(n, 0.15, 0.3, rng));
                    const TubePoint v = cayley(draw_near_vertical(n, 0.10, 0.2, rng));
                    const TauMap tv = tau(v);
                    const Evaluator composed = [&](const TubePoint& u) { return g(tv(u)); };
                    const cplx lhs = invariant_laplacian(composed, z);
                    const cplx rhs = invariant_laplacian(g.eval, tv(z));
                    if (!(std::abs(lhs - rhs) <= 1e-4)) ++bad;
                  }
                  return make_count_check(
                      "laplacian-tau-invariance",
                      "Lap(g o tau_v) = (Lap g) o tau_v to 1e-4 on 50 samples", bad,
                      "identity");
                }});

  ts.push_back({"laplacian-gradient-identity", [=] {
                  const FunctionHandle g = abs_squared(f1);
                  long bad = 0;
                  for (long k = 0; k < 20; ++k) {
                    SampleStream rng(seed ^ kTagGradBand, (std::uint64_t)(2000 + k));
                    const TubePoint z = cayley(draw_near_vertical(n, 0.15, 0.3, rng));
                    const double grad = invariant_gradient_norm(f1, z);
                    const double rhs = 2.0 * grad * grad;
                    const cplx lhs = invariant_laplacian(g.eval, z);
                    if (!(std::abs(lhs - rhs) <= 1e-4 * rhs)) ++bad;
                  }
                  return make_count_check(
                      "laplacian-gradient-identity",
                      "Lap |f|^2 = 2 |grad f|^2 for holomorphic f to rel 1e-4 at 20 points",
                      bad, "identity");
                }});

  ts.push_back({"laplacian-holomorphic", [=] {
                  const FunctionHandle f = make_rho_power(base, n + 1.0, dom);
                  long bad = 0;
                  for (long k = 0; k < 20; ++k) {
                    SampleStream rng(seed ^ kTagGradBand, (std::uint64_t)(3000 + k));
                    const TubePoint z = cayley(draw_near_vertical(n, 0.15, 0.3, rng));
                    if (!(std::abs(invariant_laplacian(f.eval, z)) <= 1e-6)) ++bad;
                  }
                  return make_count_check(
                      "laplacian-holomorphic",
                      "Lap f = 0 for holomorphic f to 1e-6 at 20 points", bad, "identity");
                }});

  return ts;
}

// ------------------------------------------------------------------- kernels

std::vector<Task> kernels_tasks(const SuiteConfig& cfg) {
  const DomainConfig dom = cfg.domain;
  const int n = dom.n;
  const double alpha = dom.alpha;
  const double rel = cfg.rel_tol;
  const std::uint64_t seed = cfg.quad.seed;
  const QuadratureSpec quad = cfg.quad;
  const KernelParams kp{dom};
  const TubePoint base = base_point(n);

  std::vector<TubePoint> pts = {base, vertical_point(n, 2.0), vertical_point(n, 0.5),
                                tube_at(n, 0.5, seed, kTagKernelPts, 1),
                                tube_at(n, 0.5, seed, kTagKernelPts, 2)};

  std::vector<Task> ts;

  for (int m = n + 1; m <= n + 3; ++m) {
    const FunctionHandle f = make_rho_power(base, m, dom);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const std::string id =
          "reproducing-m" + std::to_string(m) + "-p" + std::to_string(k);
      const TubePoint z = pts[k];
      ts.push_back({id, [=] {
                      const IntegralResult res = project(f, z, kp, quad);
                      const cplx fv = f(z);
                      return make_check(
                          id, "T_alpha reproduces rho(.,i)^{-m}: |T f(z) - f(z)| small", 0.0,
                          "closed-form", std::abs(res.value - fv), res.std_error, 0.0,
                          rel * std::abs(fv));
                    }});
    }
  }

  const FunctionHandle unit = make_bounded_symbol(SymbolKind::constant, dom);
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string id = "berezin-unital-p" + std::to_string(k);
    const TubePoint z = pts[k];
    ts.push_back({id, [=] {
                    const IntegralResult res = berezin(unit, z, kp, quad);
                    return make_check(id, "Berezin transform of 1 equals 1", 0.0, "identity",
                                      std::abs(res.value - 1.0), res.std_error, 0.0, rel);
                  }});
  }

  ts.push_back({"kernel-pointwise-bound", [=] {
                  const double factor = std::pow(2.0, n + 1 + alpha);
                  long bad = 0;
                  for (long k = 0; k < 10000; ++k) {
                    SampleStream rng(seed ^ kTagKernelPairs, (std::uint64_t)k);
                    const TubePoint z = cayley(draw_ball(n, 0.9, rng));
                    const TubePoint w = cayley(draw_ball(n, 0.9, rng));
                    const double bound = factor * kernel(z, z, kp).real();
                    if (!(std::abs(kernel(z, w, kp)) <= bound * (1.0 + 1e-12))) ++bad;
                  }
                  return make_count_check(
                      "kernel-pointwise-bound",
                      "|K(z,w)| <= 2^{n+1+alpha} K(z,z), zero violations on 10^4 pairs", bad,
                      "closed-form");
                }});

  ts.push_back({"kernel-norm-scaling", [=] {
                  const double p = 2.0;
                  const double expected = (1.0 - p) * (n + 1 + alpha);
                  auto mass = [&](double height) {
                    const TubePoint z = vertical_point(n, height);
                    TubeIntegrand f = [=](const TubePoint& w) {
                      return cplx(std::norm(kernel(z, w, kp)), 0.0);
                    };
                    return integrate_tube(f, dom, quad);
                  };
                  const IntegralResult lo = mass(0.25);
                  const IntegralResult hi = mass(4.0);
                  const double slope = std::log(hi.value.real() / lo.value.real()) /
                                       std::log(4.0 / 0.25);
                  const double se = std::hypot(hi.std_error / hi.value.real(),
                                               lo.std_error / lo.value.real()) /
                                    std::log(16.0);
                  return make_check("kernel-norm-scaling",
                                    "log-log slope of int |K(z,.)|^p dV_alpha in rho(z) "
                                    "equals (1-p)(n+1+alpha), p=2",
                                    expected, "closed-form", slope, se, 0.10);
                }});

  return ts;
}

// ------------------------------------------------------------ representation

std::vector<Task> representation_tasks(const SuiteConfig& cfg) {
  const DomainConfig dom = cfg.domain;
  const int n = dom.n;
  const double alpha = dom.alpha;
  const double rel = cfg.rel_tol;
  const QuadratureSpec quad = cfg.quad;
  const KernelParams kp{dom};
  const TubePoint base = base_point(n);

  const FunctionHandle f = make_rho_power(base, n + 2.0, dom);

  std::vector<TubePoint> zs = {base, vertical_point(n, 2.0)};
  {
    std::vector<cplx> c(static_cast<std::size_t>(n), cplx(0.2, 0.4));
    c[static_cast<std::size_t>(n - 1)] = cplx(0.3, 1.5);
    zs.push_back(TubePoint(std::move(c)));
  }

  std::vector<Task> ts;

  for (std::size_t k = 0; k < zs.size(); ++k) {
    const std::string id = "representation-n0-z" + std::to_string(k);
    const TubePoint z = zs[k];
    ts.push_back({id, [=] {
                    const IntegralResult res = t_alpha(f, z, kp, quad);
                    const cplx fv = f(z);
                    return make_check(id, "N=0 reconstruction: T_alpha f = f", 0.0,
                                      "closed-form", std::abs(res.value - fv), res.std_error,
                                      0.0, rel * std::abs(fv));
                  }});
  }

  std::vector<std::vector<Shared<RepresentationResult>>> shared;
  for (int N = 1; N <= 2; ++N) {
    std::vector<Shared<RepresentationResult>> row;
    for (std::size_t k = 0; k < zs.size(); ++k) {
      const TubePoint z = zs[k];
      row.push_back(Shared<RepresentationResult>(
          [=, NN = N] { return representation_check(f, z, NN, kp, quad); }));
    }
    shared.push_back(std::move(row));
  }

  for (int N = 1; N <= 2; ++N) {
    for (std::size_t k = 0; k < zs.size(); ++k) {
      const std::string id =
          "representation-n" + std::to_string(N) + "-z" + std::to_string(k);
      const Shared<RepresentationResult> rr = shared[(std::size_t)(N - 1)][k];
      ts.push_back({id, [=] {
                      const RepresentationResult& r = rr.get();
                      const double dist = std::min(std::abs(r.with_plus - r.expected),
                                                   std::abs(r.with_minus - r.expected));
                      return make_check(
                          id, "one of (2i)^N/(-2i)^N reconstructs f from T(rho^N Ln^N f)",
                          0.0, "closed-form", dist, r.std_error, 0.0,
                          rel * std::abs(r.expected));
                    }});
    }
  }

  {
    const std::vector<Shared<RepresentationResult>> row = shared[0];
    ts.push_back({"representation-loser-rejected", [=] {
                    long bad = 0;
                    for (const auto& rr : row) {
                      const RepresentationResult& r = rr.get();
                      const double tolv =
                          std::max(3.0 * r.std_error, rel * std::abs(r.expected));
                      const double worst = std::max(std::abs(r.with_plus - r.expected),
                                                    std::abs(r.with_minus - r.expected));
                      if (worst <= tolv) ++bad;
                    }
                    return make_count_check(
                        "representation-loser-rejected",
                        "at N=1 the non-matching sign misses f at every tested z", bad,
                        "closed-form");
                  }});

    ts.push_back({"representation-winner-sign", [=] {
                    double sign = 0.0;
                    bool first = true;
                    bool consistent = true;
                    for (const auto& rr : row) {
                      const RepresentationResult& r = rr.get();
                      const double s = (std::abs(r.with_minus - r.expected) <
                                        std::abs(r.with_plus - r.expected))
                                           ? -1.0
                                           : 1.0;
                      if (first) {
                        sign = s;
                        first = false;
                      } else if (s != sign) {
                        consistent = false;
                      }
                    }
                    return make_check("representation-winner-sign",
                                      "adjudicated constant is the same at every z; -1 "
                                      "denotes the (-2i)^N normalization",
                                      -1.0, "reference", consistent ? sign : 0.0, 0.0, 0.0);
                  }});

    const Shared<RepresentationResult> rr0 = row[0];
    ts.push_back({"representation-semi-analytic", [=] {
                    const RepresentationResult& r = rr0.get();
                    const cplx predicted =
                        cplx(0.0, 0.5) * pochhammer(1.0 + alpha, 1) * f(base);
                    return make_check(
                        "representation-semi-analytic",
                        "T_alpha(rho Ln f)(i) = (i/2)(1+alpha) f(i), the closed N=1 value",
                        0.0, "closed-form", std::abs(r.raw.value - predicted),
                        r.raw.std_error, 0.0, rel * std::abs(predicted));
                  }});
  }

  return ts;
}

// --------------------------------------------------------------- oscillation

std::vector<Task> oscillation_tasks(const SuiteConfig& cfg) {
  const DomainConfig dom = cfg.domain;
  const int n = dom.n;
  const std::uint64_t seed = cfg.quad.seed;
  const QuadratureSpec spec_mo = cfg.quad.with_samples(
      std::max(4000L, std::min(40000L, cfg.quad.samples / 25)));
  const TubePoint base = base_point(n);

  OscillationParams op;
  op.r = 1.0;
  op.p = 2.0;

  const std::vector<TubePoint> g40 = make_grid(n, 40, seed);
  const std::vector<TubePoint> g80 = make_grid(n, 80, seed);
  const std::vector<TubePoint> g160 = make_grid(n, 160, seed);
  const std::vector<TubePoint> g200 = make_grid(n, 200, seed);

  std::vector<Task> ts;

  const FunctionHandle unit = make_bounded_symbol(SymbolKind::constant, dom);
  const FunctionHandle scaled = combine(cplx(2.5, 0.0), unit, cplx(0.0, 0.0), unit);
  for (std::size_t k = 0; k < 5; ++k) {
    const std::string id = "mo-constant-p" + std::to_string(k);
    const TubePoint z = g160[k];
    ts.push_back({id, [=] {
                    const OscStat mo = mean_oscillation(scaled, z, op, dom, spec_mo);
                    return make_check(id, "MO_r of a constant symbol vanishes", 0.0,
                                      "identity", mo.value, mo.std_error, 0.0, 1e-10);
                  }});
  }

  ts.push_back({"mo-center-robustness", [=] {
                  const FunctionHandle f = conjugate(make_rho_power(base, n + 1.0, dom));
                  long bad = 0;
                  for (std::size_t k = 0; k < 50 && k < g160.size(); ++k) {
                    const TubePoint& z = g160[k];
                    const OscStat mo = mean_oscillation(f, z, op, dom, spec_mo);
                    const OscStat moc =
                        mean_oscillation_centered(f, z, f(z), op, dom, spec_mo);
                    const double slack = 3.0 * (mo.std_error + moc.std_error) + 1e-12;
                    if (!(mo.value <= 2.0 * moc.value + slack)) ++bad;
                  }
                  return make_count_check(
                      "mo-center-robustness",
                      "MO_r(f)(z) <= 2 MO_r(f; center f(z))(z) + noise at 50 grid points",
                      bad, "closed-form");
                }});

  ts.push_back({"bloch-lipschitz", [=] {
                  const FunctionHandle f = make_rho_power(base, 1.0, dom);
                  const double bnorm = bloch_seminorm(f, g200);
                  long bad = 0;
                  for (long k = 0; k < 1000; ++k) {
                    SampleStream rng(seed ^ kTagLipschitz, (std::uint64_t)k);
                    const TubePoint z = cayley(draw_ball(n, 0.9, rng));
                    const TubePoint w = cayley(draw_ball(n, 0.9, rng));
                    const double lhs = std::abs(f(z) - f(w));
                    const double rhs = bnorm * beta(z, w) / std::sqrt(2.0);
                    if (!(lhs <= rhs * (1.0 + 1e-10) + 1e-12)) ++bad;
                  }
                  return make_count_check(
                      "bloch-lipschitz",
                      "|f(z)-f(w)| <= ||f||_B beta(z,w)/sqrt(2), zero violations on 10^3 "
                      "pairs (grid sup of rho(.,i)^{-1} is attained at the base point)",
                      bad, "closed-form");
                }});

  for (int m = 1; m <= 3; ++m) {
    const FunctionHandle fm = make_rho_power(base, m, dom);
    Shared<std::vector<double>> ratios([=] {
      std::vector<double> out;
      for (const auto* grid : {&g40, &g80, &g160}) {
        OscillationParams opg = op;
        opg.grid = *grid;
        const double bmo = bmo_seminorm(fm, opg, dom, spec_mo);
        const double bloch = bloch_seminorm(fm, *grid);
        out.push_back(bmo / bloch);
      }
      return out;
    });
    for (int step = 1; step <= 2; ++step) {
      const std::string id =
          "bmo-bloch-ratio-m" + std::to_string(m) + "-refine" + std::to_string(step);
      ts.push_back({id, [=] {
                      const std::vector<double>& r = ratios.get();
                      const double obs = std::log(r[(std::size_t)step] / r[(std::size_t)(step - 1)]);
                      return make_check(
                          id, "bmo/bloch seminorm ratio moves by < 2x under grid refinement",
                          0.0, "reference", obs, 0.0, 0.0, std::log(2.0));
                    }});
    }
  }

  return ts;
}

// ------------------------------------------------------------- decomposition

std::vector<Task> decomposition_tasks(const SuiteConfig& cfg) {
  const DomainConfig dom = cfg.domain;
  const int n = dom.n;
  const std::uint64_t seed = cfg.quad.seed;
  const QuadratureSpec spec_mean = cfg.quad.with_samples(
      std::max(2000L, std::min(10000L, cfg.quad.samples / 50)));
  const long ba_outer = std::max(1000L, std::min(5000L, cfg.quad.samples / 100));

  OscillationParams op;
  op.r = 1.0;
  op.p = 2.0;

  const std::vector<TubePoint> grid = make_grid(n, 20, seed);

  std::vector<Task> ts;

  struct Sym {
    const char* name;
    SymbolKind kind;
  };
  for (const Sym& sym : {Sym{"phase", SymbolKind::phase}, Sym{"smoothstep", SymbolKind::smoothstep}}) {
    const FunctionHandle f = make_bounded_symbol(sym.kind, dom);
    Shared<std::pair<FunctionHandle, FunctionHandle>> parts(
        [=] { return bmo_decompose(f, op, dom, spec_mean); });
    const std::string name = sym.name;

    ts.push_back({"decompose-recombine-" + name, [=] {
                    const auto& [f1, f2] = parts.get();
                    long bad = 0;
                    for (const TubePoint& z : grid) {
                      const cplx fv = f(z);
                      const double err = std::abs(f1(z) + f2(z) - fv);
                      if (!(err <= 1e-13 * std::max(1.0, std::abs(fv)))) ++bad;
                    }
                    return make_count_check(
                        "decompose-recombine-" + name,
                        "f1 + f2 rebuilds the symbol exactly (one rounding) on 20 points",
                        bad, "identity");
                  }});

    ts.push_back({"decompose-bo-witness-" + name, [=] {
                    const FunctionHandle& f1 = parts.get().first;
                    auto witness = [&](long samples) {
                      double w = 0.0;
                      for (std::size_t k = 0; k < 6 && k < grid.size(); ++k)
                        w = std::max(w, oscillation_sup(f1, grid[k], op.r, samples,
                                                        seed ^ 0x626f77ULL));
                      return w;
                    };
                    const double w1 = witness(60);
                    const double w2 = witness(120);
                    return make_check("decompose-bo-witness-" + name,
                                      "sampled oscillation sup of the averaged part is "
                                      "finite and stable under sample doubling",
                                      w1, "reference", w2, 0.0, 0.30, 0.02);
                  }});

    ts.push_back({"decompose-ba-witness-" + name, [=] {
                    const FunctionHandle& f2 = parts.get().second;
                    auto witness = [&](long samples) {
                      const QuadratureSpec outer = cfg.quad.with_samples(samples);
                      double worst = 0.0;
                      double worst_se = 0.0;
                      TubeIntegrand f2sq = [&](const TubePoint& w) {
                        return cplx(std::norm(f2(w)), 0.0);
                      };
                      for (std::size_t k = 0; k < 6 && k < grid.size(); ++k) {
                        const IntegralResult vol = integrate_ball(
                            [](const TubePoint&) { return cplx(1.0, 0.0); }, grid[k], op.r,
                            dom, outer);
                        const IntegralResult num =
                            integrate_ball(f2sq, grid[k], op.r, dom, outer);
                        const double mean = num.value.real() / vol.value.real();
                        if (mean > worst) {
                          worst = mean;
                          worst_se = num.std_error / vol.value.real();
                        }
                      }
                      return std::make_pair(worst, worst_se);
                    };
                    const auto [b1, se1] = witness(ba_outer);
                    const auto [b2, se2] = witness(2 * ba_outer);
                    return make_check("decompose-ba-witness-" + name,
                                      "ball means of |f2|^p are finite and stable under "
                                      "sample doubling",
                                      b1, "reference", b2, se1 + se2, 0.30, 0.02);
                  }});
  }

  return ts;
}

// ---------------------------------------------------------------- divergence

std::vector<Task> divergence_tasks(const SuiteConfig& cfg) {
  const DomainConfig dom = cfg.domain;
  const int n = dom.n;
  const std::uint64_t seed = cfg.quad.seed;
  const QuadratureSpec quad = cfg.quad;
  const KernelParams kp{dom};
  const TubePoint base = base_point(n);
  const std::vector<double> radii = {10.0, 20.0, 40.0, 80.0, 160.0};

  Shared<DivergenceReport> probe([=] { return kernel_l1_divergence(kp, radii, quad); });

  std::vector<Task> ts;

  ts.push_back({"divergence-monotone", [=] {
                  const DivergenceReport& rep = probe.get();
                  long bad = 0;
                  for (std::size_t k = 0; k + 1 < rep.truncated.size(); ++k)
                    if (!(rep.truncated[k + 1] > rep.truncated[k])) ++bad;
                  return make_count_check(
                      "divergence-monotone",
                      "truncated |K(i,.)| masses strictly increase over 4 radius doublings "
                      "(common samples)",
                      bad, "identity");
                }});

  ts.push_back({"divergence-no-plateau", [=] {
                  const DivergenceReport& rep = probe.get();
                  double dmin = std::numeric_limits<double>::infinity();
                  double dmax = 0.0;
                  for (std::size_t k = 0; k + 1 < rep.truncated.size(); ++k) {
                    const double d = rep.truncated[k + 1] - rep.truncated[k];
                    dmin = std::min(dmin, d);
                    dmax = std::max(dmax, d);
                  }
                  long bad = 0;
                  if (!(dmin >= 0.3 * dmax)) ++bad;  // increments must not die down
                  if (!(rep.truncated.back() >= 1.2 * rep.truncated.front())) ++bad;
                  return make_count_check(
                      "divergence-no-plateau",
                      "increments of the truncated kernel mass stay comparable: no Cauchy "
                      "plateau",
                      bad, "reference");
                }});

  ts.push_back({"divergence-contrast-plateau", [=] {
                  const DivergenceReport& rep = probe.get();
                  std::vector<double> inc;
                  for (std::size_t k = 0; k + 1 < rep.contrast.size(); ++k)
                    inc.push_back(rep.contrast[k + 1] - rep.contrast[k]);
                  long bad = 0;
                  if (!(inc.back() <= 0.5 * inc.front())) ++bad;  // increments decay
                  if (!(inc.back() <= 0.05 * rep.contrast.back())) ++bad;
                  return make_count_check(
                      "divergence-contrast-plateau",
                      "the convergent contrast |rho(i,.)|^{-(n+2+alpha)} stabilizes under "
                      "the same truncations",
                      bad, "reference");
                }});

  struct Sym {
    const char* name;
    SymbolKind kind;
  };
  for (const Sym& sym : {Sym{"phase", SymbolKind::phase}, Sym{"smoothstep", SymbolKind::smoothstep}}) {
    const FunctionHandle f = make_bounded_symbol(sym.kind, dom);
    const std::string name = sym.name;

    ts.push_back({"modified-projection-zero-" + name, [=] {
                    const IntegralResult res = modified_project(f, base, kp, quad);
                    return make_check("modified-projection-zero-" + name,
                                      "the modified projection vanishes at the base point",
                                      0.0, "identity", std::abs(res.value), res.std_error,
                                      0.0, 1e-15);
                  }});

    ts.push_back({"modified-projection-gradient-" + name, [=] {
                    const QuadratureSpec spec_g = quad.with_samples(
                        std::max(20000L, std::min(50000L, quad.samples / 50)));
                    const std::vector<TubePoint> grid = make_grid(n, 20, seed);
                    const double cap = 100.0 * f.sup_bound.value_or(1.0);
                    long bad = 0;
                    for (const TubePoint& z : grid) {
                      const double g = modified_project_gradient(f, z, kp, spec_g);
                      if (!(std::isfinite(g) && g <= cap)) ++bad;
                    }
                    return make_count_check(
                        "modified-projection-gradient-" + name,
                        "sampled invariant gradient of the modified projection stays below "
                        "100 sup|f| across the grid",
                        bad, "reference");
                  }});
  }

  return ts;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "identities",  "jacobians",      "forelli-rudin", "metric",
      "gradient-laplacian", "kernels", "representation", "oscillation",
      "decomposition", "divergence"};
  return names;
}

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  std::vector<Task> tasks;
  if (cfg.suite == "identities") {
    tasks = identities_tasks(cfg);
  } else if (cfg.suite == "jacobians") {
    tasks = jacobians_tasks(cfg);
  } else if (cfg.suite == "forelli-rudin") {
    tasks = forelli_rudin_tasks(cfg);
  } else if (cfg.suite == "metric") {
    tasks = metric_tasks(cfg);
  } else if (cfg.suite == "gradient-laplacian") {
    tasks = gradient_laplacian_tasks(cfg);
  } else if (cfg.suite == "kernels") {
    tasks = kernels_tasks(cfg);
  } else if (cfg.suite == "representation") {
    tasks = representation_tasks(cfg);
  } else if (cfg.suite == "oscillation") {
    tasks = oscillation_tasks(cfg);
  } else if (cfg.suite == "decomposition") {
    tasks = decomposition_tasks(cfg);
  } else if (cfg.suite == "divergence") {
    tasks = divergence_tasks(cfg);
  } else {
    std::string known;
    for (const std::string& s : suite_names()) {
      if (!known.empty()) known += ", ";
      known += s;
    }
    throw ConfigError("unknown suite '" + cfg.suite + "' (expected one of: " + known + ")");
  }
  return run_tasks(tasks, cfg.jobs);
}

}  // namespace tubeb
