#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tubeb/errors.hpp"
#include "tubeb/report.hpp"
#include "tubeb/suites.hpp"

namespace {

std::string joined_suites() {
  std::string out;
  for (const std::string& s : tubeb::suite_names()) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tubeb;

  SuiteConfig cfg;
  double kappa = 0.0;

  CLI::App app{"tubeverify: verification suites for the tube-domain Bergman toolkit"};
  app.add_option("suite", cfg.suite, "suite to run (" + joined_suites() + ")")->required();
  app.add_option("--n", cfg.domain.n, "complex dimension")->capture_default_str();
  app.add_option("--alpha", cfg.domain.alpha, "weight exponent (> -1)")->capture_default_str();
  app.add_option("--samples", cfg.quad.samples, "Monte-Carlo samples per integral")
      ->capture_default_str();
  app.add_option("--seed", cfg.quad.seed, "base RNG seed")->capture_default_str();
  CLI::Option* kappa_opt =
      app.add_option("--kappa", kappa, "radial importance exponent (defaults to alpha)");
  app.add_option("--rel-tol", cfg.rel_tol, "relative tolerance for value checks")
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "run this many checks in parallel")
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "also write the report to this path");
  app.add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean, bad flags are config errors
  }

  if (*kappa_opt) cfg.quad.kappa = kappa;

  try {
    if (const char* env = std::getenv("TUBEVERIFY_SEED")) {
      std::size_t used = 0;
      const std::string text(env);
      unsigned long long value = 0;
      try {
        value = std::stoull(text, &used);
      } catch (const std::exception&) {
        throw ConfigError("TUBEVERIFY_SEED must be an unsigned integer, got '" + text + "'");
      }
      if (used != text.size()) {
        throw ConfigError("TUBEVERIFY_SEED must be an unsigned integer, got '" + text + "'");
      }
      cfg.quad.seed = value;
    }

    cfg.validate();
    const std::vector<CheckReport> checks = run_suite(cfg);
    const std::string doc = (cfg.format == "csv") ? to_csv(checks) : to_json(cfg, checks);
    std::cout << doc;
    if (!cfg.out_path.empty()) write_file(cfg.out_path, doc);
    return all_pass(checks) ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}
