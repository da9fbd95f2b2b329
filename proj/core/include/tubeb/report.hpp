#pragma once

#include <string>
#include <vector>

#include "tubeb/domain.hpp"
#include "tubeb/quadrature.hpp"

namespace tubeb {

/**
 * One verification check. `pass` holds iff
 *   |observed - expected| <= tol,  tol = max(3*stderr, rel_tol*|expected|, abs_tol),
 * frozen into `tol` at construction time.
 */
struct CheckReport {
  std::string id;
  std::string anchor;      // stable name of the property being checked
  double expected = 0.0;
  std::string provenance;  // "identity" | "closed-form" | "reference"
  double observed = 0.0;
  double std_error = 0.0;  // serialized as "stderr"
  double tol = 0.0;
  bool pass = false;
  double seconds = 0.0;
};

/** Build a CheckReport applying the tolerance rule. */
CheckReport make_check(std::string id, std::string anchor, double expected,
                       std::string provenance, double observed, double std_error,
                       double rel_tol, double abs_tol = 0.0);

/** Count-style convenience: expected 0 violations, pass iff observed == 0. */
CheckReport make_count_check(std::string id, std::string anchor, long violations,
                             std::string provenance);

struct SuiteConfig {
  std::string suite;
  DomainConfig domain;
  QuadratureSpec quad;
  double rel_tol = 0.02;
  std::string out_path;        // empty: stdout only
  std::string format = "json";  // "json" | "csv"
  int jobs = 1;

  void validate() const;
};

bool all_pass(const std::vector<CheckReport>& checks);

/** Shortest round-trip-exact decimal form (17 significant digits). */
std::string format_double(double v);

/** Deterministic JSON document; field order fixed, numbers via format_double. */
std::string to_json(const SuiteConfig& cfg, const std::vector<CheckReport>& checks);

/**
 * CSV with a header row; numeric fields match the JSON byte-for-byte. Text
 * fields containing commas, quotes, or newlines are double-quoted.
 */
std::string to_csv(const std::vector<CheckReport>& checks);

/** Write `content` to `path`, surfacing IO failures with path context. */
void write_file(const std::string& path, const std::string& content);

}  // namespace tubeb
