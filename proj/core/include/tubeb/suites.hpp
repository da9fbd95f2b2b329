#pragma once

#include <string>
#include <vector>

#include "tubeb/report.hpp"

namespace tubeb {

/** Names of the verification suites, in canonical order. */
const std::vector<std::string>& suite_names();

/**
 * Run one named suite. Deterministic given (suite, DomainConfig,
 * QuadratureSpec); any error inside a check is captured as a failed
 * CheckReport rather than propagating. Unknown suite names throw
 * ConfigError before any computation.
 */
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);

}  // namespace tubeb
