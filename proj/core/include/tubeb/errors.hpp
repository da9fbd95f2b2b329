#pragma once

#include <stdexcept>
#include <string>

namespace tubeb {

/** Invalid user-facing configuration (bad dimension, weight, suite name, flag). */
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/** A point violates a domain invariant (outside the tube or the ball). */
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/** No contour radius keeps the full polydisc inside the domain. */
struct ContourEscapesDomain : std::runtime_error {
  explicit ContourEscapesDomain(const std::string& what) : std::runtime_error(what) {}
};

/** Finite-difference step would underflow the distance to the boundary. */
struct StepTooSmall : std::runtime_error {
  explicit StepTooSmall(const std::string& what) : std::runtime_error(what) {}
};

/** An evaluation produced NaN/Inf where a finite value is required. */
struct NonFiniteError : std::runtime_error {
  explicit NonFiniteError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tubeb
