// Copyright 2026 The mfopt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace mfopt {

/// Invalid user-supplied configuration: bad dimensions, missing fields,
/// out-of-range parameters, malformed documents.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// The plant fails a stability prerequisite (spectral radius >= 1, or the
/// steady-state solve is numerically singular).
class StabilityError : public std::runtime_error {
 public:
  explicit StabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Lyapunov certificate construction failed or produced inconsistent
/// constants for the requested weight matrix.
class CertificateError : public std::runtime_error {
 public:
  explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

/// A model-free update was requested before the estimator cache was primed.
class BootstrapError : public std::logic_error {
 public:
  explicit BootstrapError(const std::string& what) : std::logic_error(what) {}
};

/// A planner assumption does not hold (mu >= 1, empty feasible step range).
class AssumptionError : public std::runtime_error {
 public:
  explicit AssumptionError(const std::string& what) : std::runtime_error(what) {}
};

/// Every replicate of a closed-loop run produced non-finite values.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative solver stopped before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mfopt
