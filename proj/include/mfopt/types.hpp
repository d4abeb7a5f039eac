// Copyright 2026 The mfopt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "mfopt/errors.hpp"

namespace mfopt {

/// Problem dimensions: state n, input p, output q, disturbance r.
struct PlantDims {
  Eigen::Index n = 0;
  Eigen::Index p = 0;
  Eigen::Index q = 0;
  Eigen::Index r = 0;

  void validate() const;
  bool operator==(const PlantDims&) const = default;
};

/// Axis-aligned box { u : lower <= u <= upper }.
struct BoxConstraint {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  BoxConstraint() = default;
  BoxConstraint(Eigen::VectorXd lo, Eigen::VectorXd hi);

  Eigen::Index dim() const { return lower.size(); }
  bool contains(const Eigen::VectorXd& u, double tol = 0.0) const;
  Eigen::VectorXd clamp(const Eigen::VectorXd& u) const;
  Eigen::VectorXd midpoint() const { return 0.5 * (lower + upper); }
  double diameter() const { return (upper - lower).norm(); }
};

/// Perturbation law for smoothing and exploration directions.
///
/// gaussian: directions are standard normal; the smoothed objective is the
/// Gaussian average of radius delta.
/// unit_sphere: directions are uniform on the unit sphere; the matching
/// smoothed objective averages over the closed unit ball of radius delta.
enum class Smoothing { gaussian, unit_sphere };

}  // namespace mfopt
