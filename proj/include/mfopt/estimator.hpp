// Copyright 2026 The mfopt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include <Eigen/Core>

#include "mfopt/rng.hpp"
#include "mfopt/types.hpp"

namespace mfopt {

/// Memory of the residual one-point scheme: the previous objective
/// evaluation is reused, so each update costs a single new evaluation.
struct EstimatorCache {
  double prev_eval = 0.0;
  Eigen::VectorXd prev_direction;
  bool initialized = false;
};

struct GradientEstimate {
  Eigen::VectorXd phi_tilde;
  Eigen::VectorXd direction_used;
  double fresh_eval = 0.0;
  /// Set when the evaluation difference is below float noise
  /// (|diff| < 1e3 * eps * |fresh_eval|); the estimate is still returned
  /// unchanged.
  bool cancellation_warning = false;
};

/// phi_tilde = (v / delta) (current_eval - prev_eval), then the cache is
/// updated to (current_eval, v). Directions are standard normal.
/// Throws BootstrapError when the cache has not been primed.
GradientEstimate residual_estimate_gaussian(EstimatorCache& cache, double delta,
                                            const Eigen::VectorXd& v,
                                            double current_eval);

/// phi_tilde = (p v / delta) (current_eval - prev_eval) for unit-norm v.
GradientEstimate residual_estimate_sphere(EstimatorCache& cache, double delta,
                                          const Eigen::VectorXd& v,
                                          double current_eval);

/// Fresh exploration direction: standard normal, or uniform on the sphere.
Eigen::VectorXd sample_direction(Smoothing law, Eigen::Index p, Rng& rng);

/// Forward-difference two-point estimate (v/delta)(xi(w + delta v) - xi(w)),
/// scaled by p for the sphere law. Baseline comparator for variance studies;
/// not used by any closed-loop controller (it would cost two actuation steps
/// per iteration).
Eigen::VectorXd two_point_estimate(
    const std::function<double(const Eigen::VectorXd&)>& xi,
    const Eigen::VectorXd& w, double delta, const Eigen::VectorXd& v,
    Smoothing law);

}  // namespace mfopt
