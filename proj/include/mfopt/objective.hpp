// Copyright 2026 The mfopt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "mfopt/plant.hpp"
#include "mfopt/rng.hpp"
#include "mfopt/types.hpp"

namespace mfopt {

/// Steady-state objective Phi(u, y) = Phi1(u, y) + Phi2(u), with smooth Phi1
/// and an optional l1 part Phi2(u) = l1_weight() * |u|_1. Controllers and
/// oracles accept any implementation; the quadratic instance below is the
/// built-in.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual Eigen::Index input_dim() const = 0;

  /// Full objective Phi1 + Phi2.
  virtual double eval(const Eigen::VectorXd& u, const Eigen::VectorXd& y) const = 0;

  /// Smooth part Phi1 only.
  virtual double eval_smooth(const Eigen::VectorXd& u, const Eigen::VectorXd& y) const = 0;

  virtual double l1_weight() const { return 0.0; }

  virtual Eigen::VectorXd grad_u_smooth(const Eigen::VectorXd& u,
                                        const Eigen::VectorXd& y) const = 0;
  virtual Eigen::VectorXd grad_y_smooth(const Eigen::VectorXd& u,
                                        const Eigen::VectorXd& y) const = 0;
};

/// Phi(u, y) = u' M1 u + M2' u + |y|^2 + reg_weight |u|_1.
/// M1 must be symmetric positive semidefinite.
struct CompositeObjective final : public Objective {
  Eigen::MatrixXd M1;
  Eigen::VectorXd M2;
  double reg_weight = 0.0;

  CompositeObjective(Eigen::MatrixXd m1, Eigen::VectorXd m2, double reg);

  Eigen::Index input_dim() const override { return M2.size(); }
  double eval(const Eigen::VectorXd& u, const Eigen::VectorXd& y) const override;
  double eval_smooth(const Eigen::VectorXd& u, const Eigen::VectorXd& y) const override;
  double l1_weight() const override { return reg_weight; }
  Eigen::VectorXd grad_u_smooth(const Eigen::VectorXd& u,
                                const Eigen::VectorXd& y) const override;
  Eigen::VectorXd grad_y_smooth(const Eigen::VectorXd& u,
                                const Eigen::VectorXd& y) const override;
};

/// Reduced objective through the steady-state map: Phi(u, y_ss(u)).
double eval_reduced(const Objective& obj, const Plant& plant,
                    const Eigen::VectorXd& u);

/// Chain-rule gradient of the smooth part through the steady-state map:
/// grad_u Phi1 + H' grad_y Phi1.
Eigen::VectorXd grad_smooth_part(const Objective& obj, const Eigen::MatrixXd& H,
                                 const Eigen::VectorXd& u,
                                 const Eigen::VectorXd& y);

struct SmoothingSpec {
  double delta = 0.0;
  Smoothing distribution = Smoothing::gaussian;
  std::int64_t sample_count = 100000;
};

struct ValueEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

struct GradientOracleEstimate {
  Eigen::VectorXd gradient;
  Eigen::VectorXd std_error;  // componentwise
};

/// Monte Carlo mean of the smoothed reduced objective at w: the Gaussian
/// average for the gaussian law, the uniform-ball average for unit_sphere.
ValueEstimate smoothed_value_oracle(const Objective& obj, const Plant& plant,
                                    const SmoothingSpec& spec,
                                    const Eigen::VectorXd& w, Rng& rng);

/// Monte Carlo estimate of the gradient of the smoothed reduced objective.
/// gaussian law: averages (v/delta) (f(w + delta v) - f(w)) over v ~ N(0, I).
/// unit_sphere law: averages (p v/delta) f(w + delta v) over v uniform on the
/// sphere; this is the gradient of the ball-smoothed objective.
GradientOracleEstimate smoothed_grad_oracle(const Objective& obj,
                                            const Plant& plant,
                                            const SmoothingSpec& spec,
                                            const Eigen::VectorXd& w, Rng& rng);

/// Componentwise soft threshold: sign(u) max(|u| - threshold, 0).
Eigen::VectorXd prox_l1(const Eigen::VectorXd& u, double threshold);

struct ReferenceSolution {
  Eigen::VectorXd u_star;
  double phi_star = 0.0;
  double residual = 0.0;  // prox-gradient fixed-point residual at u_star
  std::int64_t iterations = 0;
};

/// Offline minimizer of the reduced objective (subject to the box when
/// present) by accelerated proximal gradient with backtracking and function
/// restarts, run to a 1e-12 successive-change / 1e-10 fixed-point residual,
/// capped at 1e6 iterations. Global optimum for the convex built-in.
ReferenceSolution reference_solution(
    const Objective& obj, const LinearPlant& plant,
    const std::optional<BoxConstraint>& box = std::nullopt);

struct LipschitzConstants {
  double M = 0.0;    // reduced objective, over the working region
  double M_y = 0.0;  // Phi with respect to y, over the working region
  double M_x = 0.0;  // steady-state map (from the plant)
  double M_g = 0.0;  // output map (from the plant)
};

/// Sampling region for Lipschitz estimates: the box when present, otherwise
/// a ball around `center`.
struct WorkingRegion {
  std::optional<BoxConstraint> box;
  Eigen::VectorXd center;
  double radius = 0.0;
};

/// Box region when a constraint exists, else a ball of radius
/// 10 |u0| + 10 centered at the reference minimizer.
WorkingRegion default_working_region(const ReferenceSolution& ref,
                                     const Eigen::VectorXd& u0,
                                     const std::optional<BoxConstraint>& box);

/// Sampled Lipschitz estimates over the region: M is the max smooth-part
/// gradient norm plus sqrt(p) * l1_weight; M_y the max |grad_y Phi1| at the
/// sampled steady states. M_x and M_g are computed exactly from the plant.
LipschitzConstants measure_lipschitz(const Objective& obj,
                                     const LinearPlant& plant,
                                     const WorkingRegion& region,
                                     std::int64_t samples, Rng& rng);

}  // namespace mfopt
