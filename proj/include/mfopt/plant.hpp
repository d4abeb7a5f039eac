// Copyright 2026 The mfopt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>

#include <Eigen/Core>
#include <Eigen/LU>

#include "mfopt/rng.hpp"
#include "mfopt/types.hpp"

namespace mfopt {

struct PlantState {
  Eigen::VectorXd x;
  std::int64_t k = 0;
};

/// Discrete-time plant interface. Implementations must be exponentially
/// stable under any constant input, with a unique steady state per input.
/// Stability certificates for user-supplied plants are the caller's
/// responsibility; only the linear instance below ships with one.
class Plant {
 public:
  virtual ~Plant() = default;

  virtual const PlantDims& dims() const = 0;

  /// One transition from `state` under input `u`. Returns the successor
  /// state and the output measured at the successor (the measurement that
  /// reflects `u`).
  virtual std::pair<PlantState, Eigen::VectorXd> step(
      const PlantState& state, const Eigen::VectorXd& u) const = 0;

  /// Steady state (x_ss, y_ss) under constant input `u` and the current
  /// disturbance.
  virtual std::pair<Eigen::VectorXd, Eigen::VectorXd> steady_state(
      const Eigen::VectorXd& u) const = 0;
};

/// Linear plant
///   x' = A x + B u + E d,   y = C x + D d,
/// with spectral radius of A strictly below one. Immutable after
/// construction except for the disturbance, so instances can be copied into
/// worker threads freely.
class LinearPlant final : public Plant {
 public:
  LinearPlant(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::MatrixXd C,
              Eigen::MatrixXd D, Eigen::MatrixXd E, Eigen::VectorXd d);

  const PlantDims& dims() const override { return dims_; }
  const Eigen::MatrixXd& A() const { return A_; }
  const Eigen::MatrixXd& B() const { return B_; }
  const Eigen::MatrixXd& C() const { return C_; }
  const Eigen::MatrixXd& D() const { return D_; }
  const Eigen::MatrixXd& E() const { return E_; }

  const Eigen::VectorXd& disturbance() const { return d_; }
  void set_disturbance(const Eigen::VectorXd& d);

  std::pair<PlantState, Eigen::VectorXd> step(
      const PlantState& state, const Eigen::VectorXd& u) const override;

  /// x_ss = (I - A)^{-1} (B u + E d), y_ss = C x_ss + D d. Verifies the
  /// fixed-point residual and throws StabilityError when the solve is
  /// numerically singular.
  std::pair<Eigen::VectorXd, Eigen::VectorXd> steady_state(
      const Eigen::VectorXd& u) const override;

  /// Steady-state input-output sensitivity H = C (I - A)^{-1} B (cached).
  const Eigen::MatrixXd& sensitivity() const { return sens_; }

  /// Constant part of the steady-state output: y_ss(0) = C (I-A)^{-1} E d + D d.
  Eigen::VectorXd output_offset() const;

  double spectral_radius() const { return rho_; }

  /// Lipschitz constant of u -> x_ss(u): the operator norm of (I - A)^{-1} B.
  double lipschitz_xss() const;

  /// Lipschitz constant of x -> y: the operator norm of C.
  double lipschitz_output() const;

 private:
  PlantDims dims_;
  Eigen::MatrixXd A_, B_, C_, D_, E_;
  Eigen::VectorXd d_;
  Eigen::PartialPivLU<Eigen::MatrixXd> ia_lu_;  // factorization of I - A
  Eigen::MatrixXd sens_;
  double rho_ = 0.0;
};

/// Spectral-radius estimate by power iteration. Intended for (entrywise)
/// nonnegative matrices, whose dominant eigenvalue is real and nonnegative.
double power_iteration_radius(const Eigen::MatrixXd& A, int max_iters = 500,
                              double rel_tol = 1e-12);

/// Random plant with all matrix entries drawn U(0,1) (draw order: A row by
/// row, then B, C, D, E) and A rescaled so its spectral radius matches the
/// target. The disturbance starts at zero.
LinearPlant make_random_plant(const PlantDims& dims,
                              double spectral_radius_target, Rng& rng);

/// Entrywise relative perturbation: H_ij (1 + eps_ij) with
/// eps ~ U(-relative_bound, relative_bound).
Eigen::MatrixXd perturb_sensitivity(const Eigen::MatrixXd& H,
                                    double relative_bound, Rng& rng);

/// Componentwise clamp of u onto the box.
Eigen::VectorXd saturate(const Eigen::VectorXd& u, const BoxConstraint& box);

/// Quadratic Lyapunov certificate V(x,u,d) = (x - x_ss)' P (x - x_ss) with
///   alpha1 |x - x_ss|^2 <= V <= alpha2 |x - x_ss|^2
///   V(x', u, d) - V(x, u, d) <= -alpha3 |x - x_ss|^2
/// and the settling-rate constant mu = (2 alpha2 / alpha1)(1 - alpha3/alpha2).
struct LyapunovCertificate {
  Eigen::MatrixXd P;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
  double mu = 0.0;
};

/// Solves A' P A - P = -Q by the Smith doubling iteration (requires
/// rho(A) < 1; Q symmetric). The residual is verified to 1e-8.
Eigen::MatrixXd solve_discrete_lyapunov(const Eigen::MatrixXd& A,
                                        const Eigen::MatrixXd& Q);

/// Certificate from the Lyapunov equation with weight Q (positive definite):
/// alpha1 = lambda_min(P), alpha2 = lambda_max(P), alpha3 = lambda_min(Q).
/// Throws CertificateError if alpha3 > alpha2 (pick a different Q).
LyapunovCertificate lyapunov_certificate(const LinearPlant& plant,
                                         const Eigen::MatrixXd& Q);

double lyapunov_value(const LyapunovCertificate& cert, const LinearPlant& plant,
                      const Eigen::VectorXd& x, const Eigen::VectorXd& u);

}  // namespace mfopt
