#pragma once

#include "rcc/types.hpp"

#include <cmath>

namespace rcc {

/// Robustification parameter of the Huber loss. tau = +inf selects the
/// squared-error branch everywhere.
struct HuberParams {
  double tau = 3.0;

  explicit HuberParams(double t) : tau(t) {
    if (!(tau > 0.0)) {
      throw DimensionError("HuberParams: tau must be positive (or +inf)");
    }
  }
};

/// l_tau(a): a^2/2 inside [-tau, tau], tau*|a| - tau^2/2 outside.
inline double huber_loss(double a, HuberParams params) {
  const double abs_a = std::abs(a);
  if (abs_a <= params.tau) {
    return 0.5 * a * a;
  }
  return params.tau * abs_a - 0.5 * params.tau * params.tau;
}

/// d/da l_tau(a) = clamp(a, -tau, tau). Well defined everywhere; the loss
/// is C^1 with derivative +-tau at the junctions.
inline double huber_derivative(double a, HuberParams params) {
  if (a > params.tau) return params.tau;
  if (a < -params.tau) return -params.tau;
  return a;
}

/// S(a, b) = sign(a) * max(|a| - b, 0), b >= 0.
inline double soft_threshold(double a, double b) {
  const double shrunk = std::abs(a) - b;
  if (shrunk <= 0.0) return 0.0;
  return a < 0.0 ? -shrunk : shrunk;
}

/// Minimizer of l_tau(x - w) + (rho/2) (w - u_minus_z)^2 over w.
/// Quadratic branch when the residual |rho (x - u_minus_z) / (1 + rho)|
/// stays within tau (ties included), linear branch otherwise. tau = +inf
/// always takes the quadratic branch.
inline double w_update_scalar(double x, double u_minus_z, double rho,
                              HuberParams params) {
  const double residual = rho * (x - u_minus_z) / (1.0 + rho);
  if (std::abs(residual) <= params.tau) {
    return (x + rho * u_minus_z) / (1.0 + rho);
  }
  return x - soft_threshold(x - u_minus_z, params.tau / rho);
}

/// Group soft-threshold [1 - threshold/||e||_2]_+ e, the prox of
/// threshold * ||.||_2. Returns the zero vector whenever ||e||_2 <=
/// threshold, including e = 0 (0/0 never forms).
inline RowVector group_shrink(const Eigen::Ref<const RowVector>& e,
                              double threshold) {
  const double norm = e.norm();
  if (norm <= threshold) {
    return RowVector::Zero(e.size());
  }
  return (1.0 - threshold / norm) * e;
}

}  // namespace rcc
