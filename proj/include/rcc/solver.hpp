#pragma once

#include "rcc/types.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rcc {

/// Raised when a solver block picks up a non-finite value (misconfigured
/// rho, overflowing data). Carries the iteration and the offending block.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(int iteration, std::string block)
      : std::runtime_error("non-finite value in block " + block +
                           " at iteration " + std::to_string(iteration)),
        iteration(iteration),
        block(std::move(block)) {}

  int iteration;
  std::string block;
};

struct SolveReport {
  SolverState state;
  bool converged = false;
  int iterations = 0;
  std::vector<double> objective_trace;
  std::vector<double> v_residuals;  // ||V - EU||_F per iteration
  std::vector<double> w_residuals;  // ||W - U||_F per iteration
  double kkt_residual = std::numeric_limits<double>::quiet_NaN();
};

/// U = W = X, V = E U, duals zero.
SolverState init_state(const DataMatrix& X, const WeightedEdgeSet& edges);

/// ADMM on the splitting
///   min sum_i l_tau(X_i - W_i) + lambda sum w_ij ||V_ij||_2
///   s.t. U_i = W_i,  U_i - U_j = V_ij,
/// iterating U, W, V then the dual blocks Y, Z until
/// ||W_t - W_{t-1}||_F <= tol or max_iter. Non-convergence is reported, not
/// thrown; non-finite blocks throw DivergenceError.
SolveReport solve(const DataMatrix& X, const WeightedEdgeSet& edges,
                  const SolverConfig& cfg);

/// Norm of a near-minimal subgradient of the objective at U: the Huber
/// gradient plus, per edge, the unit-direction term when U_i != U_j and the
/// best element of the lambda*w ball otherwise (chosen by cyclic projection
/// against the smooth remainder). Zero at a minimizer.
double kkt_residual(const DataMatrix& X, const WeightedEdgeSet& edges,
                    const SolverConfig& cfg, const CentroidMatrix& U);

}  // namespace rcc
