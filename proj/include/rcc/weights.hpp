#pragma once

#include "rcc/types.hpp"

namespace rcc {

enum class WeightKind {
  gaussian,  // exp(-zeta ||x_i - x_j||^2)
  robust,    // exp(-zeta sum_j min((x_ij - x_jj)^2, delta^2))
  uniform,   // all weights 1, the breakdown-analysis setting
};

struct WeightScheme {
  WeightKind kind = WeightKind::robust;
  double zeta = 0.01;
  double delta = 5.0;
  double w_min = 0.0;  // edges with w <= w_min are dropped; 0 keeps all pairs

  void validate() const;
};

/// exp(-zeta ||xi - xj||_2^2), in (0, 1].
double gaussian_weight(const Eigen::Ref<const RowVector>& xi,
                       const Eigen::Ref<const RowVector>& xj, double zeta);

/// Truncated weight exp(-zeta sum_j min((xi_j - xj_j)^2, delta^2)). Each
/// coordinate contributes at most delta^2 to the exponent, so a single
/// contaminated coordinate can change the weight by a factor of at most
/// exp(zeta delta^2) in either direction. The min form coincides with the
/// D1/D2 split off the |diff| = delta boundary and is continuous across it.
double robust_weight(const Eigen::Ref<const RowVector>& xi,
                     const Eigen::Ref<const RowVector>& xj, double zeta,
                     double delta);

/// Evaluates the scheme on all n(n-1)/2 pairs i < j and drops pairs with
/// w <= w_min.
WeightedEdgeSet build_edge_set(const DataMatrix& X, const WeightScheme& scheme);

}  // namespace rcc
