#pragma once

#include "rcc/types.hpp"

#include <vector>

namespace rcc {

/// The pairwise-difference operator E (one row per edge, +1 at column i and
/// -1 at column j) together with a solver for (E^T E + I) X = B.
///
/// E is never materialized: apply/apply_transpose walk the edge list in
/// O(E p). E^T E is the unweighted Laplacian of the edge-support graph, so
/// E^T E + I is symmetric positive definite for any edge set. For the
/// complete graph, E^T E + I = (n+1) I - 11^T and the closed form
/// (E^T E + I)^{-1} = (I + 11^T) / (n+1) replaces the factorization.
class DifferenceOperator {
 public:
  explicit DifferenceOperator(const WeightedEdgeSet& edges);

  int node_count() const { return n_; }
  Eigen::Index edge_count() const { return static_cast<Eigen::Index>(pairs_.size()); }
  bool uses_closed_form() const { return complete_; }

  /// (E U) row for edge (i, j) is U_i - U_j.
  Matrix apply(const Matrix& U) const;

  /// E^T V: row i accumulates +V_e over edges (i, j) and -V_e over (j, i).
  Matrix apply_transpose(const Matrix& V) const;

  /// Solves (E^T E + I) X = B, exact up to factorization round-off.
  Matrix solve_normal(const Matrix& B) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  bool complete_ = false;
  Eigen::LLT<Matrix> llt_;  // built only when the closed form does not apply
};

}  // namespace rcc
