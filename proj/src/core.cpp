#include "rcc/types.hpp"

#include "rcc/huber.hpp"

#include <algorithm>

namespace rcc {

WeightedEdgeSet::WeightedEdgeSet(int node_count, std::vector<Edge> edges)
    : n_(node_count), edges_(std::move(edges)) {
  if (n_ < 2) {
    throw DimensionError("WeightedEdgeSet requires at least 2 nodes");
  }
  for (const Edge& e : edges_) {
    if (e.i < 0 || e.i >= e.j || e.j >= n_) {
      throw DimensionError("edge endpoints must satisfy 0 <= i < j < n");
    }
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw DimensionError("edge weights must be finite and positive");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t r = 1; r < edges_.size(); ++r) {
    if (edges_[r - 1].i == edges_[r].i && edges_[r - 1].j == edges_[r].j) {
      throw DimensionError("duplicate edge (" + std::to_string(edges_[r].i) +
                           ", " + std::to_string(edges_[r].j) + ")");
    }
  }
}

void SolverConfig::validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DimensionError("lambda must be finite and nonnegative");
  }
  if (!(tau > 0.0)) {
    throw DimensionError("tau must be positive (or +inf)");
  }
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DimensionError("rho must be finite and positive");
  }
  if (!(tol > 0.0)) {
    throw DimensionError("tol must be positive");
  }
  if (max_iter < 1) {
    throw DimensionError("max_iter must be at least 1");
  }
  if (!(dual_step > 0.0) || !std::isfinite(dual_step)) {
    throw DimensionError("dual_step must be finite and positive");
  }
}

double objective(const DataMatrix& X, const CentroidMatrix& U,
                 const WeightedEdgeSet& edges, const SolverConfig& cfg) {
  if (X.n() != U.n() || X.p() != U.p()) {
    throw DimensionError("objective: X and U shapes differ");
  }
  if (edges.node_count() != X.n()) {
    throw DimensionError("objective: edge set node count does not match X");
  }
  cfg.validate();

  const HuberParams params(cfg.tau);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < X.n(); ++i) {
    for (Eigen::Index j = 0; j < X.p(); ++j) {
      loss += huber_loss(X.values(i, j) - U.values(i, j), params);
    }
  }
  double penalty = 0.0;
  for (const Edge& e : edges.edges()) {
    penalty += e.w * (U.values.row(e.i) - U.values.row(e.j)).norm();
  }
  return loss + cfg.lambda * penalty;
}

}  // namespace rcc
