#pragma once

#include "rcc/solver.hpp"
#include "rcc/types.hpp"

#include <utility>
#include <vector>

namespace rcc {

/// Edges declared fused by a solve; always a subset of the solve's edges.
struct FusionGraph {
  int n = 0;
  std::vector<std::pair<int, int>> fused;
};

/// Edge (i, j) counts as fused when its V row is exactly zero (the group
/// soft-threshold output is exact) or, as a fallback for near-converged
/// runs, when ||U_i - U_j||_2 <= fuse_tol * (1 + ||U||_F / n).
FusionGraph detect_fusions(const SolveReport& report,
                           const WeightedEdgeSet& edges, double fuse_tol);

/// Labels are connected components of the fusion graph, ids assigned by
/// smallest member row index. When average_centroids is set, each cluster's
/// centroid rows are replaced by their within-cluster mean; the default
/// reports the raw U rows.
ClusteringResult extract_clusters(const SolveReport& report,
                                  const WeightedEdgeSet& edges,
                                  double fuse_tol = 1e-4,
                                  bool average_centroids = false);

/// k = number of distinct labels = number of connected components.
int count_clusters(const ClusteringResult& result);

}  // namespace rcc
