#pragma once

#include "rcc/clusters.hpp"
#include "rcc/io.hpp"
#include "rcc/simulate.hpp"
#include "rcc/types.hpp"
#include "rcc/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rcc {

struct PathPoint {
  double lambda = 0.0;
  int k = 0;
  double objective = 0.0;
  bool converged = false;
};

/// Log-spaced grid of `count` points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int count);

/// Default selection grid: 20 points spanning 4 decades.
std::vector<double> default_lambda_grid();

/// Solves the grid in ascending lambda order (cold starts unless warm_start)
/// and reports k and the objective at each point.
std::vector<PathPoint> solve_path(const DataMatrix& X,
                                  const WeightedEdgeSet& edges,
                                  const SolverConfig& base,
                                  const std::vector<double>& grid,
                                  double fuse_tol, bool warm_start = false);

struct LambdaSelection {
  double lambda = 0.0;
  bool exact = false;  // some grid lambda achieved exactly target_k
  ClusteringResult clustering;
};

/// Smallest grid lambda whose solution has exactly target_k clusters
/// (ascending scan, stops at the first hit). If no grid point hits the
/// target, falls back to the lambda minimizing |k - target_k|, smallest
/// lambda on ties.
LambdaSelection select_lambda(const DataMatrix& X, const WeightedEdgeSet& edges,
                              const SolverConfig& base,
                              const std::vector<double>& grid, int target_k,
                              double fuse_tol);

struct BenchmarkConfig {
  int reps = 10;
  int n = 50;
  int p = 20;
  std::uint64_t seed = 1;
  double tau = 3.0;
  double zeta = 0.01;
  double delta = 5.0;
  std::vector<double> lambda_grid = default_lambda_grid();
  double fuse_tol = 1e-4;
  int threads = 0;  // 0 = RCC_THREADS env or hardware concurrency
};

/// The six Table-style cells: gaussian noise at 0/6/10% contamination plus
/// clean t2 and log-normal noise, each solved with the three methods
/// (huber+robust weights, squared+gaussian weights, squared+robust weights).
/// Per replication, lambda is picked by grid search for k = 2. Rows come
/// back scenario-major, method-minor, in a fixed order.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig& cfg);

/// ARI values of one (scenario, method) cell, one entry per replication.
/// Exposed for the acceptance suite; run_benchmark aggregates these.
std::vector<double> benchmark_cell(const BenchmarkConfig& cfg,
                                   const ScenarioConfig& scenario,
                                   WeightKind weights, double tau);

/// The benchmark's scenario list in output order.
std::vector<std::pair<std::string, ScenarioConfig>> benchmark_scenarios(
    const BenchmarkConfig& cfg);

}  // namespace rcc
