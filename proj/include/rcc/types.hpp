#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rcc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;

/// Sentinel for the squared-error branch: tau = +inf disables the linear
/// tail of the Huber loss everywhere.
inline constexpr double kTauInf = std::numeric_limits<double>::infinity();

/// Thrown on malformed dimensions or invalid parameter values.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n x p observations, rows are samples. Entries must be finite, n >= 2.
struct DataMatrix {
  Matrix values;

  explicit DataMatrix(Matrix v) : values(std::move(v)) {
    if (values.rows() < 2 || values.cols() < 1) {
      throw DimensionError("DataMatrix requires n >= 2 rows and p >= 1 columns");
    }
    if (!values.allFinite()) {
      throw DimensionError("DataMatrix entries must be finite");
    }
  }

  Eigen::Index n() const { return values.rows(); }
  Eigen::Index p() const { return values.cols(); }
};

/// Estimated centroid rows, same shape as the paired DataMatrix.
struct CentroidMatrix {
  Matrix values;

  explicit CentroidMatrix(Matrix v) : values(std::move(v)) {
    if (!values.allFinite()) {
      throw DimensionError("CentroidMatrix entries must be finite");
    }
  }

  Eigen::Index n() const { return values.rows(); }
  Eigen::Index p() const { return values.cols(); }
};

/// One fusion-penalty edge: i < j, weight strictly positive.
struct Edge {
  int i = 0;
  int j = 0;
  double w = 0.0;
};

/// Pairs (i, j, w) defining the fusion graph. Stored sorted by (i, j) so
/// the row order of the difference operator is deterministic. Zero-weight
/// pairs are omitted rather than stored.
class WeightedEdgeSet {
 public:
  WeightedEdgeSet(int node_count, std::vector<Edge> edges);

  int node_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  /// True when every pair i < j is present (the paper's all-pairs E).
  bool is_complete() const {
    return static_cast<long long>(edges_.size()) ==
           static_cast<long long>(n_) * (n_ - 1) / 2;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Tuning parameters for one solve.
struct SolverConfig {
  double lambda = 1.0;   // fusion strength, >= 0
  double tau = 3.0;      // Huber crossover, > 0 or +inf
  double rho = 1.0;      // ADMM penalty parameter, > 0
  double tol = 1e-6;     // stopping threshold on ||W_t - W_{t-1}||_F
  int max_iter = 10000;
  // Dual ascent step. The printed algorithm scales the dual updates by rho;
  // the standard scaled-form step is 1 and is the default. Set dual_step =
  // rho to reproduce the printed update exactly.
  double dual_step = 1.0;

  void validate() const;
};

/// Primal blocks U, W, V and dual blocks Y, Z of the splitting, plus the
/// per-iteration stopping statistic and objective value.
struct SolverState {
  Matrix U;  // n x p
  Matrix W;  // n x p
  Matrix V;  // E x p
  Matrix Y;  // E x p
  Matrix Z;  // n x p
  int iter = 0;
  double w_change = std::numeric_limits<double>::infinity();
  double objective = std::numeric_limits<double>::quiet_NaN();
};

struct Diagnostics {
  int iterations = 0;
  double final_w_change = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> objective_trace;
};

/// Cluster assignment extracted from a converged solve.
struct ClusteringResult {
  Matrix centroids;                            // n x p
  std::vector<int> labels;                     // cluster ids 0..k-1
  std::vector<std::pair<int, int>> fused_edges;
  int k = 0;
  Diagnostics diagnostics;
};

/// Full robust convex clustering objective,
///   sum_ij l_tau(X_ij - U_ij) + lambda * sum_{(i,j)} w_ij ||U_i - U_j||_2.
double objective(const DataMatrix& X, const CentroidMatrix& U,
                 const WeightedEdgeSet& edges, const SolverConfig& cfg);

}  // namespace rcc
