#pragma once

#include "rcc/types.hpp"

#include <cstdint>
#include <vector>

namespace rcc {

enum class NoiseKind { gaussian, student_t2, lognormal };

struct ScenarioConfig {
  int n = 50;  // even
  int p = 20;  // even
  NoiseKind noise = NoiseKind::gaussian;
  double contam_frac = 0.0;      // fraction of observations contaminated
  double contam_var_frac = 0.2;  // fraction of variables replaced per row
  double contam_lo = 10.0;
  double contam_hi = 20.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SimulatedDataset {
  DataMatrix X;
  std::vector<int> true_labels;      // 0 for the first n/2 rows, 1 for the rest
  Matrix true_centroids;             // 2 x p
  std::vector<int> contaminated_rows;  // sorted
};

/// Two-cluster model: centroid rows U1 ~ N(0, I) and U2 ~ N(mu, I) with
/// mu = (+3 ... +3, -3 ... -3), elementwise noise from the chosen family,
/// then round(contam_frac * n) uniformly chosen rows get round(contam_var_frac
/// * p) uniformly chosen coordinates replaced by Uniform(lo, hi) draws. One
/// seeded generator drives centroids, noise, row choice, coordinate choice
/// and contamination values, in that order, so output is bit-reproducible.
SimulatedDataset generate(const ScenarioConfig& cfg);

}  // namespace rcc
