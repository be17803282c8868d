#pragma once

#include "rcc/types.hpp"

#include <string>
#include <vector>

namespace rcc {

/// Parse failure with the offending location already in the message.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated numeric matrix, LF or CRLF endings, optional single
/// header row. Ragged rows and non-numeric cells raise ParseError with the
/// line (and column) in the message.
DataMatrix read_csv(const std::string& path, bool has_header);

/// Matrix as CSV, 17 significant digits, LF endings.
void write_matrix_csv(const Matrix& m, const std::string& path);

/// One integer label per line.
std::vector<int> read_labels(const std::string& path);
void write_labels(const std::vector<int>& labels, const std::string& path);

/// Result JSON with fixed key order: labels, k, centroids (row-major),
/// fused_edges, diagnostics {iterations, final_w_change, objective_trace}.
/// Floats carry 17 significant digits so the byte stream is identical
/// across runs for identical inputs.
void write_result(const ClusteringResult& result, const std::string& path);

struct BenchmarkRow {
  std::string scenario;
  std::string method;
  double mean_ari = 0.0;
  double se_ari = 0.0;
};

/// Mean and standard error (sample standard deviation / sqrt(count)) over
/// one cell's replications. Throws on an empty list.
BenchmarkRow aggregate_replications(const std::string& scenario,
                                    const std::string& method,
                                    const std::vector<double>& ari_values);

/// CSV with header scenario,method,mean_ari,se_ari.
void write_benchmark_table(const std::vector<BenchmarkRow>& rows,
                           const std::string& path);

}  // namespace rcc
