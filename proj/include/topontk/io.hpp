#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "topontk/complex.hpp"

namespace topontk {

/// Shortest round-trip-safe decimal form ("%.17g"), locale independent.
std::string format_double(double v);

/// Minimal CSV writer: RFC 4180 quoting, '\n' line endings.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
};

/// Edge-by-edge kernel as CSV: header "edge,<i-j>,...", one row per edge.
void write_kernel_csv(std::ostream& out, const Eigen::MatrixXd& k,
                      const std::vector<Edge>& row_edges, const std::vector<Edge>& col_edges);

std::string edge_label(const Edge& e);

}  // namespace topontk
