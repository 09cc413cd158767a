#include "topontk/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "topontk/error.hpp"

namespace topontk {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // also folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      out_ << c;
      continue;
    }
    out_ << '"';
    for (char ch : c) {
      if (ch == '"') out_ << '"';
      out_ << ch;
    }
    out_ << '"';
  }
  out_ << '\n';
}

std::string edge_label(const Edge& e) {
  return std::to_string(e[0]) + "-" + std::to_string(e[1]);
}

void write_kernel_csv(std::ostream& out, const Eigen::MatrixXd& k,
                      const std::vector<Edge>& row_edges, const std::vector<Edge>& col_edges) {
  if (k.rows() != static_cast<Eigen::Index>(row_edges.size()) ||
      k.cols() != static_cast<Eigen::Index>(col_edges.size())) {
    throw DimensionMismatch("kernel shape does not match edge labels");
  }
  CsvWriter csv(out);
  std::vector<std::string> header{"edge"};
  for (const auto& e : col_edges) header.push_back(edge_label(e));
  csv.row(header);
  for (Eigen::Index i = 0; i < k.rows(); ++i) {
    std::vector<std::string> r{edge_label(row_edges[i])};
    for (Eigen::Index j = 0; j < k.cols(); ++j) r.push_back(format_double(k(i, j)));
    csv.row(r);
  }
}

}  // namespace topontk
