#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace teldq {

/// Canonical float formatting for emitted tables: scientific notation with
/// 10 significant digits, so repeated runs diff byte-identically.
std::string format_float(double v);

/// Simple in-memory table; every cell is already formatted.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const std::string& path, const Table& table);

/// Same content as the CSV: an array of one object per row, keyed by the
/// column names.
void write_json(const std::string& path, const Table& table);

void write_table(const std::string& path_base, const std::string& format,
                 const Table& table);

void write_matrix(const std::string& path_base, const std::string& format,
                  const Eigen::MatrixXd& m);

}  // namespace teldq
