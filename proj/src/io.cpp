#include "teldq/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace teldq {

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9e", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  return out;
}

}  // namespace

void write_csv(const std::string& path, const Table& table) {
  auto out = open_out(path);
  for (size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << "\n";
  }
}

void write_json(const std::string& path, const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      obj[table.columns[c]] = row[c];
    }
    rows.push_back(std::move(obj));
  }
  open_out(path) << rows.dump(2) << "\n";
}

void write_table(const std::string& path_base, const std::string& format,
                 const Table& table) {
  if (format == "csv") {
    write_csv(path_base + ".csv", table);
  } else if (format == "json") {
    write_json(path_base + ".json", table);
  } else {
    throw std::invalid_argument("unknown output format '" + format +
                                "' (expected csv or json)");
  }
}

void write_matrix(const std::string& path_base, const std::string& format,
                  const Eigen::MatrixXd& m) {
  Table t;
  t.columns.reserve(m.cols());
  for (long j = 0; j < m.cols(); ++j) t.columns.push_back("c" + std::to_string(j));
  t.rows.reserve(m.rows());
  for (long i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    row.reserve(m.cols());
    for (long j = 0; j < m.cols(); ++j) row.push_back(format_float(m(i, j)));
    t.rows.push_back(std::move(row));
  }
  write_table(path_base, format, t);
}

}  // namespace teldq
