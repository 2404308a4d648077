#include "boss/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "boss/error.hpp"

namespace boss {

Dataset::Dataset(std::vector<std::string> names, Eigen::MatrixXd values)
    : names_(std::move(names)), values_(std::move(values)) {
  if (static_cast<Eigen::Index>(names_.size()) != values_.cols()) {
    throw InputError("column count does not match variable name count");
  }
  if (values_.rows() < 1) throw InputError("dataset needs at least one row");
  if (!values_.allFinite()) throw InputError("dataset contains non-finite values");
  means_ = values_.colwise().mean().transpose();
  const Eigen::MatrixXd centered = values_.rowwise() - means_.transpose();
  covariance_ = (centered.transpose() * centered) / static_cast<double>(values_.rows());
}

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(sep, start);
    std::string_view cell = line.substr(start, end == std::string_view::npos ? line.size() - start
                                                                             : end - start);
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '"')) cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '"' || cell.back() == '\r')) {
      cell.remove_suffix(1);
    }
    out.emplace_back(cell);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

double parse_double(const std::string& cell, std::size_t line) {
  double v = 0.0;
  auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
    throw ParseError(line, "not a number: '" + cell + "'");
  }
  return v;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::pair<std::vector<std::string>, std::vector<std::vector<double>>> read_table(
    std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw ParseError(1, "empty CSV");
  auto names = split(lines[0], ',');
  for (const auto& n : names) {
    if (n.empty()) throw ParseError(1, "empty column name");
    if (std::count(names.begin(), names.end(), n) > 1) {
      throw ParseError(1, "duplicate column name '" + n + "'");
    }
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view l = lines[i];
    if (l.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto cells = split(l, ',');
    if (cells.size() != names.size()) {
      throw ParseError(i + 1, "expected " + std::to_string(names.size()) + " values, found " +
                                  std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      const double v = parse_double(c, i + 1);
      if (!std::isfinite(v)) throw ParseError(i + 1, "non-finite value");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return {std::move(names), std::move(rows)};
}

std::string header_line(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (j) out += ',';
    out += names[j];
  }
  out += '\n';
  return out;
}

std::string matrix_rows(const Eigen::MatrixXd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      append_double(out, m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string Dataset::to_csv() const { return header_line(names_) + matrix_rows(values_); }

Dataset Dataset::from_csv(std::string_view text) {
  auto [names, rows] = read_table(text);
  if (rows.empty()) throw ParseError(2, "CSV has no data rows");
  Eigen::MatrixXd values(rows.size(), names.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < names.size(); ++j) values(i, j) = rows[i][j];
  }
  return Dataset(std::move(names), std::move(values));
}

std::string covariance_to_csv(const std::vector<std::string>& names, const Eigen::MatrixXd& cov) {
  return header_line(names) + matrix_rows(cov);
}

std::pair<std::vector<std::string>, Eigen::MatrixXd> covariance_from_csv(std::string_view text) {
  auto [names, rows] = read_table(text);
  if (rows.size() != names.size()) {
    throw ParseError(rows.size() + 1, "covariance matrix must be square");
  }
  Eigen::MatrixXd cov(names.size(), names.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < names.size(); ++j) cov(i, j) = rows[i][j];
  }
  if (!cov.isApprox(cov.transpose(), 1e-10)) throw InputError("covariance matrix is not symmetric");
  return {std::move(names), std::move(cov)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace boss
