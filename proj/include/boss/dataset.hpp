#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace boss {

// n x p matrix of i.i.d. cases (rows) over named variables (columns), with
// column means and the biased (divide-by-n) covariance precomputed.
class Dataset {
 public:
  Dataset(std::vector<std::string> names, Eigen::MatrixXd values);

  const std::vector<std::string>& names() const { return names_; }
  int num_variables() const { return static_cast<int>(names_.size()); }
  int num_rows() const { return static_cast<int>(values_.rows()); }
  const Eigen::MatrixXd& values() const { return values_; }
  const Eigen::VectorXd& means() const { return means_; }
  const Eigen::MatrixXd& covariance() const { return covariance_; }

  // Header row of names, one case per line, no index column.
  std::string to_csv() const;
  static Dataset from_csv(std::string_view text);

 private:
  std::vector<std::string> names_;
  Eigen::MatrixXd values_;
  Eigen::VectorXd means_;
  Eigen::MatrixXd covariance_;
};

// Square covariance matrix with a header row, as written by covariance_to_csv.
std::string covariance_to_csv(const std::vector<std::string>& names, const Eigen::MatrixXd& cov);
std::pair<std::vector<std::string>, Eigen::MatrixXd> covariance_from_csv(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace boss
