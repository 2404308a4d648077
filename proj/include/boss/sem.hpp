#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "boss/dataset.hpp"
#include "boss/graph.hpp"

namespace boss {

// Coefficient magnitudes are drawn from [coef_low, coef_high]. When coef_low > 0
// each sign is a fair coin flip; otherwise the draw is plain uniform.
struct SimSpec {
  double coef_low = 0.2;
  double coef_high = 0.8;
  double var_low = 1.0;
  double var_high = 3.0;
  int sample_size = 1000;
  std::uint64_t seed = 0;

  void validate() const;
};

// Linear-Gaussian structural equation model X = B X + e, e ~ N(0, diag(error_variances)).
// B(i, j) holds the coefficient of edge j --> i and is zero off the edges.
class LinearSem {
 public:
  LinearSem(Dag dag, Eigen::MatrixXd coefficients, Eigen::VectorXd error_variances);

  const Dag& dag() const { return dag_; }
  const Eigen::MatrixXd& coefficients() const { return coefficients_; }
  const Eigen::VectorXd& error_variances() const { return error_variances_; }
  double coefficient(Node from, Node to) const { return coefficients_(to, from); }

 private:
  Dag dag_;
  Eigen::MatrixXd coefficients_;
  Eigen::VectorXd error_variances_;
};

LinearSem parameterize_sem(const Dag& g, const SimSpec& spec);

// Error variances that give every variable unit marginal variance under the
// given coefficients. Throws NumericError if some node cannot be standardized.
Eigen::VectorXd standardized_error_variances(const Dag& g, const Eigen::MatrixXd& coefficients);

// (I - B)^-1 Omega (I - B)^-T
Eigen::MatrixXd population_covariance(const LinearSem& sem);

// Rows are sampled in topological order; identical seeds give identical data.
Dataset simulate_data(const LinearSem& sem, int n, std::uint64_t seed);

// Partial correlation of (x, y) given z from a covariance matrix.
// Throws NumericError when the conditioning block is singular.
double partial_correlation(const Eigen::MatrixXd& cov, Node x, Node y, const NodeSet& z);

}  // namespace boss
