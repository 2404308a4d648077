#include "boss/sem.hpp"

#include <cmath>

#include "boss/error.hpp"
#include "boss/rng.hpp"

namespace boss {

void SimSpec::validate() const {
  if (!(coef_low <= coef_high)) throw InputError("coefficient range is empty");
  if (!(var_low > 0.0) || !(var_low <= var_high)) {
    throw InputError("error variance range must satisfy 0 < low <= high");
  }
  if (sample_size < 1) throw InputError("sample size must be positive");
}

LinearSem::LinearSem(Dag dag, Eigen::MatrixXd coefficients, Eigen::VectorXd error_variances)
    : dag_(std::move(dag)),
      coefficients_(std::move(coefficients)),
      error_variances_(std::move(error_variances)) {
  const int p = dag_.size();
  if (coefficients_.rows() != p || coefficients_.cols() != p || error_variances_.size() != p) {
    throw InputError("SEM parameter dimensions do not match the graph");
  }
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (coefficients_(i, j) != 0.0 && !dag_.has_edge(j, i)) {
        throw InputError("coefficient on a non-edge " + dag_.name(j) + " --> " + dag_.name(i));
      }
    }
    if (!(error_variances_(i) > 0.0) || !std::isfinite(error_variances_(i))) {
      throw InputError("error variance of " + dag_.name(i) + " must be positive");
    }
  }
}

LinearSem parameterize_sem(const Dag& g, const SimSpec& spec) {
  spec.validate();
  Rng rng(derive_seed(spec.seed, "sem"));
  const int p = g.size();
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(p, p);
  for (auto [from, to] : g.edges()) {
    double c = rng.uniform(spec.coef_low, spec.coef_high);
    if (spec.coef_low > 0.0 && rng.coin()) c = -c;
    b(to, from) = c;
  }
  Eigen::VectorXd variances(p);
  for (int i = 0; i < p; ++i) variances(i) = rng.uniform(spec.var_low, spec.var_high);
  return LinearSem(g, std::move(b), std::move(variances));
}

Eigen::VectorXd standardized_error_variances(const Dag& g, const Eigen::MatrixXd& coefficients) {
  const int p = g.size();
  // Covariance built up node by node in topological order, where every
  // variable so far has unit variance.
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(p, p);
  Eigen::VectorXd omega(p);
  for (Node v : g.topological_order()) {
    const Eigen::VectorXd row = coefficients.row(v).transpose();
    const double explained = row.dot(cov * row);
    omega(v) = 1.0 - explained;
    if (!(omega(v) > 0.0)) {
      throw NumericError("cannot standardize " + g.name(v) + ": explained variance " +
                         std::to_string(explained) + " >= 1");
    }
    // cov(v, u) = sum_j B(v, j) cov(j, u) for u already placed.
    const Eigen::VectorXd cross = cov * row;
    cov.row(v) = cross.transpose();
    cov.col(v) = cross;
    cov(v, v) = 1.0;
  }
  return omega;
}

Eigen::MatrixXd population_covariance(const LinearSem& sem) {
  const int p = sem.dag().size();
  const Eigen::MatrixXd i_minus_b = Eigen::MatrixXd::Identity(p, p) - sem.coefficients();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(i_minus_b);
  if (!lu.isInvertible()) throw NumericError("I - B is singular");
  const Eigen::MatrixXd inv = lu.inverse();
  Eigen::MatrixXd sigma = inv * sem.error_variances().asDiagonal() * inv.transpose();
  return 0.5 * (sigma + sigma.transpose());
}

Dataset simulate_data(const LinearSem& sem, int n, std::uint64_t seed) {
  if (n < 1) throw InputError("sample size must be positive");
  const Dag& g = sem.dag();
  const int p = g.size();
  const auto order = g.topological_order();
  Eigen::VectorXd sd = sem.error_variances().cwiseSqrt();
  Rng rng(derive_seed(seed, "data"));
  Eigen::MatrixXd x(n, p);
  for (int r = 0; r < n; ++r) {
    for (Node v : order) {
      double value = sd(v) * rng.normal();
      for (Node par : g.parents(v)) value += sem.coefficient(par, v) * x(r, par);
      x(r, v) = value;
    }
  }
  return Dataset(g.names(), std::move(x));
}

double partial_correlation(const Eigen::MatrixXd& cov, Node x, Node y, const NodeSet& z) {
  const auto k = static_cast<Eigen::Index>(z.size());
  double sxx = cov(x, x), syy = cov(y, y), sxy = cov(x, y);
  if (k > 0) {
    Eigen::MatrixXd szz(k, k);
    Eigen::MatrixXd sz(k, 2);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) szz(i, j) = cov(z[i], z[j]);
      sz(i, 0) = cov(z[i], x);
      sz(i, 1) = cov(z[i], y);
    }
    Eigen::LDLT<Eigen::MatrixXd> ldlt(szz);
    const Eigen::VectorXd d = ldlt.vectorD();
    if (ldlt.info() != Eigen::Success || d.minCoeff() <= 1e-12 * std::max(1.0, d.maxCoeff())) {
      throw NumericError("singular conditioning set in partial correlation");
    }
    const Eigen::MatrixXd solved = ldlt.solve(sz);
    const Eigen::Matrix2d adj = sz.transpose() * solved;
    sxx -= adj(0, 0);
    syy -= adj(1, 1);
    sxy -= adj(0, 1);
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) {
    throw NumericError("partial correlation undefined: zero residual variance");
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace boss
