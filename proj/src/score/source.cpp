#include "boss/source.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/distributions/normal.hpp>

#include "boss/error.hpp"
#include "boss/fixtures.hpp"
#include "boss/rng.hpp"
#include "boss/sem.hpp"

namespace boss {

void GrowShrinkSource::check_node(Node v) const {
  if (v < 0 || v >= num_variables()) {
    throw InputError("variable index " + std::to_string(v) + " out of range");
  }
}

double GrowShrinkSource::local_score(Node v, const NodeSet& parents) const {
  check_node(v);
  for (Node p : parents) {
    check_node(p);
    if (p == v) throw InputError("variable " + names()[v] + " listed among its own parents");
  }
  return compute_local_score(v, parents);
}

bool GrowShrinkSource::independent(Node x, Node y, const NodeSet& z) const {
  check_node(x);
  check_node(y);
  if (x == y) throw InputError("independence query needs two distinct variables");
  for (Node w : z) {
    check_node(w);
    if (w == x || w == y) throw InputError("conditioning set contains a queried variable");
  }
  return compute_independent(x, y, z);
}

double GrowShrinkSource::compute_local_score(Node, const NodeSet&) const {
  throw InputError(describe() + " does not provide local scores");
}

// ---------------------------------------------------------------------------

GaussianBic::GaussianBic(std::vector<std::string> names, Eigen::MatrixXd covariance,
                         double sample_size, double penalty_discount)
    : names_(std::move(names)), cov_(std::move(covariance)), n_(sample_size),
      penalty_(penalty_discount) {
  if (cov_.rows() != cov_.cols() || cov_.rows() != static_cast<Eigen::Index>(names_.size())) {
    throw InputError("covariance dimensions do not match variable names");
  }
  if (!(penalty_ > 0.0)) throw InputError("penalty discount must be positive");
  if (!(n_ >= 1.0)) throw InputError("sample size must be at least 1");
}

std::string GaussianBic::describe() const {
  std::ostringstream ss;
  ss << "Gaussian BIC (n = " << n_ << ", penalty discount = " << penalty_ << ")";
  return ss.str();
}

double GaussianBic::residual_variance(Node v, const NodeSet& parents) const {
  const auto k = static_cast<Eigen::Index>(parents.size());
  double rss = cov_(v, v);
  if (k > 0) {
    Eigen::MatrixXd a(k, k);
    Eigen::VectorXd b(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) a(i, j) = cov_(parents[i], parents[j]);
      b(i) = cov_(parents[i], v);
    }
    Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
    const Eigen::VectorXd d = ldlt.vectorD();
    if (ldlt.info() != Eigen::Success || d.minCoeff() <= 1e-12 * std::max(1.0, d.maxCoeff())) {
      std::string set;
      for (Node p : parents) set += (set.empty() ? "" : ",") + names_[p];
      throw NumericError("singular regression of " + names_[v] + " on {" + set + "}");
    }
    rss -= b.dot(ldlt.solve(b));
  }
  if (!(rss > 0.0)) {
    throw NumericError("zero residual variance regressing " + names_[v]);
  }
  return rss;
}

double GaussianBic::compute_local_score(Node v, const NodeSet& parents) const {
  const double k = static_cast<double>(parents.size());
  return n_ * std::log(residual_variance(v, parents)) + penalty_ * (k + 1.0) * std::log(n_);
}

bool GaussianBic::compute_independent(Node x, Node y, const NodeSet& z) const {
  NodeSet with = z;
  with.insert(std::lower_bound(with.begin(), with.end(), y), y);
  return !(compute_local_score(x, with) < compute_local_score(x, z));
}

namespace {

class DsepOracle : public GrowShrinkSource {
 public:
  explicit DsepOracle(Dag g) : g_(std::move(g)) {}
  const std::vector<std::string>& names() const override { return g_.names(); }
  std::string describe() const override { return "d-separation oracle"; }

 protected:
  bool compute_independent(Node x, Node y, const NodeSet& z) const override {
    return d_separated(g_, x, y, z);
  }

 private:
  Dag g_;
};

class FactOracle : public GrowShrinkSource {
 public:
  explicit FactOracle(FactList facts) : facts_(std::move(facts)) {}
  const std::vector<std::string>& names() const override { return facts_.names(); }
  std::string describe() const override { return "independence fact list"; }

 protected:
  bool compute_independent(Node x, Node y, const NodeSet& z) const override {
    return facts_.contains(x, y, z);
  }

 private:
  FactList facts_;
};

class FisherZ : public GrowShrinkSource {
 public:
  FisherZ(std::vector<std::string> names, Eigen::MatrixXd cov, int n, double alpha)
      : names_(std::move(names)), cov_(std::move(cov)), n_(n), alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
    critical_ = boost::math::quantile(boost::math::normal(), 1.0 - alpha / 2.0);
  }
  const std::vector<std::string>& names() const override { return names_; }
  std::string describe() const override {
    return "Fisher Z test (alpha = " + std::to_string(alpha_) + ")";
  }

 protected:
  bool compute_independent(Node x, Node y, const NodeSet& z) const override {
    const double dof = n_ - static_cast<double>(z.size()) - 3.0;
    if (dof < 1.0) throw NumericError("too few samples for Fisher Z with this conditioning set");
    const double r = partial_correlation(cov_, x, y, z);
    if (std::abs(r) >= 1.0) return false;
    return std::abs(std::atanh(r)) * std::sqrt(dof) < critical_;
  }

 private:
  std::vector<std::string> names_;
  Eigen::MatrixXd cov_;
  int n_;
  double alpha_;
  double critical_ = 0.0;
};

class PopulationPartialCorr : public GrowShrinkSource {
 public:
  PopulationPartialCorr(std::vector<std::string> names, Eigen::MatrixXd cov, double eps)
      : names_(std::move(names)), cov_(std::move(cov)), eps_(eps) {
    if (!(eps > 0.0)) throw InputError("epsilon must be positive");
    if (cov_.rows() != static_cast<Eigen::Index>(names_.size()) || cov_.rows() != cov_.cols()) {
      throw InputError("covariance dimensions do not match variable names");
    }
  }
  const std::vector<std::string>& names() const override { return names_; }
  std::string describe() const override { return "population partial correlation"; }

 protected:
  bool compute_independent(Node x, Node y, const NodeSet& z) const override {
    return std::abs(partial_correlation(cov_, x, y, z)) < eps_;
  }

 private:
  std::vector<std::string> names_;
  Eigen::MatrixXd cov_;
  double eps_;
};

}  // namespace

SourcePtr dataset_bic(const Dataset& data, double penalty_discount) {
  return std::make_shared<GaussianBic>(data.names(), data.covariance(),
                                       static_cast<double>(data.num_rows()), penalty_discount);
}

SourcePtr population_bic(std::vector<std::string> names, Eigen::MatrixXd covariance,
                         double pseudo_sample_size, double penalty_discount) {
  return std::make_shared<GaussianBic>(std::move(names), std::move(covariance),
                                       pseudo_sample_size, penalty_discount);
}

SourcePtr dsep_oracle(Dag truth) { return std::make_shared<DsepOracle>(std::move(truth)); }

SourcePtr fact_oracle(FactList facts) { return std::make_shared<FactOracle>(std::move(facts)); }

SourcePtr fisher_z(const Dataset& data, double alpha) {
  return std::make_shared<FisherZ>(data.names(), data.covariance(), data.num_rows(), alpha);
}

SourcePtr population_partial_corr(std::vector<std::string> names, Eigen::MatrixXd covariance,
                                  double epsilon) {
  return std::make_shared<PopulationPartialCorr>(std::move(names), std::move(covariance), epsilon);
}

SourcePtr fixture_source(std::string_view name) {
  if (name == "workedExample") return dsep_oracle(worked_example_dag());
  if (name == "pathCancel") {
    const LinearSem sem = path_cancel_sem();
    return population_partial_corr(sem.dag().names(), population_covariance(sem), 1e-8);
  }
  return fact_oracle(ci_fixture(name).facts);
}

// ---------------------------------------------------------------------------

std::size_t SetKeyHash::operator()(const SetKey& k) const noexcept {
  std::uint64_t h = mix64(k.tag);
  for (Node v : k.set) h = mix64(h ^ static_cast<std::uint64_t>(v));
  return static_cast<std::size_t>(h);
}

double CachedSource::compute_local_score(Node v, const NodeSet& parents) const {
  SetKey key{static_cast<std::uint64_t>(v), parents};
  if (auto it = scores_.find(key); it != scores_.end()) {
    ++hits_;
    return it->second;
  }
  ++misses_;
  const double s = inner_->local_score(v, parents);
  scores_.emplace(std::move(key), s);
  return s;
}

bool CachedSource::compute_independent(Node x, Node y, const NodeSet& z) const {
  const auto lo = static_cast<std::uint64_t>(std::min(x, y));
  const auto hi = static_cast<std::uint64_t>(std::max(x, y));
  // The score-based test is asymmetric in (x, y); keep the pair ordered as asked.
  const std::uint64_t tag =
      has_score() ? (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint64_t>(y)
                  : (lo << 32) | hi;
  SetKey key{tag, z};
  if (auto it = facts_.find(key); it != facts_.end()) {
    ++hits_;
    return it->second;
  }
  ++misses_;
  const bool r = inner_->independent(x, y, z);
  facts_.emplace(std::move(key), r);
  return r;
}

}  // namespace boss
