#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "boss/ci_facts.hpp"
#include "boss/dataset.hpp"
#include "boss/graph.hpp"

namespace boss {

// Supplier of local scores score(v | S) and/or conditional independence
// judgements indep(x, y | Z). Implementations are read-only after construction
// and safe to share between threads; CachedSource is the exception.
class GrowShrinkSource {
 public:
  virtual ~GrowShrinkSource() = default;

  virtual const std::vector<std::string>& names() const = 0;
  int num_variables() const { return static_cast<int>(names().size()); }

  // True for the BIC sources; local_score throws InputError otherwise.
  virtual bool has_score() const { return false; }

  // Lower is better. Requires v not in parents.
  double local_score(Node v, const NodeSet& parents) const;
  // Requires x != y and z excluding both.
  bool independent(Node x, Node y, const NodeSet& z) const;

  virtual std::string describe() const = 0;

 protected:
  virtual double compute_local_score(Node v, const NodeSet& parents) const;
  virtual bool compute_independent(Node x, Node y, const NodeSet& z) const = 0;

 private:
  void check_node(Node v) const;
};

using SourcePtr = std::shared_ptr<const GrowShrinkSource>;

// Gaussian BIC as penalized deviance: n ln(RSS / n) + c (|S| + 1) ln(n), where
// RSS / n comes from regressing v on S through the covariance matrix.
// As a CI source, x _||_ y | Z iff adding y to Z does not lower the score of x.
class GaussianBic : public GrowShrinkSource {
 public:
  GaussianBic(std::vector<std::string> names, Eigen::MatrixXd covariance, double sample_size,
              double penalty_discount);

  const std::vector<std::string>& names() const override { return names_; }
  bool has_score() const override { return true; }
  std::string describe() const override;

  double sample_size() const { return n_; }
  double penalty_discount() const { return penalty_; }
  const Eigen::MatrixXd& covariance() const { return cov_; }

  // Residual variance of v regressed on parents (biased, i.e. RSS / n).
  // Throws NumericError on a singular system.
  double residual_variance(Node v, const NodeSet& parents) const;

 protected:
  double compute_local_score(Node v, const NodeSet& parents) const override;
  bool compute_independent(Node x, Node y, const NodeSet& z) const override;

 private:
  std::vector<std::string> names_;
  Eigen::MatrixXd cov_;
  double n_;
  double penalty_;
};

SourcePtr dataset_bic(const Dataset& data, double penalty_discount = 2.0);
SourcePtr population_bic(std::vector<std::string> names, Eigen::MatrixXd covariance,
                         double pseudo_sample_size = 1e6, double penalty_discount = 2.0);
SourcePtr dsep_oracle(Dag truth);
SourcePtr fact_oracle(FactList facts);
SourcePtr fisher_z(const Dataset& data, double alpha);
SourcePtr population_partial_corr(std::vector<std::string> names, Eigen::MatrixXd covariance,
                                  double epsilon);

// Named fixture as a source: "workedExample" is a d-separation oracle,
// "pathCancel" a population partial-correlation test (epsilon 1e-8), and
// "counterexampleK" its fact list. Throws InputError for other names.
SourcePtr fixture_source(std::string_view name);

// Free-function spellings of the two queries.
inline double local_bic(const GrowShrinkSource& s, Node v, const NodeSet& parents) {
  return s.local_score(v, parents);
}
inline bool independent(const GrowShrinkSource& s, Node x, Node y, const NodeSet& z) {
  return s.independent(x, y, z);
}

struct SetKey {
  std::uint64_t tag;
  NodeSet set;
  bool operator==(const SetKey&) const = default;
};

struct SetKeyHash {
  std::size_t operator()(const SetKey& k) const noexcept;
};

// Memoizes both queries of a wrapped source, keyed by (variable, set).
// Not thread-safe: one instance per search task.
class CachedSource : public GrowShrinkSource {
 public:
  explicit CachedSource(SourcePtr inner) : inner_(std::move(inner)) {}

  const std::vector<std::string>& names() const override { return inner_->names(); }
  bool has_score() const override { return inner_->has_score(); }
  std::string describe() const override { return inner_->describe() + " (cached)"; }
  const GrowShrinkSource& inner() const { return *inner_; }

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 protected:
  double compute_local_score(Node v, const NodeSet& parents) const override;
  bool compute_independent(Node x, Node y, const NodeSet& z) const override;

 private:
  SourcePtr inner_;
  mutable std::unordered_map<SetKey, double, SetKeyHash> scores_;
  mutable std::unordered_map<SetKey, bool, SetKeyHash> facts_;
  mutable std::size_t hits_ = 0;
  mutable std::size_t misses_ = 0;
};

}  // namespace boss
