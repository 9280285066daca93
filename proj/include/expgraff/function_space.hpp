#pragma once

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <vector>

#include "expgraff/errors.hpp"

namespace expgraff {

// Rank convention used throughout: singular values above
// tol * sigma_max * max(rows, cols) count toward the numerical rank.
inline constexpr double kDefaultTol = 1e-10;

// Finite set of outcomes {x_0, ..., x_m}, m >= 1. Labels are distinct and fix
// the index order used by every value vector.
class SampleSpace {
 public:
  explicit SampleSpace(std::vector<std::string> labels);

  // Placeholder labels x0, x1, ..., for generated spaces.
  static std::shared_ptr<const SampleSpace> indexed(int size);

  int size() const { return static_cast<int>(labels_.size()); }  // m + 1
  int quotient_dim() const { return size() - 1; }                // m
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const SampleSpace& a, const SampleSpace& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
};

using SampleSpacePtr = std::shared_ptr<const SampleSpace>;

// Same set of outcomes, by identity or by label equality.
bool same_space(const SampleSpacePtr& a, const SampleSpacePtr& b);

// Real-valued function on a sample space, stored as (f(x_0), ..., f(x_m)).
class FuncVec {
 public:
  FuncVec(SampleSpacePtr space, Eigen::VectorXd values);

  const SampleSpacePtr& space() const { return space_; }
  const Eigen::VectorXd& values() const { return values_; }
  double operator()(int i) const { return values_(i); }

 private:
  SampleSpacePtr space_;
  Eigen::VectorXd values_;
};

// Class of a function modulo constants, stored as the anchored differences
// (f(x_1)-f(x_0), ..., f(x_m)-f(x_0)).
class QuotientVec {
 public:
  QuotientVec(SampleSpacePtr space, Eigen::VectorXd diffs);

  const SampleSpacePtr& space() const { return space_; }
  const Eigen::VectorXd& diffs() const { return diffs_; }

 private:
  SampleSpacePtr space_;
  Eigen::VectorXd diffs_;
};

// Ordered tuple (F_1, ..., F_n) of functions on one space, linearly
// independent at tolerance. Row a of rows() holds the values of F_{a+1}.
class Frame {
 public:
  Frame(SampleSpacePtr space, Eigen::MatrixXd rows, double tol = kDefaultTol);
  explicit Frame(const std::vector<FuncVec>& functions, double tol = kDefaultTol);

  const SampleSpacePtr& space() const { return space_; }
  int size() const { return static_cast<int>(rows_.rows()); }  // n
  const Eigen::MatrixXd& rows() const { return rows_; }
  FuncVec function(int k) const;

 private:
  SampleSpacePtr space_;
  Eigen::MatrixXd rows_;
};

// Frame with {1, F_1, ..., F_n} linearly independent, so the natural
// parameters of the induced family are identifiable. Forces n <= m.
class MinimalFrame : public Frame {
 public:
  MinimalFrame(SampleSpacePtr space, Eigen::MatrixXd rows, double tol = kDefaultTol);
  explicit MinimalFrame(const Frame& frame, double tol = kDefaultTol);
};

// Anchored-difference representative of f modulo constants.
QuotientVec quotient_project(const FuncVec& f);

// Numerical rank of the column space.
int rank_with_tolerance(const Eigen::MatrixXd& columns, double tol = kDefaultTol);
int rank_with_tolerance(const std::vector<Eigen::VectorXd>& vectors, double tol = kDefaultTol);

// True iff {1, F_1, ..., F_n} has rank n+1 at tolerance.
bool is_minimal_frame(const Frame& frame, double tol = kDefaultTol);

// n+1 strictly increasing sample indices i_0 < ... < i_n whose difference
// matrix is invertible. Greedy scan in sample order: the first column of
// [1; F] that stays independent at tolerance is kept. Deterministic; not
// necessarily lexicographically minimal once tolerance rejects a nearly
// dependent column. The result is re-checked for invertibility.
std::vector<int> select_pivot_indices(const MinimalFrame& frame, double tol = kDefaultTol);

// n x n matrix with entry (a, b) = F_{a+1}(x_{i_{b+1}}) - F_{a+1}(x_{i_0}).
Eigen::MatrixXd difference_matrix(const Frame& frame, const std::vector<int>& indices);

// n-vector with entry a = f(x_{i_{a+1}}) - f(x_{i_0}), same convention as
// difference_matrix.
Eigen::VectorXd difference_column(const FuncVec& f, const std::vector<int>& indices);

}  // namespace expgraff
