#include "expgraff/function_space.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace expgraff {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InputError(what);
}

}  // namespace

SampleSpace::SampleSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  require(labels_.size() >= 2, "sample space needs at least two outcomes");
  std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
  require(seen.size() == labels_.size(), "sample space labels must be distinct");
}

std::shared_ptr<const SampleSpace> SampleSpace::indexed(int size) {
  require(size >= 2, "sample space needs at least two outcomes");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) labels.push_back("x" + std::to_string(i));
  return std::make_shared<const SampleSpace>(std::move(labels));
}

bool same_space(const SampleSpacePtr& a, const SampleSpacePtr& b) {
  if (a == nullptr || b == nullptr) return false;
  return a.get() == b.get() || *a == *b;
}

FuncVec::FuncVec(SampleSpacePtr space, Eigen::VectorXd values)
    : space_(std::move(space)), values_(std::move(values)) {
  require(space_ != nullptr, "function needs a sample space");
  require(values_.size() == space_->size(), "function value count must match the sample space");
  require(values_.allFinite(), "function values must be finite");
}

QuotientVec::QuotientVec(SampleSpacePtr space, Eigen::VectorXd diffs)
    : space_(std::move(space)), diffs_(std::move(diffs)) {
  require(space_ != nullptr, "quotient vector needs a sample space");
  require(diffs_.size() == space_->quotient_dim(),
          "quotient vector length must be the sample space size minus one");
  require(diffs_.allFinite(), "quotient vector entries must be finite");
}

Frame::Frame(SampleSpacePtr space, Eigen::MatrixXd rows, double tol)
    : space_(std::move(space)), rows_(std::move(rows)) {
  require(space_ != nullptr, "frame needs a sample space");
  require(rows_.rows() >= 1, "frame needs at least one function");
  require(rows_.cols() == space_->size(), "frame row length must match the sample space");
  require(rows_.allFinite(), "frame values must be finite");
  if (rank_with_tolerance(Eigen::MatrixXd(rows_.transpose()), tol) != size())
    throw InputError("frame functions are linearly dependent at tolerance");
}

namespace {

Eigen::MatrixXd stack_rows(const std::vector<FuncVec>& functions) {
  if (functions.empty()) throw InputError("frame needs at least one function");
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(functions.size()), functions[0].values().size());
  for (std::size_t k = 0; k < functions.size(); ++k) {
    if (!same_space(functions[k].space(), functions[0].space()))
      throw InputError("frame functions must share one sample space");
    rows.row(static_cast<Eigen::Index>(k)) = functions[k].values().transpose();
  }
  return rows;
}

}  // namespace

Frame::Frame(const std::vector<FuncVec>& functions, double tol)
    : Frame(functions.empty() ? nullptr : functions[0].space(), stack_rows(functions), tol) {}

FuncVec Frame::function(int k) const {
  if (k < 0 || k >= size()) throw InputError("frame function index out of range");
  return FuncVec(space_, rows_.row(k).transpose());
}

MinimalFrame::MinimalFrame(SampleSpacePtr space, Eigen::MatrixXd rows, double tol)
    : Frame(std::move(space), std::move(rows), tol) {
  if (size() > this->space()->quotient_dim())
    throw InputError("a minimal frame admits at most |Omega| - 1 functions");
  if (!is_minimal_frame(*this, tol))
    throw InputError("frame is not minimal: {1, F_1, ..., F_n} dependent at tolerance");
}

MinimalFrame::MinimalFrame(const Frame& frame, double tol)
    : MinimalFrame(frame.space(), frame.rows(), tol) {}

QuotientVec quotient_project(const FuncVec& f) {
  const Eigen::VectorXd& v = f.values();
  return QuotientVec(f.space(), v.tail(v.size() - 1).array() - v(0));
}

int rank_with_tolerance(const Eigen::MatrixXd& columns, double tol) {
  require(tol > 0, "rank tolerance must be positive");
  if (columns.size() == 0) return 0;
  require(columns.allFinite(), "rank input must be finite");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  if (smax == 0.0) return 0;
  const double cut = tol * smax * static_cast<double>(std::max(columns.rows(), columns.cols()));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  return rank;
}

int rank_with_tolerance(const std::vector<Eigen::VectorXd>& vectors, double tol) {
  if (vectors.empty()) return 0;
  Eigen::MatrixXd columns(vectors[0].size(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != columns.rows())
      throw InputError("rank input vectors must have equal length");
    columns.col(static_cast<Eigen::Index>(i)) = vectors[i];
  }
  return rank_with_tolerance(columns, tol);
}

namespace {

// Columns of [1; F]: the constant row stacked over the frame rows.
Eigen::MatrixXd one_extended(const Frame& frame) {
  Eigen::MatrixXd b(frame.size() + 1, frame.space()->size());
  b.row(0).setOnes();
  b.bottomRows(frame.size()) = frame.rows();
  return b;
}

}  // namespace

bool is_minimal_frame(const Frame& frame, double tol) {
  return rank_with_tolerance(Eigen::MatrixXd(one_extended(frame).transpose()), tol) ==
         frame.size() + 1;
}

std::vector<int> select_pivot_indices(const MinimalFrame& frame, double tol) {
  require(tol > 0, "pivot tolerance must be positive");
  const Eigen::MatrixXd b = one_extended(frame);
  const int n = frame.size();
  const int cols = static_cast<int>(b.cols());
  const double cut =
      tol * b.colwise().norm().maxCoeff() * static_cast<double>(std::max(n + 1, cols));

  // In-order greedy: keep the first sample points whose [1; F] columns stay
  // independent at tolerance; two orthogonalization passes keep the rejected
  // residuals honest.
  Eigen::MatrixXd q(n + 1, n + 1);
  std::vector<int> indices;
  int kept = 0;
  for (int j = 0; j < cols && kept <= n; ++j) {
    Eigen::VectorXd r = b.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < kept; ++k) r -= q.col(k).dot(r) * q.col(k);
    const double nrm = r.norm();
    if (nrm > cut) {
      q.col(kept) = r / nrm;
      indices.push_back(j);
      ++kept;
    }
  }
  if (kept != n + 1)
    throw DegeneracyError("pivot search exhausted the sample space; frame minimality and the "
                          "tolerance regime are inconsistent");

  // The selection already guarantees this, but the contract wants it explicit.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(difference_matrix(frame, indices));
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv(0) == 0.0 || sv(sv.size() - 1) <= tol * sv(0) * static_cast<double>(n))
    throw DegeneracyError("selected pivot difference matrix failed its invertibility re-check");
  return indices;
}

namespace {

void check_indices(const std::vector<int>& indices, int count, int size) {
  if (static_cast<int>(indices.size()) != count)
    throw InputError("difference indices must number n + 1");
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 0 || indices[k] >= size)
      throw InputError("difference index out of range");
    if (k > 0 && indices[k] <= indices[k - 1])
      throw InputError("difference indices must be strictly increasing");
  }
}

}  // namespace

Eigen::MatrixXd difference_matrix(const Frame& frame, const std::vector<int>& indices) {
  const int n = frame.size();
  check_indices(indices, n + 1, frame.space()->size());
  const Eigen::MatrixXd& rows = frame.rows();
  Eigen::MatrixXd m(n, n);
  for (int b = 1; b <= n; ++b) m.col(b - 1) = rows.col(indices[static_cast<std::size_t>(b)]);
  m.colwise() -= Eigen::VectorXd(rows.col(indices[0]));
  return m;
}

Eigen::VectorXd difference_column(const FuncVec& f, const std::vector<int>& indices) {
  if (indices.size() < 2) throw InputError("difference indices must number n + 1");
  check_indices(indices, static_cast<int>(indices.size()), f.space()->size());
  Eigen::VectorXd d(static_cast<Eigen::Index>(indices.size()) - 1);
  for (std::size_t a = 1; a < indices.size(); ++a)
    d(static_cast<Eigen::Index>(a) - 1) = f(indices[a]) - f(indices[0]);
  return d;
}

}  // namespace expgraff
