#include "expgraff/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "expgraff/errors.hpp"

namespace expgraff {

namespace {

constexpr double kSnapTol = 1e-12;

// Tolerance RREF with partial pivoting. The reduced form is unique for the
// row space, which is what makes the canonical basis below independent of
// the presenting frame; eliminated entries are written as exact zeros.
std::pair<Eigen::MatrixXd, int> rref(Eigen::MatrixXd mat, double tol) {
  const Eigen::Index rows = mat.rows(), cols = mat.cols();
  const double scale = mat.cwiseAbs().maxCoeff();
  if (scale == 0.0) return {mat, 0};
  const double cut = tol * scale * static_cast<double>(std::max(rows, cols));
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index piv = 0;
    const double mx = mat.col(col).tail(rows - r).cwiseAbs().maxCoeff(&piv);
    piv += r;
    if (mx <= cut) {
      mat.col(col).tail(rows - r).setZero();
      continue;
    }
    mat.row(r).swap(mat.row(piv));
    mat.row(r) /= mat(r, col);
    mat(r, col) = 1.0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      const double f = mat(i, col);
      if (f != 0.0) mat.row(i) -= f * mat.row(r);
      mat(i, col) = 0.0;
    }
    ++r;
  }
  return {mat, static_cast<int>(r)};
}

}  // namespace

AffineSubspace::AffineSubspace(Eigen::VectorXd base, Eigen::MatrixXd basis)
    : base_(std::move(base)), basis_(std::move(basis)) {
  if (base_.size() < 1) throw InputError("affine subspace needs ambient dimension at least 1");
  if (basis_.rows() != base_.size())
    throw InputError("basis rows must match the ambient dimension");
  if (basis_.cols() < 1 || basis_.cols() > basis_.rows())
    throw InputError("subspace dimension must satisfy 1 <= n <= ambient");
  if (!base_.allFinite() || !basis_.allFinite())
    throw InputError("affine subspace entries must be finite");
  const Eigen::MatrixXd gram = basis_.transpose() * basis_;
  if ((gram - Eigen::MatrixXd::Identity(dim(), dim())).cwiseAbs().maxCoeff() > 1e-12)
    throw InputError("basis columns must be orthonormal");
  if ((basis_.transpose() * base_).cwiseAbs().maxCoeff() > 1e-10)
    throw InputError("base point must be orthogonal to the directions");
}

AffineSubspace pi_projection(const QuotientVec& v0, const std::vector<QuotientVec>& frame,
                             double tol) {
  if (frame.empty()) throw InputError("projection needs a nonempty direction frame");
  const int m = v0.space()->quotient_dim();
  const int n = static_cast<int>(frame.size());
  Eigen::MatrixXd w(n, m);
  for (int k = 0; k < n; ++k) {
    if (!same_space(frame[static_cast<std::size_t>(k)].space(), v0.space()))
      throw InputError("projection frame must share the point's sample space");
    w.row(k) = frame[static_cast<std::size_t>(k)].diffs().transpose();
  }
  if (rank_with_tolerance(Eigen::MatrixXd(w.transpose()), tol) != n)
    throw InputError("projection frame is linearly dependent at tolerance");

  auto [r, rank] = rref(w, tol);
  if (rank != n)
    throw DegeneracyError("row reduction disagreed with the rank check at tolerance");

  // Orthonormalize the canonical row basis in order; the input rows are the
  // unique echelon basis of the span, so the output depends only on the span.
  Eigen::MatrixXd basis(m, n);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd x = r.row(k).transpose();
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < k; ++j) x -= basis.col(j).dot(x) * basis.col(j);
    const double nrm = x.norm();
    if (nrm == 0.0)
      throw DegeneracyError("echelon basis degenerated during orthonormalization");
    basis.col(k) = x / nrm;
  }

  Eigen::VectorXd base = v0.diffs() - basis * (basis.transpose() * v0.diffs());
  base -= basis * (basis.transpose() * base);
  const double snap = kSnapTol * (1.0 + v0.diffs().cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < base.size(); ++i)
    if (std::abs(base(i)) <= snap) base(i) = 0.0;
  return AffineSubspace(std::move(base), std::move(basis));
}

AffineSubspace graff_from_rep(const Representation& rep, double tol) {
  std::vector<QuotientVec> frame;
  frame.reserve(static_cast<std::size_t>(rep.dim()));
  for (int k = 0; k < rep.dim(); ++k)
    frame.push_back(quotient_project(rep.frame().function(k)));
  return pi_projection(quotient_project(rep.carrier()), frame, tol);
}

bool subspaces_equal(const AffineSubspace& s, const AffineSubspace& t, double tol) {
  if (s.ambient_dim() != t.ambient_dim())
    throw InputError("subspaces must share one ambient space");
  if (!(tol > 0)) throw InputError("subspace tolerance must be positive");
  if (s.dim() != t.dim()) return false;
  return (s.projector() - t.projector()).cwiseAbs().maxCoeff() <= tol &&
         (s.base() - t.base()).cwiseAbs().maxCoeff() <= tol;
}

GraffDimension graff_dimension(int n, int ambient_dim) {
  if (n < 1 || n > ambient_dim)
    throw InputError("affine subspace dimension must satisfy 1 <= n <= ambient");
  return GraffDimension{n, ambient_dim,
                        static_cast<long long>(n + 1) * static_cast<long long>(ambient_dim - n)};
}

ReducedRep first_stage_reduce(const Representation& rep) {
  std::vector<QuotientVec> frame;
  frame.reserve(static_cast<std::size_t>(rep.dim()));
  for (int k = 0; k < rep.dim(); ++k)
    frame.push_back(quotient_project(rep.frame().function(k)));
  return ReducedRep{quotient_project(rep.carrier()), std::move(frame)};
}

ReducedRep aff_dagger_act(const AffDagElement& aff, const ReducedRep& reduced) {
  const int n = static_cast<int>(reduced.frame.size());
  if (aff.dim() != n) throw InputError("affine element and reduced frame dimensions must match");
  const SampleSpacePtr& space = reduced.carrier.space();
  const int m = space->quotient_dim();
  Eigen::MatrixXd rows(n, m);
  for (int k = 0; k < n; ++k) {
    if (!same_space(reduced.frame[static_cast<std::size_t>(k)].space(), space))
      throw InputError("reduced data must share one sample space");
    rows.row(k) = reduced.frame[static_cast<std::size_t>(k)].diffs().transpose();
  }
  const Eigen::VectorXd carrier = reduced.carrier.diffs() + rows.transpose() * aff.u();
  const Eigen::MatrixXd moved = aff.a() * rows;
  std::vector<QuotientVec> frame;
  frame.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) frame.emplace_back(space, moved.row(k).transpose());
  return ReducedRep{QuotientVec(space, carrier), std::move(frame)};
}

bool stabilizer_is_trivial(const Representation& rep, double tol) {
  return stabilizer_is_trivial(rep.frame().rows(), tol);
}

bool stabilizer_is_trivial(const Eigen::MatrixXd& frame_rows, double tol) {
  const int n = static_cast<int>(frame_rows.rows());
  const int points = static_cast<int>(frame_rows.cols());
  if (n < 1 || points < 2) throw InputError("stabilizer needs n >= 1 functions on >= 2 points");
  if (!frame_rows.allFinite()) throw InputError("frame values must be finite");

  // Stationarity of (C, F) under (A, u, v, c) says <u, F(x)> + c = 0 and
  // sum_b A_ab F_b(x) + v_a = F_a(x) at every x. The identity always solves
  // the inhomogeneous system, so the solution space is {identity} exactly
  // when the coefficient matrix has full column rank. Unknown layout:
  // [A row-major | u | v | c].
  const int unknowns = n * n + 2 * n + 1;
  Eigen::MatrixXd big = Eigen::MatrixXd::Zero(points * (n + 1), unknowns);
  for (int i = 0; i < points; ++i) {
    for (int k = 0; k < n; ++k) big(i, n * n + k) = frame_rows(k, i);
    big(i, n * n + 2 * n) = 1.0;
  }
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < points; ++i) {
      const int row = points + a * points + i;
      for (int b = 0; b < n; ++b) big(row, a * n + b) = frame_rows(b, i);
      big(row, n * n + n + a) = 1.0;
    }
  return rank_with_tolerance(big, tol) == unknowns;
}

}  // namespace expgraff
