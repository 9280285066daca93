#include "expgraff/group.hpp"

#include <cmath>
#include <utility>

#include "expgraff/errors.hpp"

namespace expgraff {

namespace {

// Invertibility at tolerance: smallest singular value above tol * largest.
void require_invertible(const Eigen::MatrixXd& a, double tol, const char* what) {
  if (a.rows() < 1 || a.rows() != a.cols()) throw InputError("matrix must be square, n >= 1");
  if (!a.allFinite()) throw InputError("matrix entries must be finite");
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv(0) == 0.0 || sv(sv.size() - 1) <= tol * sv(0)) throw InputError(what);
}

}  // namespace

GroupElement::GroupElement(Eigen::MatrixXd a, Eigen::VectorXd u, Eigen::VectorXd v, double c,
                           double tol)
    : a_(std::move(a)), u_(std::move(u)), v_(std::move(v)), c_(c) {
  require_invertible(a_, tol, "group element needs invertible A at tolerance");
  if (u_.size() != a_.rows() || v_.size() != a_.rows())
    throw InputError("u and v must have length n");
  if (!u_.allFinite() || !v_.allFinite() || !std::isfinite(c_))
    throw InputError("group element entries must be finite");
}

GroupElement GroupElement::identity(int n) {
  if (n < 1) throw InputError("group dimension must be at least 1");
  return GroupElement(Eigen::MatrixXd::Identity(n, n), Eigen::VectorXd::Zero(n),
                      Eigen::VectorXd::Zero(n), 0.0);
}

AffDagElement::AffDagElement(Eigen::MatrixXd a, Eigen::VectorXd u, double tol)
    : a_(std::move(a)), u_(std::move(u)) {
  require_invertible(a_, tol, "affine element needs invertible A at tolerance");
  if (u_.size() != a_.rows()) throw InputError("u must have length n");
  if (!u_.allFinite()) throw InputError("affine element entries must be finite");
}

AffDagElement AffDagElement::identity(int n) {
  if (n < 1) throw InputError("group dimension must be at least 1");
  return AffDagElement(Eigen::MatrixXd::Identity(n, n), Eigen::VectorXd::Zero(n));
}

GroupElement compose(const GroupElement& lhs, const GroupElement& rhs) {
  if (lhs.dim() != rhs.dim()) throw InputError("group elements must share one dimension");
  return GroupElement(lhs.a() * rhs.a(),
                      rhs.u() + rhs.a().transpose() * lhs.u(),
                      lhs.v() + lhs.a() * rhs.v(),
                      lhs.c() + rhs.c() + lhs.u().dot(rhs.v()));
}

GroupElement inverse(const GroupElement& g) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(g.a(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv(0) == 0.0 || sv(sv.size() - 1) <= kDefaultTol * sv(0))
    throw ConditioningError("group inverse hit a near-singular A");
  const Eigen::MatrixXd ainv = svd.solve(Eigen::MatrixXd::Identity(g.dim(), g.dim()));
  return GroupElement(ainv, -ainv.transpose() * g.u(), -ainv * g.v(),
                      -g.c() + g.u().dot(ainv * g.v()));
}

Eigen::MatrixXd embed_matrix(const GroupElement& g) {
  const int n = g.dim();
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n + 2, n + 2);
  e(0, 0) = 1.0;
  e.block(0, 1, 1, n) = g.u().transpose();
  e(0, n + 1) = g.c();
  e.block(1, 1, n, n) = g.a();
  e.block(1, n + 1, n, 1) = g.v();
  e(n + 1, n + 1) = 1.0;
  return e;
}

Representation act(const GroupElement& g, const Representation& rep) {
  if (g.dim() != rep.dim())
    throw InputError("group element and representation dimensions must match");
  const Eigen::MatrixXd& rows = rep.frame().rows();
  const Eigen::VectorXd new_c =
      (rep.carrier().values() + rows.transpose() * g.u()).array() + g.c();
  Eigen::MatrixXd new_rows = g.a() * rows;
  new_rows.colwise() += g.v();
  return Representation(FuncVec(rep.space(), new_c), MinimalFrame(rep.space(), new_rows));
}

std::pair<AffDagElement, ShiftPart> semidirect_split(const GroupElement& g) {
  return {AffDagElement(g.a(), g.u()), ShiftPart{g.v(), g.c()}};
}

GroupElement semidirect_join(const AffDagElement& aff, const ShiftPart& shift) {
  return GroupElement(aff.a(), aff.u(), shift.v, shift.c);
}

AffDagElement compose(const AffDagElement& lhs, const AffDagElement& rhs) {
  if (lhs.dim() != rhs.dim()) throw InputError("affine elements must share one dimension");
  return AffDagElement(lhs.a() * rhs.a(), rhs.u() + rhs.a().transpose() * lhs.u());
}

AffDagElement inverse(const AffDagElement& aff) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(aff.a(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv(0) == 0.0 || sv(sv.size() - 1) <= kDefaultTol * sv(0))
    throw ConditioningError("affine inverse hit a near-singular A");
  const Eigen::MatrixXd ainv = svd.solve(Eigen::MatrixXd::Identity(aff.dim(), aff.dim()));
  return AffDagElement(ainv, -ainv.transpose() * aff.u());
}

ShiftPart epsilon_apply(const AffDagElement& aff, const ShiftPart& shift) {
  if (shift.v.size() != aff.dim()) throw InputError("shift and affine dimensions must match");
  return ShiftPart{aff.a() * shift.v, aff.u().dot(shift.v) + shift.c};
}

}  // namespace expgraff
