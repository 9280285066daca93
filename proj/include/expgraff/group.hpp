#pragma once

#include <Eigen/Dense>

#include <utility>

#include "expgraff/expfam.hpp"
#include "expgraff/function_space.hpp"

namespace expgraff {

// Reparametrization symmetry (A, u, v, c): A in GL(n), u, v in R^n, c in R.
// Composition and inverse follow the (n+2) x (n+2) block matrix
//   [ 1  u^T  c ]
//   [ 0   A   v ]
//   [ 0   0   1 ]
// under multiplication (embed_matrix realizes this, and the tests hold the
// component formulas to it). Only the left action on representations is
// implemented; the opposite convention would act on the right.
class GroupElement {
 public:
  GroupElement(Eigen::MatrixXd a, Eigen::VectorXd u, Eigen::VectorXd v, double c,
               double tol = kDefaultTol);

  static GroupElement identity(int n);

  int dim() const { return static_cast<int>(a_.rows()); }  // n
  const Eigen::MatrixXd& a() const { return a_; }
  const Eigen::VectorXd& u() const { return u_; }
  const Eigen::VectorXd& v() const { return v_; }
  double c() const { return c_; }

 private:
  Eigen::MatrixXd a_;
  Eigen::VectorXd u_, v_;
  double c_;
};

// (A, u) with A invertible; the affine factor of the semidirect splitting.
// Its product is (A', u') * (A, u) = (A'A, u + A^T u').
class AffDagElement {
 public:
  AffDagElement(Eigen::MatrixXd a, Eigen::VectorXd u, double tol = kDefaultTol);

  static AffDagElement identity(int n);

  int dim() const { return static_cast<int>(a_.rows()); }
  const Eigen::MatrixXd& a() const { return a_; }
  const Eigen::VectorXd& u() const { return u_; }

 private:
  Eigen::MatrixXd a_;
  Eigen::VectorXd u_;
};

// The translation factor (v, c) in R^n x R.
struct ShiftPart {
  Eigen::VectorXd v;
  double c = 0.0;
};

// lhs then rhs in matrix order: compose(g', g) embeds to E(g') * E(g).
// Components: (A'A, u + A^T u', v' + A'v, c' + c + <u', v>).
GroupElement compose(const GroupElement& lhs, const GroupElement& rhs);

// (A^{-1}, -(A^{-1})^T u, -A^{-1} v, -c + <u, A^{-1} v>).
GroupElement inverse(const GroupElement& g);

// The (n+2) x (n+2) block matrix above; the embedding is the oracle the
// component formulas are tested against.
Eigen::MatrixXd embed_matrix(const GroupElement& g);

// g . (C, F) = (C + <u, F> + c, AF + v); the result is again minimal.
Representation act(const GroupElement& g, const Representation& rep);

// g = join(split(g)): the semidirect factorization into (A, u) and (v, c).
std::pair<AffDagElement, ShiftPart> semidirect_split(const GroupElement& g);
GroupElement semidirect_join(const AffDagElement& aff, const ShiftPart& shift);

AffDagElement compose(const AffDagElement& lhs, const AffDagElement& rhs);
AffDagElement inverse(const AffDagElement& aff);

// The twist the semidirect product is built with:
// epsilon(A, u)(v, c) = (Av, <u, v> + c).
ShiftPart epsilon_apply(const AffDagElement& aff, const ShiftPart& shift);

}  // namespace expgraff
