#pragma once

#include <Eigen/Dense>

#include <vector>

#include "expgraff/expfam.hpp"
#include "expgraff/function_space.hpp"
#include "expgraff/group.hpp"

namespace expgraff {

// Projector-comparison threshold for subspace equality.
inline constexpr double kDefaultSubspaceTol = 1e-9;

// n-dimensional affine subspace of R^m in canonical form: base is the
// minimum-norm point (orthogonal to the directions), basis has orthonormal
// columns spanning the direction space. The basis itself is canonical (a
// function of the subspace, not of its presentation), so equal subspaces
// print identically.
class AffineSubspace {
 public:
  AffineSubspace(Eigen::VectorXd base, Eigen::MatrixXd basis);

  int ambient_dim() const { return static_cast<int>(base_.size()); }  // m
  int dim() const { return static_cast<int>(basis_.cols()); }         // n
  const Eigen::VectorXd& base() const { return base_; }
  const Eigen::MatrixXd& basis() const { return basis_; }
  Eigen::MatrixXd projector() const { return basis_ * basis_.transpose(); }

 private:
  Eigen::VectorXd base_;
  Eigen::MatrixXd basis_;
};

struct GraffDimension {
  int n = 0;
  int ambient_dim = 0;
  long long value = 0;
};

// First-stage data: classes mod constants of C and of each F_k.
struct ReducedRep {
  QuotientVec carrier;
  std::vector<QuotientVec> frame;
};

// Canonical form of the affine subspace v0 + span(frame) in R^m. The basis
// comes from the reduced row echelon form of the frame (unique for the span)
// orthonormalized in order, so the result does not depend on which frame or
// which point presents the subspace.
AffineSubspace pi_projection(const QuotientVec& v0, const std::vector<QuotientVec>& frame,
                             double tol = kDefaultTol);

// Canonical form of [C] + span([F_1], ..., [F_n]) in C(Omega)/R; constant on
// each orbit of the symmetry group.
AffineSubspace graff_from_rep(const Representation& rep, double tol = kDefaultTol);

// Same affine subspace: equal dimensions, projectors and base points match
// within tol.
bool subspaces_equal(const AffineSubspace& s, const AffineSubspace& t,
                     double tol = kDefaultSubspaceTol);

// Dimension (n+1)(ambient_dim - n) of the space of n-dimensional affine
// subspaces; requires 1 <= n <= ambient_dim.
GraffDimension graff_dimension(int n, int ambient_dim);

// Quotient by the translation part: constants in C and in each F_k die here.
ReducedRep first_stage_reduce(const Representation& rep);

// Residual action on first-stage data: ([C] + <u, [F]>, A[F]).
ReducedRep aff_dagger_act(const AffDagElement& aff, const ReducedRep& reduced);

// Sets up the linear system for group elements fixing rep (<u,F> + c = 0 and
// AF + v = F) and reports whether its solution space is the identity alone.
// True for every minimal frame.
bool stabilizer_is_trivial(const Representation& rep, double tol = kDefaultTol);
// Raw-frame variant; rows need not form a valid Frame, so degenerate frames
// can be probed directly.
bool stabilizer_is_trivial(const Eigen::MatrixXd& frame_rows, double tol = kDefaultTol);

}  // namespace expgraff
