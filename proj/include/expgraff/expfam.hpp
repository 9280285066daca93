#pragma once

#include <Eigen/Dense>

#include <optional>

#include "expgraff/function_space.hpp"

namespace expgraff {

// Membership accepts when the infinity norm of the quotient least-squares
// residual is at most this.
inline constexpr double kDefaultMembershipTol = 1e-8;

// Pair (C, F) presenting the family p(x; theta) proportional to
// exp(C(x) + <theta, F(x)>) on a common sample space.
class Representation {
 public:
  Representation(FuncVec carrier, MinimalFrame frame);

  const SampleSpacePtr& space() const { return carrier_.space(); }
  int dim() const { return frame_.size(); }  // n
  const FuncVec& carrier() const { return carrier_; }  // C, the log base weight
  const MinimalFrame& frame() const { return frame_; }

 private:
  FuncVec carrier_;
  MinimalFrame frame_;
};

// log sum_x exp(C(x) + <theta, F(x)>), computed with max subtraction so
// nothing overflows for |C|, |<theta, F>| up to about 500.
double log_partition(const Representation& rep, const Eigen::VectorXd& theta);

// Probability vector exp(C + <theta, F> - psi); strictly positive, sums to 1.
Eigen::VectorXd density(const Representation& rep, const Eigen::VectorXd& theta);

// Recovers theta with density(rep, theta) = p if p lies in the family:
// solves quotient(log p - C) = sum_k theta_k quotient(F_k) by least squares
// and accepts iff the residual passes. p must be strictly positive and sum
// to 1 within 1e-12.
std::optional<Eigen::VectorXd> membership(const Representation& rep, const Eigen::VectorXd& p,
                                          double tol = kDefaultMembershipTol);

}  // namespace expgraff
