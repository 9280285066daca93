#pragma once

#include <Eigen/Dense>

#include <limits>
#include <optional>
#include <vector>

#include "expgraff/expfam.hpp"
#include "expgraff/group.hpp"

namespace expgraff {

// Decision threshold for witness recovery; scaled by input magnitude inside.
inline constexpr double kDefaultDecisionTol = 1e-8;

struct WitnessReport {
  bool equivalent = false;
  // The unique g with rep = act(g, other), when equivalent.
  std::optional<GroupElement> witness;
  // Raw max deviation over the constancy checks and act(witness, other) vs rep.
  double residual = std::numeric_limits<double>::infinity();
  // Pivot indices the difference matrices were built on.
  std::vector<int> pivot_indices;
  // The deciding residual landed within a factor 10 of the threshold.
  bool marginal = false;
};

// Decides whether rep and other present the same family and recovers the
// witness from difference matrices on a pivot set of other's frame:
//   L = (M'^T)^{-1} M^T,  u = (M'^T)^{-1}(N - N'),  A = L^T,
//   v = F - L^T F' (must be constant),  c = C - C' - <u, F'> (must be constant),
// then re-asserts act(g, other) = rep before reporting equivalence.
WitnessReport recover_witness(const Representation& rep, const Representation& other,
                              double tol = kDefaultDecisionTol);

// Same, on a caller-chosen valid pivot index set (freeness makes the result
// independent of the choice up to round-off).
WitnessReport recover_witness_with_pivots(const Representation& rep, const Representation& other,
                                          const std::vector<int>& pivot_indices,
                                          double tol = kDefaultDecisionTol);

bool are_equivalent(const Representation& rep, const Representation& other,
                    double tol = kDefaultDecisionTol);

// A^T theta + u: with rep = act(g, other), density(rep, theta) equals
// density(other, transfer_theta(g, theta)).
Eigen::VectorXd transfer_theta(const GroupElement& g, const Eigen::VectorXd& theta);

// |psi_rep(theta) - psi_other(A^T theta + u) - <theta, v> - c|; zero (up to
// round-off) exactly when g carries other to rep.
double psi_residual(const GroupElement& g, const Representation& rep, const Representation& other,
                    const Eigen::VectorXd& theta);

}  // namespace expgraff
