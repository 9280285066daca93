#pragma once

#include <Eigen/Dense>

#include <random>

#include "expgraff/expfam.hpp"
#include "expgraff/group.hpp"
#include "expgraff/json_io.hpp"

namespace testsupport {

// Same 53-bit uniform draw the library's generator uses.
inline double unif(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) * 2.0 - 1.0;
}

inline Eigen::VectorXd random_vector(int n, std::mt19937_64& rng) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = unif(rng);
  return v;
}

// Entries uniform in [-1, 1], redrawn until sigma_min >= min_ratio * sigma_max
// so group solves stay comfortably conditioned.
inline Eigen::MatrixXd random_invertible(int n, std::mt19937_64& rng, double min_ratio = 0.1) {
  Eigen::MatrixXd a(n, n);
  while (true) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = unif(rng);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv(sv.size() - 1) >= min_ratio * sv(0)) return a;
  }
}

inline expgraff::GroupElement random_group(int n, std::mt19937_64& rng) {
  return expgraff::GroupElement(random_invertible(n, rng), random_vector(n, rng),
                                random_vector(n, rng), unif(rng));
}

inline expgraff::AffDagElement random_affdag(int n, std::mt19937_64& rng) {
  return expgraff::AffDagElement(random_invertible(n, rng), random_vector(n, rng));
}

inline expgraff::Representation random_rep(int m, int n, std::mt19937_64& rng,
                                           double margin = 1e-3) {
  return expgraff::to_representation(expgraff::random_rep_document(m, n, rng(), margin));
}

}  // namespace testsupport
