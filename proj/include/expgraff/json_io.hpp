#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "expgraff/expfam.hpp"
#include "expgraff/grassmann.hpp"
#include "expgraff/group.hpp"

namespace expgraff {

// On-disk form of a representation:
//   {"sample_space": [labels...], "C": [m+1 reals], "F": [n rows of m+1 reals],
//    "metadata": {"name": ..., "seed": ...}}  (metadata optional)
struct RepDocument {
  std::vector<std::string> sample_space;
  Eigen::VectorXd c;
  Eigen::MatrixXd f;  // row k holds the values of F_{k+1}
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
};

// On-disk form of a group element: {"A": [[n x n rows]], "u": [...], "v": [...], "c": r}.
struct GroupDocument {
  Eigen::MatrixXd a;
  Eigen::VectorXd u, v;
  double c = 0.0;
};

RepDocument parse_rep_document(const nlohmann::json& j);
nlohmann::json rep_document_to_json(const RepDocument& doc);
RepDocument rep_document_from(const Representation& rep);
Representation to_representation(const RepDocument& doc, double tol = kDefaultTol);

GroupDocument parse_group_document(const nlohmann::json& j);
nlohmann::json group_document_to_json(const GroupDocument& doc);
GroupDocument group_document_from(const GroupElement& g);
GroupElement to_group_element(const GroupDocument& doc, double tol = kDefaultTol);

// Seeded draw with entries uniform in [-1, 1], resampled until the smallest
// singular value of [1, F^T] is at least margin times the largest, so the
// document always parses to a comfortably minimal representation. The seed
// lands in metadata. Deterministic across platforms.
RepDocument random_rep_document(int m, int n, std::uint64_t seed, double margin = 1e-3);

// x rounded to the given number of significant digits; -0 normalizes to 0.
double round_to_significant(double x, int digits);

// {"dim", "ambient_dim", "base", "basis"} with every real rounded to 12
// significant digits; equal subspaces serialize byte-identically.
nlohmann::json canonical_subspace_json(const AffineSubspace& s);

}  // namespace expgraff
