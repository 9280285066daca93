#include "expgraff/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <utility>

#include "expgraff/errors.hpp"

namespace expgraff {

namespace {

using nlohmann::json;

double number_at(const json& j, const char* where) {
  if (!j.is_number()) throw InputError(std::string(where) + " must be a number");
  return j.get<double>();
}

Eigen::VectorXd vector_at(const json& j, const char* where) {
  if (!j.is_array()) throw InputError(std::string(where) + " must be an array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& entry : j) v(i++) = number_at(entry, where);
  return v;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json matrix_rows_to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    out.push_back(vector_to_json(m.row(r).transpose()));
  return out;
}

Eigen::MatrixXd matrix_rows_at(const json& j, const char* where) {
  if (!j.is_array() || j.empty())
    throw InputError(std::string(where) + " must be a nonempty array of rows");
  std::vector<Eigen::VectorXd> rows;
  rows.reserve(j.size());
  for (const auto& row : j) {
    rows.push_back(vector_at(row, where));
    if (rows.back().size() != rows.front().size())
      throw InputError(std::string(where) + " rows must have equal length");
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    m.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  return m;
}

}  // namespace

RepDocument parse_rep_document(const json& j) {
  if (!j.is_object()) throw InputError("representation document must be a JSON object");
  for (const char* key : {"sample_space", "C", "F"})
    if (!j.contains(key))
      throw InputError(std::string("representation document is missing \"") + key + "\"");

  RepDocument doc;
  const json& space = j.at("sample_space");
  if (!space.is_array() || space.size() < 2)
    throw InputError("sample_space must list at least two labels");
  for (const auto& label : space) {
    if (!label.is_string()) throw InputError("sample_space labels must be strings");
    doc.sample_space.push_back(label.get<std::string>());
  }
  doc.c = vector_at(j.at("C"), "C");
  if (doc.c.size() != static_cast<Eigen::Index>(doc.sample_space.size()))
    throw InputError("C must have one value per sample point");
  doc.f = matrix_rows_at(j.at("F"), "F");
  if (doc.f.cols() != static_cast<Eigen::Index>(doc.sample_space.size()))
    throw InputError("each F row must have one value per sample point");
  if (!doc.c.allFinite() || !doc.f.allFinite())
    throw InputError("document values must be finite");

  if (j.contains("metadata")) {
    const json& meta = j.at("metadata");
    if (!meta.is_object()) throw InputError("metadata must be an object");
    if (meta.contains("name")) {
      if (!meta.at("name").is_string()) throw InputError("metadata.name must be a string");
      doc.name = meta.at("name").get<std::string>();
    }
    if (meta.contains("seed")) {
      const json& seed = meta.at("seed");
      if (!seed.is_number_integer() ||
          (!seed.is_number_unsigned() && seed.get<std::int64_t>() < 0))
        throw InputError("metadata.seed must be a nonnegative integer");
      doc.seed = seed.get<std::uint64_t>();
    }
  }
  return doc;
}

json rep_document_to_json(const RepDocument& doc) {
  json j;
  j["sample_space"] = doc.sample_space;
  j["C"] = vector_to_json(doc.c);
  j["F"] = matrix_rows_to_json(doc.f);
  if (doc.name || doc.seed) {
    json meta = json::object();
    if (doc.name) meta["name"] = *doc.name;
    if (doc.seed) meta["seed"] = *doc.seed;
    j["metadata"] = meta;
  }
  return j;
}

RepDocument rep_document_from(const Representation& rep) {
  RepDocument doc;
  doc.sample_space = rep.space()->labels();
  doc.c = rep.carrier().values();
  doc.f = rep.frame().rows();
  return doc;
}

Representation to_representation(const RepDocument& doc, double tol) {
  auto space = std::make_shared<const SampleSpace>(doc.sample_space);
  return Representation(FuncVec(space, doc.c), MinimalFrame(space, doc.f, tol));
}

GroupDocument parse_group_document(const json& j) {
  if (!j.is_object()) throw InputError("group document must be a JSON object");
  for (const char* key : {"A", "u", "v", "c"})
    if (!j.contains(key))
      throw InputError(std::string("group document is missing \"") + key + "\"");
  GroupDocument doc;
  doc.a = matrix_rows_at(j.at("A"), "A");
  if (doc.a.rows() != doc.a.cols()) throw InputError("A must be square");
  doc.u = vector_at(j.at("u"), "u");
  doc.v = vector_at(j.at("v"), "v");
  if (doc.u.size() != doc.a.rows() || doc.v.size() != doc.a.rows())
    throw InputError("u and v must have length n");
  doc.c = number_at(j.at("c"), "c");
  if (!doc.a.allFinite() || !doc.u.allFinite() || !doc.v.allFinite() || !std::isfinite(doc.c))
    throw InputError("document values must be finite");
  return doc;
}

json group_document_to_json(const GroupDocument& doc) {
  json j;
  j["A"] = matrix_rows_to_json(doc.a);
  j["u"] = vector_to_json(doc.u);
  j["v"] = vector_to_json(doc.v);
  j["c"] = doc.c;
  return j;
}

GroupDocument group_document_from(const GroupElement& g) {
  return GroupDocument{g.a(), g.u(), g.v(), g.c()};
}

GroupElement to_group_element(const GroupDocument& doc, double tol) {
  return GroupElement(doc.a, doc.u, doc.v, doc.c, tol);
}

RepDocument random_rep_document(int m, int n, std::uint64_t seed, double margin) {
  if (m < 1) throw InputError("random generation needs m >= 1");
  if (n < 1 || n > m) throw InputError("random generation needs 1 <= n <= m");
  if (!(margin > 0) || margin >= 1) throw InputError("margin must lie in (0, 1)");

  std::mt19937_64 rng(seed);
  // 53 explicit mantissa bits mapped to [-1, 1); uniform_real_distribution is
  // implementation-defined, this is not.
  auto unif = [&rng] {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) * 2.0 - 1.0;
  };

  RepDocument doc;
  auto space = SampleSpace::indexed(m + 1);
  doc.sample_space = space->labels();
  doc.seed = seed;
  doc.c.resize(m + 1);
  doc.f.resize(n, m + 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (Eigen::Index i = 0; i < doc.c.size(); ++i) doc.c(i) = unif();
    for (Eigen::Index r = 0; r < doc.f.rows(); ++r)
      for (Eigen::Index col = 0; col < doc.f.cols(); ++col) doc.f(r, col) = unif();
    Eigen::MatrixXd b(m + 1, n + 1);
    b.col(0).setOnes();
    b.rightCols(n) = doc.f.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(b);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv(sv.size() - 1) >= margin * sv(0)) return doc;
  }
  throw DegeneracyError("random generation kept drawing frames below the minimality margin");
}

double round_to_significant(double x, int digits) {
  if (digits < 1 || digits > 17) throw InputError("significant digits must lie in [1, 17]");
  if (!std::isfinite(x)) throw InputError("cannot round a non-finite value");
  if (x == 0.0) return 0.0;  // folds -0 into +0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json canonical_subspace_json(const AffineSubspace& s) {
  json j;
  j["dim"] = s.dim();
  j["ambient_dim"] = s.ambient_dim();
  Eigen::VectorXd base = s.base();
  for (Eigen::Index i = 0; i < base.size(); ++i) base(i) = round_to_significant(base(i), 12);
  j["base"] = vector_to_json(base);
  json basis = json::array();
  for (int k = 0; k < s.dim(); ++k) {
    Eigen::VectorXd col = s.basis().col(k);
    for (Eigen::Index i = 0; i < col.size(); ++i) col(i) = round_to_significant(col(i), 12);
    basis.push_back(vector_to_json(col));
  }
  j["basis"] = basis;
  return j;
}

}  // namespace expgraff
