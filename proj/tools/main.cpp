#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "expgraff/equivalence.hpp"
#include "expgraff/expfam.hpp"
#include "expgraff/function_space.hpp"
#include "expgraff/grassmann.hpp"
#include "expgraff/group.hpp"
#include "expgraff/json_io.hpp"

namespace {

using expgraff::InputError;
using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

Eigen::VectorXd parse_theta(const std::string& text) {
  std::vector<double> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size())
      throw InputError("--theta expects comma-separated numbers");
    entries.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  Eigen::VectorXd theta(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    theta(static_cast<Eigen::Index>(i)) = entries[i];
  return theta;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal discrete exponential families: equivalence witnesses, canonical "
               "affine subspaces, evaluation"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string file_a, file_b;
  std::string theta_text;
  double tol_minimal = expgraff::kDefaultTol;
  double tol_equiv = expgraff::kDefaultDecisionTol;
  double tol_canon = expgraff::kDefaultTol;
  double tol_act = expgraff::kDefaultTol;
  int opt_m = 0, opt_n = 0;
  std::uint64_t opt_seed = 0;

  auto* minimal = app.add_subcommand("minimal", "Report the rank of {1, F} and minimality");
  minimal->add_option("file", file_a, "representation document")->required();
  minimal->add_option("--tol", tol_minimal, "rank tolerance");
  minimal->callback([&] {
    const expgraff::RepDocument doc = expgraff::parse_rep_document(read_json_file(file_a));
    const int n = static_cast<int>(doc.f.rows());
    Eigen::MatrixXd b(doc.c.size(), n + 1);
    b.col(0).setOnes();
    b.rightCols(n) = doc.f.transpose();
    const int rank = expgraff::rank_with_tolerance(b, tol_minimal);
    emit(json{{"minimal", rank == n + 1}, {"rank", rank}});
  });

  auto* equiv = app.add_subcommand(
      "equiv", "Decide equivalence; on success print the witness g with A = g . B");
  equiv->add_option("fileA", file_a, "representation document")->required();
  equiv->add_option("fileB", file_b, "representation document")->required();
  equiv->add_option("--tol", tol_equiv, "decision tolerance");
  equiv->callback([&] {
    const auto rep_a = expgraff::to_representation(
        expgraff::parse_rep_document(read_json_file(file_a)));
    const auto rep_b = expgraff::to_representation(
        expgraff::parse_rep_document(read_json_file(file_b)));
    const expgraff::WitnessReport report = expgraff::recover_witness(rep_a, rep_b, tol_equiv);
    if (report.equivalent) {
      emit(expgraff::group_document_to_json(expgraff::group_document_from(*report.witness)));
    } else {
      emit(json{{"equivalent", false}});
      exit_code = 1;
    }
  });

  auto* canon = app.add_subcommand(
      "canon", "Print the canonical affine subspace of the family, rounded to 12 digits");
  canon->add_option("file", file_a, "representation document")->required();
  canon->add_option("--tol", tol_canon, "rank tolerance");
  canon->callback([&] {
    const auto rep = expgraff::to_representation(
        expgraff::parse_rep_document(read_json_file(file_a)), tol_canon);
    emit(expgraff::canonical_subspace_json(expgraff::graff_from_rep(rep, tol_canon)));
  });

  auto* eval = app.add_subcommand("eval", "Print the density at theta, keyed by label");
  eval->add_option("file", file_a, "representation document")->required();
  eval->add_option("--theta", theta_text, "comma-separated natural parameters")->required();
  eval->callback([&] {
    const auto rep = expgraff::to_representation(
        expgraff::parse_rep_document(read_json_file(file_a)));
    const Eigen::VectorXd p = expgraff::density(rep, parse_theta(theta_text));
    nlohmann::ordered_json out;
    for (int i = 0; i < rep.space()->size(); ++i) out[rep.space()->label(i)] = p(i);
    std::cout << out.dump(2) << "\n";
  });

  auto* psi = app.add_subcommand("psi", "Print the log partition value at theta");
  psi->add_option("file", file_a, "representation document")->required();
  psi->add_option("--theta", theta_text, "comma-separated natural parameters")->required();
  psi->callback([&] {
    const auto rep = expgraff::to_representation(
        expgraff::parse_rep_document(read_json_file(file_a)));
    emit(json(expgraff::log_partition(rep, parse_theta(theta_text))));
  });

  auto* act = app.add_subcommand("act", "Apply a group element to a representation");
  act->add_option("file", file_a, "representation document")->required();
  act->add_option("groupfile", file_b, "group element document")->required();
  act->add_option("--tol", tol_act, "construction tolerance");
  act->callback([&] {
    const expgraff::RepDocument doc = expgraff::parse_rep_document(read_json_file(file_a));
    const auto rep = expgraff::to_representation(doc, tol_act);
    const auto g = expgraff::to_group_element(
        expgraff::parse_group_document(read_json_file(file_b)), tol_act);
    expgraff::RepDocument moved = expgraff::rep_document_from(expgraff::act(g, rep));
    moved.name = doc.name;
    moved.seed = doc.seed;
    emit(expgraff::rep_document_to_json(moved));
  });

  auto* random = app.add_subcommand("random", "Generate a random minimal representation");
  random->add_option("--m", opt_m, "sample space size minus one")->required();
  random->add_option("--n", opt_n, "number of natural parameters")->required();
  random->add_option("--seed", opt_seed, "RNG seed (default 0)");
  random->callback([&] {
    emit(expgraff::rep_document_to_json(expgraff::random_rep_document(opt_m, opt_n, opt_seed)));
  });

  auto* dim = app.add_subcommand(
      "dim", "Print the dimension (n+1)(m-n) of the space of n-dimensional families");
  dim->add_option("--n", opt_n, "number of natural parameters")->required();
  dim->add_option("--m", opt_m, "sample space size minus one")->required();
  dim->callback([&] {
    std::cout << expgraff::graff_dimension(opt_n, opt_m).value << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const InputError& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return exit_code;
}
