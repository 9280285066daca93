#include "expgraff/equivalence.hpp"

#include <algorithm>
#include <cmath>

#include "expgraff/errors.hpp"

namespace expgraff {

WitnessReport recover_witness(const Representation& rep, const Representation& other,
                              double tol) {
  return recover_witness_with_pivots(rep, other, select_pivot_indices(other.frame()), tol);
}

WitnessReport recover_witness_with_pivots(const Representation& rep, const Representation& other,
                                          const std::vector<int>& pivot_indices, double tol) {
  if (!same_space(rep.space(), other.space()))
    throw InputError("representations must live on the same sample space");
  if (rep.dim() != other.dim())
    throw InputError("representations must have the same number of natural parameters");
  if (!(tol > 0)) throw InputError("decision tolerance must be positive");

  const int n = rep.dim();
  const Eigen::MatrixXd& f = rep.frame().rows();
  const Eigen::MatrixXd& fp = other.frame().rows();

  const Eigen::MatrixXd mp = difference_matrix(other.frame(), pivot_indices);
  const Eigen::MatrixXd m = difference_matrix(rep.frame(), pivot_indices);
  const Eigen::VectorXd nd = difference_column(rep.carrier(), pivot_indices);
  const Eigen::VectorXd ndp = difference_column(other.carrier(), pivot_indices);

  // The pivot set makes M' invertible; anything else means the caller picked
  // an invalid set or the tolerance regime is inconsistent.
  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(mp);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv(0) == 0.0 || sv(sv.size() - 1) <= kDefaultTol * sv(0) * static_cast<double>(n))
      throw DegeneracyError("pivot difference matrix of the reference frame is singular");
  }

  // If rep = g . other, differences satisfy M = A M' and N - N' = M'^T u, so
  // both unknowns fall out of one transposed solve.
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(mp.transpose());
  const Eigen::MatrixXd l = qr.solve(m.transpose());  // L, with A = L^T
  const Eigen::VectorXd u = qr.solve(nd - ndp);
  const Eigen::MatrixXd a = l.transpose();

  // v = F - A F' and c = C - C' - <u, F'> must be constant over the space;
  // their spread is the evidence for or against equivalence.
  const Eigen::MatrixXd rmat = f - a * fp;
  const Eigen::VectorXd v = rmat.rowwise().mean();
  const double dev_v = (rmat.colwise() - v).cwiseAbs().maxCoeff();

  const Eigen::VectorXd s =
      rep.carrier().values() - other.carrier().values() - fp.transpose() * u;
  const double c = s.mean();
  const double dev_c = (s.array() - c).abs().maxCoeff();

  const double scale =
      1.0 + std::max({rep.carrier().values().cwiseAbs().maxCoeff(),
                      other.carrier().values().cwiseAbs().maxCoeff(),
                      f.cwiseAbs().maxCoeff(), fp.cwiseAbs().maxCoeff(),
                      (a * fp).cwiseAbs().maxCoeff(),
                      (fp.transpose() * u).cwiseAbs().maxCoeff()});
  const double threshold = tol * scale;

  WitnessReport report;
  report.pivot_indices = pivot_indices;

  bool a_invertible = false;
  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const Eigen::VectorXd& sv = svd.singularValues();
    a_invertible = sv(0) > 0.0 && sv(sv.size() - 1) > kDefaultTol * sv(0);
  }

  double residual = std::max(dev_v, dev_c);
  if (a_invertible) {
    // Re-assert, through the action itself, that the candidate really carries
    // other onto rep.
    const GroupElement g(a, u, v, c);
    double dev_act = std::numeric_limits<double>::infinity();
    try {
      const Representation moved = act(g, other);
      dev_act = std::max(
          (moved.carrier().values() - rep.carrier().values()).cwiseAbs().maxCoeff(),
          (moved.frame().rows() - f).cwiseAbs().maxCoeff());
    } catch (const InputError&) {
      // moved frame fell below the minimality tolerance; not an orbit match
    }
    residual = std::max(residual, dev_act);
    report.residual = residual;
    report.equivalent = residual <= threshold;
    if (report.equivalent) report.witness = g;
  } else {
    report.residual = residual;
    report.equivalent = false;
  }
  report.marginal = residual >= threshold / 10.0 && residual <= threshold * 10.0;
  return report;
}

bool are_equivalent(const Representation& rep, const Representation& other, double tol) {
  return recover_witness(rep, other, tol).equivalent;
}

Eigen::VectorXd transfer_theta(const GroupElement& g, const Eigen::VectorXd& theta) {
  if (theta.size() != g.dim()) throw InputError("theta length must match the group dimension");
  return g.a().transpose() * theta + g.u();
}

double psi_residual(const GroupElement& g, const Representation& rep,
                    const Representation& other, const Eigen::VectorXd& theta) {
  if (g.dim() != rep.dim() || g.dim() != other.dim())
    throw InputError("group element and representations must share one dimension");
  return std::abs(log_partition(rep, theta) - log_partition(other, transfer_theta(g, theta)) -
                  theta.dot(g.v()) - g.c());
}

}  // namespace expgraff
