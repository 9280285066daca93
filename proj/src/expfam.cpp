#include "expgraff/expfam.hpp"

#include <cmath>
#include <utility>

#include "expgraff/errors.hpp"

namespace expgraff {

Representation::Representation(FuncVec carrier, MinimalFrame frame)
    : carrier_(std::move(carrier)), frame_(std::move(frame)) {
  if (!same_space(carrier_.space(), frame_.space()))
    throw InputError("carrier and frame must live on the same sample space");
}

namespace {

// C + F^T theta, the per-outcome log weights.
Eigen::VectorXd log_weights(const Representation& rep, const Eigen::VectorXd& theta) {
  if (theta.size() != rep.dim())
    throw InputError("theta length must match the frame size");
  if (!theta.allFinite()) throw InputError("theta must be finite");
  return rep.carrier().values() + rep.frame().rows().transpose() * theta;
}

}  // namespace

double log_partition(const Representation& rep, const Eigen::VectorXd& theta) {
  const Eigen::VectorXd s = log_weights(rep, theta);
  const double mx = s.maxCoeff();
  return mx + std::log((s.array() - mx).exp().sum());
}

Eigen::VectorXd density(const Representation& rep, const Eigen::VectorXd& theta) {
  const Eigen::VectorXd s = log_weights(rep, theta);
  const double mx = s.maxCoeff();
  Eigen::VectorXd w = (s.array() - mx).exp();
  return w / w.sum();
}

std::optional<Eigen::VectorXd> membership(const Representation& rep, const Eigen::VectorXd& p,
                                          double tol) {
  if (p.size() != rep.space()->size())
    throw InputError("probability vector length must match the sample space");
  if (!p.allFinite() || !(p.array() > 0.0).all())
    throw InputError("probability vector must be strictly positive");
  if (std::abs(p.sum() - 1.0) > 1e-12)
    throw InputError("probability vector must sum to one");
  if (!(tol > 0)) throw InputError("membership tolerance must be positive");

  // In the quotient mod constants, p = p_theta reads as a linear system:
  // [log p - C] = sum_k theta_k [F_k], with the psi constant annihilated.
  const int m = rep.space()->quotient_dim();
  const Eigen::VectorXd g = p.array().log() - rep.carrier().values().array();
  const Eigen::VectorXd b = g.tail(m).array() - g(0);
  const Eigen::MatrixXd& rows = rep.frame().rows();
  Eigen::MatrixXd aq(m, rep.dim());
  for (int k = 0; k < rep.dim(); ++k)
    aq.col(k) = rows.row(k).tail(m).transpose().array() - rows(k, 0);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(aq, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd theta = svd.solve(b);
  if ((aq * theta - b).lpNorm<Eigen::Infinity>() > tol) return std::nullopt;
  return theta;
}

}  // namespace expgraff
