#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "expgraff/expfam.hpp"
#include "support.hpp"

using namespace expgraff;

namespace {

Representation bernoulli() {
  const auto s2 = SampleSpace::indexed(2);
  Eigen::MatrixXd f(1, 2);
  f << 0, 1;
  return Representation(FuncVec(s2, Eigen::VectorXd::Zero(2)), MinimalFrame(s2, f));
}

Eigen::VectorXd theta1(double t) { return Eigen::VectorXd::Constant(1, t); }

// p-weighted mean of the frame rows, the analytic gradient of the log
// partition.
Eigen::VectorXd mean_statistic(const Representation& rep, const Eigen::VectorXd& theta) {
  return rep.frame().rows() * density(rep, theta);
}

Eigen::MatrixXd covariance_statistic(const Representation& rep, const Eigen::VectorXd& theta) {
  const Eigen::VectorXd p = density(rep, theta);
  const Eigen::MatrixXd& rows = rep.frame().rows();
  const Eigen::VectorXd mu = rows * p;
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(rep.dim(), rep.dim());
  for (int x = 0; x < rep.space()->size(); ++x) {
    const Eigen::VectorXd d = rows.col(x) - mu;
    cov += p(x) * d * d.transpose();
  }
  return cov;
}

}  // namespace

TEST_CASE("log partition frozen values") {
  const auto rep = bernoulli();
  CHECK(std::abs(log_partition(rep, theta1(0.0)) - std::log(2.0)) <= 1e-12);
  CHECK(std::abs(log_partition(rep, theta1(std::log(3.0))) - std::log(4.0)) <= 1e-12);

  const auto s3 = SampleSpace::indexed(3);
  Eigen::MatrixXd f(2, 3);
  f << 0, 1, 0, 0, 0, 1;
  const Representation uniform3(FuncVec(s3, Eigen::VectorXd::Zero(3)), MinimalFrame(s3, f));
  CHECK(std::abs(log_partition(uniform3, Eigen::VectorXd::Zero(2)) - std::log(3.0)) <= 1e-12);
}

TEST_CASE("log partition survives large log weights") {
  const auto s2 = SampleSpace::indexed(2);
  Eigen::MatrixXd f(1, 2);
  f << 0, 400;
  const Representation rep(FuncVec(s2, Eigen::VectorXd::Zero(2)), MinimalFrame(s2, f));
  const double psi = log_partition(rep, theta1(1.0));
  CHECK(std::isfinite(psi));
  // log(1 + e^400) = 400 up to e^-400
  CHECK(std::abs(psi - 400.0) <= 1e-9);
  const Eigen::VectorXd p = density(rep, theta1(1.0));
  CHECK(std::isfinite(p(0)));
  CHECK(std::abs(p(1) - 1.0) <= 1e-12);
}

TEST_CASE("density frozen values and normalization") {
  const auto rep = bernoulli();
  const Eigen::VectorXd half = density(rep, theta1(0.0));
  CHECK(std::abs(half(0) - 0.5) <= 1e-15);
  CHECK(std::abs(half(1) - 0.5) <= 1e-15);
  const Eigen::VectorXd skew = density(rep, theta1(std::log(3.0)));
  CHECK(std::abs(skew(0) - 0.25) <= 1e-12);
  CHECK(std::abs(skew(1) - 0.75) <= 1e-12);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = n + static_cast<int>(rng() % 5);
    const auto r = testsupport::random_rep(m, n, rng);
    const Eigen::VectorXd theta = 10.0 * testsupport::random_vector(n, rng);
    const Eigen::VectorXd p = density(r, theta);
    CHECK((p.array() > 0).all());
    CHECK(std::abs(p.sum() - 1.0) <= 1e-12);
    CHECK(std::abs(std::log(p(0)) -
                   (r.carrier()(0) + r.frame().rows().col(0).dot(theta) - log_partition(r, theta)))
          <= 1e-12);
  }
}

TEST_CASE("gradient of the log partition matches central differences") {
  std::mt19937_64 rng(7);
  const double h = 1e-5;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = n + static_cast<int>(rng() % 5);
    const auto rep = testsupport::random_rep(m, n, rng);
    const Eigen::VectorXd theta = 2.0 * testsupport::random_vector(n, rng);
    const Eigen::VectorXd grad = mean_statistic(rep, theta);
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXd hi = theta, lo = theta;
      hi(k) += h;
      lo(k) -= h;
      const double fd = (log_partition(rep, hi) - log_partition(rep, lo)) / (2.0 * h);
      CHECK(std::abs(fd - grad(k)) <= 1e-6 * std::max(1.0, std::abs(grad(k))));
    }
  }
}

TEST_CASE("hessian of the log partition is the statistic covariance") {
  const auto s5 = SampleSpace::indexed(5);
  Eigen::MatrixXd f(2, 5);
  f << 0.3, -0.8, 0.1, 0.9, -0.2,
       0.7, 0.2, -0.5, -0.1, 0.4;
  const Representation rep(FuncVec(s5, Eigen::VectorXd::Zero(5)), MinimalFrame(s5, f));
  Eigen::VectorXd theta(2);
  theta << 0.4, -0.7;

  const Eigen::MatrixXd cov = covariance_statistic(rep, theta);
  const double h = 1e-4;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Eigen::VectorXd pp = theta, pm = theta, mp = theta, mm = theta;
      pp(i) += h; pp(j) += h;
      pm(i) += h; pm(j) -= h;
      mp(i) -= h; mp(j) += h;
      mm(i) -= h; mm(j) -= h;
      const double fd = (log_partition(rep, pp) - log_partition(rep, pm) -
                         log_partition(rep, mp) + log_partition(rep, mm)) / (4.0 * h * h);
      CHECK(std::abs(fd - cov(i, j)) <= 1e-5);
    }
}

TEST_CASE("statistic covariance is positive semidefinite, definite when minimal") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = n + static_cast<int>(rng() % 5);
    const auto rep = testsupport::random_rep(m, n, rng, 1e-2);
    const Eigen::VectorXd theta = testsupport::random_vector(n, rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(covariance_statistic(rep, theta));
    CHECK(eig.eigenvalues()(0) >= -1e-10);
    CHECK(eig.eigenvalues()(0) >= 1e-8);
  }
}

TEST_CASE("membership recovers the parameter or rejects") {
  const auto rep = bernoulli();
  Eigen::VectorXd p(2);
  p << 0.25, 0.75;
  const auto theta = membership(rep, p);
  REQUIRE(theta.has_value());
  CHECK(std::abs((*theta)(0) - std::log(3.0)) <= 1e-12);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = n + static_cast<int>(rng() % 5);
    const auto r = testsupport::random_rep(m, n, rng);
    const Eigen::VectorXd target = 2.0 * testsupport::random_vector(n, rng);
    const auto recovered = membership(r, density(r, target));
    REQUIRE(recovered.has_value());
    CHECK((*recovered - target).cwiseAbs().maxCoeff() <= 1e-8);
  }

  // off the family: p0 = p2 on this family, so this p cannot match
  const auto s3 = SampleSpace::indexed(3);
  Eigen::MatrixXd f(1, 3);
  f << 0, 1, 0;
  const Representation r3(FuncVec(s3, Eigen::VectorXd::Zero(3)), MinimalFrame(s3, f));
  Eigen::VectorXd off(3);
  off << 0.2, 0.5, 0.3;
  off /= off.sum();
  CHECK(!membership(r3, off).has_value());

  Eigen::VectorXd bad(2);
  bad << 1.0, 0.0;
  CHECK_THROWS_AS(membership(rep, bad), InputError);
  Eigen::VectorXd unnormalized(2);
  unnormalized << 0.5, 0.6;
  CHECK_THROWS_AS(membership(rep, unnormalized), InputError);
  CHECK_THROWS_AS(membership(rep, Eigen::VectorXd::Constant(3, 1.0 / 3)), InputError);
}

TEST_CASE("representation construction and dimension errors") {
  const auto s2 = SampleSpace::indexed(2);
  const auto s3 = SampleSpace::indexed(3);
  Eigen::MatrixXd f(1, 3);
  f << 0, 1, 0;
  CHECK_THROWS_AS(Representation(FuncVec(s2, Eigen::VectorXd::Zero(2)), MinimalFrame(s3, f)),
                  InputError);
  const auto rep = bernoulli();
  CHECK_THROWS_AS(log_partition(rep, Eigen::VectorXd::Zero(2)), InputError);
  CHECK_THROWS_AS(density(rep, Eigen::VectorXd::Zero(0)), InputError);
}
