#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "duet/error.hpp"
#include "duet/symmetric_eigen.hpp"

namespace duet {
namespace {

Eigen::MatrixXd random_symmetric(Eigen::Index n, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = normal(gen);
  return 0.5 * (a + a.transpose());
}

TEST(SymmetricEigen, DecomposesAcrossSizes) {
  for (Eigen::Index n : {1, 7, 64, 150, 400}) {
    const Eigen::MatrixXd a = random_symmetric(n, 7 + static_cast<unsigned>(n));
    const SymmetricEigen r = symmetric_eigen(a);
    const double scale = r.values.cwiseAbs().maxCoeff();
    EXPECT_LT((a * r.vectors - r.vectors * r.values.asDiagonal()).cwiseAbs().maxCoeff(), 1e-11 * scale)
        << "n = " << n << " backend " << symmetric_eigen_backend();
    EXPECT_LT((r.vectors.transpose() * r.vectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(),
              1e-11)
        << "n = " << n;
    for (Eigen::Index i = 1; i < n; ++i) EXPECT_LE(r.values(i - 1), r.values(i));
  }
}

TEST(SymmetricEigen, StiffBandedSpectrum) {
  // Arrow matrix shaped like a system oscillator coupled to a bath chain:
  // eigenvalues spanning six decades must stay positive.
  const Eigen::Index n = 300;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 1, n + 1);
  a(0, 0) = 1.0;
  for (Eigen::Index j = 1; j <= n; ++j) {
    const double w = 40.0 * static_cast<double>(j) / static_cast<double>(n);
    const double kappa = 1e-3 / static_cast<double>(n);
    a(0, 0) += kappa;
    a(0, j) = a(j, 0) = -w * std::sqrt(kappa);
    a(j, j) = w * w;
  }
  const SymmetricEigen r = symmetric_eigen(a);
  EXPECT_GT(r.values(0), 0.0);
  EXPECT_LT((a * r.vectors - r.vectors * r.values.asDiagonal()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(SymmetricEigen, RejectsNonSquare) {
  EXPECT_THROW(symmetric_eigen(Eigen::MatrixXd::Zero(3, 4)), InvalidParameter);
}

TEST(SymmetricEigen, ReportsBackend) {
  const std::string name = symmetric_eigen_backend();
  EXPECT_TRUE(name == "lapack-dsyevd" || name == "eigen");
}

}  // namespace
}  // namespace duet
