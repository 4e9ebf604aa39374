#include "duet/symmetric_eigen.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "duet/error.hpp"

#if DUET_HAVE_LAPACKE
#include <lapacke.h>
#endif

namespace duet {
namespace {

SymmetricEigen eigen_solve(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) throw ConvergenceError("symmetric_eigen: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

#if DUET_HAVE_LAPACKE
std::atomic<bool> lapack_trusted{true};

// Residuals of A V x = V w x and V^T V x = x for fixed pseudo-random x,
// relative to the scale of A; a correct backward-stable result stays near
// n eps.
bool passes_probe(const Eigen::MatrixXd& a, const SymmetricEigen& r) {
  const Eigen::Index n = a.rows();
  std::mt19937_64 gen(0x5eed);
  std::normal_distribution<double> normal;
  const double scale = std::max(r.values.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  const double tol = 1e3 * static_cast<double>(n) * std::numeric_limits<double>::epsilon();
  for (int probe = 0; probe < 2; ++probe) {
    Eigen::VectorXd x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = normal(gen);
    const Eigen::VectorXd vx = r.vectors * x;
    const double norm = x.norm();
    const double eig_res = (a * vx - r.vectors * r.values.cwiseProduct(x)).norm() / (scale * norm);
    const double orth_res = (r.vectors.transpose() * vx - x).norm() / norm;
    if (!(eig_res <= tol && orth_res <= tol)) return false;
  }
  return true;
}
#endif

}  // namespace

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw InvalidParameter("symmetric_eigen: matrix must be square");
#if DUET_HAVE_LAPACKE
  if (lapack_trusted.load()) {
    SymmetricEigen out;
    out.vectors = a;
    out.values.resize(a.rows());
    const lapack_int n = static_cast<lapack_int>(a.rows());
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, out.vectors.data(), n,
                                           out.values.data());
    if (info == 0 && passes_probe(a, out)) return out;
    lapack_trusted.store(false);
  }
#endif
  return eigen_solve(a);
}

const char* symmetric_eigen_backend() {
#if DUET_HAVE_LAPACKE
  if (lapack_trusted.load()) return "lapack-dsyevd";
#endif
  return "eigen";
}

}  // namespace duet
