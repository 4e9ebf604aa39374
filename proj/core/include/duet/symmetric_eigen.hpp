#pragma once

#include <Eigen/Core>

namespace duet {

/// Eigen-decomposition A = V diag(w) V^T of a real symmetric matrix, with w
/// ascending. Uses LAPACK's divide-and-conquer driver when the library was
/// built against LAPACKE, otherwise Eigen's self-adjoint solver.
///
/// Every LAPACK result is checked against two random probe vectors, O(n^2):
/// some optimized BLAS kernels return wrong decompositions on CPUs they
/// misdetect. On a failed check the result is recomputed with Eigen and the
/// process stays on Eigen from then on.
struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& a);

/// Name of the backend currently in use ("lapack-dsyevd" or "eigen").
const char* symmetric_eigen_backend();

}  // namespace duet
