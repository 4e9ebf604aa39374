#pragma once

#include <Eigen/Core>

namespace duet {

/// Symplectic form over (x, p_x, y, p_y): [q_i, q_j] = i hbar sigma_ij.
Eigen::Matrix4d symplectic_form();

/// Partial transposition: momentum of the second oscillator flips sign.
Eigen::Matrix4d partial_transpose_map();

/// Williamson normal form of a positive-definite covariance.
struct SymplecticResult {
  Eigen::Vector2d eigenvalues;  // eta_1 <= eta_2
  /// Rows (Q1, P1, Q2, P2): coefficient vectors of the normal-mode canonical
  /// pairs. S sigma S^T = sigma and S C S^T = diag(eta1, eta1, eta2, eta2).
  Eigen::Matrix4d transform;
};

/// Symplectic eigenvalues eta of -i sigma C and the canonical transform built
/// from v = Q + iP with Q^T sigma P = 1. The free phase of each v maximizes the
/// weight of Q on the position coordinates; ties resolve to a positive first
/// nonzero entry of Q. Throws PhysicalityError unless C is symmetric positive
/// definite.
SymplecticResult williamson(const Eigen::Matrix4d& c);

/// Smallest symplectic eigenvalue of the partially transposed covariance.
double ppt_min_symplectic_eigenvalue(const Eigen::Matrix4d& c);

/// Smallest eigenvalue of Gamma C Gamma + (i hbar / 2) sigma; negative iff
/// the state is entangled.
double ppt_hermitian_min_eigenvalue(const Eigen::Matrix4d& c);

/// E = ln(hbar / (2 eta_min)) when eta_min < hbar/2, else 0.
double logarithmic_negativity(const Eigen::Matrix4d& c);

/// Separability test from the local invariants of C = [[A, Cab], [Cab^T, B]]:
/// margin = det A det B + (|det Cab| - hbar^2/4)^2 - I4 - (hbar^2/4)(det A + det B),
/// I4 = tr(sigma A sigma Cab sigma B sigma Cab^T). margin >= 0 iff separable, up to
/// a rounding slack proportional to the magnitude of the terms.
struct SeparabilityTest {
  bool separable = true;
  double margin = 0.0;
};

SeparabilityTest duan_simon_separable(const Eigen::Matrix4d& c);

/// Local invariants used above.
struct LocalInvariants {
  double det_a = 0.0;
  double det_b = 0.0;
  double det_c = 0.0;
  double i4 = 0.0;
};

LocalInvariants local_invariants(const Eigen::Matrix4d& c);

/// Optimal EPR-type pair Q = q . Qcoeffs, P = q . Pcoeffs built from the
/// minimal symplectic mode of the partial transpose. Under C, Var Q = Var P =
/// eta_min and Cov(Q, P) = 0.
struct EprPair {
  Eigen::Vector4d q_coeffs;
  Eigen::Vector4d p_coeffs;
  double uncertainty = 0.0;  // Delta Q Delta P
};

EprPair epr_pair(const Eigen::Matrix4d& c);

/// Gaussian von Neumann entropy of one mode with symplectic eigenvalue nu,
/// f(2 nu / hbar) with f(x) = ((x+1)/2) ln((x+1)/2) - ((x-1)/2) ln((x-1)/2).
double mode_entropy(double nu);

/// The function f(x) itself, x >= 1.
double entropy_function(double x);

struct Entropies {
  double total = 0.0;
  double first = 0.0;
  double second = 0.0;
  double mutual = 0.0;
};

/// Global, reduced and mutual entropies. Throws PhysicalityError when a
/// symplectic eigenvalue lies below (hbar/2)(1 - 1e-6).
Entropies entropies(const Eigen::Matrix4d& c);

}  // namespace duet
