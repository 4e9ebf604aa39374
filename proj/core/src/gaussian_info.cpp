#include "duet/gaussian_info.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "duet/error.hpp"
#include "duet/units.hpp"

namespace duet {

namespace {

using cd = std::complex<double>;
using Vector4cdL = Eigen::Matrix<cd, 4, 1>;

constexpr double kPhysicalSlack = 1e-6;

Eigen::Matrix2d sigma2() {
  Eigen::Matrix2d s;
  s << 0.0, 1.0, -1.0, 0.0;
  return s;
}

double position_weight(const Vector4cdL& v, double phi) {
  const cd ph = std::polar(1.0, phi);
  return std::abs((ph * v(0)).real()) + std::abs((ph * v(2)).real());
}

// Rotates v by the phase maximizing |Re v_x| + |Re v_y|. Each term is
// |a cos(phi) - b sin(phi)|, so the maximum sits either at a zero of one term
// or at the stationary point of a signed sum.
Vector4cdL fix_phase(const Vector4cdL& v) {
  std::vector<double> candidates{0.0};
  const std::array<cd, 2> comps{v(0), v(2)};
  for (const cd& z : comps)
    if (std::abs(z) > 0.0) candidates.push_back(std::atan2(z.real(), z.imag()));
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) {
      // s1 Re(e^{i phi} z1) + s2 Re(e^{i phi} z2) = Re(e^{i phi} w).
      const cd w = s1 * comps[0] + s2 * comps[1];
      if (std::abs(w) > 0.0) candidates.push_back(-std::arg(w));
    }
  double best_phi = 0.0;
  double best = -1.0;
  for (double phi : candidates) {
    const double val = position_weight(v, phi);
    if (val > best * (1.0 + 1e-12)) {
      best = val;
      best_phi = phi;
    }
  }
  Vector4cdL out = std::polar(1.0, best_phi) * v;
  const double scale = out.cwiseAbs().maxCoeff();
  for (int i = 0; i < 4; ++i) {
    const double re = out(i).real();
    if (std::abs(re) > 1e-12 * scale) {
      if (re < 0.0) out = -out;
      break;
    }
  }
  return out;
}

void require_positive_definite(const Eigen::Matrix4d& c, const char* where) {
  if (!c.allFinite()) throw PhysicalityError(std::string(where) + ": covariance has non-finite entries");
  const double asym = (c - c.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * std::max(1.0, c.cwiseAbs().maxCoeff()))
    throw PhysicalityError(std::string(where) + ": covariance is not symmetric");
}

}  // namespace

Eigen::Matrix4d symplectic_form() {
  Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
  s.block<2, 2>(0, 0) = sigma2();
  s.block<2, 2>(2, 2) = sigma2();
  return s;
}

Eigen::Matrix4d partial_transpose_map() {
  return Eigen::Vector4d(1.0, 1.0, 1.0, -1.0).asDiagonal();
}

SymplecticResult williamson(const Eigen::Matrix4d& c_in) {
  require_positive_definite(c_in, "williamson");
  const Eigen::Matrix4d c = 0.5 * (c_in + c_in.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> ces(c);
  const Eigen::Vector4d lam = ces.eigenvalues();
  if (!(lam(0) > 0.0))
    throw PhysicalityError("williamson: covariance is not positive definite (smallest eigenvalue " +
                           std::to_string(lam(0)) + ")");
  const Eigen::Matrix4d u = ces.eigenvectors();
  const Eigen::Matrix4d root = u * lam.cwiseSqrt().asDiagonal() * u.transpose();
  const Eigen::Matrix4d inv_root = u * lam.cwiseSqrt().cwiseInverse().asDiagonal() * u.transpose();

  // -i sigma C is similar to the Hermitian H = -i C^{1/2} sigma C^{1/2}, whose
  // eigenvalues are +-eta; v = C^{-1/2} w sqrt(2 eta) yields Q^T sigma P = 1.
  const Eigen::Matrix4cd h = cd(0.0, -1.0) * (root * symplectic_form() * root).cast<cd>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> hes(h);
  SymplecticResult out;
  for (int k = 0; k < 2; ++k) {
    // Eigenvalues ascend: indices 2, 3 hold the positive pair.
    const double eta = hes.eigenvalues()(2 + k);
    out.eigenvalues(k) = eta;
    Vector4cdL v = inv_root.cast<cd>() * hes.eigenvectors().col(2 + k) * std::sqrt(2.0 * eta);
    v = fix_phase(v);
    out.transform.row(2 * k) = v.real().transpose();
    out.transform.row(2 * k + 1) = v.imag().transpose();
  }
  return out;
}

double ppt_min_symplectic_eigenvalue(const Eigen::Matrix4d& c) {
  const Eigen::Matrix4d g = partial_transpose_map();
  return williamson(g * c * g).eigenvalues(0);
}

double ppt_hermitian_min_eigenvalue(const Eigen::Matrix4d& c) {
  const Eigen::Matrix4d g = partial_transpose_map();
  const Eigen::Matrix4cd m = (g * c * g).cast<cd>() + cd(0.0, half_hbar) * symplectic_form().cast<cd>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double logarithmic_negativity(const Eigen::Matrix4d& c) {
  const double eta = ppt_min_symplectic_eigenvalue(c);
  return eta < half_hbar ? std::log(half_hbar / eta) : 0.0;
}

LocalInvariants local_invariants(const Eigen::Matrix4d& c) {
  const Eigen::Matrix2d a = c.block<2, 2>(0, 0);
  const Eigen::Matrix2d b = c.block<2, 2>(2, 2);
  const Eigen::Matrix2d x = c.block<2, 2>(0, 2);
  const Eigen::Matrix2d s = sigma2();
  return {a.determinant(), b.determinant(), x.determinant(),
          (s * a * s * x * s * b * s * x.transpose()).trace()};
}

SeparabilityTest duan_simon_separable(const Eigen::Matrix4d& c) {
  const LocalInvariants inv = local_invariants(c);
  const double q = half_hbar * half_hbar;
  const double shifted = std::abs(inv.det_c) - q;
  const double margin = inv.det_a * inv.det_b + shifted * shifted - inv.i4 - q * (inv.det_a + inv.det_b);
  // States with a pure symplectic mode and det Cab >= 0 sit exactly on the
  // boundary; accept cancellation noise relative to the size of the terms.
  const double scale = std::abs(inv.det_a * inv.det_b) + shifted * shifted + std::abs(inv.i4) +
                       q * (std::abs(inv.det_a) + std::abs(inv.det_b));
  const double slack = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  return {margin >= -slack, margin};
}

EprPair epr_pair(const Eigen::Matrix4d& c) {
  const Eigen::Matrix4d g = partial_transpose_map();
  const SymplecticResult w = williamson(g * c * g);
  EprPair out;
  out.q_coeffs = g * w.transform.row(0).transpose();
  out.p_coeffs = g * w.transform.row(1).transpose();
  out.uncertainty = w.eigenvalues(0);
  return out;
}

double entropy_function(double x) {
  if (!(x >= 1.0)) throw PhysicalityError("entropy: argument below 1 (" + std::to_string(x) + ")");
  const double e = 0.5 * (x - 1.0);
  if (e == 0.0) return 0.0;
  return (1.0 + e) * std::log1p(e) - e * std::log(e);
}

double mode_entropy(double nu) {
  const double x = nu / half_hbar;
  if (x < 1.0 - kPhysicalSlack)
    throw PhysicalityError("entropy: symplectic eigenvalue " + std::to_string(nu) + " below hbar/2");
  return entropy_function(std::max(x, 1.0));
}

Entropies entropies(const Eigen::Matrix4d& c) {
  const SymplecticResult w = williamson(c);
  const LocalInvariants inv = local_invariants(c);
  Entropies out;
  out.total = mode_entropy(w.eigenvalues(0)) + mode_entropy(w.eigenvalues(1));
  out.first = mode_entropy(std::sqrt(std::max(inv.det_a, 0.0)));
  out.second = mode_entropy(std::sqrt(std::max(inv.det_b, 0.0)));
  out.mutual = out.first + out.second - out.total;
  return out;
}

}  // namespace duet
