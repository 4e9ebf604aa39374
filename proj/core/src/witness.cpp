#include "duet/witness.hpp"

#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace duet {

namespace {

using cd = std::complex<double>;

std::array<int, 2> sector_indices(Sector sector) {
  return sector == Sector::position ? std::array<int, 2>{kX, kY} : std::array<int, 2>{kPx, kPy};
}

Eigen::Matrix2cd sub_block(const Matrix4cd& s, Sector sector) {
  const auto idx = sector_indices(sector);
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = s(idx[i], idx[j]);
  return m;
}

}  // namespace

RescaledFrame rescaled_frame(const OscillatorPair& pair) {
  const double s1 = std::sqrt(pair.m1 * pair.omega10());
  const double s2 = std::sqrt(pair.m2 * pair.omega20());
  return {Eigen::Vector4d(s1, 1.0 / s1, s2, 1.0 / s2)};
}

Matrix4cd rescaled_cross_spectrum(const OscillatorPair& pair, const BathPair& baths, double omega) {
  const Eigen::Vector4cd d = rescaled_frame(pair).scale.cast<cd>();
  return d.asDiagonal() * cross_spectrum(pair, baths, omega).S * d.asDiagonal();
}

Eigen::Matrix2cd sector_spectral_matrix(const OscillatorPair& pair, const BathPair& baths,
                                        double omega, Sector sector, Frame frame) {
  if (frame == Frame::raw) return sub_block(cross_spectrum(pair, baths, omega).S, sector);
  return sub_block(rescaled_cross_spectrum(pair, baths, omega), sector);
}

QuadratureSpectra optimal_quadrature_spectra(const OscillatorPair& pair, const BathPair& baths,
                                             double omega, Sector sector, Frame frame) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(sector_spectral_matrix(pair, baths, omega, sector, frame));
  return {es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvectors()};
}

ReferenceSpectra reference_spectra_T0(const OscillatorPair& pair, const BathPair& baths, double omega,
                                      Sector sector, Frame frame) {
  const BathPair cold{with_temperature(baths.first, 0.0), with_temperature(baths.second, 0.0)};
  const Eigen::Matrix2cd m = sector_spectral_matrix(pair, cold, omega, sector, frame);
  const double cross = m(0, 1).real();
  return {0.5 * (m(0, 0).real() + m(1, 1).real()) + cross, 0.5 * (m(0, 0).real() + m(1, 1).real()) - cross};
}

EprSpectra epr_fixed_pair_spectra(const OscillatorPair& pair, const BathPair& baths, double omega,
                                  const EprPair& epr) {
  const Matrix4cd s = cross_spectrum(pair, baths, omega).S;
  const Eigen::Vector4cd q = epr.q_coeffs.cast<cd>();
  const Eigen::Vector4cd p = epr.p_coeffs.cast<cd>();
  return {(q.adjoint() * s * q)(0, 0).real(), (p.adjoint() * s * p)(0, 0).real()};
}

SpectralInvariants spectral_block_invariants(const Matrix4cd& s) {
  const Eigen::Matrix2cd a = s.block<2, 2>(0, 0);
  const Eigen::Matrix2cd b = s.block<2, 2>(2, 2);
  const Eigen::Matrix2cd c = s.block<2, 2>(0, 2);
  Eigen::Matrix2cd sig;
  sig << 0.0, 1.0, -1.0, 0.0;
  const double da = std::abs(a(0, 0)) * std::abs(a(1, 1));
  const double db = std::abs(b(0, 0)) * std::abs(b(1, 1));
  const double dc = std::sqrt(da * db);
  auto ratio = [](double num, double den) { return den > 0.0 ? num / den : num; };
  SpectralInvariants out;
  out.det_a = ratio(std::abs(a.determinant()), da);
  out.det_b = ratio(std::abs(b.determinant()), db);
  out.det_c = ratio(std::abs(c.determinant()), dc);
  out.i4 = ratio(std::abs((sig * a * sig * c * sig * b * sig * c.transpose()).trace()), da * db);
  return out;
}

}  // namespace duet
