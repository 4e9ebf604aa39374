#pragma once

#include <Eigen/Core>

#include "duet/gaussian_info.hpp"
#include "duet/spectra.hpp"

namespace duet {

/// Canonical rescaling with the uncoupled frequencies omega_i0 = sqrt(k_i/m_i):
/// x~ = sqrt(m omega0) x and p~ = p / sqrt(m omega0), so that dx~/dt = omega0 p~.
struct RescaledFrame {
  Eigen::Vector4d scale;  // multipliers for (x, p_x, y, p_y)
};

RescaledFrame rescaled_frame(const OscillatorPair& pair);

/// Full 4x4 spectral matrix expressed in the rescaled frame.
Matrix4cd rescaled_cross_spectrum(const OscillatorPair& pair, const BathPair& baths, double omega);

enum class Sector { position, momentum };

/// Coordinates in which sector spectra are expressed: the rescaled frame
/// above, or the raw (x, p_x, y, p_y).
enum class Frame { rescaled, raw };

/// Hermitian 2x2 matrix of (x~, y~) or (p~x, p~y) cross spectra.
Eigen::Matrix2cd sector_spectral_matrix(const OscillatorPair& pair, const BathPair& baths,
                                        double omega, Sector sector, Frame frame = Frame::rescaled);

inline Eigen::Matrix2cd position_spectral_matrix(const OscillatorPair& pair, const BathPair& baths,
                                                 double omega) {
  return sector_spectral_matrix(pair, baths, omega, Sector::position);
}

/// Extremal noise spectra of alpha* A + beta* B over unit (alpha, beta); the
/// columns of eigenvectors hold the minimizing and maximizing combinations.
struct QuadratureSpectra {
  double s_min = 0.0;
  double s_max = 0.0;
  Eigen::Matrix2cd eigenvectors;
};

QuadratureSpectra optimal_quadrature_spectra(const OscillatorPair& pair, const BathPair& baths,
                                             double omega, Sector sector, Frame frame = Frame::rescaled);

/// Spectra of the sum and difference combinations (A + B)/sqrt2 and
/// (A - B)/sqrt2 with both baths at zero temperature (input temperatures are
/// ignored).
struct ReferenceSpectra {
  double s_sum = 0.0;
  double s_diff = 0.0;
};

ReferenceSpectra reference_spectra_T0(const OscillatorPair& pair, const BathPair& baths, double omega,
                                      Sector sector, Frame frame = Frame::rescaled);

/// Spectra of a fixed EPR pair (raw frame): S_QQ = q^T S q and S_PP = p^T S p.
struct EprSpectra {
  double s_qq = 0.0;
  double s_pp = 0.0;
};

EprSpectra epr_fixed_pair_spectra(const OscillatorPair& pair, const BathPair& baths, double omega,
                                  const EprPair& epr);

/// Determinants of the 2x2 blocks A(w), B(w), C(w) of a spectral matrix and
/// the invariant tr(sigma A sigma C sigma B sigma C^T), each divided by the
/// natural scale of the same products of diagonal magnitudes. All vanish
/// identically because every block has rank one.
struct SpectralInvariants {
  double det_a = 0.0;
  double det_b = 0.0;
  double det_c = 0.0;
  double i4 = 0.0;
};

SpectralInvariants spectral_block_invariants(const Matrix4cd& s);

}  // namespace duet
