#pragma once

#include <complex>

#include <Eigen/Core>

#include "duet/bath.hpp"

namespace duet {

/// Two oscillators with bilinear coupling V = (lambda/2)(x - y)^2.
///
/// The coupling shifts the spring constants to k_i' = k_i + lambda. Stability
/// requires lambda^2 < k1' k2', which holds for every lambda >= 0 and for
/// 0 > lambda > -k1 k2 / (k1 + k2).
struct OscillatorPair {
  double m1 = 1.0;
  double m2 = 1.0;
  double k1 = 1.0;
  double k2 = 1.0;
  double lambda = 0.0;

  /// Validated constructor; throws InvalidParameter on non-positive masses or
  /// springs and on violated stability.
  static OscillatorPair make(double m1, double m2, double k1, double k2, double lambda);

  double k1_shifted() const { return k1 + lambda; }
  double k2_shifted() const { return k2 + lambda; }
  /// Bare frequencies sqrt(k_i / m_i).
  double omega10() const;
  double omega20() const;
  /// Coupling-shifted frequencies sqrt(k_i' / m_i).
  double omega1() const;
  double omega2() const;
  /// g^2 = lambda / sqrt(m1 m2).
  double coupling_g2() const;
};

struct BathPair {
  BathSpec first;
  BathSpec second;
};

struct ResponseEval {
  double omega = 0.0;
  std::complex<double> K1;  // inverse susceptibility of oscillator 1
  std::complex<double> K2;
  std::complex<double> D;   // K1 K2 - lambda^2
  Eigen::Matrix2cd R;       // inverse of [[K1, -lambda], [-lambda, K2]]
};

/// Frequency-domain response at real omega. Throws SingularResponse if D is
/// exactly zero (only possible without dissipation).
ResponseEval evaluate_response(const OscillatorPair& pair, const BathPair& baths, double omega);

/// D(z) continued into the complex plane (analytic in the upper half-plane).
std::complex<double> response_determinant(const OscillatorPair& pair, const BathPair& baths,
                                          std::complex<double> z);

struct ModeFrequencies {
  double plus = 0.0;
  double minus = 0.0;
};

struct ComplexModeFrequencies {
  std::complex<double> plus;
  std::complex<double> minus;
};

/// Normal-mode frequencies of the undamped coupled pair.
ModeFrequencies lossless_eigenfrequencies(const OscillatorPair& pair);

/// Secular (near-resonant) complex frequencies with linearized susceptibilities,
/// Omega_i = omega_i - i gamma_i / 2 and gamma_i = mu_i(omega_i) / m_i.
ComplexModeFrequencies rwa_eigenfrequencies(const OscillatorPair& pair, const BathPair& baths);

/// Zeros of D(z) near the two normal modes, located by complex Newton
/// iteration seeded with the secular frequencies. Throws ConvergenceError if
/// either iteration fails.
ComplexModeFrequencies damped_mode_frequencies(const OscillatorPair& pair, const BathPair& baths);

struct DriveWeights {
  double first = 1.0;   // |f1|^2
  double second = 0.0;  // |f2|^2
};

/// Time-averaged absorbed power omega |f1|^2 Im(K2/D) + omega |f2|^2 Im(K1/D).
double absorption_spectrum(const OscillatorPair& pair, const BathPair& baths, double omega,
                           DriveWeights weights);

}  // namespace duet
