#pragma once

#include <complex>
#include <variant>

namespace duet {

/// Ohmic friction with a Drude (Lorentzian) cutoff:
///   rho(w) = (gamma / tau_c^2) / (w^2 + 1/tau_c^2),  mu(w) = gamma / (1 - i w tau_c),
/// with memory kernel mu(tau) = (gamma / tau_c) exp(-tau / tau_c) for tau >= 0.
struct OhmDrude {
  double gamma = 0.0;  // friction scale [mass * frequency]
  double tau_c = 1.0;  // bath correlation time
};

// Spectral-density families. A new model (Debye, structured baths) is added as
// another alternative plus a branch in each visitor in bath.cpp.
using SpectralModel = std::variant<OhmDrude>;

struct BathSpec {
  SpectralModel model;
  double temperature = 0.0;

  /// Validated constructor: gamma >= 0, tau_c > 0, temperature >= 0.
  static BathSpec ohm_drude(double gamma, double tau_c, double temperature);
};

/// rho(omega); even in omega and non-negative.
double spectral_density(const BathSpec& bath, double omega);

/// Fourier transform of the causal friction kernel, mu(z) = int dtau e^{i z tau} mu(tau).
/// Valid for real z and analytic in the upper half-plane.
std::complex<double> friction_kernel(const BathSpec& bath, std::complex<double> z);

/// Time-domain friction kernel mu(tau) (zero for tau < 0).
double friction_kernel_time(const BathSpec& bath, double tau);

/// Symmetrized mean energy per mode, (w/2) coth(w / 2T); equals T at w = 0
/// and |w|/2 at T = 0.
double effective_temperature(double temperature, double omega);

/// d theta / dT = (w/2T)^2 / sinh^2(w/2T) = (w/T)^2 n(n+1), with n the Bose
/// occupation; equals 1 at w = 0 and vanishes at T = 0 for w != 0.
double effective_temperature_derivative(double temperature, double omega);

/// Langevin-force spectrum S_F(w) = 4 rho(w) theta(w) (one-sided convention).
double force_noise_spectrum(const BathSpec& bath, double omega);

/// Overall friction scale (gamma for Ohm-Drude); zero means decoupled.
double friction_scale(const BathSpec& bath);

/// Characteristic bandwidth of the bath (1/tau_c for Ohm-Drude).
double bath_bandwidth(const BathSpec& bath);

/// Copy of the bath with a different temperature.
BathSpec with_temperature(const BathSpec& bath, double temperature);

}  // namespace duet
