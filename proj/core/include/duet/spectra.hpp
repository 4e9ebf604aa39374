#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "duet/quadrature.hpp"
#include "duet/response.hpp"

namespace duet {

/// Phase-space ordering used by every 4-vector and 4x4 matrix in the library.
enum Coordinate : int { kX = 0, kPx = 1, kY = 2, kPy = 3 };

using Matrix4cd = Eigen::Matrix<std::complex<double>, 4, 4>;
using Vector4cd = Eigen::Matrix<std::complex<double>, 4, 1>;

/// Symmetrized cross-correlation spectra S_AB(omega) over (x, p_x, y, p_y),
/// normalized so that the equal-time covariance is int_0^inf dw/2pi Re S_AB.
struct SpectralMatrix4 {
  double omega = 0.0;
  Matrix4cd S;
};

/// Linear response of (x, p_x, y, p_y) to the Langevin force on oscillator
/// i (columns), together with the force spectra S_Fi.
struct ForceResponse {
  Vector4cd to_force1;
  Vector4cd to_force2;
  double noise1 = 0.0;
  double noise2 = 0.0;
};

ForceResponse force_response(const OscillatorPair& pair, const BathPair& baths, double omega);

/// S_AB = sum_i S_Fi conj(a_i[A]) a_i[B]; Hermitian by construction.
SpectralMatrix4 cross_spectrum(const OscillatorPair& pair, const BathPair& baths, double omega);

/// Spectral density of the heat current from bath 1 to bath 2,
/// 4 lambda^2 omega^2 rho1 rho2 (theta1 - theta2) / |D|^2 (measure dw/2pi).
double heat_current_spectrum(const OscillatorPair& pair, const BathPair& baths, double omega);

/// Linear-response heat current spectrum per unit temperature difference,
/// 4 lambda^2 omega^2 rho1 rho2 (d theta/dT) / |D|^2, with d theta/dT taken at
/// the mean bath temperature (T1 + T2)/2 (measure dw/2pi).
double differential_heat_current_spectrum(const OscillatorPair& pair, const BathPair& baths,
                                          double omega);

/// Split point and forced breakpoints for frequency integrals of this problem.
struct FrequencyPlan {
  double split = 0.0;
  std::vector<double> breakpoints;
};

FrequencyPlan plan_frequency_integration(const OscillatorPair& pair, const BathPair& baths,
                                         const QuadratureConfig& quad);

/// int_0^inf dw/2pi f(w) for a vector integrand, refined on the plan above.
/// Throws ConvergenceError if the panel budget is exhausted.
QuadratureResult integrate_over_frequency(const OscillatorPair& pair, const BathPair& baths,
                                          const QuadratureConfig& quad, std::size_t dim,
                                          const VectorIntegrand& f);

struct HeatCurrent {
  double value = 0.0;
  double error = 0.0;
};

/// Net stationary heat current from bath 1 to bath 2 (integral of the spectrum).
HeatCurrent net_heat_current(const OscillatorPair& pair, const BathPair& baths,
                             const QuadratureConfig& quad);

/// Same current through the mechanical route (lambda/2)<x ydot - xdot y>,
/// i.e. (lambda/2)(C_{x,p_y}/m2 - C_{p_x,y}/m1) from the cross spectra.
HeatCurrent net_heat_current_cross_route(const OscillatorPair& pair, const BathPair& baths,
                                         const QuadratureConfig& quad);

/// Sign predicted by a secular (local master equation) treatment,
/// sign(omega20/T2 - omega10/T1) in units hbar = k_B = 1. Comparison only.
int levy_kosloff_sign(const OscillatorPair& pair, double t1, double t2);

/// Relative violation of the equilibrium fluctuation-dissipation relation
/// S_ij = (4 theta / omega) Im R_ij for i, j in {x, y}; both baths must share
/// one temperature. Defined as 0 at omega = 0.
double fd_residual(const OscillatorPair& pair, const BathPair& baths, double omega);

/// Same residual with theta evaluated at an explicit temperature (no
/// equal-temperature precondition); used to exhibit non-equilibrium violation.
double fd_residual_at(const OscillatorPair& pair, const BathPair& baths, double omega,
                      double temperature);

/// Time-averaged power balance of oscillator 1 in the steady state. The three
/// terms sum to zero: spring transfer from oscillator 2, friction dissipation,
/// and work done by the Langevin force.
struct EnergyBalance {
  double spring = 0.0;
  double dissipation = 0.0;
  double langevin_work = 0.0;
  double error = 0.0;
  double residual() const { return spring + dissipation + langevin_work; }
};

EnergyBalance oscillator1_energy_balance(const OscillatorPair& pair, const BathPair& baths,
                                         const QuadratureConfig& quad);

}  // namespace duet
