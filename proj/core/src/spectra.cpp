#include "duet/spectra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "duet/error.hpp"
#include "duet/units.hpp"

namespace duet {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

Vector4cd response_vector(const OscillatorPair& pair, double omega, std::complex<double> to_x,
                          std::complex<double> to_y) {
  Vector4cd a;
  a(kX) = to_x;
  a(kPx) = -kI * pair.m1 * omega * to_x;
  a(kY) = to_y;
  a(kPy) = -kI * pair.m2 * omega * to_y;
  return a;
}

}  // namespace

ForceResponse force_response(const OscillatorPair& pair, const BathPair& baths, double omega) {
  const ResponseEval r = evaluate_response(pair, baths, omega);
  ForceResponse out;
  out.to_force1 = response_vector(pair, omega, r.R(0, 0), r.R(1, 0));
  out.to_force2 = response_vector(pair, omega, r.R(0, 1), r.R(1, 1));
  out.noise1 = force_noise_spectrum(baths.first, omega);
  out.noise2 = force_noise_spectrum(baths.second, omega);
  return out;
}

SpectralMatrix4 cross_spectrum(const OscillatorPair& pair, const BathPair& baths, double omega) {
  const ForceResponse fr = force_response(pair, baths, omega);
  SpectralMatrix4 out;
  out.omega = omega;
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      const std::complex<double> s = fr.noise1 * std::conj(fr.to_force1(a)) * fr.to_force1(b) +
                                     fr.noise2 * std::conj(fr.to_force2(a)) * fr.to_force2(b);
      out.S(a, b) = s;
      out.S(b, a) = std::conj(s);
    }
    out.S(a, a) = out.S(a, a).real();
  }
  return out;
}

double heat_current_spectrum(const OscillatorPair& pair, const BathPair& baths, double omega) {
  const ResponseEval r = evaluate_response(pair, baths, omega);
  const double rho1 = spectral_density(baths.first, omega);
  const double rho2 = spectral_density(baths.second, omega);
  const double dtheta = effective_temperature(baths.first.temperature, omega) -
                        effective_temperature(baths.second.temperature, omega);
  return 4.0 * pair.lambda * pair.lambda * omega * omega * rho1 * rho2 * dtheta / std::norm(r.D);
}

double differential_heat_current_spectrum(const OscillatorPair& pair, const BathPair& baths,
                                          double omega) {
  const ResponseEval r = evaluate_response(pair, baths, omega);
  const double rho1 = spectral_density(baths.first, omega);
  const double rho2 = spectral_density(baths.second, omega);
  const double t_mean = 0.5 * (baths.first.temperature + baths.second.temperature);
  const double dtheta = effective_temperature_derivative(t_mean, omega);
  return 4.0 * pair.lambda * pair.lambda * omega * omega * rho1 * rho2 * dtheta / std::norm(r.D);
}

FrequencyPlan plan_frequency_integration(const OscillatorPair& pair, const BathPair& baths,
                                         const QuadratureConfig& quad) {
  if (!(quad.rel_tol > 0.0) || !(quad.abs_tol > 0.0))
    throw InvalidParameter("quadrature: rel_tol and abs_tol must be > 0");
  if (!(friction_scale(baths.first) > 0.0) || !(friction_scale(baths.second) > 0.0))
    throw InvalidParameter("steady state requires friction on both oscillators (gamma_1, gamma_2 > 0)");
  const ModeFrequencies modes = lossless_eigenfrequencies(pair);
  const double cutoff = std::max(bath_bandwidth(baths.first), bath_bandwidth(baths.second));
  FrequencyPlan plan;
  plan.split = quad.omega_max > 0.0 ? quad.omega_max : std::max(20.0 * modes.plus, 20.0 * cutoff);

  const double width = std::max(friction_scale(baths.first) / pair.m1,
                                friction_scale(baths.second) / pair.m2);
  auto& bp = plan.breakpoints;
  for (double w : {modes.plus, modes.minus}) {
    bp.push_back(w);
    for (double s : {1.0, 4.0}) {
      bp.push_back(w - s * width);
      bp.push_back(w + s * width);
    }
  }
  bp.push_back(bath_bandwidth(baths.first));
  bp.push_back(bath_bandwidth(baths.second));
  try {
    const ComplexModeFrequencies damped = damped_mode_frequencies(pair, baths);
    bp.push_back(damped.plus.real());
    bp.push_back(damped.minus.real());
  } catch (const ConvergenceError&) {
    // Overdamped modes have no sharp resonance worth marking.
  }
  bp.insert(bp.end(), quad.seed_points.begin(), quad.seed_points.end());
  return plan;
}

QuadratureResult integrate_over_frequency(const OscillatorPair& pair, const BathPair& baths,
                                          const QuadratureConfig& quad, std::size_t dim,
                                          const VectorIntegrand& f) {
  const FrequencyPlan plan = plan_frequency_integration(pair, baths, quad);
  // Tolerances refer to the dw/2pi-normalized result.
  QuadratureResult r = integrate_half_line(f, dim, plan.split, plan.breakpoints, quad.rel_tol,
                                           quad.abs_tol * two_pi, quad.max_panels);
  for (std::size_t c = 0; c < dim; ++c) {
    r.value[c] /= two_pi;
    r.error[c] /= two_pi;
    r.magnitude[c] /= two_pi;
  }
  if (!r.converged)
    throw ConvergenceError("quadrature: frequency integral did not reach rel_tol = " +
                           std::to_string(quad.rel_tol) + " within " + std::to_string(r.panels) +
                           " panels");
  return r;
}

HeatCurrent net_heat_current(const OscillatorPair& pair, const BathPair& baths,
                             const QuadratureConfig& quad) {
  const auto r = integrate_over_frequency(pair, baths, quad, 1, [&](double w, double* v, double* m) {
    v[0] = heat_current_spectrum(pair, baths, w);
    m[0] = std::abs(v[0]);
  });
  return {r.value[0], r.error[0]};
}

HeatCurrent net_heat_current_cross_route(const OscillatorPair& pair, const BathPair& baths,
                                         const QuadratureConfig& quad) {
  const double a = 0.5 * pair.lambda / pair.m2;
  const double b = 0.5 * pair.lambda / pair.m1;
  const auto r = integrate_over_frequency(pair, baths, quad, 1, [&](double w, double* v, double* m) {
    const ForceResponse fr = force_response(pair, baths, w);
    double val = 0.0;
    double mag = 0.0;
    for (const auto& [vec, noise] : {std::pair{fr.to_force1, fr.noise1}, std::pair{fr.to_force2, fr.noise2}}) {
      val += noise * (a * (std::conj(vec(kX)) * vec(kPy)).real() - b * (std::conj(vec(kPx)) * vec(kY)).real());
      mag += noise * (a * std::abs(vec(kX)) * std::abs(vec(kPy)) + b * std::abs(vec(kPx)) * std::abs(vec(kY)));
    }
    v[0] = val;
    m[0] = mag;
  });
  return {r.value[0], r.error[0]};
}

int levy_kosloff_sign(const OscillatorPair& pair, double t1, double t2) {
  if (!(t1 > 0.0) || !(t2 > 0.0)) throw InvalidParameter("levy_kosloff_sign: temperatures must be > 0");
  const double d = pair.omega20() / t2 - pair.omega10() / t1;
  return (d > 0.0) - (d < 0.0);
}

double fd_residual_at(const OscillatorPair& pair, const BathPair& baths, double omega,
                      double temperature) {
  if (omega == 0.0) return 0.0;
  const ResponseEval r = evaluate_response(pair, baths, omega);
  const SpectralMatrix4 s = cross_spectrum(pair, baths, omega);
  const double ratio = effective_temperature(temperature, omega) / omega;
  constexpr std::array<int, 2> idx{kX, kY};
  double worst = 0.0;
  double scale = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      // -2i (theta/omega)(R_ji - conj(R_ij)) with R symmetric.
      const std::complex<double> rhs = -2.0 * kI * ratio * (r.R(j, i) - std::conj(r.R(i, j)));
      const std::complex<double> lhs = s.S(idx[i], idx[j]);
      worst = std::max(worst, std::abs(lhs - rhs));
      scale = std::max(scale, std::abs(lhs));
    }
  return scale > 0.0 ? worst / scale : worst;
}

double fd_residual(const OscillatorPair& pair, const BathPair& baths, double omega) {
  if (baths.first.temperature != baths.second.temperature)
    throw InvalidParameter("fd_residual: both baths must have the same temperature (T1 = " +
                           std::to_string(baths.first.temperature) +
                           ", T2 = " + std::to_string(baths.second.temperature) + ")");
  return fd_residual_at(pair, baths, omega, baths.first.temperature);
}

EnergyBalance oscillator1_energy_balance(const OscillatorPair& pair, const BathPair& baths,
                                         const QuadratureConfig& quad) {
  const double lam = pair.lambda;
  const auto r = integrate_over_frequency(pair, baths, quad, 3, [&](double w, double* v, double* m) {
    const ResponseEval resp = evaluate_response(pair, baths, w);
    const ForceResponse fr = force_response(pair, baths, w);
    double spring = 0.0, spring_mag = 0.0, sxx = 0.0;
    for (const auto& [vec, noise] : {std::pair{fr.to_force1, fr.noise1}, std::pair{fr.to_force2, fr.noise2}}) {
      spring += noise * ((std::conj(vec(kPx)) * vec(kY)).real() - (std::conj(vec(kPx)) * vec(kX)).real());
      spring_mag += noise * std::abs(vec(kPx)) * (std::abs(vec(kY)) + std::abs(vec(kX)));
      sxx += noise * std::norm(vec(kX));
    }
    v[0] = lam / pair.m1 * spring;
    m[0] = std::abs(lam) / pair.m1 * spring_mag;
    v[1] = -w * w * spectral_density(baths.first, w) * sxx;
    m[1] = std::abs(v[1]);
    v[2] = w * (resp.K2 / resp.D).imag() * fr.noise1;
    m[2] = std::abs(v[2]);
  });
  return {r.value[0], r.value[1], r.value[2], r.error[0] + r.error[1] + r.error[2]};
}

}  // namespace duet
