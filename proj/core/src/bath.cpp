#include "duet/bath.hpp"

#include <cmath>
#include <string>

#include "duet/error.hpp"

namespace duet {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

BathSpec BathSpec::ohm_drude(double gamma, double tau_c, double temperature) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw InvalidParameter("bath: gamma must be finite and >= 0, got " + std::to_string(gamma));
  if (!(tau_c > 0.0) || !std::isfinite(tau_c))
    throw InvalidParameter("bath: tau_c must be finite and > 0, got " + std::to_string(tau_c));
  if (!(temperature >= 0.0) || !std::isfinite(temperature))
    throw InvalidParameter("bath: temperature must be finite and >= 0, got " +
                           std::to_string(temperature));
  return BathSpec{OhmDrude{gamma, tau_c}, temperature};
}

double spectral_density(const BathSpec& bath, double omega) {
  return std::visit(overloaded{[omega](const OhmDrude& d) {
                      const double inv_tau = 1.0 / d.tau_c;
                      return d.gamma * inv_tau * inv_tau / (omega * omega + inv_tau * inv_tau);
                    }},
                    bath.model);
}

std::complex<double> friction_kernel(const BathSpec& bath, std::complex<double> z) {
  return std::visit(overloaded{[z](const OhmDrude& d) {
                      const std::complex<double> i{0.0, 1.0};
                      return d.gamma / (1.0 - i * z * d.tau_c);
                    }},
                    bath.model);
}

double friction_kernel_time(const BathSpec& bath, double tau) {
  if (tau < 0.0) return 0.0;
  return std::visit(overloaded{[tau](const OhmDrude& d) {
                      return d.gamma / d.tau_c * std::exp(-tau / d.tau_c);
                    }},
                    bath.model);
}

double effective_temperature(double temperature, double omega) {
  const double w = std::abs(omega);
  if (temperature <= 0.0) return 0.5 * w;
  if (w == 0.0) return temperature;
  // (w/2) coth(w/2T) = w/2 + w / (exp(w/T) - 1); expm1 keeps the small-w
  // limit accurate and overflows harmlessly to +inf for w/T > 709.
  return 0.5 * w + w / std::expm1(w / temperature);
}

double effective_temperature_derivative(double temperature, double omega) {
  const double w = std::abs(omega);
  if (w == 0.0) return 1.0;
  if (temperature <= 0.0) return 0.0;
  const double y = 0.5 * w / temperature;
  // sinh overflows to +inf for y > 710, which correctly gives 0.
  const double r = y / std::sinh(y);
  return r * r;
}

double force_noise_spectrum(const BathSpec& bath, double omega) {
  return 4.0 * spectral_density(bath, omega) * effective_temperature(bath.temperature, omega);
}

double friction_scale(const BathSpec& bath) {
  return std::visit(overloaded{[](const OhmDrude& d) { return d.gamma; }}, bath.model);
}

double bath_bandwidth(const BathSpec& bath) {
  return std::visit(overloaded{[](const OhmDrude& d) { return 1.0 / d.tau_c; }}, bath.model);
}

BathSpec with_temperature(const BathSpec& bath, double temperature) {
  if (!(temperature >= 0.0) || !std::isfinite(temperature))
    throw InvalidParameter("bath: temperature must be finite and >= 0");
  BathSpec copy = bath;
  copy.temperature = temperature;
  return copy;
}

}  // namespace duet
