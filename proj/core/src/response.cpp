#include "duet/response.hpp"

#include <cmath>
#include <string>

#include "duet/error.hpp"

namespace duet {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> inverse_susceptibility(double mass, double spring, const BathSpec& bath,
                                            std::complex<double> z) {
  return -mass * z * z - kI * z * friction_kernel(bath, z) + spring;
}

}  // namespace

OscillatorPair OscillatorPair::make(double m1, double m2, double k1, double k2, double lambda) {
  if (!(m1 > 0.0) || !(m2 > 0.0)) throw InvalidParameter("oscillators: masses must be > 0");
  if (!(k1 > 0.0) || !(k2 > 0.0)) throw InvalidParameter("oscillators: spring constants must be > 0");
  if (!std::isfinite(lambda)) throw InvalidParameter("oscillators: coupling must be finite");
  OscillatorPair pair{m1, m2, k1, k2, lambda};
  const double k1s = pair.k1_shifted();
  const double k2s = pair.k2_shifted();
  if (!(k1s > 0.0 && k2s > 0.0 && lambda * lambda < k1s * k2s))
    throw InvalidParameter("oscillators: stability condition lambda^2 < k1' k2' violated (lambda = " +
                           std::to_string(lambda) + ")");
  return pair;
}

double OscillatorPair::omega10() const { return std::sqrt(k1 / m1); }
double OscillatorPair::omega20() const { return std::sqrt(k2 / m2); }
double OscillatorPair::omega1() const { return std::sqrt(k1_shifted() / m1); }
double OscillatorPair::omega2() const { return std::sqrt(k2_shifted() / m2); }
double OscillatorPair::coupling_g2() const { return lambda / std::sqrt(m1 * m2); }

ResponseEval evaluate_response(const OscillatorPair& pair, const BathPair& baths, double omega) {
  ResponseEval r;
  r.omega = omega;
  r.K1 = inverse_susceptibility(pair.m1, pair.k1_shifted(), baths.first, omega);
  r.K2 = inverse_susceptibility(pair.m2, pair.k2_shifted(), baths.second, omega);
  r.D = r.K1 * r.K2 - pair.lambda * pair.lambda;
  if (r.D == 0.0)
    throw SingularResponse("response: D(omega) = 0 at omega = " + std::to_string(omega) +
                           " (undamped resonance)");
  r.R(0, 0) = r.K2 / r.D;
  r.R(0, 1) = pair.lambda / r.D;
  r.R(1, 0) = r.R(0, 1);
  r.R(1, 1) = r.K1 / r.D;
  return r;
}

std::complex<double> response_determinant(const OscillatorPair& pair, const BathPair& baths,
                                          std::complex<double> z) {
  const auto K1 = inverse_susceptibility(pair.m1, pair.k1_shifted(), baths.first, z);
  const auto K2 = inverse_susceptibility(pair.m2, pair.k2_shifted(), baths.second, z);
  return K1 * K2 - pair.lambda * pair.lambda;
}

ModeFrequencies lossless_eigenfrequencies(const OscillatorPair& pair) {
  const double w1s = pair.k1_shifted() / pair.m1;
  const double w2s = pair.k2_shifted() / pair.m2;
  const double g2 = pair.coupling_g2();
  const double mean = 0.5 * (w1s + w2s);
  const double half_split = 0.5 * std::sqrt((w1s - w2s) * (w1s - w2s) + 4.0 * g2 * g2);
  // mean - half_split = det / (mean + half_split) avoids cancellation for the soft mode.
  const double plus_sq = mean + half_split;
  const double minus_sq = (w1s * w2s - g2 * g2) / plus_sq;
  return {std::sqrt(plus_sq), std::sqrt(minus_sq)};
}

ComplexModeFrequencies rwa_eigenfrequencies(const OscillatorPair& pair, const BathPair& baths) {
  const double w1 = pair.omega1();
  const double w2 = pair.omega2();
  const std::complex<double> gamma1 = friction_kernel(baths.first, w1) / pair.m1;
  const std::complex<double> gamma2 = friction_kernel(baths.second, w2) / pair.m2;
  const std::complex<double> big1 = w1 - 0.5 * kI * gamma1;
  const std::complex<double> big2 = w2 - 0.5 * kI * gamma2;
  const double gr = pair.lambda / std::sqrt(pair.m1 * pair.m2 * w1 * w2);
  const std::complex<double> root = std::sqrt((big1 - big2) * (big1 - big2) + gr * gr);
  // Label by real part so that "plus" is the upper branch.
  std::complex<double> a = 0.5 * (big1 + big2) + 0.5 * root;
  std::complex<double> b = 0.5 * (big1 + big2) - 0.5 * root;
  if (a.real() < b.real()) std::swap(a, b);
  return {a, b};
}

namespace {

std::complex<double> newton_root(const OscillatorPair& pair, const BathPair& baths,
                                 std::complex<double> z) {
  for (int iter = 0; iter < 100; ++iter) {
    const double h = 1e-6 * std::max(1.0, std::abs(z));
    const auto f = response_determinant(pair, baths, z);
    const auto df = (response_determinant(pair, baths, z + h) -
                     response_determinant(pair, baths, z - h)) / (2.0 * h);
    if (df == 0.0) break;
    const auto step = f / df;
    z -= step;
    if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(z))) return z;
  }
  throw ConvergenceError("response: Newton search for a zero of D(z) did not converge");
}

}  // namespace

ComplexModeFrequencies damped_mode_frequencies(const OscillatorPair& pair, const BathPair& baths) {
  const auto seeds = rwa_eigenfrequencies(pair, baths);
  ComplexModeFrequencies out{newton_root(pair, baths, seeds.plus), newton_root(pair, baths, seeds.minus)};
  if (out.plus.real() < out.minus.real()) std::swap(out.plus, out.minus);
  return out;
}

double absorption_spectrum(const OscillatorPair& pair, const BathPair& baths, double omega,
                           DriveWeights weights) {
  if (weights.first < 0.0 || weights.second < 0.0)
    throw InvalidParameter("absorption: drive weights must be >= 0");
  const ResponseEval r = evaluate_response(pair, baths, omega);
  return omega * weights.first * (r.K2 / r.D).imag() + omega * weights.second * (r.K1 / r.D).imag();
}

}  // namespace duet
