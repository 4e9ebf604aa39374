#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "duet/bath.hpp"
#include "duet/error.hpp"
#include "generators.hpp"

namespace duet {
namespace {

TEST(SpectralDensity, LorentzianValues) {
  const BathSpec b = BathSpec::ohm_drude(0.1, 0.02, 0.0);
  EXPECT_DOUBLE_EQ(spectral_density(b, 0.0), 0.1);
  EXPECT_NEAR(spectral_density(b, 50.0), 0.05, 1e-15);
}

TEST(SpectralDensity, EvenAndNonNegative) {
  testing::Draws draws(11);
  for (int i = 0; i < 200; ++i) {
    const BathSpec b = BathSpec::ohm_drude(draws.log_uniform(1e-3, 1.0), draws.log_uniform(0.02, 5.0), 0.0);
    const double w = draws.uniform(-100.0, 100.0);
    EXPECT_GE(spectral_density(b, w), 0.0);
    EXPECT_EQ(spectral_density(b, w), spectral_density(b, -w));
  }
}

TEST(FrictionKernel, RealPartIsSpectralDensityAndDrudeKramersKronig) {
  testing::Draws draws(12);
  for (int i = 0; i < 200; ++i) {
    const BathSpec b = BathSpec::ohm_drude(draws.log_uniform(1e-3, 1.0), draws.log_uniform(0.02, 5.0), 0.0);
    const double w = draws.uniform(-100.0, 100.0);
    const auto mu = friction_kernel(b, w);
    const double rho = spectral_density(b, w);
    EXPECT_NEAR(mu.real(), rho, 1e-15 * std::max(1.0, rho));
    const double tau = std::get<OhmDrude>(b.model).tau_c;
    EXPECT_NEAR(mu.imag(), w * tau * mu.real(), 1e-13 * std::abs(mu));
  }
  EXPECT_EQ(friction_kernel(BathSpec::ohm_drude(0.3, 1.0, 0.0), 0.0), std::complex<double>(0.3, 0.0));
}

TEST(FrictionKernel, TimeDomainKernelHasTheFourierTransform) {
  // Direct numerical Fourier integral of the exponential memory kernel.
  const BathSpec b = BathSpec::ohm_drude(0.4, 0.7, 0.0);
  for (double w : {0.0, 0.3, 1.0, 2.5}) {
    std::complex<double> sum = 0.0;
    const double h = 1e-3;
    for (int k = 0; k < 40000; ++k) {
      const double t = (k + 0.5) * h;
      sum += friction_kernel_time(b, t) * std::exp(std::complex<double>(0.0, w * t)) * h;
    }
    EXPECT_NEAR(std::abs(sum - friction_kernel(b, w)), 0.0, 1e-6) << "w = " << w;
  }
  EXPECT_EQ(friction_kernel_time(b, -1.0), 0.0);
}

TEST(EffectiveTemperature, Limits) {
  EXPECT_DOUBLE_EQ(effective_temperature(1.0, 0.0), 1.0);
  EXPECT_NEAR(effective_temperature(1.0, 1e-9), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(effective_temperature(0.0, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(effective_temperature(0.0, -1.0), 0.5);
  // (w/2) coth(w/2T) at T = 1, w = 2 is coth(1).
  EXPECT_NEAR(effective_temperature(1.0, 2.0), std::cosh(1.0) / std::sinh(1.0), 1e-15);
  EXPECT_NEAR(effective_temperature(1.0, 2.0), 1.313035285499331, 1e-14);
  // No overflow deep in the quantum regime.
  EXPECT_DOUBLE_EQ(effective_temperature(1e-3, 5.0), 2.5);
}

TEST(EffectiveTemperature, BoundedBelowAndMonotoneInTemperature) {
  testing::Draws draws(13);
  for (int i = 0; i < 500; ++i) {
    const double t = draws.uniform(0.0, 10.0);
    const double w = draws.uniform(-50.0, 50.0);
    const double theta = effective_temperature(t, w);
    EXPECT_GE(theta, std::max(t, 0.5 * std::abs(w)) * (1.0 - 1e-12));
    EXPECT_EQ(theta, effective_temperature(t, -w));
    EXPECT_GE(effective_temperature(t + 0.1, w), theta);
  }
  EXPECT_NEAR(effective_temperature(1.0, 400.0) / 200.0, 1.0, 1e-15);
}

TEST(EffectiveTemperature, DerivativeMatchesBoseFormAndFiniteDifference) {
  EXPECT_EQ(effective_temperature_derivative(0.7, 0.0), 1.0);
  EXPECT_EQ(effective_temperature_derivative(0.0, 1.0), 0.0);
  EXPECT_EQ(effective_temperature_derivative(1e-3, 50.0), 0.0);
  testing::Draws draws(14);
  for (int i = 0; i < 300; ++i) {
    const double t = draws.log_uniform(0.05, 10.0);
    const double w = draws.log_uniform(1e-3, 20.0);
    // (w/T)^2 n (n + 1) with the Bose occupation n = 1/(exp(w/T) - 1).
    const double n = 1.0 / std::expm1(w / t);
    const double bose = (w / t) * (w / t) * n * (n + 1.0);
    const double d = effective_temperature_derivative(t, w);
    EXPECT_NEAR(d, bose, 1e-12 * std::max(bose, 1e-300) + 1e-300);
    // Central difference of the thermal part w/(exp(w/T) - 1); the zero-point
    // term w/2 is temperature independent and would only add cancellation.
    const double h = 1e-4 * t / std::max(1.0, w / t);
    auto thermal = [w](double temp) { return w / std::expm1(w / temp); };
    const double fd = (thermal(t + h) - thermal(t - h)) / (2.0 * h);
    EXPECT_NEAR(d, fd, 1e-6 * d);
    EXPECT_EQ(d, effective_temperature_derivative(t, -w));
  }
}

TEST(ForceNoise, FluctuationDissipationForm) {
  const BathSpec b = BathSpec::ohm_drude(0.1, 0.02, 0.0);
  EXPECT_NEAR(force_noise_spectrum(b, 1.0), 2.0 * spectral_density(b, 1.0), 1e-16);
  const BathSpec silent = BathSpec::ohm_drude(0.0, 0.02, 3.0);
  EXPECT_EQ(force_noise_spectrum(silent, 1.0), 0.0);
  for (double tau : {0.02, 0.5, 4.0}) {
    const BathSpec h = BathSpec::ohm_drude(0.3, tau, 2.0);
    EXPECT_NEAR(force_noise_spectrum(h, 1.7) / spectral_density(h, 1.7), 4.0 * effective_temperature(2.0, 1.7),
                1e-13);
  }
}

TEST(BathSpec, RejectsInvalidParameters) {
  EXPECT_THROW(BathSpec::ohm_drude(-0.1, 1.0, 0.0), InvalidParameter);
  EXPECT_THROW(BathSpec::ohm_drude(0.1, 0.0, 0.0), InvalidParameter);
  EXPECT_THROW(BathSpec::ohm_drude(0.1, 1.0, -1.0), InvalidParameter);
  EXPECT_THROW(BathSpec::ohm_drude(std::numeric_limits<double>::quiet_NaN(), 1.0, 0.0), InvalidParameter);
  EXPECT_THROW(with_temperature(BathSpec::ohm_drude(0.1, 1.0, 0.0), -2.0), InvalidParameter);
}

}  // namespace
}  // namespace duet
