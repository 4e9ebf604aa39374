#include "duet/covariance.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "duet/error.hpp"
#include "duet/gaussian_info.hpp"
#include "duet/spectra.hpp"
#include "duet/units.hpp"

namespace duet {

StationaryCovariance stationary_covariance(const OscillatorPair& pair, const BathPair& baths,
                                           const QuadratureConfig& quad) {
  constexpr std::size_t kEntries = 10;
  const auto r = integrate_over_frequency(pair, baths, quad, kEntries, [&](double w, double* v, double* m) {
    const ForceResponse fr = force_response(pair, baths, w);
    std::size_t c = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b, ++c) {
        v[c] = fr.noise1 * (std::conj(fr.to_force1(a)) * fr.to_force1(b)).real() +
               fr.noise2 * (std::conj(fr.to_force2(a)) * fr.to_force2(b)).real();
        m[c] = fr.noise1 * std::abs(fr.to_force1(a)) * std::abs(fr.to_force1(b)) +
               fr.noise2 * std::abs(fr.to_force2(a)) * std::abs(fr.to_force2(b));
      }
  });

  StationaryCovariance out;
  std::size_t c = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b, ++c) {
      out.matrix(a, b) = out.matrix(b, a) = r.value[c];
      out.error(a, b) = out.error(b, a) = r.error[c];
    }
  out.omega_split = plan_frequency_integration(pair, baths, quad).split;
  out.panels = r.panels;

  const double min_eig = uncertainty_min_eigenvalue(out.matrix);
  if (min_eig < -1e-8)
    throw PhysicalityError("covariance: uncertainty relation violated (min eig of C + i sigma/2 = " +
                           std::to_string(min_eig) + "); tighten the quadrature settings");
  return out;
}

ScalarEstimate interaction_coordinate_variance(const OscillatorPair& pair, const BathPair& baths,
                                               const QuadratureConfig& quad) {
  const auto r = integrate_over_frequency(pair, baths, quad, 1, [&](double w, double* v, double* m) {
    const ResponseEval resp = evaluate_response(pair, baths, w);
    v[0] = std::norm((resp.K2 - pair.lambda) / resp.D) * force_noise_spectrum(baths.first, w) +
           std::norm((resp.K1 - pair.lambda) / resp.D) * force_noise_spectrum(baths.second, w);
    m[0] = v[0];
  });
  return {r.value[0], r.error[0]};
}

double uncertainty_min_eigenvalue(const Eigen::Matrix4d& c) {
  const Eigen::Matrix4cd h = c.cast<std::complex<double>>() +
                             std::complex<double>(0.0, half_hbar) * symplectic_form().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace duet
