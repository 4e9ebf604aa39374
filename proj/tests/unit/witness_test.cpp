#include <cmath>

#include <gtest/gtest.h>

#include "duet/covariance.hpp"
#include "duet/witness.hpp"
#include "generators.hpp"

namespace duet {
namespace {

using testing::Draws;
using cd = std::complex<double>;

TEST(RescaledFrame, IsCanonicalAndMatchesDefinition) {
  const auto pair = OscillatorPair::make(1.0, 2.0, 1.0, 0.5, 0.1);
  const RescaledFrame f = rescaled_frame(pair);
  const double w2 = 0.5;  // sqrt(k2 / m2)
  EXPECT_NEAR(f.scale(kX), 1.0, 1e-15);
  EXPECT_NEAR(f.scale(kY), std::sqrt(2.0 * w2), 1e-15);
  EXPECT_NEAR(f.scale(kY) * f.scale(kPy), 1.0, 1e-15);
  EXPECT_NEAR(f.scale(kY), std::sqrt(pair.k2 / w2), 1e-15);
}

TEST(SectorMatrix, HermitianPsdAndEigenIdentities) {
  Draws draws(61);
  for (int i = 0; i < 300; ++i) {
    const auto s = draws.setup();
    const double w = draws.log_uniform(1e-2, 20.0);
    for (Sector sec : {Sector::position, Sector::momentum}) {
      const Eigen::Matrix2cd m = sector_spectral_matrix(s.pair, s.baths, w, sec);
      EXPECT_EQ((m - m.adjoint()).cwiseAbs().maxCoeff(), 0.0);
      const QuadratureSpectra q = optimal_quadrature_spectra(s.pair, s.baths, w, sec);
      const double tr = m.trace().real();
      EXPECT_GE(q.s_min, -1e-12 * tr);
      EXPECT_LE(q.s_min, q.s_max);
      EXPECT_NEAR(q.s_min + q.s_max, tr, 1e-12 * tr);
      EXPECT_NEAR(q.s_min * q.s_max, m.determinant().real(), 1e-12 * tr * tr);
      // Variational property against random unit combinations.
      for (int k = 0; k < 5; ++k) {
        Eigen::Vector2cd v(cd(draws.uniform(-1, 1), draws.uniform(-1, 1)), cd(draws.uniform(-1, 1), draws.uniform(-1, 1)));
        v.normalize();
        const double form = (v.adjoint() * m * v)(0, 0).real();
        EXPECT_GE(form, q.s_min - 1e-12 * tr);
        EXPECT_LE(form, q.s_max + 1e-12 * tr);
      }
    }
  }
}

TEST(SectorMatrix, DecoupledDiagonalAndSymmetricCase) {
  const auto free_pair = OscillatorPair::make(1.0, 1.0, 1.0, 1.3, 0.0);
  const BathPair baths{BathSpec::ohm_drude(0.1, 0.02, 0.3), BathSpec::ohm_drude(0.2, 0.5, 1.0)};
  EXPECT_EQ(std::abs(position_spectral_matrix(free_pair, baths, 0.9)(0, 1)), 0.0);

  const auto pair = OscillatorPair::make(1.0, 1.0, 1.0, 1.0, 0.3);
  const BathPair same{BathSpec::ohm_drude(0.2, 0.1, 0.4), BathSpec::ohm_drude(0.2, 0.1, 0.4)};
  for (double w : {0.7, 1.0, 1.4}) {
    const Eigen::Matrix2cd m = position_spectral_matrix(pair, same, w);
    EXPECT_NEAR(m(0, 0).real(), m(1, 1).real(), 1e-13 * m(0, 0).real());
    EXPECT_LT(std::abs(m(0, 1).imag()), 1e-13 * m(0, 0).real());
    const QuadratureSpectra q = optimal_quadrature_spectra(pair, same, w, Sector::position);
    // Degenerate diagonal with real coupling: eigenvectors (1, +-1)/sqrt2.
    EXPECT_NEAR(std::abs(q.eigenvectors(0, 0)), std::sqrt(0.5), 1e-10);
    EXPECT_NEAR(std::abs(q.eigenvectors(1, 0)), std::sqrt(0.5), 1e-10);
  }
}

TEST(SectorMatrix, RawFrameIsTheUnscaledSubBlock) {
  Draws draws(62);
  for (int i = 0; i < 100; ++i) {
    const auto s = draws.setup();
    const double w = draws.log_uniform(1e-2, 20.0);
    const Matrix4cd full = cross_spectrum(s.pair, s.baths, w).S;
    const Eigen::Vector4d d = rescaled_frame(s.pair).scale;
    const Eigen::Matrix2cd raw = sector_spectral_matrix(s.pair, s.baths, w, Sector::position, Frame::raw);
    const Eigen::Matrix2cd scaled = sector_spectral_matrix(s.pair, s.baths, w, Sector::position);
    EXPECT_EQ(raw(0, 1), full(kX, kY));
    EXPECT_EQ(raw(1, 1), full(kY, kY));
    EXPECT_NEAR(std::abs(scaled(0, 1) - d(kX) * d(kY) * raw(0, 1)), 0.0, 1e-14 * std::abs(scaled(0, 0)) + 1e-300);
    const Eigen::Matrix2cd raw_p = sector_spectral_matrix(s.pair, s.baths, w, Sector::momentum, Frame::raw);
    EXPECT_EQ(raw_p(0, 1), full(kPx, kPy));
    const QuadratureSpectra q = optimal_quadrature_spectra(s.pair, s.baths, w, Sector::position, Frame::raw);
    EXPECT_NEAR(q.s_min + q.s_max, raw.trace().real(), 1e-12 * raw.trace().real());
  }
  // Unit masses and frequencies make the two frames coincide.
  const auto b = testing::case_b(0.5, 0.25);
  const ReferenceSpectra r1 = reference_spectra_T0(b.pair, b.baths, 0.9, Sector::momentum);
  const ReferenceSpectra r2 = reference_spectra_T0(b.pair, b.baths, 0.9, Sector::momentum, Frame::raw);
  EXPECT_NEAR(r1.s_sum, r2.s_sum, 1e-14 * r1.s_sum);
  EXPECT_NEAR(r1.s_diff, r2.s_diff, 1e-14 * r1.s_diff);
}

TEST(ReferenceSpectra, IgnoreTemperaturesAndPeakAtNormalModes) {
  const auto hot = testing::case_a(3.0, 2.0);
  const auto cold = testing::case_a(0.0, 0.0);
  const ReferenceSpectra a = reference_spectra_T0(hot.pair, hot.baths, 1.1, Sector::position);
  const ReferenceSpectra b = reference_spectra_T0(cold.pair, cold.baths, 1.1, Sector::position);
  EXPECT_EQ(a.s_sum, b.s_sum);
  EXPECT_EQ(a.s_diff, b.s_diff);

  const ModeFrequencies f = lossless_eigenfrequencies(cold.pair);
  const double h = 1e-3;
  double best_sum = -1.0, best_diff = -1.0, arg_sum = 0.0, arg_diff = 0.0;
  for (int i = 0; i <= 800; ++i) {
    const double w = 0.8 + i * h;
    const ReferenceSpectra r = reference_spectra_T0(cold.pair, cold.baths, w, Sector::position);
    EXPECT_GE(r.s_sum, 0.0);
    EXPECT_GE(r.s_diff, 0.0);
    if (r.s_sum > best_sum) { best_sum = r.s_sum; arg_sum = w; }
    if (r.s_diff > best_diff) { best_diff = r.s_diff; arg_diff = w; }
  }
  EXPECT_LE(std::abs(arg_sum - f.minus), 2.0 * h + 1e-12);
  EXPECT_LE(std::abs(arg_diff - f.plus), 2.0 * h + 1e-12);
}

TEST(SpectralInvariants, BlocksAreRankOne) {
  Draws draws(62);
  for (int i = 0; i < 500; ++i) {
    const auto s = draws.setup();
    const double w = draws.log_uniform(1e-2, 50.0);
    for (const Matrix4cd& m : {rescaled_cross_spectrum(s.pair, s.baths, w), cross_spectrum(s.pair, s.baths, w).S}) {
      const SpectralInvariants inv = spectral_block_invariants(m);
      EXPECT_LT(inv.det_a, 1e-10);
      EXPECT_LT(inv.det_b, 1e-10);
      EXPECT_LT(inv.det_c, 1e-10);
      EXPECT_LT(inv.i4, 1e-10);
    }
  }
}

TEST(EprSpectra, SymmetricFormulaAndIntegralConsistency) {
  const auto s = testing::case_c(0.1, 0.15);
  const EprPair sym{Eigen::Vector4d(1.0, 0.0, 1.0, 0.0) / std::sqrt(2.0),
                    Eigen::Vector4d(0.0, 1.0, 0.0, -1.0) / std::sqrt(2.0), 0.0};
  for (double w : {0.5, 1.0, 1.5}) {
    const SpectralMatrix4 m = cross_spectrum(s.pair, s.baths, w);
    const double expected = 0.5 * (m.S(kX, kX).real() + m.S(kY, kY).real() + 2.0 * m.S(kX, kY).real());
    EXPECT_NEAR(epr_fixed_pair_spectra(s.pair, s.baths, w, sym).s_qq, expected, 1e-14 * expected);
  }

  const StationaryCovariance c = stationary_covariance(s.pair, s.baths, {});
  const EprPair e = epr_pair(c.matrix);
  const auto r = integrate_over_frequency(s.pair, s.baths, {}, 2, [&](double w, double* v, double* mag) {
    const EprSpectra sp = epr_fixed_pair_spectra(s.pair, s.baths, w, e);
    v[0] = sp.s_qq;
    v[1] = sp.s_pp;
    mag[0] = std::abs(v[0]);
    mag[1] = std::abs(v[1]);
  });
  EXPECT_NEAR(r.value[0], e.uncertainty, 1e-6 * e.uncertainty);
  EXPECT_NEAR(r.value[1], e.uncertainty, 1e-6 * e.uncertainty);
}

TEST(EprSpectra, DecoupledIsConvexCombination) {
  const auto pair = OscillatorPair::make(1.0, 1.0, 1.0, 1.3, 0.0);
  const BathPair baths{BathSpec::ohm_drude(0.1, 0.02, 0.3), BathSpec::ohm_drude(0.2, 0.5, 1.0)};
  const EprPair e{Eigen::Vector4d(0.6, 0.0, 0.8, 0.0), Eigen::Vector4d(0.0, 0.8, 0.0, -0.6), 0.0};
  const SpectralMatrix4 m = cross_spectrum(pair, baths, 1.1);
  EXPECT_NEAR(epr_fixed_pair_spectra(pair, baths, 1.1, e).s_qq,
              0.36 * m.S(kX, kX).real() + 0.64 * m.S(kY, kY).real(), 1e-14);
}

}  // namespace
}  // namespace duet
