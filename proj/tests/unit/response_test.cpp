#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "duet/error.hpp"
#include "duet/response.hpp"
#include "generators.hpp"

namespace duet {
namespace {

using testing::Draws;
using cd = std::complex<double>;

TEST(OscillatorPair, StabilityValidation) {
  EXPECT_NO_THROW(OscillatorPair::make(1.0, 1.0, 1.0, 1.0, 5.0));
  EXPECT_THROW(OscillatorPair::make(0.0, 1.0, 1.0, 1.0, 0.1), InvalidParameter);
  EXPECT_THROW(OscillatorPair::make(1.0, 1.0, -1.0, 1.0, 0.1), InvalidParameter);
  // -k1 k2 / (k1 + k2) = -0.5 is the stability edge for negative coupling.
  EXPECT_NO_THROW(OscillatorPair::make(1.0, 1.0, 1.0, 1.0, -0.49));
  EXPECT_THROW(OscillatorPair::make(1.0, 1.0, 1.0, 1.0, -0.5), InvalidParameter);
}

TEST(EvaluateResponse, StaticLimitAndDecoupling) {
  const auto pair = OscillatorPair::make(1.0, 1.3, 1.0, 0.7, 0.2);
  const BathPair baths{BathSpec::ohm_drude(0.3, 0.5, 0.0), BathSpec::ohm_drude(0.1, 0.2, 0.0)};
  const ResponseEval r0 = evaluate_response(pair, baths, 0.0);
  EXPECT_NEAR(std::abs(r0.K1 - cd(1.2, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r0.K2 - cd(0.9, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(r0.D.real(), 1.2 * 0.9 - 0.04, 1e-15);
  EXPECT_EQ(r0.D.imag(), 0.0);

  const auto free_pair = OscillatorPair::make(1.0, 1.3, 1.0, 0.7, 0.0);
  const ResponseEval r = evaluate_response(free_pair, baths, 0.8);
  EXPECT_EQ(r.R(0, 1), cd(0.0, 0.0));
  EXPECT_NEAR(std::abs(r.R(0, 0) - 1.0 / r.K1), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.R(1, 1) - 1.0 / r.K2), 0.0, 1e-15);
}

TEST(EvaluateResponse, InverseOfDynamicalMatrixAndConjugationSymmetry) {
  Draws draws(21);
  for (int i = 0; i < 300; ++i) {
    const auto s = draws.setup();
    const double w = draws.uniform(-20.0, 20.0);
    const ResponseEval r = evaluate_response(s.pair, s.baths, w);
    Eigen::Matrix2cd k;
    k << r.K1, -s.pair.lambda, -s.pair.lambda, r.K2;
    const Eigen::Matrix2cd prod = r.R * k;
    EXPECT_LT((prod - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(r.R(0, 1), r.R(1, 0));
    const ResponseEval rm = evaluate_response(s.pair, s.baths, -w);
    EXPECT_LT((rm.R - r.R.conjugate()).cwiseAbs().maxCoeff(), 1e-12 * r.R.cwiseAbs().maxCoeff());
  }
}

TEST(EvaluateResponse, LosslessResonanceIsReported) {
  const auto pair = OscillatorPair::make(1.0, 1.0, 1.0, 1.0, 0.0);
  const BathPair baths{BathSpec::ohm_drude(0.0, 1.0, 0.0), BathSpec::ohm_drude(0.0, 1.0, 0.0)};
  EXPECT_THROW(evaluate_response(pair, baths, 1.0), SingularResponse);
}

TEST(LosslessEigenfrequencies, CaseAValues) {
  const auto s = testing::case_a(0.0, 0.0);
  const ModeFrequencies m = lossless_eigenfrequencies(s.pair);
  EXPECT_NEAR(m.plus, 1.19830, 5e-6);
  EXPECT_NEAR(m.minus, 1.03276, 5e-6);
}

TEST(LosslessEigenfrequencies, MatchIndependentGeneralizedEigenproblem) {
  Draws draws(22);
  for (int i = 0; i < 200; ++i) {
    const auto s = draws.setup();
    const auto& p = s.pair;
    Eigen::Matrix2d k;
    k << p.k1_shifted(), -p.lambda, -p.lambda, p.k2_shifted();
    Eigen::Matrix2d m = Eigen::Vector2d(p.m1, p.m2).asDiagonal();
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix2d> es(k, m);
    const ModeFrequencies f = lossless_eigenfrequencies(p);
    EXPECT_NEAR(f.plus, std::sqrt(es.eigenvalues()(1)), 1e-12 * f.plus);
    EXPECT_NEAR(f.minus, std::sqrt(es.eigenvalues()(0)), 1e-12 * f.plus);
    EXPECT_GE(f.plus, f.minus);
    EXPECT_GT(f.minus, 0.0);
  }
}

TEST(LosslessEigenfrequencies, SpecialCases) {
  const ModeFrequencies a = lossless_eigenfrequencies(OscillatorPair::make(1.0, 2.0, 1.0, 4.5, 0.0));
  EXPECT_DOUBLE_EQ(a.plus, 1.5);
  EXPECT_DOUBLE_EQ(a.minus, 1.0);
  const ModeFrequencies b = lossless_eigenfrequencies(OscillatorPair::make(2.0, 2.0, 3.0, 3.0, 0.4));
  EXPECT_NEAR(b.minus, std::sqrt(1.5), 1e-14);
  EXPECT_NEAR(b.plus * b.plus, 1.5 + 0.4, 1e-13);
}

TEST(RwaEigenfrequencies, ClosedFormLimits) {
  const BathPair lossless{BathSpec::ohm_drude(0.0, 1.0, 0.0), BathSpec::ohm_drude(0.0, 1.0, 0.0)};
  const auto pair = OscillatorPair::make(1.0, 1.0, 1.0, 1.0, 0.1);
  const ComplexModeFrequencies f = rwa_eigenfrequencies(pair, lossless);
  const double w = pair.omega1();
  const double gr = 0.1 / w;
  EXPECT_NEAR(std::abs(f.plus - cd(w + 0.5 * gr, 0.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(f.minus - cd(w - 0.5 * gr, 0.0)), 0.0, 1e-14);

  const auto free_pair = OscillatorPair::make(1.0, 1.0, 1.0, 1.44, 0.0);
  const BathPair baths{BathSpec::ohm_drude(0.1, 0.02, 0.0), BathSpec::ohm_drude(0.2, 0.02, 0.0)};
  const ComplexModeFrequencies g = rwa_eigenfrequencies(free_pair, baths);
  const cd o1 = 1.0 - cd(0.0, 0.5) * friction_kernel(baths.first, 1.0);
  const cd o2 = 1.2 - cd(0.0, 0.5) * friction_kernel(baths.second, 1.2);
  EXPECT_NEAR(std::abs(g.plus - o2), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(g.minus - o1), 0.0, 1e-14);
}

TEST(RwaEigenfrequencies, DampedModesLieBelowRealAxis) {
  Draws draws(23);
  for (int i = 0; i < 300; ++i) {
    const auto s = draws.setup();
    const ComplexModeFrequencies f = rwa_eigenfrequencies(s.pair, s.baths);
    EXPECT_LT(f.plus.imag(), 0.0);
    EXPECT_LT(f.minus.imag(), 0.0);
  }
}

// Counts zeros of D(z) inside a rectangle by the argument principle.
int count_zeros(const OscillatorPair& pair, const BathPair& baths, double x0, double x1, double y0, double y1) {
  const int n = 20000;
  double total = 0.0;
  cd prev = response_determinant(pair, baths, cd(x0, y0));
  auto walk = [&](cd a, cd b) {
    for (int k = 1; k <= n; ++k) {
      const cd z = a + (b - a) * (static_cast<double>(k) / n);
      const cd cur = response_determinant(pair, baths, z);
      total += std::arg(cur / prev);
      prev = cur;
    }
  };
  walk(cd(x0, y0), cd(x1, y0));
  walk(cd(x1, y0), cd(x1, y1));
  walk(cd(x1, y1), cd(x0, y1));
  walk(cd(x0, y1), cd(x0, y0));
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

TEST(ResponseDeterminant, NoZerosInUpperHalfPlane) {
  Draws draws(24);
  for (int i = 0; i < 20; ++i) {
    const auto s = draws.setup();
    // The Drude pole at z = -i/tau_c lies in the lower half-plane, so D is
    // analytic on the rectangle.
    EXPECT_EQ(count_zeros(s.pair, s.baths, -30.0, 30.0, 1e-9, 30.0), 0);
  }
  // Sanity check of the counter: the lower half-plane holds the four
  // damped resonances (+-Re, negative Im) of the case (a) parameters.
  const auto a = testing::case_a(0.0, 0.0);
  EXPECT_EQ(count_zeros(a.pair, a.baths, -3.0, 3.0, -1.0, -1e-6), 4);
}

TEST(DampedModes, ConvergeToLosslessFrequenciesForWeakDamping) {
  for (double gamma : {1e-2, 3e-3, 1e-3}) {
    const auto pair = OscillatorPair::make(1.0, 1.0, 1.0, 1.3, 0.2);
    const BathPair baths{BathSpec::ohm_drude(gamma, 0.02, 0.0), BathSpec::ohm_drude(gamma, 0.02, 0.0)};
    const ComplexModeFrequencies z = damped_mode_frequencies(pair, baths);
    const ModeFrequencies f = lossless_eigenfrequencies(pair);
    EXPECT_LT(std::abs(z.plus.real() - f.plus), 2.0 * gamma);
    EXPECT_LT(std::abs(z.minus.real() - f.minus), 2.0 * gamma);
    EXPECT_LT(std::abs(response_determinant(pair, baths, z.plus)), 1e-12);
    EXPECT_LT(std::abs(response_determinant(pair, baths, z.minus)), 1e-12);
  }
}

TEST(Absorption, NonNegativeForRandomParameters) {
  Draws draws(25);
  for (int i = 0; i < 300; ++i) {
    const auto s = draws.setup();
    const double w = draws.log_uniform(1e-3, 50.0);
    const DriveWeights f{draws.uniform(0.0, 2.0), draws.uniform(0.0, 2.0)};
    EXPECT_GE(absorption_spectrum(s.pair, s.baths, w, f), 0.0);
  }
  EXPECT_THROW(absorption_spectrum(testing::case_a(0, 0).pair, testing::case_a(0, 0).baths, 1.0, {-1.0, 0.0}),
               InvalidParameter);
}

TEST(Absorption, DecoupledSingleOscillatorAndLossless) {
  const auto pair = OscillatorPair::make(1.0, 1.0, 1.0, 1.5, 0.0);
  const BathPair baths{BathSpec::ohm_drude(0.1, 0.02, 0.0), BathSpec::ohm_drude(0.1, 0.02, 0.0)};
  for (double w : {0.5, 1.0, 1.3}) {
    const cd k1 = -w * w - cd(0.0, w) * friction_kernel(baths.first, w) + 1.0;
    EXPECT_NEAR(absorption_spectrum(pair, baths, w, {1.0, 0.0}), w * (1.0 / k1).imag(), 1e-14);
  }
  const BathPair lossless{BathSpec::ohm_drude(0.0, 1.0, 0.0), BathSpec::ohm_drude(0.0, 1.0, 0.0)};
  EXPECT_EQ(absorption_spectrum(pair, lossless, 0.7, {1.0, 1.0}), 0.0);
}

TEST(Absorption, CaseAPeakAndShoulderAtNormalModes) {
  const auto s = testing::case_a(0.0, 0.0);
  const ModeFrequencies f = lossless_eigenfrequencies(s.pair);
  const double h = 1e-3;
  std::vector<double> w, a1, a2;
  for (int i = 0; i <= 600; ++i) {
    w.push_back(0.8 + i * h);
    a1.push_back(absorption_spectrum(s.pair, s.baths, w.back(), {1.0, 0.0}));
    a2.push_back(absorption_spectrum(s.pair, s.baths, w.back(), {0.0, 1.0}));
  }
  auto argmax = [&](const std::vector<double>& a) {
    return w[static_cast<std::size_t>(std::max_element(a.begin(), a.end()) - a.begin())];
  };
  EXPECT_LE(std::abs(argmax(a1) - f.minus), 2.0 * h + 1e-12);
  EXPECT_LE(std::abs(argmax(a2) - f.plus), 2.0 * h + 1e-12);
  // Driving oscillator 1 shows a shoulder (a local minimum of |slope| away
  // from the main peak) close to the upper normal mode.
  double nearest = 1e300;
  for (std::size_t i = 2; i + 2 < a1.size(); ++i) {
    const double s0 = std::abs(a1[i + 1] - a1[i - 1]);
    const double sl = std::abs(a1[i] - a1[i - 2]);
    const double sr = std::abs(a1[i + 2] - a1[i]);
    if (s0 < sl && s0 < sr && std::abs(w[i] - f.minus) > 0.05) nearest = std::min(nearest, std::abs(w[i] - f.plus));
  }
  EXPECT_LT(nearest, 0.03);
}

}  // namespace
}  // namespace duet
