#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace duet {

/// Frequency-integration settings shared by every steady-state integral.
struct QuadratureConfig {
  /// Split point between the finite panel pool and the mapped tail; <= 0
  /// selects max(20 omega_plus, 20 / tau_c) for the problem at hand.
  double omega_max = 0.0;
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  /// Extra frequencies at which the initial partition is split.
  std::vector<double> seed_points;
  /// Upper bound on the number of panels before reporting non-convergence.
  std::size_t max_panels = 20000;
};

/// Vector integrand: writes dim values f_c(omega) and dim non-negative
/// magnitudes |f_c| bounds used to estimate the cancellation-limited floor.
using VectorIntegrand = std::function<void(double omega, double* values, double* magnitudes)>;

struct QuadratureResult {
  std::vector<double> value;
  std::vector<double> error;      // estimated absolute error per component
  std::vector<double> magnitude;  // integral of the magnitude bound
  std::size_t panels = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Integrates f over [0, infinity) by globally adaptive 7/15-point
/// Gauss-Kronrod panels. The range [split, infinity) is folded onto (0, 1]
/// through omega = split / t and refined in the same panel pool, so narrow
/// resonances below split and slowly decaying tails share one error budget.
/// Breakpoints inside (0, split) seed the initial partition.
///
/// Component c is converged when its error estimate is at most
/// max(abs_tol, rel_tol |I_c|, 50 eps * magnitude_c). Panels are processed in a
/// fixed order, so results are bit-reproducible for identical inputs.
QuadratureResult integrate_half_line(const VectorIntegrand& f, std::size_t dim, double split,
                                     std::vector<double> breakpoints, double rel_tol, double abs_tol,
                                     std::size_t max_panels);

/// Scalar convenience wrapper over a finite interval [a, b] (same rule and
/// error heuristic); returns {value, error}.
struct ScalarQuadrature {
  double value = 0.0;
  double error = 0.0;
};
ScalarQuadrature integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol, std::size_t max_panels = 2000);

}  // namespace duet
