#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "duet/quadrature.hpp"
#include "duet/response.hpp"

namespace duet {

/// Stationary covariance matrix over (x, p_x, y, p_y) with symmetrized
/// second moments, C_AB = <{A, B}>/2 - <A><B>.
struct StationaryCovariance {
  Eigen::Matrix4d matrix = Eigen::Matrix4d::Zero();
  Eigen::Matrix4d error = Eigen::Matrix4d::Zero();  // quadrature error estimates
  double omega_split = 0.0;                         // resolved omega_max
  std::size_t panels = 0;
};

/// Equal-time covariance C_AB = int_0^inf dw/2pi Re S_AB(w), all ten entries
/// integrated together. Throws ConvergenceError if the quadrature fails and
/// PhysicalityError if C + (i hbar/2) sigma has an eigenvalue below -1e-8,
/// which signals a misconfigured quadrature.
StationaryCovariance stationary_covariance(const OscillatorPair& pair, const BathPair& baths,
                                           const QuadratureConfig& quad);

/// <(x - y)^2> integrated directly from the interaction-coordinate response
/// (K2 - lambda)/D and (K1 - lambda)/D.
struct ScalarEstimate {
  double value = 0.0;
  double error = 0.0;
};

ScalarEstimate interaction_coordinate_variance(const OscillatorPair& pair, const BathPair& baths,
                                               const QuadratureConfig& quad);

/// Smallest eigenvalue of the Hermitian matrix C + (i hbar/2) sigma; >= 0 for
/// every physical state.
double uncertainty_min_eigenvalue(const Eigen::Matrix4d& c);

}  // namespace duet
