#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/Core>

#include "duet/response.hpp"

namespace duet {

/// Finite set of unit-mass bath oscillators whose couplings reproduce a
/// continuous spectral density: rho(w) ~ (pi/2) sum_j kappa_j delta(w - w_j)
/// with kappa_j = k_j c_j^2 = (2/pi) rho(w_j) dw_j.
///
/// Frequencies follow a sinh-stretched midpoint rule, w_j = w_s sinh(A u_j)
/// with u_j = (j - 1/2)/N and w_s sinh(A) = Omega_max, so the grid is fine
/// around the oscillator band and coarse in the far Drude tail. A is chosen to
/// minimize the spacing at the band edge.
struct BathDiscretization {
  std::vector<double> omega;     // w_j
  std::vector<double> weight;    // dw_j
  std::vector<double> coupling;  // kappa_j
  double omega_max = 0.0;
  double stretch = 0.0;  // A
  double scale = 0.0;    // w_s
  double band_edge = 0.0;

  /// Local grid spacing at frequency w.
  double spacing_at(double w) const;
  /// sum_j rho(w_j) dw_j, the discrete estimate of int_0^Omega_max rho.
  double reproduced_spectral_integral() const;
};

/// Throws InvalidParameter for n < 100, Omega_max below the bath cutoff
/// 20 / tau_c, or a band-edge spacing coarser than gamma / (10 m).
BathDiscretization discretize_bath(const BathSpec& bath, double mass, std::size_t n,
                                   double omega_max, double band_edge);

struct FiniteBathOptions {
  std::size_t n1 = 1500;
  std::size_t n2 = 1500;
  double omega_max = 0.0;  // <= 0: max(20/tau_c1, 20/tau_c2, 20 omega_plus)
  double band_edge = 0.0;  // <= 0: omega_plus + max gamma_i/m_i
};

/// Exact linear (normal-mode) dynamics of the two system oscillators plus
/// both discretized baths. Phase-space ordering is interleaved:
/// (x, p_x, y, p_y, q_1, p_1, ..., q_N1, p_N1, q'_1, p'_1, ...).
///
/// The initial state has the system in the ground state of the uncoupled,
/// unshifted oscillators and each bath mode thermal about the clamped
/// position c_j x(0) (resp. c'_j y(0)). Models are immutable; the eigensystem
/// is shared between copies that differ only in temperatures.
class FiniteBathModel {
 public:
  static FiniteBathModel build(const OscillatorPair& pair, const BathPair& baths,
                               const FiniteBathOptions& options = {});

  /// Same discretization and eigensystem, new bath temperatures.
  FiniteBathModel with_temperatures(double t1, double t2) const;

  const OscillatorPair& pair() const { return pair_; }
  const BathPair& baths() const { return baths_; }
  const BathDiscretization& bath1() const { return shared_->bath1; }
  const BathDiscretization& bath2() const { return shared_->bath2; }

  /// Phase-space dimension 4 + 2 N1 + 2 N2.
  std::size_t dimension() const { return 2 * shared_->n_config; }
  /// 2 pi / (largest grid spacing inside the oscillator band).
  double recurrence_time() const { return shared_->recurrence_time; }
  double time_guard() const { return 0.5 * recurrence_time(); }

  /// Full flow matrix Phi(t) (dimension^2 storage; intended for small N).
  Eigen::MatrixXd flow(double t) const;
  /// Rows of Phi(t) for (x, p_x, y, p_y).
  Eigen::Matrix<double, 4, Eigen::Dynamic> system_flow_rows(double t) const;

  Eigen::MatrixXd initial_covariance() const;
  /// Sigma(t) = Phi Sigma(0) Phi^T. Throws InvalidParameter beyond time_guard().
  Eigen::MatrixXd propagate_covariance(double t) const;
  /// System block of Sigma(t) without forming the full matrix.
  Eigen::Matrix4d system_covariance(double t) const;

  /// Covariances at each time of the observables (x, p_x, y, p_y, F1), where
  /// F1 = sum_j k_j c_j (q_j - c_j x) is the total bath force on oscillator 1.
  std::vector<Eigen::Matrix<double, 5, 5>> observable_covariances(const std::vector<double>& times) const;

 private:
  struct Shared {
    BathDiscretization bath1;
    BathDiscretization bath2;
    std::size_t n_config = 0;
    Eigen::VectorXd mass;
    Eigen::VectorXd frequency;  // normal-mode frequencies
    Eigen::MatrixXd gt_plus;    // U^T M^{1/2}
    Eigen::MatrixXd gt_minus;   // U^T M^{-1/2}
    double recurrence_time = 0.0;
  };

  FiniteBathModel(OscillatorPair pair, BathPair baths, std::shared_ptr<const Shared> shared);
  void check_time(double t) const;
  Eigen::VectorXd independent_q_variance() const;
  Eigen::VectorXd independent_p_variance() const;
  // Maps coefficients on q(0) to coefficients on (x(0), y(0), xi).
  void to_independent(Eigen::Ref<Eigen::MatrixXd> alpha) const;

  OscillatorPair pair_;
  BathPair baths_;
  std::shared_ptr<const Shared> shared_;
};

struct SteadyStateOptions {
  double t_relax = 0.0;          // <= 0: 10 max(m_i / gamma_i)
  double window = 0.0;           // <= 0: 8 periods of omega_minus
  double sample_spacing = 0.0;   // <= 0: period of omega_plus / 16
  double plateau_tolerance = 0.01;
};

struct OracleSteadyState {
  Eigen::Matrix4d covariance = Eigen::Matrix4d::Zero();
  double heat_current = 0.0;  // (lambda/2)<x ydot - xdot y>
  double spring_power = 0.0;  // work by the coupling spring on oscillator 1
  double bath_power = 0.0;    // work by bath 1 on oscillator 1
  double plateau_spread = 0.0;
  double t_start = 0.0;
  double t_end = 0.0;
  std::size_t samples = 0;
};

/// Time average of the system covariance over [t_relax, t_relax + window].
/// Throws ConvergenceError if the window extends past the recurrence guard or
/// if any entry drifts by more than plateau_tolerance sqrt(C_aa C_bb).
OracleSteadyState steady_system_covariance(const FiniteBathModel& model,
                                           const SteadyStateOptions& options = {});

}  // namespace duet
