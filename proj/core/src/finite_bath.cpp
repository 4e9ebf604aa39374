#include "duet/finite_bath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "duet/error.hpp"
#include "duet/spectra.hpp"
#include "duet/symmetric_eigen.hpp"
#include "duet/units.hpp"

namespace duet {

namespace {

constexpr std::size_t kObservables = 5;  // x, p_x, y, p_y, F1
constexpr std::size_t kTimeBatch = 64;

// Squared band-edge spacing (times N^2) as a function of the stretch A.
double edge_spacing_sq(double a, double omega_max, double band_edge) {
  const double ws = omega_max / std::sinh(a);
  return a * a * (ws * ws + band_edge * band_edge);
}

double optimal_stretch(double omega_max, double band_edge) {
  // Unimodal in A: tends to omega_max^2 as A -> 0 and grows like A^2 edge^2.
  double lo = 1e-6;
  double hi = std::max(1.0, 2.0 * std::asinh(omega_max / std::max(band_edge, 1e-12)) + 10.0);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = edge_spacing_sq(x1, omega_max, band_edge);
  double f2 = edge_spacing_sq(x2, omega_max, band_edge);
  for (int it = 0; it < 200 && hi - lo > 1e-10 * hi; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = edge_spacing_sq(x1, omega_max, band_edge);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = edge_spacing_sq(x2, omega_max, band_edge);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double BathDiscretization::spacing_at(double w) const {
  const double n = static_cast<double>(omega.size());
  return stretch * std::sqrt(scale * scale + w * w) / n;
}

double BathDiscretization::reproduced_spectral_integral() const {
  double sum = 0.0;
  for (double k : coupling) sum += 0.5 * pi * k;
  return sum;
}

BathDiscretization discretize_bath(const BathSpec& bath, double mass, std::size_t n, double omega_max,
                                   double band_edge) {
  if (n < 100) throw InvalidParameter("finite bath: at least 100 modes per bath are required");
  if (!(band_edge > 0.0)) throw InvalidParameter("finite bath: band edge must be > 0");
  const double cutoff = 20.0 * bath_bandwidth(bath);
  if (!(omega_max >= cutoff * (1.0 - 1e-12)))
    throw InvalidParameter("finite bath: Omega_max = " + std::to_string(omega_max) +
                           " does not cover the bath tail (need >= 20/tau_c = " + std::to_string(cutoff) + ")");
  if (!(omega_max > band_edge)) throw InvalidParameter("finite bath: Omega_max must exceed the band edge");

  BathDiscretization d;
  d.omega_max = omega_max;
  d.band_edge = band_edge;
  d.stretch = optimal_stretch(omega_max, band_edge);
  d.scale = omega_max / std::sinh(d.stretch);
  d.omega.resize(n);
  d.weight.resize(n);
  d.coupling.resize(n);
  const double nn = static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double u = (static_cast<double>(j) + 0.5) / nn;
    d.omega[j] = d.scale * std::sinh(d.stretch * u);
    d.weight[j] = d.scale * d.stretch * std::cosh(d.stretch * u) / nn;
    d.coupling[j] = 2.0 / pi * spectral_density(bath, d.omega[j]) * d.weight[j];
  }

  const double damping = friction_scale(bath) / mass;
  const double spacing = d.spacing_at(band_edge);
  if (damping > 0.0 && spacing > 0.1 * damping)
    throw InvalidParameter("finite bath: grid spacing " + std::to_string(spacing) +
                           " at the band edge exceeds gamma/10 = " + std::to_string(0.1 * damping) +
                           "; increase the mode count");
  return d;
}

FiniteBathModel::FiniteBathModel(OscillatorPair pair, BathPair baths, std::shared_ptr<const Shared> shared)
    : pair_(pair), baths_(std::move(baths)), shared_(std::move(shared)) {}

FiniteBathModel FiniteBathModel::build(const OscillatorPair& pair, const BathPair& baths,
                                       const FiniteBathOptions& options) {
  const ModeFrequencies modes = lossless_eigenfrequencies(pair);
  const double omega_max =
      options.omega_max > 0.0
          ? options.omega_max
          : std::max({20.0 * bath_bandwidth(baths.first), 20.0 * bath_bandwidth(baths.second), 20.0 * modes.plus});
  const double band_edge =
      options.band_edge > 0.0
          ? options.band_edge
          : modes.plus + std::max(friction_scale(baths.first) / pair.m1, friction_scale(baths.second) / pair.m2);

  auto shared = std::make_shared<Shared>();
  shared->bath1 = discretize_bath(baths.first, pair.m1, options.n1, omega_max, band_edge);
  shared->bath2 = discretize_bath(baths.second, pair.m2, options.n2, omega_max, band_edge);
  const std::size_t n1 = options.n1;
  const std::size_t n2 = options.n2;
  const std::size_t n = 2 + n1 + n2;
  shared->n_config = n;

  // Stiffness of H = p^2/2m + k1' x^2/2 + k2' y^2/2 - lambda x y
  //                + sum_j [p_j^2/2 + k_j (q_j - c_j x)^2 / 2] + (bath 2 alike).
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  k(0, 0) = pair.k1_shifted();
  k(1, 1) = pair.k2_shifted();
  k(0, 1) = k(1, 0) = -pair.lambda;
  auto attach = [&](const BathDiscretization& b, Eigen::Index sys, Eigen::Index offset) {
    for (std::size_t j = 0; j < b.omega.size(); ++j) {
      const Eigen::Index idx = offset + static_cast<Eigen::Index>(j);
      k(sys, sys) += b.coupling[j];
      k(sys, idx) = k(idx, sys) = -b.omega[j] * std::sqrt(b.coupling[j]);
      k(idx, idx) = b.omega[j] * b.omega[j];
    }
  };
  attach(shared->bath1, 0, 2);
  attach(shared->bath2, 1, 2 + static_cast<Eigen::Index>(n1));

  shared->mass = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
  shared->mass(0) = pair.m1;
  shared->mass(1) = pair.m2;
  const Eigen::VectorXd inv_sqrt_mass = shared->mass.cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd kw = inv_sqrt_mass.asDiagonal() * k * inv_sqrt_mass.asDiagonal();

  SymmetricEigen eig = symmetric_eigen(kw);
  if (!(eig.values(0) > 0.0))
    throw InvalidParameter("finite bath: Hamiltonian is not positive definite (smallest stiffness eigenvalue " +
                           std::to_string(eig.values(0)) + ")");
  shared->frequency = eig.values.cwiseSqrt();
  shared->gt_plus = eig.vectors.transpose();
  shared->gt_minus = shared->gt_plus;
  const Eigen::VectorXd sqrt_mass = shared->mass.cwiseSqrt();
  for (Eigen::Index c = 0; c < 2; ++c) {
    shared->gt_plus.col(c) *= sqrt_mass(c);
    shared->gt_minus.col(c) *= inv_sqrt_mass(c);
  }
  const double widest = std::max(shared->bath1.spacing_at(band_edge), shared->bath2.spacing_at(band_edge));
  shared->recurrence_time = two_pi / widest;
  return FiniteBathModel(pair, baths, std::move(shared));
}

FiniteBathModel FiniteBathModel::with_temperatures(double t1, double t2) const {
  BathPair b{with_temperature(baths_.first, t1), with_temperature(baths_.second, t2)};
  return FiniteBathModel(pair_, std::move(b), shared_);
}

void FiniteBathModel::check_time(double t) const {
  if (!(t >= 0.0) || t > time_guard())
    throw InvalidParameter("finite bath: t = " + std::to_string(t) + " outside [0, t_rec/2 = " +
                           std::to_string(time_guard()) + "]");
}

Eigen::VectorXd FiniteBathModel::independent_q_variance() const {
  const Shared& s = *shared_;
  Eigen::VectorXd v(static_cast<Eigen::Index>(s.n_config));
  v(0) = half_hbar / (pair_.m1 * pair_.omega10());
  v(1) = half_hbar / (pair_.m2 * pair_.omega20());
  Eigen::Index idx = 2;
  for (const auto* b : {&s.bath1, &s.bath2}) {
    const double temp = b == &s.bath1 ? baths_.first.temperature : baths_.second.temperature;
    for (double w : b->omega) v(idx++) = effective_temperature(temp, w) / (w * w);
  }
  return v;
}

Eigen::VectorXd FiniteBathModel::independent_p_variance() const {
  const Shared& s = *shared_;
  Eigen::VectorXd v(static_cast<Eigen::Index>(s.n_config));
  v(0) = half_hbar * pair_.m1 * pair_.omega10();
  v(1) = half_hbar * pair_.m2 * pair_.omega20();
  Eigen::Index idx = 2;
  for (const auto* b : {&s.bath1, &s.bath2}) {
    const double temp = b == &s.bath1 ? baths_.first.temperature : baths_.second.temperature;
    for (double w : b->omega) v(idx++) = effective_temperature(temp, w);
  }
  return v;
}

void FiniteBathModel::to_independent(Eigen::Ref<Eigen::MatrixXd> alpha) const {
  // q_j = xi_j + c_j x(0): a coefficient on q_j also multiplies x(0).
  const Shared& s = *shared_;
  Eigen::Index offset = 2;
  for (Eigen::Index sys = 0; sys < 2; ++sys) {
    const BathDiscretization& b = sys == 0 ? s.bath1 : s.bath2;
    const Eigen::Index nb = static_cast<Eigen::Index>(b.omega.size());
    Eigen::VectorXd c(nb);
    for (Eigen::Index j = 0; j < nb; ++j) c(j) = std::sqrt(b.coupling[j]) / b.omega[j];
    alpha.col(sys) += alpha.middleCols(offset, nb) * c;
    offset += nb;
  }
}

Eigen::MatrixXd FiniteBathModel::flow(double t) const {
  check_time(t);
  const Shared& s = *shared_;
  const Eigen::Index n = static_cast<Eigen::Index>(s.n_config);
  const Eigen::ArrayXd c = (s.frequency.array() * t).cos();
  const Eigen::ArrayXd sn = (s.frequency.array() * t).sin();
  const Eigen::MatrixXd aq = s.gt_minus.transpose() * c.matrix().asDiagonal() * s.gt_plus;
  const Eigen::MatrixXd ap = s.gt_minus.transpose() * (sn / s.frequency.array()).matrix().asDiagonal() * s.gt_minus;
  const Eigen::MatrixXd bq = -(s.gt_plus.transpose() * (sn * s.frequency.array()).matrix().asDiagonal() * s.gt_plus);
  const Eigen::MatrixXd bp = s.gt_plus.transpose() * c.matrix().asDiagonal() * s.gt_minus;
  Eigen::MatrixXd phi(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      phi(2 * i, 2 * j) = aq(i, j);
      phi(2 * i, 2 * j + 1) = ap(i, j);
      phi(2 * i + 1, 2 * j) = bq(i, j);
      phi(2 * i + 1, 2 * j + 1) = bp(i, j);
    }
  return phi;
}

Eigen::Matrix<double, 4, Eigen::Dynamic> FiniteBathModel::system_flow_rows(double t) const {
  check_time(t);
  const Shared& s = *shared_;
  const Eigen::Index n = static_cast<Eigen::Index>(s.n_config);
  const Eigen::ArrayXd w = s.frequency.array();
  const Eigen::ArrayXd c = (w * t).cos();
  const Eigen::ArrayXd sn = (w * t).sin();
  Eigen::Matrix<double, 4, Eigen::Dynamic> rows(4, 2 * n);
  for (Eigen::Index sys = 0; sys < 2; ++sys) {
    const Eigen::ArrayXd u = s.gt_minus.col(sys).array();  // position functional, modal
    const Eigen::ArrayXd v = s.gt_plus.col(sys).array();   // momentum functional, modal
    const Eigen::RowVectorXd qa = (u * c).matrix().transpose() * s.gt_plus;
    const Eigen::RowVectorXd qb = (u * sn / w).matrix().transpose() * s.gt_minus;
    const Eigen::RowVectorXd pa = -((v * sn * w).matrix().transpose() * s.gt_plus);
    const Eigen::RowVectorXd pb = (v * c).matrix().transpose() * s.gt_minus;
    for (Eigen::Index j = 0; j < n; ++j) {
      rows(2 * sys, 2 * j) = qa(j);
      rows(2 * sys, 2 * j + 1) = qb(j);
      rows(2 * sys + 1, 2 * j) = pa(j);
      rows(2 * sys + 1, 2 * j + 1) = pb(j);
    }
  }
  return rows;
}

Eigen::MatrixXd FiniteBathModel::initial_covariance() const {
  const Eigen::Index n = static_cast<Eigen::Index>(shared_->n_config);
  const Eigen::VectorXd vq = independent_q_variance();
  const Eigen::VectorXd vp = independent_p_variance();
  // Coefficients of each q_i(0) on the independent variables (x, y, xi).
  Eigen::MatrixXd tq = Eigen::MatrixXd::Identity(n, n);
  Eigen::Index offset = 2;
  for (Eigen::Index sys = 0; sys < 2; ++sys) {
    const BathDiscretization& b = sys == 0 ? shared_->bath1 : shared_->bath2;
    for (std::size_t j = 0; j < b.omega.size(); ++j)
      tq(offset + static_cast<Eigen::Index>(j), sys) = std::sqrt(b.coupling[j]) / b.omega[j];
    offset += static_cast<Eigen::Index>(b.omega.size());
  }
  const Eigen::MatrixXd cq = tq * vq.asDiagonal() * tq.transpose();
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) sigma(2 * i, 2 * j) = cq(i, j);
    sigma(2 * i + 1, 2 * i + 1) = vp(i);
  }
  return sigma;
}

Eigen::MatrixXd FiniteBathModel::propagate_covariance(double t) const {
  const Eigen::MatrixXd phi = flow(t);
  return phi * initial_covariance() * phi.transpose();
}

Eigen::Matrix4d FiniteBathModel::system_covariance(double t) const {
  return observable_covariances({t}).front().topLeftCorner<4, 4>();
}

std::vector<Eigen::Matrix<double, 5, 5>> FiniteBathModel::observable_covariances(
    const std::vector<double>& times) const {
  for (double t : times) check_time(t);
  const Shared& s = *shared_;
  const Eigen::Index n = static_cast<Eigen::Index>(s.n_config);
  const Eigen::ArrayXd w = s.frequency.array();

  // Position-type functionals in configuration space: x, y, and the bath force F1.
  Eigen::VectorXd force = Eigen::VectorXd::Zero(n);
  for (std::size_t j = 0; j < s.bath1.omega.size(); ++j) {
    force(0) -= s.bath1.coupling[j];
    force(2 + static_cast<Eigen::Index>(j)) = s.bath1.omega[j] * std::sqrt(s.bath1.coupling[j]);
  }
  const Eigen::ArrayXd ux = s.gt_minus.col(0).array();
  const Eigen::ArrayXd uy = s.gt_minus.col(1).array();
  const Eigen::ArrayXd uf = (s.gt_minus * force).array();
  const Eigen::ArrayXd vx = s.gt_plus.col(0).array();
  const Eigen::ArrayXd vy = s.gt_plus.col(1).array();

  const Eigen::VectorXd vq = independent_q_variance();
  const Eigen::VectorXd vp = independent_p_variance();

  std::vector<Eigen::Matrix<double, 5, 5>> out(times.size());
  for (std::size_t start = 0; start < times.size(); start += kTimeBatch) {
    const std::size_t count = std::min(kTimeBatch, times.size() - start);
    const Eigen::Index rows = static_cast<Eigen::Index>(count * kObservables);
    Eigen::MatrixXd ma(rows, n);  // modal coefficients multiplying gt_plus
    Eigen::MatrixXd mb(rows, n);  // modal coefficients multiplying gt_minus
    for (std::size_t k = 0; k < count; ++k) {
      const double t = times[start + k];
      const Eigen::ArrayXd c = (w * t).cos();
      const Eigen::ArrayXd sn = (w * t).sin();
      const Eigen::Index r = static_cast<Eigen::Index>(k * kObservables);
      ma.row(r + 0) = (ux * c).matrix().transpose();
      mb.row(r + 0) = (ux * sn / w).matrix().transpose();
      ma.row(r + 1) = -(vx * sn * w).matrix().transpose();
      mb.row(r + 1) = (vx * c).matrix().transpose();
      ma.row(r + 2) = (uy * c).matrix().transpose();
      mb.row(r + 2) = (uy * sn / w).matrix().transpose();
      ma.row(r + 3) = -(vy * sn * w).matrix().transpose();
      mb.row(r + 3) = (vy * c).matrix().transpose();
      ma.row(r + 4) = (uf * c).matrix().transpose();
      mb.row(r + 4) = (uf * sn / w).matrix().transpose();
    }
    Eigen::MatrixXd alpha = ma * s.gt_plus;
    const Eigen::MatrixXd beta = mb * s.gt_minus;
    to_independent(alpha);
    const Eigen::MatrixXd wa = alpha * vq.asDiagonal();
    const Eigen::MatrixXd wb = beta * vp.asDiagonal();
    for (std::size_t k = 0; k < count; ++k) {
      const Eigen::Index r = static_cast<Eigen::Index>(k * kObservables);
      out[start + k] = wa.middleRows(r, kObservables) * alpha.middleRows(r, kObservables).transpose() +
                       wb.middleRows(r, kObservables) * beta.middleRows(r, kObservables).transpose();
    }
  }
  return out;
}

OracleSteadyState steady_system_covariance(const FiniteBathModel& model, const SteadyStateOptions& options) {
  const OscillatorPair& pair = model.pair();
  const BathPair& baths = model.baths();
  const double g1 = friction_scale(baths.first) / pair.m1;
  const double g2 = friction_scale(baths.second) / pair.m2;
  if (!(g1 > 0.0) || !(g2 > 0.0))
    throw InvalidParameter("finite bath: steady state requires friction on both oscillators");
  const ModeFrequencies modes = lossless_eigenfrequencies(pair);
  const double t_relax = options.t_relax > 0.0 ? options.t_relax : 10.0 * std::max(1.0 / g1, 1.0 / g2);
  const double window = options.window > 0.0 ? options.window : 8.0 * two_pi / modes.minus;
  const double dt = options.sample_spacing > 0.0 ? options.sample_spacing : two_pi / modes.plus / 16.0;
  const double t_end = t_relax + window;
  if (t_end > model.time_guard())
    throw ConvergenceError("finite bath: averaging window ends at t = " + std::to_string(t_end) +
                           " beyond the recurrence guard " + std::to_string(model.time_guard()) +
                           "; increase the number of bath modes");

  const std::size_t steps = static_cast<std::size_t>(std::ceil(window / dt));
  std::vector<double> times(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) times[k] = t_relax + window * static_cast<double>(k) / static_cast<double>(steps);
  const auto covs = model.observable_covariances(times);

  Eigen::Matrix<double, 5, 5> mean = Eigen::Matrix<double, 5, 5>::Zero();
  Eigen::Matrix4d lo = Eigen::Matrix4d::Constant(std::numeric_limits<double>::infinity());
  Eigen::Matrix4d hi = -lo;
  for (const auto& c : covs) {
    mean += c;
    lo = lo.cwiseMin(c.topLeftCorner<4, 4>());
    hi = hi.cwiseMax(c.topLeftCorner<4, 4>());
  }
  mean /= static_cast<double>(covs.size());

  OracleSteadyState out;
  out.covariance = 0.5 * (mean.topLeftCorner<4, 4>() + mean.topLeftCorner<4, 4>().transpose());
  const Eigen::Matrix4d& c = out.covariance;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      out.plateau_spread = std::max(out.plateau_spread, (hi(a, b) - lo(a, b)) / std::sqrt(c(a, a) * c(b, b)));
  // Basis (x, p_x, y, p_y); row 4 of the mean holds the bath force F1.
  out.heat_current = 0.5 * pair.lambda * (c(kX, kPy) / pair.m2 - c(kPx, kY) / pair.m1);
  out.spring_power = pair.lambda * (c(kPx, kY) - c(kPx, kX)) / pair.m1;
  out.bath_power = mean(4, kPx) / pair.m1;
  out.t_start = t_relax;
  out.t_end = t_end;
  out.samples = covs.size();
  if (out.plateau_spread > options.plateau_tolerance)
    throw ConvergenceError("finite bath: covariance drifts by " + std::to_string(out.plateau_spread) +
                           " (relative) over the averaging window; increase t_relax or the mode count");
  return out;
}

}  // namespace duet
