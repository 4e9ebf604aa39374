#include "duet_cli/tasks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>

#include "duet/covariance.hpp"
#include "duet/error.hpp"
#include "duet/finite_bath.hpp"
#include "duet/gaussian_info.hpp"
#include "duet/parallel.hpp"
#include "duet/spectra.hpp"
#include "duet/units.hpp"
#include "duet/witness.hpp"

namespace duet::cli {

namespace {

constexpr std::size_t kUniformPoints = 601;
constexpr std::size_t kResonancePoints = 201;
constexpr double kResonanceHalfWidths = 8.0;

// Evaluates row(i) for every grid point in parallel; rows land in fixed slots.
template <class RowFn>
Table tabulate(std::vector<std::string> columns, std::size_t n, RowFn row) {
  Table t;
  t.columns = std::move(columns);
  t.rows.resize(n);
  parallel_for(n, [&](std::size_t i) { t.rows[i] = row(i); });
  return t;
}

std::vector<Cell> numbers(std::initializer_list<double> values) { return {values.begin(), values.end()}; }

Table absorption_table(const RunConfig& c) {
  const OscillatorPair pair = c.pair();
  const OscillatorPair free_pair = OscillatorPair::make(c.m1, c.m2, c.k1, c.k2, 0.0);
  const BathPair baths = c.baths();
  const std::vector<double> grid = frequency_grid(c);
  return tabulate({"omega", "abs_drive1", "abs_drive2", "abs_uncoupled1", "abs_uncoupled2"}, grid.size(),
                  [&](std::size_t i) {
                    const double w = grid[i];
                    return numbers({w, absorption_spectrum(pair, baths, w, {1.0, 0.0}),
                                    absorption_spectrum(pair, baths, w, {0.0, 1.0}),
                                    absorption_spectrum(free_pair, baths, w, {1.0, 0.0}),
                                    absorption_spectrum(free_pair, baths, w, {0.0, 1.0})});
                  });
}

Table heat_spectrum_table(const RunConfig& c) {
  const OscillatorPair pair = c.pair();
  const BathPair baths = c.baths();
  const std::vector<double> grid = frequency_grid(c);
  const double dt = c.bath1.temperature - c.bath2.temperature;
  return tabulate({"omega", "heat_spectrum_per_dT"}, grid.size(), [&](std::size_t i) {
    const double w = grid[i];
    const double q = c.heat_differential ? differential_heat_current_spectrum(pair, baths, w)
                                         : heat_current_spectrum(pair, baths, w) / dt;
    return numbers({w, q});
  });
}

Table heat_sweep_table(const RunConfig& c) {
  const OscillatorPair pair = c.pair();
  const std::vector<double> gammas = c.sweep.resolve();
  const double dt = c.bath1.temperature - c.bath2.temperature;
  const QuadratureConfig quad = c.quad.to_config();
  const double lk = levy_kosloff_sign(pair, c.bath1.temperature, c.bath2.temperature);
  return tabulate({"gamma", "heat_current_per_dT", "error_per_dT", "levy_kosloff_sign"}, gammas.size(),
                  [&](std::size_t i) {
                    RunConfig point = c;
                    point.bath1.gamma = gammas[i];
                    point.bath2.gamma = gammas[i];
                    const HeatCurrent q = net_heat_current(pair, point.baths(), quad);
                    return numbers({gammas[i], q.value / dt, q.error / std::abs(dt), lk});
                  });
}

constexpr std::array<const char*, 4> kCoordinateNames = {"x", "px", "y", "py"};

Table covariance_table(const RunConfig& c) {
  const StationaryCovariance cov = stationary_covariance(c.pair(), c.baths(), c.quad.to_config());
  Table t;
  t.columns = {"row", "col", "value", "error"};
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b)
      t.rows.push_back({std::string(kCoordinateNames[a]), std::string(kCoordinateNames[b]), cov.matrix(a, b),
                        cov.error(a, b)});
  return t;
}

Table entanglement_table(const RunConfig& c) {
  const std::vector<double> gs = c.sweep.resolve();
  const QuadratureConfig quad = c.quad.to_config();
  const BathPair baths = c.baths();
  return tabulate({"g", "ppt_eigenvalue_shifted", "epr_uncertainty", "log_negativity", "mutual_information"},
                  gs.size(), [&](std::size_t i) {
                    // g = (lambda / m1)^(1/2).
                    const double lambda = gs[i] * gs[i] * c.m1;
                    const OscillatorPair pair = OscillatorPair::make(c.m1, c.m2, c.k1, c.k2, lambda);
                    const Eigen::Matrix4d cov = stationary_covariance(pair, baths, quad).matrix;
                    return numbers({gs[i], ppt_hermitian_min_eigenvalue(cov) + half_hbar,
                                    epr_pair(cov).uncertainty, logarithmic_negativity(cov),
                                    entropies(cov).mutual});
                  });
}

Table witness_table(const RunConfig& c) {
  const OscillatorPair pair = c.pair();
  const BathPair baths = c.baths();
  const Frame frame = c.witness_frame;
  const EprPair epr = epr_pair(stationary_covariance(pair, baths, c.quad.to_config()).matrix);
  const std::vector<double> grid = frequency_grid(c);
  return tabulate({"omega", "x_s_min", "x_s_max", "x_ref_sum", "x_ref_diff", "x_epr", "p_s_min", "p_s_max",
                   "p_ref_sum", "p_ref_diff", "p_epr"},
                  grid.size(), [&](std::size_t i) {
                    const double w = grid[i];
                    const QuadratureSpectra qx = optimal_quadrature_spectra(pair, baths, w, Sector::position, frame);
                    const QuadratureSpectra qp = optimal_quadrature_spectra(pair, baths, w, Sector::momentum, frame);
                    const ReferenceSpectra rx = reference_spectra_T0(pair, baths, w, Sector::position, frame);
                    const ReferenceSpectra rp = reference_spectra_T0(pair, baths, w, Sector::momentum, frame);
                    const EprSpectra e = epr_fixed_pair_spectra(pair, baths, w, epr);
                    return numbers({w, qx.s_min, qx.s_max, rx.s_sum, rx.s_diff, e.s_qq, qp.s_min, qp.s_max,
                                    rp.s_sum, rp.s_diff, e.s_pp});
                  });
}

Table fd_table(const RunConfig& c) {
  const OscillatorPair pair = c.pair();
  const BathPair baths = c.baths();
  const std::vector<double> grid = frequency_grid(c);
  return tabulate({"omega", "fd_residual_t1", "fd_residual_t2"}, grid.size(), [&](std::size_t i) {
    const double w = grid[i];
    return numbers({w, fd_residual_at(pair, baths, w, c.bath1.temperature),
                    fd_residual_at(pair, baths, w, c.bath2.temperature)});
  });
}

Table oracle_table(const RunConfig& c) {
  const OscillatorPair pair = c.pair();
  const BathPair baths = c.baths();
  const QuadratureConfig quad = c.quad.to_config();
  const StationaryCovariance ref = stationary_covariance(pair, baths, quad);
  const HeatCurrent q = net_heat_current(pair, baths, quad);

  FiniteBathOptions fo;
  fo.n1 = fo.n2 = c.oracle.modes;
  fo.omega_max = c.oracle.omega_max;
  SteadyStateOptions so;
  so.t_relax = c.oracle.t_relax;
  const OracleSteadyState ss = steady_system_covariance(FiniteBathModel::build(pair, baths, fo), so);

  Table t;
  t.columns = {"quantity", "frequency_domain", "oracle", "relative_difference"};
  const Eigen::Matrix4d& f = ref.matrix;
  const Eigen::Matrix4d& o = ss.covariance;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      const double scale = std::sqrt(f(a, a) * f(b, b));
      t.rows.push_back({std::string("C_") + kCoordinateNames[a] + "_" + kCoordinateNames[b], f(a, b), o(a, b),
                        std::abs(o(a, b) - f(a, b)) / scale});
    }
  const double heat_scale = std::abs(q.value) > 0.0 ? std::abs(q.value) : 1.0;
  t.rows.push_back({std::string("heat_current"), q.value, ss.heat_current, std::abs(ss.heat_current - q.value) / heat_scale});
  t.rows.push_back({std::string("covariance_frobenius"), f.norm(), o.norm(), (o - f).norm() / f.norm()});
  return t;
}

}  // namespace

std::vector<double> frequency_grid(const RunConfig& c) {
  const double lo = c.grid.omega_min;
  const double hi = c.grid.omega_max;
  auto uniform = [](double a, double b, std::size_t n, std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  };
  std::vector<double> grid;
  if (c.grid.points >= 2) {
    uniform(lo, hi, c.grid.points, grid);
    return grid;
  }
  uniform(lo, hi, kUniformPoints, grid);
  const OscillatorPair pair = c.pair();
  const BathPair baths = c.baths();
  ComplexModeFrequencies modes;
  try {
    modes = damped_mode_frequencies(pair, baths);
  } catch (const ConvergenceError&) {
    modes = rwa_eigenfrequencies(pair, baths);
  }
  for (const std::complex<double> z : {modes.minus, modes.plus}) {
    const double width = std::max(std::abs(z.imag()), 1e-3 * std::abs(z.real()));
    const double a = std::max(lo, z.real() - kResonanceHalfWidths * width);
    const double b = std::min(hi, z.real() + kResonanceHalfWidths * width);
    if (b > a) uniform(a, b, kResonancePoints, grid);
  }
  std::sort(grid.begin(), grid.end());
  const double eps = 1e-12 * std::max(std::abs(hi), 1.0);
  grid.erase(std::unique(grid.begin(), grid.end(), [eps](double x, double y) { return y - x <= eps; }), grid.end());
  return grid;
}

Table compute_task(const RunConfig& config) {
  validate(config);
  switch (config.task) {
    case Task::absorption:
      return absorption_table(config);
    case Task::heat_spectrum:
      return heat_spectrum_table(config);
    case Task::heat_sweep:
      return heat_sweep_table(config);
    case Task::covariance:
      return covariance_table(config);
    case Task::entanglement_sweep:
      return entanglement_table(config);
    case Task::witness_spectra:
      return witness_table(config);
    case Task::fd_check:
      return fd_table(config);
    case Task::oracle_check:
      return oracle_table(config);
  }
  throw InvalidParameter("unknown task");
}

void run_task(const RunConfig& config) {
  const Table table = compute_task(config);
  std::ofstream out(config.output);
  if (!out) throw InvalidParameter("cannot open output file '" + config.output + "'");
  write_csv(out, table);
  out.flush();
  if (!out) throw InvalidParameter("failed writing output file '" + config.output + "'");
}

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const PhysicalityError*>(&error)) return 3;
  if (dynamic_cast<const ConvergenceError*>(&error)) return 2;
  if (dynamic_cast<const SingularResponse*>(&error)) return 2;
  return 1;
}

}  // namespace duet::cli
