#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "duet/bath.hpp"
#include "duet/quadrature.hpp"
#include "duet/response.hpp"
#include "duet/witness.hpp"

namespace duet::cli {

struct BathParams {
  double gamma = 0.1;
  double tau_c = 0.02;
  double temperature = 0.0;

  bool operator==(const BathParams&) const = default;
};

/// Frequency grid for spectral tasks; points == 0 selects an adaptive grid
/// that adds dense sub-grids across both normal-mode resonances.
struct GridSpec {
  double omega_min = 0.01;
  double omega_max = 3.0;
  std::size_t points = 0;

  bool operator==(const GridSpec&) const = default;
};

/// Parameter sweep: an explicit value list, or points values spanning
/// [min, max] evenly when the list is empty.
struct SweepSpec {
  std::vector<double> values;
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 0;

  std::vector<double> resolve() const;
  bool operator==(const SweepSpec&) const = default;
};

struct QuadratureParams {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  double omega_max = 0.0;  // <= 0: automatic split
  std::size_t max_panels = 20000;

  QuadratureConfig to_config() const;
  bool operator==(const QuadratureParams&) const = default;
};

struct OracleParams {
  std::size_t modes = 1500;  // per bath
  double omega_max = 0.0;    // <= 0: automatic
  double t_relax = 0.0;      // <= 0: automatic

  bool operator==(const OracleParams&) const = default;
};

enum class Task {
  absorption,
  heat_spectrum,
  heat_sweep,
  covariance,
  entanglement_sweep,
  witness_spectra,
  fd_check,
  oracle_check,
};

/// Everything a run needs, in units hbar = k_B = m1 = omega_10 = 1.
struct RunConfig {
  double m1 = 1.0;
  double m2 = 1.0;
  double k1 = 1.0;
  double k2 = 1.0;
  double lambda = 0.0;
  BathParams bath1;
  BathParams bath2;
  GridSpec grid;
  QuadratureParams quad;
  SweepSpec sweep;
  bool heat_differential = false;  // heat-spectrum per dT at the mean temperature
  Frame witness_frame = Frame::rescaled;
  OracleParams oracle;
  Task task = Task::covariance;
  std::string output = "duet.csv";

  OscillatorPair pair() const;
  BathPair baths() const;
  bool operator==(const RunConfig&) const = default;
};

Task parse_task(const std::string& name);
const char* task_name(Task task);
std::vector<std::string> task_names();

/// Applies "key = value" lines on top of base. Blank lines and text after
/// '#' are ignored. Throws InvalidParameter naming the line and key on
/// unknown keys or malformed values.
RunConfig parse_config(const std::string& text, const RunConfig& base = {});
RunConfig load_config(const std::string& path, const RunConfig& base = {});

/// Canonical text form; parse_config(emit_config(c)) == c exactly.
std::string emit_config(const RunConfig& config);

/// Enforces the physical and numerical invariants of every field; throws
/// InvalidParameter naming the failing one.
void validate(const RunConfig& config);

}  // namespace duet::cli
