#include "duet_cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <system_error>

#include "duet/error.hpp"
#include "duet_cli/table.hpp"

namespace duet::cli {

namespace {

struct TaskEntry {
  Task task;
  const char* name;
};

constexpr TaskEntry kTasks[] = {
    {Task::absorption, "absorption"},
    {Task::heat_spectrum, "heat-spectrum"},
    {Task::heat_sweep, "heat-sweep"},
    {Task::covariance, "covariance"},
    {Task::entanglement_sweep, "entanglement-sweep"},
    {Task::witness_spectra, "witness-spectra"},
    {Task::fd_check, "fd-check"},
    {Task::oracle_check, "oracle-check"},
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value))
    throw InvalidParameter("config: " + key + " expects a finite number, got '" + text + "'");
  return value;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw InvalidParameter("config: " + key + " expects a non-negative integer, got '" + text + "'");
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw InvalidParameter("config: " + key + " expects true or false, got '" + text + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  return out;
}

std::string emit_list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_number(values[i]);
  }
  return out;
}

// One config key: how to print it and how to apply a textual value.
struct Field {
  const char* key;
  std::function<std::string(const RunConfig&)> emit;
  std::function<void(RunConfig&, const std::string&)> apply;
};

Field number(const char* key, double RunConfig::*member) {
  return {key, [member](const RunConfig& c) { return format_number(c.*member); },
          [key, member](RunConfig& c, const std::string& v) { c.*member = parse_double(key, v); }};
}

template <class Getter>
Field nested_number(const char* key, Getter get) {
  return {key, [get](const RunConfig& c) { return format_number(get(const_cast<RunConfig&>(c))); },
          [key, get](RunConfig& c, const std::string& v) { get(c) = parse_double(key, v); }};
}

template <class Getter>
Field nested_count(const char* key, Getter get) {
  return {key, [get](const RunConfig& c) { return std::to_string(get(const_cast<RunConfig&>(c))); },
          [key, get](RunConfig& c, const std::string& v) { get(c) = parse_count(key, v); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    f.push_back(number("m1", &RunConfig::m1));
    f.push_back(number("m2", &RunConfig::m2));
    f.push_back(number("k1", &RunConfig::k1));
    f.push_back(number("k2", &RunConfig::k2));
    f.push_back(number("lambda", &RunConfig::lambda));
    f.push_back(nested_number("bath1.gamma", [](RunConfig& c) -> double& { return c.bath1.gamma; }));
    f.push_back(nested_number("bath1.tau_c", [](RunConfig& c) -> double& { return c.bath1.tau_c; }));
    f.push_back(nested_number("bath1.temperature", [](RunConfig& c) -> double& { return c.bath1.temperature; }));
    f.push_back(nested_number("bath2.gamma", [](RunConfig& c) -> double& { return c.bath2.gamma; }));
    f.push_back(nested_number("bath2.tau_c", [](RunConfig& c) -> double& { return c.bath2.tau_c; }));
    f.push_back(nested_number("bath2.temperature", [](RunConfig& c) -> double& { return c.bath2.temperature; }));
    f.push_back(nested_number("grid.omega_min", [](RunConfig& c) -> double& { return c.grid.omega_min; }));
    f.push_back(nested_number("grid.omega_max", [](RunConfig& c) -> double& { return c.grid.omega_max; }));
    f.push_back(nested_count("grid.points", [](RunConfig& c) -> std::size_t& { return c.grid.points; }));
    f.push_back(nested_number("quad.rel_tol", [](RunConfig& c) -> double& { return c.quad.rel_tol; }));
    f.push_back(nested_number("quad.abs_tol", [](RunConfig& c) -> double& { return c.quad.abs_tol; }));
    f.push_back(nested_number("quad.omega_max", [](RunConfig& c) -> double& { return c.quad.omega_max; }));
    f.push_back(nested_count("quad.max_panels", [](RunConfig& c) -> std::size_t& { return c.quad.max_panels; }));
    f.push_back({"sweep.values", [](const RunConfig& c) { return emit_list(c.sweep.values); },
                 [](RunConfig& c, const std::string& v) { c.sweep.values = parse_list("sweep.values", v); }});
    f.push_back(nested_number("sweep.min", [](RunConfig& c) -> double& { return c.sweep.min; }));
    f.push_back(nested_number("sweep.max", [](RunConfig& c) -> double& { return c.sweep.max; }));
    f.push_back(nested_count("sweep.points", [](RunConfig& c) -> std::size_t& { return c.sweep.points; }));
    f.push_back({"heat.differential",
                 [](const RunConfig& c) { return std::string(c.heat_differential ? "true" : "false"); },
                 [](RunConfig& c, const std::string& v) { c.heat_differential = parse_bool("heat.differential", v); }});
    f.push_back({"witness.frame",
                 [](const RunConfig& c) {
                   return std::string(c.witness_frame == Frame::raw ? "raw" : "rescaled");
                 },
                 [](RunConfig& c, const std::string& v) {
                   if (v == "rescaled") c.witness_frame = Frame::rescaled;
                   else if (v == "raw") c.witness_frame = Frame::raw;
                   else throw InvalidParameter("config: witness.frame expects rescaled or raw, got '" + v + "'");
                 }});
    f.push_back(nested_count("oracle.modes", [](RunConfig& c) -> std::size_t& { return c.oracle.modes; }));
    f.push_back(nested_number("oracle.omega_max", [](RunConfig& c) -> double& { return c.oracle.omega_max; }));
    f.push_back(nested_number("oracle.t_relax", [](RunConfig& c) -> double& { return c.oracle.t_relax; }));
    f.push_back({"task", [](const RunConfig& c) { return std::string(task_name(c.task)); },
                 [](RunConfig& c, const std::string& v) { c.task = parse_task(v); }});
    f.push_back({"output", [](const RunConfig& c) { return c.output; },
                 [](RunConfig& c, const std::string& v) {
                   if (v.empty()) throw InvalidParameter("config: output must not be empty");
                   c.output = v;
                 }});
    return f;
  }();
  return table;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameter("config: " + message);
}

}  // namespace

std::vector<double> SweepSpec::resolve() const {
  if (!values.empty()) return values;
  if (points == 0) return {};
  if (points == 1) return {min};
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i)
    out[i] = min + (max - min) * static_cast<double>(i) / static_cast<double>(points - 1);
  return out;
}

QuadratureConfig QuadratureParams::to_config() const {
  QuadratureConfig q;
  q.rel_tol = rel_tol;
  q.abs_tol = abs_tol;
  q.omega_max = omega_max;
  q.max_panels = max_panels;
  return q;
}

OscillatorPair RunConfig::pair() const { return OscillatorPair::make(m1, m2, k1, k2, lambda); }

BathPair RunConfig::baths() const {
  return {BathSpec::ohm_drude(bath1.gamma, bath1.tau_c, bath1.temperature),
          BathSpec::ohm_drude(bath2.gamma, bath2.tau_c, bath2.temperature)};
}

Task parse_task(const std::string& name) {
  for (const auto& t : kTasks)
    if (name == t.name) return t.task;
  std::string known;
  for (const auto& t : kTasks) known += std::string(known.empty() ? "" : ", ") + t.name;
  throw InvalidParameter("config: unknown task '" + name + "' (known: " + known + ")");
}

const char* task_name(Task task) {
  for (const auto& t : kTasks)
    if (t.task == task) return t.name;
  return "unknown";
}

std::vector<std::string> task_names() {
  std::vector<std::string> out;
  for (const auto& t : kTasks) out.emplace_back(t.name);
  return out;
}

RunConfig parse_config(const std::string& text, const RunConfig& base) {
  RunConfig config = base;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidParameter("config line " + std::to_string(number) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto& table = fields();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Field& f) { return key == f.key; });
    if (it == table.end())
      throw InvalidParameter("config line " + std::to_string(number) + ": unknown key '" + key + "'");
    try {
      it->apply(config, value);
    } catch (const InvalidParameter& e) {
      throw InvalidParameter("config line " + std::to_string(number) + ": " + e.what());
    }
  }
  return config;
}

RunConfig load_config(const std::string& path, const RunConfig& base) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("config: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), base);
}

std::string emit_config(const RunConfig& config) {
  std::string out;
  for (const Field& f : fields()) out += std::string(f.key) + " = " + f.emit(config) + "\n";
  return out;
}

void validate(const RunConfig& config) {
  // Oscillator and bath invariants are enforced by their constructors.
  (void)config.pair();
  (void)config.baths();
  require(config.grid.omega_min >= 0.0 && config.grid.omega_max > config.grid.omega_min,
          "grid requires 0 <= omega_min < omega_max");
  require(config.grid.points != 1, "grid.points must be 0 (adaptive) or >= 2");
  require(config.quad.rel_tol > 0.0 && config.quad.abs_tol > 0.0, "quad.rel_tol and quad.abs_tol must be > 0");
  require(config.quad.max_panels >= 16, "quad.max_panels must be >= 16");
  require(config.sweep.values.empty() || config.sweep.points == 0,
          "give either sweep.values or sweep.min/max/points, not both");
  require(config.sweep.points == 0 || config.sweep.max >= config.sweep.min, "sweep requires min <= max");
  require(config.oracle.modes >= 100, "oracle.modes must be >= 100");

  switch (config.task) {
    case Task::heat_spectrum:
      require(config.heat_differential || config.bath1.temperature != config.bath2.temperature,
              "heat-spectrum normalizes by T1 - T2; use heat.differential = true for equal temperatures");
      break;
    case Task::heat_sweep:
      require(!config.sweep.resolve().empty(), "heat-sweep needs gamma values in sweep.*");
      require(config.bath1.temperature != config.bath2.temperature, "heat-sweep normalizes by T1 - T2 != 0");
      for (double g : config.sweep.resolve()) require(g > 0.0, "heat-sweep gamma values must be > 0");
      break;
    case Task::entanglement_sweep:
      require(!config.sweep.resolve().empty(), "entanglement-sweep needs coupling values g in sweep.*");
      for (double g : config.sweep.resolve()) require(g >= 0.0, "entanglement-sweep g values must be >= 0");
      break;
    default:
      break;
  }
}

}  // namespace duet::cli
