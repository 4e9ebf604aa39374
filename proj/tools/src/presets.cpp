#include "duet_cli/presets.hpp"

#include <cmath>

#include "duet/error.hpp"

namespace duet::cli {

namespace {

// Loss-spectra parameter sets (a), (b), (c); m1 = m2 = 1, omega_10 = 1.
RunConfig case_a() {
  RunConfig c;
  c.k2 = 1.15 * 1.15;
  c.lambda = 0.09;
  c.bath1 = {0.1, 0.02, 0.0};
  c.bath2 = {0.1, 0.02, 0.0};
  return c;
}

RunConfig case_b() {
  RunConfig c;
  c.k2 = 1.0;
  c.lambda = 0.27;
  c.bath1 = {0.4, 0.02, 0.0};
  c.bath2 = {0.2, 0.02, 0.0};
  return c;
}

RunConfig case_c() {
  RunConfig c;
  c.k2 = 1.0;
  c.lambda = 0.36;
  c.bath1 = {0.25, 0.5, 0.0};
  c.bath2 = {0.217, 0.5, 0.0};
  return c;
}

RunConfig absorption(RunConfig c, const char* out) {
  c.task = Task::absorption;
  c.grid = {0.6, 1.6, 0};
  c.output = out;
  return c;
}

// Linear-response heat spectrum at mean temperature hbar omega_1, with
// omega_1 = sqrt(k1'/m1) the coupling-shifted frequency of oscillator 1.
RunConfig heat_left(RunConfig c, const char* out) {
  const double t = std::sqrt(c.k1 + c.lambda);
  c.bath1.temperature = t;
  c.bath2.temperature = t;
  c.heat_differential = true;
  c.task = Task::heat_spectrum;
  c.grid = {0.01, 2.5, 0};
  c.output = out;
  return c;
}

RunConfig entanglement(RunConfig c, const char* out) {
  c.bath1.temperature = 0.1;
  c.bath2.temperature = 0.15;
  c.sweep.min = 0.05;
  c.sweep.max = 1.5;
  c.sweep.points = 146;  // g step 0.01
  c.task = Task::entanglement_sweep;
  c.output = out;
  return c;
}

struct Entry {
  const char* name;
  RunConfig (*make)();
};

const Entry kPresets[] = {
    {"fig1a", [] { return absorption(case_a(), "fig1a.csv"); }},
    {"fig1b", [] { return absorption(case_b(), "fig1b.csv"); }},
    {"fig1c", [] { return absorption(case_c(), "fig1c.csv"); }},
    {"fig3left-a", [] { return heat_left(case_a(), "fig3left-a.csv"); }},
    {"fig3left-b", [] { return heat_left(case_b(), "fig3left-b.csv"); }},
    {"fig3left-c", [] { return heat_left(case_c(), "fig3left-c.csv"); }},
    {"fig3right",
     [] {
       RunConfig c;
       c.k2 = 0.6 * 0.6;
       c.lambda = 0.36;
       c.bath1 = {0.1, 0.02, 5.0};
       c.bath2 = {0.1, 0.02, 4.0};
       c.sweep.values = {0.01, 0.1, 0.4};
       c.grid = {0.01, 2.5, 0};
       c.task = Task::heat_sweep;
       c.output = "fig3right.csv";
       return c;
     }},
    {"fig4-a", [] { return entanglement(case_a(), "fig4-a.csv"); }},
    {"fig4-c", [] { return entanglement(case_c(), "fig4-c.csv"); }},
    {"fig5",
     [] {
       RunConfig c = case_b();
       c.bath1.temperature = 0.5;
       c.bath2.temperature = 0.25;
       c.grid = {0.5, 1.6, 0};
       c.task = Task::witness_spectra;
       c.output = "fig5.csv";
       return c;
     }},
};

}  // namespace

RunConfig preset(const std::string& name) {
  const std::string resolved = name == "fig3left" ? "fig3left-a" : name == "fig4" ? "fig4-a" : name;
  for (const Entry& e : kPresets)
    if (resolved == e.name) return e.make();
  throw InvalidParameter("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const Entry& e : kPresets) out.emplace_back(e.name);
  return out;
}

}  // namespace duet::cli
