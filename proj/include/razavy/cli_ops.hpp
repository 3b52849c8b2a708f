#pragma once

#include <string>
#include <vector>

#include "razavy/dynamics.hpp"
#include "razavy/entanglement.hpp"
#include "razavy/wavepacket.hpp"

namespace razavy::cli {

// Command implementations live in the library so tests can drive them
// directly; tools/main.cpp is only flag plumbing around these.

struct GlobalOptions {
  PotentialParams params;      // hbar/mass/xi/kappa (g comes per command)
  std::string out_dir = ".";   // output directory for generated files
  std::string format = "csv";  // table format: "csv" or "json"
};

struct SpectrumCmd {
  std::vector<double> g;  // sorted, unique, >= 0
};

struct DynamicsCmd {
  Wavepacket packet;
  double g = 0.0;
  double t_max = 400.0;
  double dt = 0.05;  // sampling step of the emitted time series
};

struct SweepCmd {
  std::vector<Preset> presets;
  std::vector<double> g;
  double t_max = 400.0;
};

struct FieldCmd {
  Wavepacket packet;
  double g = 0.0;
  std::vector<double> times;          // explicit sample times, or
  std::vector<double> tau_multiples;  // multiples of the computed tau
  Grid grid;
};

struct ValidateCmd {
  bool fast = false;  // skip the slowest oracle grids / averaging windows
};

// Each command returns a process exit code: 0 ok, 3 validation failure
// (validate only). Usage errors throw std::invalid_argument (main maps to 1)
// and numerical failures std::runtime_error (main maps to 2).
int cmd_spectrum(const GlobalOptions& go, const SpectrumCmd& cmd);
int cmd_dynamics(const GlobalOptions& go, const DynamicsCmd& cmd);
int cmd_sweep(const GlobalOptions& go, const SweepCmd& cmd);
int cmd_field(const GlobalOptions& go, const FieldCmd& cmd);
int cmd_validate(const GlobalOptions& go, const ValidateCmd& cmd);

// Flag-value helpers shared with main (and unit-tested directly).
std::vector<double> parse_g_spec(const std::string& spec);  // "a,b,c" | "lo:hi:n"
Grid parse_grid_spec(const std::string& spec);              // "n,lo,hi"
std::array<double, 4> parse_coeffs(const std::string& spec);
void apply_config_file(const std::string& path, PotentialParams& p,
                       const std::vector<std::string>& already_set);

}  // namespace razavy::cli
