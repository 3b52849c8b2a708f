// Command-line front end: spectrum | dynamics | sweep | field | validate.
// Exit codes: 0 success, 1 usage error, 2 computation failure,
// 3 validation failure.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "razavy/cli_ops.hpp"

namespace {

using namespace razavy;

std::vector<double> parse_list(const std::string& spec, const char* what) {
  std::vector<double> out;
  std::string cur;
  std::istringstream in(spec);
  while (std::getline(in, cur, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(cur, &used);
      if (used != cur.size()) throw std::invalid_argument(cur);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": cannot parse '" +
                                  cur + "'");
    }
  }
  if (out.empty())
    throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

Wavepacket make_packet(const std::string& preset, const std::string& coeffs) {
  if (!preset.empty() && !coeffs.empty())
    throw std::invalid_argument("give either --preset or --coeffs, not both");
  if (!preset.empty()) {
    if (preset.size() != 1)
      throw std::invalid_argument("--preset must be one of A, B, C, D");
    return Wavepacket::from_preset(preset_from_letter(preset[0]));
  }
  if (!coeffs.empty()) return Wavepacket::custom(cli::parse_coeffs(coeffs));
  throw std::invalid_argument("need --preset or --coeffs");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Coupled double-well dynamics: spectrum, orthogonality times, "
      "speed-limit bounds and concurrence of two particles in a hyperbolic "
      "double well"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand

  cli::GlobalOptions go;
  std::string config_path;
  app.add_option("--hbar", go.params.hbar, "Planck constant (default 1)");
  app.add_option("--mass", go.params.mass, "particle mass (default 1)");
  app.add_option("--xi", go.params.xi, "well-shape parameter (default 1)");
  app.add_option("--kappa", go.params.kappa, "inverse length scale (default 1)");
  app.add_option("--config", config_path,
                 "key=value file with hbar/mass/xi/kappa (flags win)");
  app.add_option("--out", go.out_dir, "output directory (default .)");
  app.add_option("--format", go.format, "table format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* sp = app.add_subcommand("spectrum",
                                "single-well constants and coupled levels");
  std::string sp_g = "0,0.1,0.2";
  sp->add_option("--g", sp_g, "coupling values: list a,b,c or range lo:hi:n");

  auto* dy = app.add_subcommand("dynamics",
                                "time series and scalars for one packet");
  std::string dy_preset, dy_coeffs;
  cli::DynamicsCmd dy_cmd;
  dy->add_option("--preset", dy_preset, "wavepacket preset A|B|C|D");
  dy->add_option("--coeffs", dy_coeffs, "custom coefficients a0,a1,a2,a3");
  dy->add_option("--g", dy_cmd.g, "coupling strength");
  dy->add_option("--tmax", dy_cmd.t_max, "time horizon (default 400)");
  dy->add_option("--dt", dy_cmd.dt, "series sampling step (default 0.05)");

  auto* sw = app.add_subcommand("sweep", "per-g scalar table over presets");
  std::string sw_presets = "A,B,C,D";
  std::string sw_g = "0:0.2:41";
  cli::SweepCmd sw_cmd;
  sw->add_option("--preset", sw_presets, "comma list of presets (default all)");
  sw->add_option("--g", sw_g, "coupling values: list or range lo:hi:n");
  sw->add_option("--tmax", sw_cmd.t_max, "search horizon (default 400)");

  auto* fi = app.add_subcommand("field", "two-particle wavefunction snapshots");
  std::string fi_preset, fi_coeffs, fi_grid = "201,-3.5,3.5";
  std::string fi_times, fi_tau_multiples;
  cli::FieldCmd fi_cmd;
  fi->add_option("--preset", fi_preset, "wavepacket preset A|B|C|D");
  fi->add_option("--coeffs", fi_coeffs, "custom coefficients a0,a1,a2,a3");
  fi->add_option("--g", fi_cmd.g, "coupling strength");
  fi->add_option("--grid", fi_grid, "grid n,lo,hi (default 201,-3.5,3.5)");
  fi->add_option("--times", fi_times, "sample times t1,t2,...");
  fi->add_option("--tau-multiples", fi_tau_multiples,
                 "sample at multiples of the orthogonality time");

  auto* va = app.add_subcommand("validate",
                                "run the numerical cross-check battery");
  cli::ValidateCmd va_cmd;
  va->add_flag("--fast", va_cmd.fast, "smaller oracle grids, fewer averages");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!config_path.empty()) {
      std::vector<std::string> overridden;
      for (const char* key : {"hbar", "mass", "xi", "kappa"})
        if (app.count(std::string("--") + key) > 0) overridden.push_back(key);
      cli::apply_config_file(config_path, go.params, overridden);
    }
    go.params.validate();

    if (sp->parsed()) {
      cli::SpectrumCmd cmd;
      cmd.g = cli::parse_g_spec(sp_g);
      return cli::cmd_spectrum(go, cmd);
    }
    if (dy->parsed()) {
      dy_cmd.packet = make_packet(dy_preset, dy_coeffs);
      return cli::cmd_dynamics(go, dy_cmd);
    }
    if (sw->parsed()) {
      for (const char c : sw_presets)
        if (c != ',') sw_cmd.presets.push_back(preset_from_letter(c));
      if (sw_cmd.presets.empty())
        throw std::invalid_argument("sweep: --preset list is empty");
      sw_cmd.g = cli::parse_g_spec(sw_g);
      return cli::cmd_sweep(go, sw_cmd);
    }
    if (fi->parsed()) {
      fi_cmd.packet = make_packet(fi_preset, fi_coeffs);
      fi_cmd.grid = cli::parse_grid_spec(fi_grid);
      if (!fi_times.empty()) fi_cmd.times = parse_list(fi_times, "--times");
      if (!fi_tau_multiples.empty())
        fi_cmd.tau_multiples = parse_list(fi_tau_multiples, "--tau-multiples");
      return cli::cmd_field(go, fi_cmd);
    }
    if (va->parsed()) return cli::cmd_validate(go, va_cmd);
    throw std::invalid_argument("no subcommand given");
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
