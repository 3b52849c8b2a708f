#include "razavy/cli_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <random>
#include <stdexcept>

#include "razavy/io.hpp"
#include "razavy/optimize.hpp"
#include "razavy/oracles.hpp"
#include "razavy/quadrature.hpp"

namespace razavy::cli {
namespace {

namespace fs = std::filesystem;
using io::fmt9;

double parse_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size())
    throw std::invalid_argument(std::string(what) + ": cannot parse '" + s +
                                "' as a number");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string out_path(const GlobalOptions& go, const std::string& name) {
  fs::path dir(go.out_dir.empty() ? "." : go.out_dir);
  fs::create_directories(dir);
  return (dir / name).string();
}

std::string packet_label(const Wavepacket& w) {
  if (w.preset) return std::string(1, preset_letter(*w.preset));
  return "custom";
}

// tau_min can legitimately be +inf (stationary single-eigenstate packet);
// JSON has no inf literal, so emit those as strings.
void field_or_inf(io::JsonWriter& jw, std::string_view key, double v) {
  if (std::isfinite(v))
    jw.field(key, v);
  else
    jw.field(key, v > 0 ? "inf" : "-inf");
}

struct DynamicsReport {
  CoupledSpectrum cs;
  OrthogonalityResult orth;
  SpeedLimit sl;
  double c0 = 0.0;
  ConcurrenceAverages avg;
  std::string status;  // "exact" | "approx" | "min_only"
  double tau_value = 0.0;
  double ratio = 0.0;
};

DynamicsReport analyze(const SingleWellSolution& s, const Wavepacket& w,
                       double g, double t_max) {
  DynamicsReport r;
  r.cs = coupled_eigensystem(s, g);
  OrthogonalitySearch search;
  search.t_max = t_max;
  r.orth = orthogonality_time(w, r.cs, search);
  r.sl = speed_limit(w, r.cs);
  r.c0 = concurrence_initial(w, r.cs);
  r.avg = concurrence_average(w, r.cs);
  if (r.orth.found) {
    r.status = r.orth.method == TauMethod::analytic ? "exact" : "approx";
    r.tau_value = r.orth.tau;
  } else {
    r.status = "min_only";
    r.tau_value = r.orth.min_t;
  }
  r.ratio = r.tau_value / r.sl.tau_min;
  return r;
}

}  // namespace

std::vector<double> parse_g_spec(const std::string& spec) {
  std::vector<double> gs;
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3)
      throw std::invalid_argument("--g range must be lo:hi:count");
    const double lo = parse_double(parts[0], "--g");
    const double hi = parse_double(parts[1], "--g");
    const double nd = parse_double(parts[2], "--g");
    const int n = static_cast<int>(nd);
    if (n != nd || n < 2 || !(hi > lo))
      throw std::invalid_argument("--g range needs lo < hi and count >= 2");
    for (int i = 0; i < n; ++i)
      gs.push_back(lo + (hi - lo) * i / (n - 1));
    gs.back() = hi;
  } else {
    for (const auto& p : split(spec, ','))
      gs.push_back(parse_double(p, "--g"));
  }
  for (double g : gs)
    if (!(g >= 0.0))
      throw std::invalid_argument("--g values must be >= 0");
  std::sort(gs.begin(), gs.end());
  gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
  return gs;
}

Grid parse_grid_spec(const std::string& spec) {
  const auto parts = split(spec, ',');
  if (parts.size() != 3)
    throw std::invalid_argument("--grid must be n,lo,hi");
  Grid grid;
  const double nd = parse_double(parts[0], "--grid");
  grid.n = static_cast<int>(nd);
  if (grid.n != nd) throw std::invalid_argument("--grid point count must be an integer");
  grid.lo = parse_double(parts[1], "--grid");
  grid.hi = parse_double(parts[2], "--grid");
  return grid;
}

std::array<double, 4> parse_coeffs(const std::string& spec) {
  const auto parts = split(spec, ',');
  if (parts.size() != 4)
    throw std::invalid_argument("--coeffs must be a0,a1,a2,a3");
  std::array<double, 4> a{};
  for (int i = 0; i < 4; ++i) a[i] = parse_double(parts[i], "--coeffs");
  return a;
}

void apply_config_file(const std::string& path, PotentialParams& p,
                       const std::vector<std::string>& already_set) {
  const auto kv = io::parse_config(path);
  auto overridden = [&already_set](const std::string& key) {
    return std::find(already_set.begin(), already_set.end(), key) !=
           already_set.end();
  };
  for (const auto& [key, val] : kv) {
    if (key == "hbar") {
      if (!overridden(key)) p.hbar = parse_double(val, "config hbar");
    } else if (key == "mass") {
      if (!overridden(key)) p.mass = parse_double(val, "config mass");
    } else if (key == "xi") {
      if (!overridden(key)) p.xi = parse_double(val, "config xi");
    } else if (key == "kappa") {
      if (!overridden(key)) p.kappa = parse_double(val, "config kappa");
    } else {
      throw std::invalid_argument("config: unknown key '" + key +
                                  "' (expected hbar, mass, xi, kappa)");
    }
  }
  p.validate();
}

int cmd_spectrum(const GlobalOptions& go, const SpectrumCmd& cmd) {
  if (cmd.g.empty())
    throw std::invalid_argument("spectrum: need at least one g value");
  const SingleWellSolution s = solve_single_well(go.params);

  io::JsonWriter jw;
  jw.begin_object()
      .field("hbar", go.params.hbar)
      .field("mass", go.params.mass)
      .field("xi", go.params.xi)
      .field("kappa", go.params.kappa);
  jw.begin_array("eps");
  for (double e : s.eps) jw.element(e);
  jw.end_array();
  jw.field("gamma", s.gamma)
      .field("norm0", s.norm0)
      .field("norm1", s.norm1)
      .field("eps_sum", s.eps[0] + s.eps[1])
      .field("delta", s.eps[1] - s.eps[0])
      .field("x_min", s.landmarks.x_min)
      .field("v_min", s.landmarks.v_min)
      .field("v_barrier", s.landmarks.v_barrier)
      .end_object();
  io::write_file(out_path(go, "single_well.json"), jw.str() + "\n");

  const std::vector<std::string> header = {"g",      "E0",     "E1",
                                           "E2",     "E3",     "theta",
                                           "omega1", "omega2", "omega3"};
  std::string csv = io::csv_row(header);
  io::JsonWriter tj;
  tj.begin_object().begin_array("rows");
  for (double g : cmd.g) {
    const CoupledSpectrum cs = coupled_eigensystem(s, g);
    std::vector<std::string> cells = {fmt9(g)};
    for (double e : cs.energy) cells.push_back(fmt9(e));
    cells.push_back(fmt9(cs.theta));
    for (double om : cs.omega) cells.push_back(fmt9(om));
    csv += io::csv_row(cells);
    tj.begin_object()
        .field("g", g)
        .field("E0", cs.energy[0])
        .field("E1", cs.energy[1])
        .field("E2", cs.energy[2])
        .field("E3", cs.energy[3])
        .field("theta", cs.theta)
        .field("omega1", cs.omega[0])
        .field("omega2", cs.omega[1])
        .field("omega3", cs.omega[2])
        .end_object();
  }
  tj.end_array().end_object();

  if (go.format == "json")
    io::write_file(out_path(go, "spectrum.json"), tj.str() + "\n");
  else
    io::write_file(out_path(go, "spectrum.csv"), csv);

  std::cout << "single well: eps0=" << fmt9(s.eps[0])
            << " eps1=" << fmt9(s.eps[1]) << " gamma=" << fmt9(s.gamma)
            << "\nwrote single_well.json and spectrum."
            << (go.format == "json" ? "json" : "csv") << " ("
            << cmd.g.size() << " g values) to " << go.out_dir << "\n";
  return 0;
}

int cmd_dynamics(const GlobalOptions& go, const DynamicsCmd& cmd) {
  if (!(cmd.t_max > 0.0) || !(cmd.dt > 0.0) || cmd.dt > cmd.t_max)
    throw std::invalid_argument("dynamics: need 0 < dt <= tmax");
  const SingleWellSolution s = solve_single_well(go.params);
  const DynamicsReport r = analyze(s, cmd.packet, cmd.g, cmd.t_max);

  // time series
  const int n = static_cast<int>(std::floor(cmd.t_max / cmd.dt)) + 1;
  std::string csv = io::csv_row({"t", "gamma", "concurrence"});
  io::JsonWriter tj;
  tj.begin_object().begin_array("rows");
  for (int i = 0; i < n; ++i) {
    const double t = i * cmd.dt;
    const double gam = correlation(cmd.packet, r.cs, t);
    const double con = concurrence_at(cmd.packet, r.cs, t);
    if (go.format == "json") {
      tj.begin_object()
          .field("t", t)
          .field("gamma", gam)
          .field("concurrence", con)
          .end_object();
    } else {
      csv += io::csv_row({fmt9(t), fmt9(gam), fmt9(con)});
    }
  }
  tj.end_array().end_object();
  if (go.format == "json")
    io::write_file(out_path(go, "dynamics.json.rows"), tj.str() + "\n");
  else
    io::write_file(out_path(go, "dynamics.csv"), csv);

  io::JsonWriter jw;
  jw.begin_object()
      .field("packet", packet_label(cmd.packet));
  jw.begin_array("coeffs");
  for (double a : cmd.packet.a) jw.element(a);
  jw.end_array();
  jw.field("g", cmd.g).field("theta", r.cs.theta);
  jw.begin_array("energy");
  for (double e : r.cs.energy) jw.element(e);
  jw.end_array();
  jw.begin_array("omega");
  for (double om : r.cs.omega) jw.element(om);
  jw.end_array();
  jw.field("tau", r.tau_value)
      .field("tau_status", r.status)
      .field("tau_method", to_string(r.orth.method))
      .field("gamma_residual", r.orth.found ? r.orth.gamma_residual
                                            : r.orth.min_gamma)
      .field("mean_energy", r.sl.mean_energy)
      .field("energy_spread", r.sl.energy_spread);
  field_or_inf(jw, "tau_min", r.sl.tau_min);
  jw.field("tau_ratio", r.ratio)
      .field("c0", r.c0)
      .field("c_av", r.avg.c_rms)
      .field("c_av_method", to_string(r.avg.rms_method))
      .field("c_mean", r.avg.c_mean)
      .field("avg_window", r.avg.window)
      .end_object();
  io::write_file(out_path(go, "dynamics.json"), jw.str() + "\n");

  std::cout << "packet " << packet_label(cmd.packet) << ", g=" << fmt9(cmd.g)
            << ": tau=" << fmt9(r.tau_value) << " (" << r.status
            << ", residual " << fmt9(r.orth.found ? r.orth.gamma_residual
                                                  : r.orth.min_gamma)
            << "), tau_min=" << fmt9(r.sl.tau_min)
            << ", ratio=" << fmt9(r.ratio) << "\nC(0)=" << fmt9(r.c0)
            << " C_av=" << fmt9(r.avg.c_rms) << " <C>=" << fmt9(r.avg.c_mean)
            << "\nwrote dynamics time series and dynamics.json to "
            << go.out_dir << "\n";
  return 0;
}

int cmd_sweep(const GlobalOptions& go, const SweepCmd& cmd) {
  if (cmd.presets.empty() || cmd.g.empty())
    throw std::invalid_argument("sweep: need presets and g values");
  const SingleWellSolution s = solve_single_well(go.params);

  const std::vector<std::string> header = {
      "preset", "g",          "theta",          "omega1", "omega2",
      "omega3", "tau",        "tau_status",     "tau_method",
      "gamma_residual",       "tau_min",        "ratio",  "c0",
      "c_av",   "c_av_method", "c_mean"};
  std::string csv = io::csv_row(header);
  io::JsonWriter tj;
  tj.begin_object().begin_array("rows");
  for (Preset p : cmd.presets) {
    const Wavepacket w = Wavepacket::from_preset(p);
    for (double g : cmd.g) {
      const DynamicsReport r = analyze(s, w, g, cmd.t_max);
      const double resid =
          r.orth.found ? r.orth.gamma_residual : r.orth.min_gamma;
      csv += io::csv_row({std::string(1, preset_letter(p)), fmt9(g),
                          fmt9(r.cs.theta), fmt9(r.cs.omega[0]),
                          fmt9(r.cs.omega[1]), fmt9(r.cs.omega[2]),
                          fmt9(r.tau_value), r.status,
                          to_string(r.orth.method), fmt9(resid),
                          fmt9(r.sl.tau_min), fmt9(r.ratio), fmt9(r.c0),
                          fmt9(r.avg.c_rms), to_string(r.avg.rms_method),
                          fmt9(r.avg.c_mean)});
      tj.begin_object()
          .field("preset", std::string(1, preset_letter(p)))
          .field("g", g)
          .field("theta", r.cs.theta)
          .field("tau", r.tau_value)
          .field("tau_status", r.status)
          .field("gamma_residual", resid);
      field_or_inf(tj, "tau_min", r.sl.tau_min);
      tj.field("ratio", r.ratio)
          .field("c0", r.c0)
          .field("c_av", r.avg.c_rms)
          .field("c_mean", r.avg.c_mean)
          .end_object();
    }
  }
  tj.end_array().end_object();
  if (go.format == "json")
    io::write_file(out_path(go, "sweep.json"), tj.str() + "\n");
  else
    io::write_file(out_path(go, "sweep.csv"), csv);
  std::cout << "wrote sweep." << (go.format == "json" ? "json" : "csv")
            << " (" << cmd.presets.size() << " presets x " << cmd.g.size()
            << " g values) to " << go.out_dir << "\n";
  return 0;
}

int cmd_field(const GlobalOptions& go, const FieldCmd& cmd) {
  const SingleWellSolution s = solve_single_well(go.params);
  const CoupledSpectrum cs = coupled_eigensystem(s, cmd.g);
  cmd.grid.validate(go.params.kappa);

  std::vector<double> times = cmd.times;
  if (!cmd.tau_multiples.empty()) {
    if (!times.empty())
      throw std::invalid_argument(
          "field: give either explicit times or tau multiples, not both");
    const OrthogonalityResult orth = orthogonality_time(cmd.packet, cs);
    if (!orth.found)
      throw std::runtime_error(
          "field: no orthogonality time found to scale the tau multiples "
          "(deepest minimum Gamma = " +
          fmt9(orth.min_gamma) + " at t = " + fmt9(orth.min_t) + ")");
    for (double m : cmd.tau_multiples) times.push_back(m * orth.tau);
  }
  if (times.empty()) times.push_back(0.0);

  const PsiField ref = psi_grid(cmd.packet, cs, s, 0.0, cmd.grid);

  io::JsonWriter meta;
  meta.begin_object()
      .field("packet", packet_label(cmd.packet))
      .field("g", cmd.g)
      .field("n", cmd.grid.n)
      .field("lo", cmd.grid.lo)
      .field("hi", cmd.grid.hi);
  meta.begin_array("snapshots");
  for (std::size_t k = 0; k < times.size(); ++k) {
    const PsiField f = psi_grid(cmd.packet, cs, s, times[k], cmd.grid);
    char name[32];
    std::snprintf(name, sizeof name, "field_%03zu.csv", k);
    std::string csv = io::csv_row({"x1", "x2", "re_psi", "im_psi", "density"});
    const auto xs = cmd.grid.points();
    for (int i = 0; i < cmd.grid.n; ++i)
      for (int j = 0; j < cmd.grid.n; ++j) {
        const std::size_t idx = static_cast<std::size_t>(i) * cmd.grid.n + j;
        csv += io::csv_row({fmt9(xs[i]), fmt9(xs[j]), fmt9(f.psi[idx].real()),
                            fmt9(f.psi[idx].imag()), fmt9(f.density[idx])});
      }
    io::write_file(out_path(go, name), csv);
    meta.begin_object()
        .field("file", name)
        .field("t", times[k])
        .field("norm", f.norm_trapezoid())
        .field("overlap_mod_t0", std::abs(field_overlap(ref, f)))
        .end_object();
  }
  meta.end_array().end_object();
  io::write_file(out_path(go, "field_meta.json"), meta.str() + "\n");
  std::cout << "wrote " << times.size()
            << " field snapshot(s) and field_meta.json to " << go.out_dir
            << "\n";
  return 0;
}

namespace {

class Validator {
 public:
  // |got - want| <= tol
  void near(const std::string& name, double got, double want, double tol) {
    add(name, got, want, tol, std::abs(got - want) <= tol);
  }
  // |got - want| <= tol * |want|
  void near_rel(const std::string& name, double got, double want, double tol) {
    add(name, got, want, tol * std::abs(want),
        std::abs(got - want) <= tol * std::abs(want));
  }
  void below(const std::string& name, double got, double bound) {
    add(name, got, bound, bound, got <= bound);
  }
  void holds(const std::string& name, bool ok) {
    add(name, ok ? 1.0 : 0.0, 1.0, 0.0, ok);
  }

  int failures() const {
    int n = 0;
    for (const auto& c : checks_)
      if (!c.pass) ++n;
    return n;
  }

  std::string report_lines() const {
    std::string out;
    for (const auto& c : checks_) {
      out += c.pass ? "PASS  " : "FAIL  ";
      out += c.name + "  got=" + fmt9(c.got) + " want=" + fmt9(c.want) +
             " tol=" + fmt9(c.tol) + "\n";
    }
    return out;
  }

  std::string report_json() const {
    io::JsonWriter jw;
    jw.begin_object()
        .field("checks", static_cast<int>(checks_.size()))
        .field("failures", failures());
    jw.begin_array("results");
    for (const auto& c : checks_) {
      jw.begin_object()
          .field("name", c.name)
          .field("got", c.got)
          .field("want", c.want)
          .field("tol", c.tol)
          .field("pass", c.pass)
          .end_object();
    }
    jw.end_array().end_object();
    return jw.str();
  }

 private:
  struct Check {
    std::string name;
    double got, want, tol;
    bool pass;
  };
  void add(const std::string& name, double got, double want, double tol,
           bool pass) {
    checks_.push_back({name, got, want, tol, pass});
  }
  std::vector<Check> checks_;
};

Wavepacket random_packet(std::mt19937& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::array<double, 4> a{};
  double n2 = 0.0;
  do {
    for (double& c : a) c = nd(rng);
    n2 = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
  } while (n2 < 1e-3);
  const double inv = 1.0 / std::sqrt(n2);
  for (double& c : a) c *= inv;
  return Wavepacket::custom(a);
}

}  // namespace

int cmd_validate(const GlobalOptions& go, const ValidateCmd& cmd) {
  Validator v;
  const PotentialParams base = go.params;
  const SingleWellSolution s = solve_single_well(base);
  const double scale = base.energy_scale();  // 1/2 at the adopted units

  // --- single-well closed forms against the published digits -------------
  v.near("eps0", s.eps[0], scale * -9.46410161513775, 1e-12);
  v.near("eps1", s.eps[1], scale * -9.29150262212918, 1e-12);
  v.near("eps2", s.eps[2], scale * -2.53589838486225, 1e-12);
  v.near("eps3", s.eps[3], scale * 1.29150262212918, 1e-12);
  v.holds("eps ordering", s.eps[0] < s.eps[1] && s.eps[1] < s.eps[2] &&
                              s.eps[2] < s.eps[3]);
  v.near("eps_sum", s.eps[0] + s.eps[1], -9.3778, 1e-3);
  v.near("delta", s.eps[1] - s.eps[0], 0.0863, 1e-4);
  v.near("barrier top V(0)", s.landmarks.v_barrier, -2.0, 1e-12);
  v.near("well minimum x_s", s.landmarks.x_min, 1.38433, 1e-4);
  v.near("well minimum V(x_s)", s.landmarks.v_min, -8.125, 1e-9);
  v.near("gamma (quadrature)", s.gamma, 1.13823, 1e-4);

  // gamma stability under a doubled truncation domain
  {
    auto moment = [&s](double x) {
      return eigenfunction(0, x, s) * x * eigenfunction(1, x, s);
    };
    const QuadResult wide = integrate_adaptive(moment, -12.0, 12.0, 1e-10);
    v.below("gamma domain stability", std::abs(wide.value - s.gamma), 1e-10);
  }

  // --- FD oracle ----------------------------------------------------------
  {
    FdConfig cfg;
    cfg.points = cmd.fast ? 1001 : 2001;
    cfg.stencil_order = 4;
    const FdEigenpairs fd = fd_eigenpairs(base, cfg, 2);
    v.near("fd eps0", fd.energies[0], s.eps[0], 1e-4);
    v.near("fd eps1", fd.energies[1], s.eps[1], 1e-4);
    v.near("fd gamma", fd_overlap_gamma(fd), 1.13823, 1e-4);
    v.below("fd phi0 L2 distance", fd_vs_analytic_l2(fd, 0, s), 1e-3);
    v.below("fd phi1 L2 distance", fd_vs_analytic_l2(fd, 1, s), 1e-3);

    FdConfig ho;
    ho.points = 1001;
    ho.stencil_order = 4;
    const auto levels = fd_harmonic_levels(ho, 3);
    v.near("fd harmonic n=0", levels[0], 0.5, 1e-6);
    v.near("fd harmonic n=1", levels[1], 1.5, 1e-6);
    v.near("fd harmonic n=2", levels[2], 2.5, 1e-6);
  }
  if (!cmd.fast) {
    // Richardson: halving h divides the eigenvalue error by ~2^order.
    for (int order : {2, 4}) {
      FdConfig coarse, fine;
      coarse.points = 501;
      fine.points = 1001;
      coarse.stencil_order = fine.stencil_order = order;
      const double e_coarse =
          std::abs(fd_eigenpairs(base, coarse, 1).energies[0] - s.eps[0]);
      const double e_fine =
          std::abs(fd_eigenpairs(base, fine, 1).energies[0] - s.eps[0]);
      const double ratio = e_coarse / e_fine;
      const double want = order == 2 ? 4.0 : 16.0;
      v.holds("fd richardson order " + std::to_string(order) + " (ratio " +
                  fmt9(ratio) + " ~ " + fmt9(want) + ")",
              ratio > 0.55 * want && ratio < 1.6 * want);
    }
  }

  // --- coupled spectrum ----------------------------------------------------
  {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> gd(0.0, 1.0);
    double worst_sum = 0.0, worst_eig = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double g = (i == 0) ? 0.0 : gd(rng);
      const CoupledSpectrum cs = coupled_eigensystem(s, g);
      worst_sum = std::max(
          worst_sum, std::abs(cs.omega[2] - (cs.omega[0] + cs.omega[1])));
      const auto num = symmetric4_eigenvalues(energy_matrix(s, g));
      for (int nu = 0; nu < 4; ++nu)
        worst_eig = std::max(worst_eig, std::abs(num[nu] - cs.energy[nu]));
    }
    v.below("omega3 = omega1 + omega2 (worst |diff|)", worst_sum, 1e-12);
    v.below("4x4 closed vs dsyev (worst |diff|)", worst_eig, 1e-12);

    const CoupledSpectrum c1 = coupled_eigensystem(s, 0.1);
    v.near("theta(g=0.1)", c1.theta, 0.4915874688880864, 1e-9);
    v.near("omega1(g=0.1)", c1.omega[0], 0.026111428856033, 1e-9);
    v.near("omega2(g=0.1)", c1.omega[1], 0.285223881770538, 1e-9);
    v.near("omega3(g=0.1)", c1.omega[2], 0.311335310626571, 1e-9);
  }

  // --- orthogonality times vs the published table (numeric search) --------
  {
    const double taus[4][3] = {{36.40, 121.0, 218.8},    // A
                               {18.2, 10.1, 5.75},       // B
                               {36.40, 120.3, 224.5},    // C
                               {36.40, 11.02, 5.903}};   // D
    const double gs[3] = {0.0, 0.1, 0.2};
    for (int pi = 0; pi < 4; ++pi) {
      const Preset p = static_cast<Preset>(pi);
      const Wavepacket w = Wavepacket::from_preset(p);
      for (int gi = 0; gi < 3; ++gi) {
        const CoupledSpectrum cs = coupled_eigensystem(s, gs[gi]);
        OrthogonalitySearch numeric;
        numeric.force_numeric = true;
        const OrthogonalityResult r = orthogonality_time(w, cs, numeric);
        std::string name = std::string("tau ") + preset_letter(p) + " g=" +
                           fmt9(gs[gi]);
        if (!r.found) {
          v.holds(name + " found", false);
          continue;
        }
        v.near_rel(name, r.tau, taus[pi][gi], 0.005);
        // analytic fast path, where one exists, must agree with the scan
        const OrthogonalityResult a = orthogonality_time(w, cs);
        if (a.method == TauMethod::analytic)
          v.near_rel(name + " analytic vs numeric", a.tau, r.tau, 1e-6);
      }
    }
  }

  // --- speed limits --------------------------------------------------------
  {
    const double want_ratio[3] = {1.414, 7.00, 20.0};
    const double gs[3] = {0.0, 0.1, 0.2};
    const Wavepacket wa = Wavepacket::from_preset(Preset::A);
    for (int gi = 0; gi < 3; ++gi) {
      const CoupledSpectrum cs = coupled_eigensystem(s, gs[gi]);
      OrthogonalitySearch numeric;
      numeric.force_numeric = true;
      const OrthogonalityResult r = orthogonality_time(wa, cs, numeric);
      const SpeedLimit sl = speed_limit(wa, cs);
      v.near_rel("ratio A g=" + fmt9(gs[gi]), r.tau / sl.tau_min,
                 want_ratio[gi], 0.005);
    }
    double worst_b = 0.0, worst_c = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double g = 0.005 * i;
      const CoupledSpectrum cs = coupled_eigensystem(s, g);
      for (Preset p : {Preset::B, Preset::C}) {
        const Wavepacket w = Wavepacket::from_preset(p);
        const double ratio =
            orthogonality_time(w, cs).tau / speed_limit(w, cs).tau_min;
        double& worst = (p == Preset::B) ? worst_b : worst_c;
        worst = std::max(worst, std::abs(ratio - 1.0));
      }
    }
    v.below("ratio B = 1 across sweep (worst |dev|)", worst_b, 1e-6);
    v.below("ratio C = 1 across sweep (worst |dev|)", worst_c, 1e-6);

    // preset D: ratio falls from sqrt(2) through ~1 near g = 0.06
    const Wavepacket wd = Wavepacket::from_preset(Preset::D);
    auto ratio_d = [&](double g) {
      const CoupledSpectrum cs = coupled_eigensystem(s, g);
      return orthogonality_time(wd, cs).tau / speed_limit(wd, cs).tau_min;
    };
    v.near_rel("ratio D g=0", ratio_d(0.0), 1.414, 0.005);
    const double g_star =
        bisect_root([&](double g) { return ratio_d(g) - 1.02; }, 1e-6, 0.2,
                    1e-6);
    v.near("crossover g* (ratio reaches 1.0 at display precision)", g_star,
           0.06, 0.005);
    v.holds("ratio D monotone to 1 beyond g*",
            ratio_d(0.08) < 1.02 && ratio_d(0.1) < 1.02 &&
                ratio_d(0.2) < 1.02);
  }

  // --- concurrence ---------------------------------------------------------
  {
    const double c0_tab[4][3] = {{0.0, 0.223, 0.342},
                                 {1.0, 0.554, 0.316},
                                 {0.5, 0.0839, 0.0256},
                                 {0.5, 0.277, 0.158}};
    const double gs[3] = {0.0, 0.1, 0.2};
    for (int pi = 0; pi < 4; ++pi) {
      const Wavepacket w = Wavepacket::from_preset(static_cast<Preset>(pi));
      for (int gi = 0; gi < 3; ++gi) {
        const CoupledSpectrum cs = coupled_eigensystem(s, gs[gi]);
        v.near(std::string("C0 ") + preset_letter(static_cast<Preset>(pi)) +
                   " g=" + fmt9(gs[gi]),
               concurrence_initial(w, cs), c0_tab[pi][gi], 1e-3);
      }
    }

    // closed-form averages, including the two-sided g -> 0 structure
    const CoupledSpectrum cs0 = coupled_eigensystem(s, 0.0);
    const CoupledSpectrum cs_eps = coupled_eigensystem(s, 1e-4);
    const CoupledSpectrum cs1 = coupled_eigensystem(s, 0.1);
    const CoupledSpectrum cs2 = coupled_eigensystem(s, 0.2);
    const double cav_tab[4][4] = {  // g = 0, 0+, 0.1, 0.2
        {0.0, 0.707, 0.643, 0.622},
        {1.0, 1.0, 0.808, 0.742},
        {0.5, 0.5, 0.651, 0.689},
        {0.5, 0.612, 0.537, 0.512}};
    for (int pi = 0; pi < 4; ++pi) {
      const Preset p = static_cast<Preset>(pi);
      const Wavepacket w = Wavepacket::from_preset(p);
      v.near(std::string("C_av ") + preset_letter(p) + " g=0",
             concurrence_average(w, cs0).c_rms, cav_tab[pi][0], 1e-3);
      v.near(std::string("C_av ") + preset_letter(p) + " g=0+",
             concurrence_rms_closed(w, cs_eps), cav_tab[pi][1], 1e-3);
      v.near(std::string("C_av ") + preset_letter(p) + " g=0.1",
             concurrence_average(w, cs1).c_rms, cav_tab[pi][2], 1e-3);
      v.near(std::string("C_av ") + preset_letter(p) + " g=0.2",
             concurrence_average(w, cs2).c_rms, cav_tab[pi][3], 1e-3);
    }

    // numeric long-time averages vs the closed forms
    for (int pi = 0; pi < 4; ++pi) {
      if (cmd.fast && pi != 0 && pi != 3) continue;
      const Preset p = static_cast<Preset>(pi);
      const Wavepacket base_w = Wavepacket::from_preset(p);
      Wavepacket w = Wavepacket::custom(base_w.a);  // numeric-average route
      const double closed = concurrence_rms_closed(base_w, cs1);
      const double numeric = concurrence_average(w, cs1).c_rms;
      v.near_rel(std::string("C_av numeric vs closed ") + preset_letter(p) +
                     " g=0.1",
                 numeric, closed, 0.01);
    }
    {
      // discontinuity at g = 0: the 0+ value persists down to tiny g...
      const Wavepacket wa =
          Wavepacket::custom(Wavepacket::from_preset(Preset::A).a);
      const double tiny = concurrence_average(wa, cs_eps).c_rms;
      v.near_rel("C_av A numeric at g=1e-4 vs 0+ closed form", tiny,
                 concurrence_rms_closed(wa, cs_eps), 0.01);
      // ...and stays far from the g = 0 resonance branch (which is 0)
      v.holds("C_av A discontinuous at g=0", tiny > 0.5);
    }

    // property battery at random packets / times
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> td(0.0, 400.0);
    std::uniform_real_distribution<double> gd(0.0, 0.5);
    double worst_dual = 0.0, worst_norm = 0.0, worst_const = 0.0;
    double worst_gamma_hi = 0.0, worst_c_hi = 0.0;
    for (int i = 0; i < 200; ++i) {
      const Wavepacket w = random_packet(rng);
      const double g = gd(rng);
      const double t = td(rng);
      const CoupledSpectrum cs = coupled_eigensystem(s, g);
      const BasisAmplitudes amps = basis_amplitudes(w, cs, t);
      worst_dual = std::max(worst_dual,
                            std::abs(concurrence_from_amplitudes(amps) -
                                     concurrence_at(w, cs, t)));
      worst_norm = std::max(worst_norm, std::abs(amps.norm_sq() - 1.0));
      worst_gamma_hi =
          std::max(worst_gamma_hi, correlation(w, cs, t) - 1.0);
      worst_c_hi = std::max(worst_c_hi, concurrence_at(w, cs, t) - 1.0);
      worst_const = std::max(
          worst_const, std::abs(concurrence_at(w, cs0, t) -
                                concurrence_initial(w, cs0)));
    }
    v.below("dual-path concurrence (worst |diff|)", worst_dual, 1e-12);
    v.below("basis amplitude unitarity (worst |dev|)", worst_norm, 1e-12);
    v.below("Gamma <= 1 (worst excess)", worst_gamma_hi, 1e-12);
    v.below("C <= 1 (worst excess)", worst_c_hi, 1e-12);
    v.below("C(t) constant at g=0 (worst |dev|)", worst_const, 1e-12);
  }

  // --- tau/concurrence identity for preset B sweep rows ---------------------
  {
    const Wavepacket wb = Wavepacket::from_preset(Preset::B);
    double worst = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double g = 0.005 * i;
      const CoupledSpectrum cs = coupled_eigensystem(s, g);
      const double tau = orthogonality_time(wb, cs).tau;
      const double cav = concurrence_average(wb, cs).c_rms;
      const double c0 = concurrence_initial(wb, cs);
      const double delta = cs.delta;
      const double via_cav =
          (std::numbers::pi / (2.0 * delta)) *
          std::sqrt(std::max(0.0, 2.0 * cav * cav - 1.0));
      const double via_c0 = (std::numbers::pi / (2.0 * delta)) * c0;
      worst = std::max(worst, std::abs(tau - via_cav) / tau);
      worst = std::max(worst, std::abs(tau - via_c0) / tau);
    }
    v.below("tau_B identity via C_av and C(0) (worst rel dev)", worst, 1e-6);
  }

  // --- grid fields ----------------------------------------------------------
  {
    const Grid grid;  // 201 points on [-3.5, 3.5]
    const CoupledSpectrum cs1 = coupled_eigensystem(s, 0.1);
    const Wavepacket wd = Wavepacket::from_preset(Preset::D);
    const double tau = orthogonality_time(wd, cs1).tau;
    const PsiField f0 = psi_grid(wd, cs1, s, 0.0, grid);
    v.below("grid norm deviation at t=0", std::abs(f0.norm_trapezoid() - 1.0),
            1e-6);
    for (int m : {1, 3, 5}) {
      const PsiField ft = psi_grid(wd, cs1, s, m * tau, grid);
      v.below("grid overlap D g=0.1 at " + std::to_string(m) + "*tau",
              std::abs(field_overlap(f0, ft)), 1e-3);
      v.below("grid norm deviation at " + std::to_string(m) + "*tau",
              std::abs(ft.norm_trapezoid() - 1.0), 1e-6);
    }

    // peak-quadrant structure of the initial densities at g = 0
    const CoupledSpectrum cs0 = coupled_eigensystem(s, 0.0);
    const auto xs = grid.points();
    for (int pi = 0; pi < 4; ++pi) {
      const Preset p = static_cast<Preset>(pi);
      const PsiField f =
          psi_grid(Wavepacket::from_preset(p), cs0, s, 0.0, grid);
      double best = 0.0, best_rr = 0.0, best_ll = 0.0;
      for (int i = 0; i < grid.n; ++i)
        for (int j = 0; j < grid.n; ++j) {
          const double d = f.density[static_cast<std::size_t>(i) * grid.n + j];
          best = std::max(best, d);
          if (xs[i] > 0.0 && xs[j] > 0.0) best_rr = std::max(best_rr, d);
          if (xs[i] < 0.0 && xs[j] < 0.0) best_ll = std::max(best_ll, d);
        }
      const std::string name = std::string("density peak ") + preset_letter(p);
      // the global maximum sits in the RR quadrant (for B it is shared with
      // the mirror peak at LL, so compare values rather than argmax indices)
      v.near_rel(name + " at RR", best_rr, best, 1e-9);
      if (p == Preset::B)
        v.near_rel(name + " mirrored at LL", best_ll, best, 1e-9);
      else if (p == Preset::A)
        v.below(name + " LL suppression", best_ll / best, 0.01);
      else
        v.below(name + " LL suppression", best_ll / best, 0.1);
    }

    // grid overlap reproduces the analytic correlation away from zeros
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> td(0.0, 50.0);
    double worst = 0.0;
    for (int i = 0; i < (cmd.fast ? 3 : 8); ++i) {
      const double t = td(rng);
      const PsiField ft = psi_grid(wd, cs1, s, t, grid);
      worst = std::max(worst, std::abs(std::abs(field_overlap(f0, ft)) -
                                       correlation(wd, cs1, t)));
    }
    v.below("grid overlap vs analytic Gamma (worst |diff|)", worst, 1e-6);
  }

  std::cout << v.report_lines();
  io::write_file(out_path(go, "validation.json"), v.report_json() + "\n");
  if (v.failures() > 0) {
    std::cout << "VALIDATION FAILED: " << v.failures() << " check(s)\n";
    return 3;
  }
  std::cout << "all validation checks passed\n";
  return 0;
}

}  // namespace razavy::cli
