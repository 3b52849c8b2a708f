#include "razavy/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "razavy/optimize.hpp"

namespace razavy {

double correlation(const Wavepacket& w, const CoupledSpectrum& cs, double t) {
  cplx acc = w.a[0] * w.a[0];
  for (int nu = 1; nu <= 3; ++nu)
    acc += w.a[nu] * w.a[nu] * std::polar(1.0, -cs.omega[nu - 1] * t);
  return std::abs(acc);
}

namespace {

constexpr double kPi = std::numbers::pi;

bool close(double a, double b) { return std::abs(a - b) <= 1e-12; }

// Exact-zero fast paths: a two-state superposition {a0, a_k} with equal
// weights vanishes first at pi/Omega_k; equal weights on all four states
// factor as cos(Om1 t/2) cos(Om2 t/2) (up to phases), first zero pi/Omega_2.
bool analytic_tau(const Wavepacket& w, const CoupledSpectrum& cs,
                  double* tau_out) {
  const auto& a = w.a;
  const double m0 = std::abs(a[0]);
  if (a[0] != 0.0 && w.nonzero_count() == 2) {
    for (int k = 1; k <= 3; ++k) {
      if (a[k] != 0.0 && close(std::abs(a[k]), m0)) {
        *tau_out = kPi * cs.hbar / (cs.energy[k] - cs.energy[0]);
        return true;
      }
    }
    return false;  // unequal weights: Gamma never reaches zero exactly
  }
  if (w.nonzero_count() == 4 && close(std::abs(a[1]), m0) &&
      close(std::abs(a[2]), m0) && close(std::abs(a[3]), m0)) {
    *tau_out = kPi * cs.hbar / (cs.energy[2] - cs.energy[0]);
    return true;
  }
  return false;
}

}  // namespace

OrthogonalityResult orthogonality_time(const Wavepacket& w,
                                       const CoupledSpectrum& cs,
                                       const OrthogonalitySearch& opt) {
  if (w.nonzero_count() < 2)
    throw std::invalid_argument(
        "orthogonality_time: an eigenstate is stationary and never becomes "
        "orthogonal to itself");
  if (!(opt.t_max > 0.0) || !(opt.threshold > 0.0))
    throw std::invalid_argument("orthogonality_time: bad search options");

  OrthogonalityResult res;

  double tau = 0.0;
  if (!opt.force_numeric && analytic_tau(w, cs, &tau)) {
    res.found = true;
    res.tau = tau;
    res.gamma_residual = 0.0;  // exact zero by construction
    res.method = TauMethod::analytic;
    res.bracket_lo = res.bracket_hi = tau;
    res.min_t = tau;
    res.min_gamma = correlation(w, cs, tau);  // ~1e-16, reported as seen
    return res;
  }

  // Scan: the fastest frequency present is Omega_3, so a step that is a
  // small fraction of its period cannot jump over a minimum.
  const double omega3 = cs.omega[2];
  const double dt = opt.scan_dt > 0.0
                        ? opt.scan_dt
                        : std::min(0.01 * 2.0 * kPi / omega3, 0.05);
  const int n = static_cast<int>(std::ceil(opt.t_max / dt)) + 1;

  std::vector<double> gam(n);
  for (int i = 0; i < n; ++i)
    gam[i] = correlation(w, cs, std::min(i * dt, opt.t_max));

  res.min_t = 0.0;
  res.min_gamma = gam[0];
  auto g_of = [&](double t) { return correlation(w, cs, t); };

  for (int i = 1; i + 1 < n; ++i) {
    if (gam[i] > gam[i - 1] || gam[i] > gam[i + 1]) continue;
    auto [t_star, g_star] =
        golden_section_min(g_of, (i - 1) * dt, (i + 1) * dt, opt.refine_xtol);
    if (g_star < res.min_gamma) {
      res.min_gamma = g_star;
      res.min_t = t_star;
    }
    if (g_star < opt.threshold) {
      res.found = true;
      res.tau = t_star;
      res.gamma_residual = g_star;
      res.method = TauMethod::numeric;
      res.bracket_lo = (i - 1) * dt;
      res.bracket_hi = (i + 1) * dt;
      return res;  // earliest qualifying minimum wins
    }
  }
  return res;  // not found; global-minimum record filled in
}

SpeedLimit speed_limit(const Wavepacket& w, const CoupledSpectrum& cs) {
  double e_mean = 0.0, e_sq = 0.0;
  for (int nu = 1; nu <= 3; ++nu) {
    const double p = w.a[nu] * w.a[nu];
    const double gap = cs.energy[nu] - cs.energy[0];
    e_mean += p * gap;
    e_sq += p * gap * gap;
  }
  if (e_mean == 0.0)
    throw std::invalid_argument(
        "speed_limit: all excited coefficients vanish, bound undefined");
  SpeedLimit sl;
  sl.mean_energy = e_mean;
  sl.energy_spread = std::sqrt(std::max(0.0, e_sq - e_mean * e_mean));
  const double half_pi_hbar = 0.5 * kPi * cs.hbar;
  const double ml = half_pi_hbar / sl.mean_energy;
  const double mt = sl.energy_spread > 0.0
                        ? half_pi_hbar / sl.energy_spread
                        : std::numeric_limits<double>::infinity();
  sl.tau_min = std::max(ml, mt);
  return sl;
}

std::string to_string(TauMethod m) {
  return m == TauMethod::analytic ? "analytic" : "numeric";
}

}  // namespace razavy
