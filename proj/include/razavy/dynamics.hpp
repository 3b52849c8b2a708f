#pragma once

#include <string>

#include "razavy/wavepacket.hpp"

namespace razavy {

// Survival amplitude modulus Gamma(t) = |<Psi(0)|Psi(t)>|
//                                     = |a0^2 + sum_nu a_nu^2 e^{-i Omega_nu t}|.
double correlation(const Wavepacket& w, const CoupledSpectrum& cs, double t);

struct OrthogonalitySearch {
  double t_max = 400.0;
  double scan_dt = 0.0;      // 0 -> auto: min(0.01 * 2pi/Omega_3, 0.05)
  double threshold = 5e-3;   // Gamma below this counts as orthogonal
  double refine_xtol = 1e-10;
  bool force_numeric = false;  // skip the analytic fast paths (cross-checks)
};

enum class TauMethod { analytic, numeric };

struct OrthogonalityResult {
  bool found = false;
  double tau = 0.0;             // earliest time with Gamma(tau) < threshold
  double gamma_residual = 0.0;  // Gamma at tau (0 for exact analytic zeros)
  TauMethod method = TauMethod::numeric;
  double bracket_lo = 0.0, bracket_hi = 0.0;  // refinement bracket (numeric)
  // Global minimum over the scan window; the answer when found == false.
  double min_t = 0.0;
  double min_gamma = 1.0;
};

// Earliest orthogonality time. Analytic fast paths cover the cases with exact
// closed-form zeros:
//   - only {a0, a_k} nonzero with |a0| == |a_k|:       tau = pi hbar / Omega_k
//   - preset B pattern (r, 0, 0, r):                   tau = pi hbar / Omega_3
//   - preset C pattern (r, r, 0, 0):                   tau = pi hbar / Omega_1
//   - preset D pattern (equal weights):                tau = pi hbar / Omega_2
// Everything else scans Gamma on [0, t_max], golden-sections each local
// minimum, and accepts the earliest one below the threshold. A state with
// fewer than two nonzero coefficients is stationary and throws
// std::invalid_argument.
OrthogonalityResult orthogonality_time(const Wavepacket& w,
                                       const CoupledSpectrum& cs,
                                       const OrthogonalitySearch& opt = {});

struct SpeedLimit {
  double mean_energy = 0.0;    // E = sum |a_nu|^2 (E_nu - E0)
  double energy_spread = 0.0;  // sqrt(sum |a_nu|^2 (E_nu - E0)^2 - E^2)
  double tau_min = 0.0;        // max(pi hbar / 2E, pi hbar / 2 dE)
};

// Unified Mandelstam-Tamm / Margolus-Levitin bound. Throws
// std::invalid_argument when every excited coefficient vanishes (ground
// state: no evolution, bound undefined). A single excited eigenstate has
// dE = 0; the MT term is then +inf, which is the honest bound (the state is
// stationary and never reaches an orthogonal one).
SpeedLimit speed_limit(const Wavepacket& w, const CoupledSpectrum& cs);

std::string to_string(TauMethod m);

}  // namespace razavy
