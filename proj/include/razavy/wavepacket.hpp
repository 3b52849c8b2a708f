#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "razavy/coupled.hpp"
#include "razavy/potential.hpp"

namespace razavy {

using cplx = std::complex<double>;

enum class Preset { A, B, C, D };

// Initial state expanded over the coupled eigenstates,
// Psi(0) = sum_nu a_nu |E_nu>, with real coefficients.
//
// Presets (a0, a1, a2, a3):
//   A: (1/2, 1/sqrt2, 0, 1/2)   B: (1/sqrt2, 0, 0, 1/sqrt2)
//   C: (1/sqrt2, 1/sqrt2, 0, 0) D: (1/2, 1/2, 1/2, 1/2)
struct Wavepacket {
  std::array<double, 4> a{};
  std::optional<Preset> preset;  // set by the preset factory, empty for custom

  static Wavepacket from_preset(Preset p);
  // Accepts coefficients with |norm - 1| <= 1e-9 and renormalizes exactly;
  // anything farther from unit norm throws std::invalid_argument.
  static Wavepacket custom(const std::array<double, 4>& coeffs);

  double norm_sq() const;
  int nonzero_count() const;  // coefficients with |a_nu| > 0
};

char preset_letter(Preset p);
Preset preset_from_letter(char c);  // throws std::invalid_argument

// Time-evolved amplitudes in the product basis phi_i(x1) phi_j(x2):
//   c00 = a0 cos(th) e^{-i E0 t/hbar} - a3 sin(th) e^{-i E3 t/hbar}
//   c01 = (a1 e^{-i E1 t/hbar} - a2 e^{-i E2 t/hbar})/sqrt2
//   c10 = (a1 e^{-i E1 t/hbar} + a2 e^{-i E2 t/hbar})/sqrt2
//   c11 = a0 sin(th) e^{-i E0 t/hbar} + a3 cos(th) e^{-i E3 t/hbar}
struct BasisAmplitudes {
  cplx c00, c01, c10, c11;
  double norm_sq() const;
};

BasisAmplitudes basis_amplitudes(const Wavepacket& w, const CoupledSpectrum& cs,
                                 double t);

// Uniform square grid for two-particle fields.
struct Grid {
  int n = 201;
  double lo = -3.5;
  double hi = 3.5;

  void validate(double kappa) const;  // n >= 2, lo < hi, inside |x| <= 6/kappa
  std::vector<double> points() const;
  double step() const { return (hi - lo) / (n - 1); }
};

// Psi(x1, x2, t) sampled on grid x grid; psi is row-major with x1 as the slow
// index, density = |psi|^2.
struct PsiField {
  Grid grid;
  double t = 0.0;
  std::vector<cplx> psi;
  std::vector<double> density;

  double norm_trapezoid() const;  // 2D trapezoid of |psi|^2, ~1 on a good grid
};

PsiField psi_grid(const Wavepacket& w, const CoupledSpectrum& cs,
                  const SingleWellSolution& s, double t, const Grid& grid);

// Trapezoid overlap <Psi(0)|Psi(t)> between two sampled fields (same grid).
cplx field_overlap(const PsiField& f0, const PsiField& ft);

}  // namespace razavy
