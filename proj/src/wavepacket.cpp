#include "razavy/wavepacket.hpp"

#include <cmath>
#include <stdexcept>

namespace razavy {
namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

std::array<double, 4> preset_coeffs(Preset p) {
  switch (p) {
    case Preset::A: return {0.5, kInvSqrt2, 0.0, 0.5};
    case Preset::B: return {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    case Preset::C: return {kInvSqrt2, kInvSqrt2, 0.0, 0.0};
    case Preset::D: return {0.5, 0.5, 0.5, 0.5};
  }
  throw std::logic_error("preset_coeffs: unreachable");
}

}  // namespace

Wavepacket Wavepacket::from_preset(Preset p) {
  Wavepacket w;
  w.a = preset_coeffs(p);
  w.preset = p;
  return w;
}

Wavepacket Wavepacket::custom(const std::array<double, 4>& coeffs) {
  double n2 = 0.0;
  for (double c : coeffs) n2 += c * c;
  if (std::abs(n2 - 1.0) > 1e-9)
    throw std::invalid_argument(
        "Wavepacket: coefficients must be unit-norm within 1e-9");
  Wavepacket w;
  const double inv = 1.0 / std::sqrt(n2);
  for (int i = 0; i < 4; ++i) w.a[i] = coeffs[i] * inv;
  return w;
}

double Wavepacket::norm_sq() const {
  double n2 = 0.0;
  for (double c : a) n2 += c * c;
  return n2;
}

int Wavepacket::nonzero_count() const {
  int n = 0;
  for (double c : a)
    if (c != 0.0) ++n;
  return n;
}

char preset_letter(Preset p) { return "ABCD"[static_cast<int>(p)]; }

Preset preset_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Preset::A;
    case 'B': case 'b': return Preset::B;
    case 'C': case 'c': return Preset::C;
    case 'D': case 'd': return Preset::D;
  }
  throw std::invalid_argument(std::string("unknown preset '") + c +
                              "' (expected A, B, C or D)");
}

double BasisAmplitudes::norm_sq() const {
  return std::norm(c00) + std::norm(c01) + std::norm(c10) + std::norm(c11);
}

BasisAmplitudes basis_amplitudes(const Wavepacket& w, const CoupledSpectrum& cs,
                                 double t) {
  const double ct = std::cos(cs.theta), st = std::sin(cs.theta);
  std::array<cplx, 4> ph;  // e^{-i E_nu t / hbar}
  for (int nu = 0; nu < 4; ++nu)
    ph[nu] = std::polar(1.0, -cs.energy[nu] * t / cs.hbar);
  BasisAmplitudes b;
  b.c00 = w.a[0] * ct * ph[0] - w.a[3] * st * ph[3];
  b.c01 = (w.a[1] * ph[1] - w.a[2] * ph[2]) * kInvSqrt2;
  b.c10 = (w.a[1] * ph[1] + w.a[2] * ph[2]) * kInvSqrt2;
  b.c11 = w.a[0] * st * ph[0] + w.a[3] * ct * ph[3];
  return b;
}

void Grid::validate(double kappa) const {
  if (n < 2) throw std::invalid_argument("Grid: need at least 2 points");
  if (!(lo < hi)) throw std::invalid_argument("Grid: need lo < hi");
  const double limit = 6.0 / kappa;
  if (lo < -limit || hi > limit)
    throw std::invalid_argument(
        "Grid: bounds outside the eigenfunction domain |x| <= 6/kappa");
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(n);
  const double h = step();
  for (int i = 0; i < n; ++i) xs[i] = lo + h * i;
  xs.back() = hi;  // exact endpoint regardless of rounding
  return xs;
}

PsiField psi_grid(const Wavepacket& w, const CoupledSpectrum& cs,
                  const SingleWellSolution& s, double t, const Grid& grid) {
  grid.validate(s.params.kappa);
  const BasisAmplitudes b = basis_amplitudes(w, cs, t);
  const std::vector<double> xs = grid.points();
  const int n = grid.n;

  std::vector<double> f0(n), f1(n);
  for (int i = 0; i < n; ++i) {
    f0[i] = eigenfunction(0, xs[i], s);
    f1[i] = eigenfunction(1, xs[i], s);
  }

  PsiField field;
  field.grid = grid;
  field.t = t;
  field.psi.resize(static_cast<std::size_t>(n) * n);
  field.density.resize(field.psi.size());
  for (int i = 0; i < n; ++i) {       // x1 (slow index)
    for (int j = 0; j < n; ++j) {     // x2
      const cplx v = b.c00 * (f0[i] * f0[j]) + b.c01 * (f0[i] * f1[j]) +
                     b.c10 * (f1[i] * f0[j]) + b.c11 * (f1[i] * f1[j]);
      const std::size_t k = static_cast<std::size_t>(i) * n + j;
      field.psi[k] = v;
      field.density[k] = std::norm(v);
    }
  }
  return field;
}

namespace {

// 2D trapezoid weights: h^2, halved on each boundary line.
double trap_weight(int i, int j, int n, double h) {
  double w = h * h;
  if (i == 0 || i == n - 1) w *= 0.5;
  if (j == 0 || j == n - 1) w *= 0.5;
  return w;
}

}  // namespace

double PsiField::norm_trapezoid() const {
  const int n = grid.n;
  const double h = grid.step();
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      acc += trap_weight(i, j, n, h) * density[static_cast<std::size_t>(i) * n + j];
  return acc;
}

cplx field_overlap(const PsiField& f0, const PsiField& ft) {
  if (f0.grid.n != ft.grid.n || f0.grid.lo != ft.grid.lo ||
      f0.grid.hi != ft.grid.hi)
    throw std::invalid_argument("field_overlap: grids differ");
  const int n = f0.grid.n;
  const double h = f0.grid.step();
  cplx acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * n + j;
      acc += trap_weight(i, j, n, h) * std::conj(f0.psi[k]) * ft.psi[k];
    }
  return acc;
}

}  // namespace razavy
