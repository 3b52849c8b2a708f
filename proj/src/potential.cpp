#include "razavy/potential.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "razavy/optimize.hpp"
#include "razavy/quadrature.hpp"

namespace razavy {
namespace {

// cosh(x) overflows a double just above x = 710.
constexpr double kCoshArgMax = 700.0;

// Polynomial prefactors of the closed-form eigenfunctions. Both are positive
// for every xi > 0 (2 sqrt(xi^2 -+ 2 xi + 4) > |xi -+ 4|), which pins the
// global signs: raw0 > 0 everywhere, raw1 > 0 for x > 0.
double coeff0(double xi) {
  return 4.0 - xi + 2.0 * std::sqrt(4.0 - 2.0 * xi + xi * xi);
}
double coeff1(double xi) {
  return 4.0 + xi + 2.0 * std::sqrt(4.0 + 2.0 * xi + xi * xi);
}

// Unnormalized eigenfunctions in the dimensionless coordinate y = kappa x.
// The Gaussian-like envelope underflows long before the cosh factors
// overflow, so a single guard on the exponent suffices.
double raw_eigenfunction(int n, double y, double xi) {
  const double u = 0.25 * xi * std::cosh(2.0 * y);
  if (u > kCoshArgMax) return 0.0;
  const double env = std::exp(-u);
  if (n == 0) return env * (3.0 * xi * std::cosh(y) + coeff0(xi) * std::cosh(3.0 * y));
  return env * (3.0 * xi * std::sinh(y) + coeff1(xi) * std::sinh(3.0 * y));
}

template <class F>
double integrate_or_throw(const char* what, double lo, double hi, const F& f) {
  const QuadResult r = integrate_adaptive(f, lo, hi, 1e-10, 1e-12);
  if (!r.converged) {
    std::ostringstream msg;
    msg << what << ": quadrature did not converge (error estimate " << r.error
        << " after " << r.intervals << " intervals)";
    throw std::runtime_error(msg.str());
  }
  return r.value;
}

}  // namespace

void PotentialParams::validate() const {
  auto bad = [](const char* what) {
    throw std::invalid_argument(std::string("PotentialParams: ") + what);
  };
  if (!(hbar > 0.0)) bad("hbar must be > 0");
  if (!(mass > 0.0)) bad("mass must be > 0");
  if (!(xi > 0.0)) bad("xi must be > 0");
  if (!(kappa > 0.0)) bad("kappa must be > 0");
  if (!(g >= 0.0)) bad("g must be >= 0");
}

double potential(double x, const PotentialParams& p) {
  p.validate();
  const double y = p.kappa * x;
  if (std::abs(4.0 * y) > kCoshArgMax)
    throw std::domain_error("potential: |4 kappa x| too large, cosh overflows");
  const double xi = p.xi;
  return p.energy_scale() *
         (xi * xi / 8.0 * std::cosh(4.0 * y) - 4.0 * xi * std::cosh(2.0 * y) -
          xi * xi / 8.0);
}

WellLandmarks locate_landmarks(const PotentialParams& p) {
  p.validate();
  // V is even, falls to the minimum and rises again along x > 0 (single
  // stationary point at cosh(2 kappa x) = 8/xi when xi < 8, else none), so a
  // bracket [0, 6/kappa] is unimodal and golden-section is safe.
  const double hi = 6.0 / p.kappa;
  auto v = [&p](double x) { return potential(x, p); };
  auto [x_min, v_min] = golden_section_min(v, 0.0, hi, 1e-11 / p.kappa);
  WellLandmarks lm;
  lm.x_min = x_min;
  lm.v_min = v_min;
  lm.v_barrier = potential(0.0, p);
  return lm;
}

std::array<double, 4> single_well_energies(const PotentialParams& p) {
  p.validate();
  const double xi = p.xi;
  const double rm = 2.0 * std::sqrt(4.0 - 2.0 * xi + xi * xi);
  const double rp = 2.0 * std::sqrt(4.0 + 2.0 * xi + xi * xi);
  const double scale = p.energy_scale();
  return {scale * (-xi - 5.0 - rm), scale * (xi - 5.0 - rp),
          scale * (-xi - 5.0 + rm), scale * (xi - 5.0 + rp)};
}

SingleWellSolution solve_single_well(const PotentialParams& p) {
  p.validate();
  SingleWellSolution s;
  s.params = p;
  s.eps = single_well_energies(p);
  s.landmarks = locate_landmarks(p);

  const double L = 6.0 / p.kappa;
  const double xi = p.xi;
  const double k = p.kappa;

  auto sq0 = [xi, k](double x) {
    const double r = raw_eigenfunction(0, k * x, xi);
    return r * r;
  };
  auto sq1 = [xi, k](double x) {
    const double r = raw_eigenfunction(1, k * x, xi);
    return r * r;
  };
  s.norm0 = 1.0 / std::sqrt(integrate_or_throw("norm of phi_0", -L, L, sq0));
  s.norm1 = 1.0 / std::sqrt(integrate_or_throw("norm of phi_1", -L, L, sq1));

  const double a0 = s.norm0, a1 = s.norm1;
  auto moment = [xi, k, a0, a1](double x) {
    return a0 * raw_eigenfunction(0, k * x, xi) * x * a1 *
           raw_eigenfunction(1, k * x, xi);
  };
  s.gamma = integrate_or_throw("gamma = <phi0|x|phi1>", -L, L, moment);
  return s;
}

double eigenfunction(int n, double x, const SingleWellSolution& s) {
  if (n != 0 && n != 1)
    throw std::invalid_argument(
        "eigenfunction: only n = 0, 1 have closed forms here");
  const double norm = (n == 0) ? s.norm0 : s.norm1;
  return norm * raw_eigenfunction(n, s.params.kappa * x, s.params.xi);
}

}  // namespace razavy
