#pragma once

#include <array>

namespace razavy {

// Model parameters for one particle in the hyperbolic double well
//
//   V(x) = (hbar^2 kappa^2 / 2m) [ (xi^2/8) cosh(4 kappa x)
//                                  - 4 xi cosh(2 kappa x) - xi^2/8 ],
//
// plus the inter-particle coupling strength g used by the two-particle
// Hamiltonian H = h(x1) + h(x2) - g x1 x2.
struct PotentialParams {
  double hbar = 1.0;
  double mass = 1.0;
  double xi = 1.0;     // well-shape parameter (0 < xi < 8 gives a double well)
  double kappa = 1.0;  // inverse length scale
  double g = 0.0;      // coupling strength, >= 0

  // hbar^2 kappa^2 / 2m, the natural energy unit of the closed forms.
  double energy_scale() const {
    return hbar * hbar * kappa * kappa / (2.0 * mass);
  }

  void validate() const;  // throws std::invalid_argument on a bad value
};

// Well geometry: the (positive-x) minimum and the barrier top at x = 0.
struct WellLandmarks {
  double x_min;    // location of the right-hand minimum
  double v_min;    // V(x_min)
  double v_barrier;  // V(0)
};

// One-particle potential. Throws std::domain_error when |4 kappa x| is large
// enough that cosh overflows a double.
double potential(double x, const PotentialParams& p);

// Landmarks found by golden-section minimization of V on [0, 6/kappa]
// (independent of the closed-form location, so tests can cross-check it).
WellLandmarks locate_landmarks(const PotentialParams& p);

// The four quasi-exactly-solvable eigenvalues of the single well, ascending.
std::array<double, 4> single_well_energies(const PotentialParams& p);

// Everything the coupled problem needs from the single well: the two lowest
// eigenvalues, normalization constants of the closed-form eigenfunctions, and
// the transition moment gamma = <phi0| x |phi1>.
struct SingleWellSolution {
  PotentialParams params;
  std::array<double, 4> eps;  // eps_0..eps_3
  double norm0 = 0.0;         // A_0 such that phi_0 = A_0 * raw_0 is unit norm
  double norm1 = 0.0;
  double gamma = 0.0;         // <phi0| x |phi1>, positive by sign convention
  WellLandmarks landmarks{};
};

// Builds the solution; normalizations and gamma come from adaptive quadrature
// over |x| <= 6/kappa (integrands underflow far inside that). Throws
// std::runtime_error with the residual estimate if quadrature stalls.
SingleWellSolution solve_single_well(const PotentialParams& p);

// Normalized eigenfunction phi_n(x), n in {0,1}. Conventions: phi_0 > 0
// everywhere, phi_1 > 0 for x > 0 (hence gamma > 0). Returns 0 where the
// envelope exp(-xi cosh(2 kappa x)/4) underflows.
double eigenfunction(int n, double x, const SingleWellSolution& s);

}  // namespace razavy
