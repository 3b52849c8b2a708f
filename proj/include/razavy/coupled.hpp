#pragma once

#include <array>

#include "razavy/potential.hpp"

namespace razavy {

using Mat4 = std::array<std::array<double, 4>, 4>;

// Two-particle Hamiltonian restricted to span{phi_i(x1) phi_j(x2)}, i,j in
// {0,1}, basis order (00, 01, 10, 11). Diagonal carries the uncoupled sums;
// the coupling -g x1 x2 only connects 00<->11 and 01<->10 (parity), each with
// matrix element -g gamma^2.
Mat4 energy_matrix(const SingleWellSolution& s, double g);

// Closed-form eigensystem of that 4x4 matrix.
//
//   E0 = eps - sqrt(delta^2 + g^2 gamma^4)   (ground)
//   E1 = eps - g gamma^2
//   E2 = eps + g gamma^2
//   E3 = eps + sqrt(delta^2 + g^2 gamma^4)
//
// with eps = eps0 + eps1, delta = eps1 - eps0, and mixing angle
// theta = atan2(g gamma^2, delta)/2 in [0, pi/4). Eigenvectors in the
// product basis:
//
//   |E0> = cos(theta)|00> + sin(theta)|11>
//   |E1> = (|01> + |10>)/sqrt(2)
//   |E2> = (-|01> + |10>)/sqrt(2)
//   |E3> = -sin(theta)|00> + cos(theta)|11>
struct CoupledSpectrum {
  std::array<double, 4> energy;   // E0..E3, ascending for g >= 0
  double theta = 0.0;             // mixing angle
  std::array<double, 3> omega;    // transition frequencies (E_nu - E0)/hbar
  double eps_sum = 0.0;           // eps0 + eps1
  double delta = 0.0;             // eps1 - eps0
  double g = 0.0;
  double hbar = 1.0;

  // Exactly degenerate pair E1 == E2 (and theta == 0) at g == 0; a tolerance
  // guard catches the numerically indistinguishable case.
  bool degenerate() const;

  std::array<std::array<double, 4>, 4> eigenvectors() const;  // rows = |E_nu>
};

// Assembles the coupled spectrum from the single-well solution. g must be
// >= 0 (the matrix itself is fine with g < 0, but the eigenvalue ordering and
// theta branch here assume the repulsive-coupling sign convention).
CoupledSpectrum coupled_eigensystem(const SingleWellSolution& s, double g);

}  // namespace razavy
