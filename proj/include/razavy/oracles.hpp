#pragma once

#include <array>
#include <vector>

#include "razavy/coupled.hpp"
#include "razavy/potential.hpp"

namespace razavy {

// Independent numerical checks for the closed forms: a banded
// finite-difference eigensolver for the single well and a dense 4x4
// eigensolver for the coupled matrix (both via LAPACK).

struct FdConfig {
  double half_width = 6.0;  // domain [-L, L], Dirichlet walls
  int points = 2001;        // grid points including the walls
  int stencil_order = 2;    // 2 (tridiagonal) or 4 (pentadiagonal)

  void validate(const PotentialParams& p) const;  // N >= 501, L >= 5/kappa, ...
  double step() const { return 2.0 * half_width / (points - 1); }
};

struct FdEigenpairs {
  std::vector<double> x;                    // interior grid points
  std::vector<double> energies;             // lowest k eigenvalues, ascending
  std::vector<std::vector<double>> states;  // unit-L2-norm, sign-fixed
};

// Lowest n_states eigenpairs of -hbar^2/2m d^2/dx^2 + V on the grid.
// Sign convention matches the closed forms: phi_0 > 0 at the right minimum,
// phi_1 > 0 there too. Throws std::runtime_error if LAPACK fails to converge.
FdEigenpairs fd_eigenpairs(const PotentialParams& p, const FdConfig& cfg,
                           int n_states);

// Trapezoid <phi_0| x |phi_1> on the FD grid.
double fd_overlap_gamma(const FdEigenpairs& e);

// L2 distance (trapezoid) between an FD state and the analytic phi_n.
double fd_vs_analytic_l2(const FdEigenpairs& e, int n,
                         const SingleWellSolution& s);

// Eigenvalues of a symmetric 4x4 via LAPACK dsyev, ascending.
std::array<double, 4> symmetric4_eigenvalues(const Mat4& m);

// Harmonic-oscillator self-test: lowest n_states energies of
// -1/2 d^2/dx^2 + x^2/2 (exact: n + 1/2), for validating the FD solver
// against something that is not the double well.
std::vector<double> fd_harmonic_levels(const FdConfig& cfg, int n_states);

}  // namespace razavy
