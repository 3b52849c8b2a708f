#include "razavy/coupled.hpp"

#include <cmath>
#include <stdexcept>

namespace razavy {

Mat4 energy_matrix(const SingleWellSolution& s, double g) {
  if (!(g >= 0.0))
    throw std::invalid_argument("energy_matrix: coupling g must be >= 0");
  const double e0 = s.eps[0], e1 = s.eps[1];
  const double v = g * s.gamma * s.gamma;
  // basis order: |00>, |01>, |10>, |11>
  Mat4 m{};
  m[0][0] = 2.0 * e0;
  m[1][1] = e0 + e1;
  m[2][2] = e0 + e1;
  m[3][3] = 2.0 * e1;
  m[0][3] = m[3][0] = -v;  // -g <00| x1 x2 |11> = -g gamma^2
  m[1][2] = m[2][1] = -v;
  return m;
}

CoupledSpectrum coupled_eigensystem(const SingleWellSolution& s, double g) {
  if (!(g >= 0.0))
    throw std::invalid_argument("coupled_eigensystem: coupling g must be >= 0");
  CoupledSpectrum cs;
  cs.g = g;
  cs.hbar = s.params.hbar;
  cs.eps_sum = s.eps[0] + s.eps[1];
  cs.delta = s.eps[1] - s.eps[0];
  const double v = g * s.gamma * s.gamma;
  const double root = std::hypot(cs.delta, v);
  cs.energy = {cs.eps_sum - root, cs.eps_sum - v, cs.eps_sum + v,
               cs.eps_sum + root};
  // atan2 keeps the branch right at g = 0 (theta = 0) and would extend past
  // pi/4 only if delta went negative, which the level ordering forbids.
  cs.theta = 0.5 * std::atan2(v, cs.delta);
  for (int nu = 1; nu <= 3; ++nu)
    cs.omega[nu - 1] = (cs.energy[nu] - cs.energy[0]) / cs.hbar;
  return cs;
}

bool CoupledSpectrum::degenerate() const {
  if (g == 0.0) return true;
  // guard against couplings so small the split drowns in roundoff
  return (energy[2] - energy[1]) <= 1e-14 * (energy[3] - energy[0]);
}

std::array<std::array<double, 4>, 4> CoupledSpectrum::eigenvectors() const {
  const double c = std::cos(theta), s = std::sin(theta);
  const double r = 1.0 / std::sqrt(2.0);
  return {{{c, 0.0, 0.0, s},
           {0.0, r, r, 0.0},
           {0.0, -r, r, 0.0},
           {-s, 0.0, 0.0, c}}};
}

}  // namespace razavy
