#pragma once

#include <array>
#include <cmath>
#include <random>

#include "razavy/potential.hpp"
#include "razavy/wavepacket.hpp"

namespace testfx {

// Single-well solution at the adopted parameters, solved once per binary.
inline const razavy::SingleWellSolution& well() {
  static const razavy::SingleWellSolution s =
      razavy::solve_single_well(razavy::PotentialParams{});
  return s;
}

// Uniformly random direction on the 3-sphere of real coefficients.
inline razavy::Wavepacket random_packet(std::mt19937& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::array<double, 4> a{};
  double n2 = 0.0;
  do {
    for (double& c : a) c = nd(rng);
    n2 = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
  } while (n2 < 1e-3);
  const double inv = 1.0 / std::sqrt(n2);
  for (double& c : a) c *= inv;
  return razavy::Wavepacket::custom(a);
}

}  // namespace testfx
