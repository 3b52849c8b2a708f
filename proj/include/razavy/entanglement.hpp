#pragma once

#include "razavy/dynamics.hpp"
#include "razavy/wavepacket.hpp"

namespace razavy {

// Two-qubit concurrence of the state restricted to span{phi0, phi1} per
// particle: C = 2 |c00 c11 - c01 c10|. Two equivalent routes are exposed so
// they can cross-check each other.

// From explicit basis amplitudes (the "determinant" route).
double concurrence_from_amplitudes(const BasisAmplitudes& amps);

// Closed form in eigenbasis data (the "spectral" route):
//   C(t) = | (a0^2 - a3^2 e^{-2i Omega3 t}) sin(2 theta)
//           + 2 a0 a3 cos(2 theta) e^{-i Omega3 t}
//           - a1^2 e^{-2i Omega1 t} + a2^2 e^{-2i Omega2 t} |
double concurrence_at(const Wavepacket& w, const CoupledSpectrum& cs, double t);

// C at t = 0 (real coefficients):
//   | (a0^2 - a3^2) sin 2theta + 2 a0 a3 cos 2theta - a1^2 + a2^2 |
double concurrence_initial(const Wavepacket& w, const CoupledSpectrum& cs);

enum class AverageMethod { closed_form, numeric, constant };

struct ConcurrenceAverages {
  double c_rms = 0.0;       // sqrt(<C^2>): "C_av"
  double c_mean = 0.0;      // <C>
  AverageMethod rms_method = AverageMethod::numeric;
  double window = 0.0;      // averaging window length actually used
};

// Long-time averages.
//
// c_rms: for g > 0 all five oscillation frequencies {0, 2*Om1, 2*Om2, Om3,
// 2*Om3} are distinct, so Parseval gives the closed form
//   <C^2> = a0^4 sin^2 2th + a1^4 + a2^4 + 4 a0^2 a3^2 cos^2 2th
//           + a3^4 sin^2 2th,
// used for presets; at g == 0 C(t) = |2 a0 a3 + a2^2 - a1^2| is constant
// (resonance branch; note the g -> 0+ limit differs: the averages are
// discontinuous at g = 0). Custom packets get the numeric average.
//
// c_mean: always numeric (no elementary closed form). The window is
// min(2000 * 2pi/Omega_3, 1e5), floored to a whole number of periods of the
// slowest beat among {2 Om1, 2 Om2, Om3, 2 Om3, Om2 - Om1, 2(Om2 - Om1)} so
// the trapezoid average has no partial-period leakage.
ConcurrenceAverages concurrence_average(const Wavepacket& w,
                                        const CoupledSpectrum& cs);

// The generic-g Parseval expression above, exposed for cross-checks.
double concurrence_rms_closed(const Wavepacket& w, const CoupledSpectrum& cs);

std::string to_string(AverageMethod m);

}  // namespace razavy
