#include "razavy/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace razavy {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double concurrence_from_amplitudes(const BasisAmplitudes& b) {
  return 2.0 * std::abs(b.c00 * b.c11 - b.c01 * b.c10);
}

double concurrence_at(const Wavepacket& w, const CoupledSpectrum& cs,
                      double t) {
  const double s2 = std::sin(2.0 * cs.theta), c2 = std::cos(2.0 * cs.theta);
  const auto& a = w.a;
  const cplx z1 = std::polar(1.0, -cs.omega[0] * t);
  const cplx z2 = std::polar(1.0, -cs.omega[1] * t);
  const cplx z3 = std::polar(1.0, -cs.omega[2] * t);
  const cplx det = (a[0] * a[0] - a[3] * a[3] * z3 * z3) * s2 +
                   2.0 * a[0] * a[3] * c2 * z3 - a[1] * a[1] * z1 * z1 +
                   a[2] * a[2] * z2 * z2;
  return std::abs(det);
}

double concurrence_initial(const Wavepacket& w, const CoupledSpectrum& cs) {
  const double s2 = std::sin(2.0 * cs.theta), c2 = std::cos(2.0 * cs.theta);
  const auto& a = w.a;
  return std::abs((a[0] * a[0] - a[3] * a[3]) * s2 + 2.0 * a[0] * a[3] * c2 -
                  a[1] * a[1] + a[2] * a[2]);
}

double concurrence_rms_closed(const Wavepacket& w, const CoupledSpectrum& cs) {
  // Parseval over the five distinct oscillation frequencies of the
  // determinant (valid for any real packet once g > 0 splits them all).
  const double s2 = std::sin(2.0 * cs.theta), c2 = std::cos(2.0 * cs.theta);
  const auto& a = w.a;
  const double p0 = a[0] * a[0], p1 = a[1] * a[1], p2 = a[2] * a[2],
               p3 = a[3] * a[3];
  return std::sqrt(p0 * p0 * s2 * s2 + p1 * p1 + p2 * p2 +
                   4.0 * p0 * p3 * c2 * c2 + p3 * p3 * s2 * s2);
}

namespace {

struct AvgWindow {
  double length;
  int samples;
};

// Averaging window: long enough to wash out the slowest beat, and floored to
// a whole number of its periods so the trapezoid average carries no
// partial-period leakage.
AvgWindow averaging_window(const CoupledSpectrum& cs) {
  const double om1 = cs.omega[0], om2 = cs.omega[1], om3 = cs.omega[2];
  double t_len = std::min(2000.0 * 2.0 * kPi / om3, 1e5);
  const double beats[] = {2.0 * om1,  2.0 * om2,        om3,
                          2.0 * om3,  om2 - om1,        2.0 * (om2 - om1)};
  double slowest = om3;
  for (double b : beats)
    if (b > 0.0) slowest = std::min(slowest, b);
  const double period = 2.0 * kPi / slowest;
  if (t_len > period) t_len = std::floor(t_len / period) * period;
  const int n = static_cast<int>(std::ceil(t_len / 0.05)) + 1;
  return {t_len, n};
}

}  // namespace

ConcurrenceAverages concurrence_average(const Wavepacket& w,
                                        const CoupledSpectrum& cs) {
  ConcurrenceAverages out;
  if (cs.degenerate()) {
    // all phases lock: C(t) = |2 a0 a3 + a2^2 - a1^2| for all t
    const double c = concurrence_initial(w, cs);
    out.c_rms = c;
    out.c_mean = c;
    out.rms_method = AverageMethod::constant;
    out.window = 0.0;
    return out;
  }

  const AvgWindow win = averaging_window(cs);
  const double dt = win.length / (win.samples - 1);
  double sum_c = 0.0, sum_c2 = 0.0;
  for (int i = 0; i < win.samples; ++i) {
    const double c = concurrence_at(w, cs, i * dt);
    const double wgt = (i == 0 || i == win.samples - 1) ? 0.5 : 1.0;
    sum_c += wgt * c;
    sum_c2 += wgt * c * c;
  }
  const double denom = win.samples - 1;
  out.c_mean = sum_c / denom;
  out.window = win.length;
  if (w.preset.has_value()) {
    out.c_rms = concurrence_rms_closed(w, cs);
    out.rms_method = AverageMethod::closed_form;
  } else {
    out.c_rms = std::sqrt(sum_c2 / denom);
    out.rms_method = AverageMethod::numeric;
  }
  return out;
}

std::string to_string(AverageMethod m) {
  switch (m) {
    case AverageMethod::closed_form: return "closed_form";
    case AverageMethod::numeric: return "numeric";
    case AverageMethod::constant: return "constant";
  }
  return "?";
}

}  // namespace razavy
