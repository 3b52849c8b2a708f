#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace razavy {

// Golden-section search for a minimum of f on [a,b]. Assumes a single minimum
// inside the bracket (our callers always bracket one). Returns {x_min, f_min}.
template <class F>
std::pair<double, double> golden_section_min(const F& f, double a, double b,
                                             double xtol = 1e-10) {
  if (!(a < b)) throw std::invalid_argument("golden_section_min: need a < b");
  constexpr double invphi = 0.6180339887498949;  // 1/phi
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

// Bisection for a root of f on [a,b] with f(a), f(b) of opposite sign.
template <class F>
double bisect_root(const F& f, double a, double b, double xtol = 1e-12) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0))
    throw std::invalid_argument("bisect_root: no sign change on [a,b]");
  while (b - a > xtol) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace razavy
