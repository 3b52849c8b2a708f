#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace razavy {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // accumulated error estimate over accepted intervals
  int intervals = 0;   // number of leaf intervals
  bool converged = true;
};

namespace detail {

// 15-point Kronrod rule with embedded 7-point Gauss rule (nodes on [-1,1]).
// Positive abscissae only; odd indices are the shared Gauss nodes.
inline constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

template <class F>
void kronrod15(const F& f, double a, double b, double& val, double& err) {
  const double mid = 0.5 * (a + b);
  const double hlf = 0.5 * (b - a);
  const double fc = f(mid);
  double res_g = kWg[3] * fc;
  double res_k = kWgk[7] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = hlf * kXgk[i];
    const double fsum = f(mid - dx) + f(mid + dx);
    res_k += kWgk[i] * fsum;
    if (i % 2 == 1) res_g += kWg[i / 2] * fsum;
  }
  val = res_k * hlf;
  err = std::abs((res_k - res_g) * hlf);
}

}  // namespace detail

// Globally adaptive integration of f over [a,b]: bisect the interval with the
// largest Kronrod-Gauss error estimate until the accumulated estimate drops
// below max(abs_tol, rel_tol*|integral|) or the interval budget runs out.
// On budget exhaustion the best estimate is still returned, flagged
// converged = false, so callers can surface the residual.
//
// The range is seeded with several panels, not one: a single 15-point rule
// over a wide range can sample only the tails of a localized integrand and
// report spurious convergence.
template <class F>
QuadResult integrate_adaptive(const F& f, double a, double b,
                              double abs_tol = 1e-10, double rel_tol = 1e-12,
                              int max_intervals = 2000) {
  if (!(a < b)) throw std::invalid_argument("integrate_adaptive: need a < b");
  struct Seg {
    double a, b, val, err;
  };
  std::vector<Seg> segs;
  segs.reserve(64);
  constexpr int kSeedPanels = 8;
  for (int i = 0; i < kSeedPanels; ++i) {
    Seg s{a + (b - a) * i / kSeedPanels, a + (b - a) * (i + 1) / kSeedPanels,
          0.0, 0.0};
    if (i == kSeedPanels - 1) s.b = b;
    detail::kronrod15(f, s.a, s.b, s.val, s.err);
    segs.push_back(s);
  }

  auto totals = [&segs]() {
    double v = 0.0, e = 0.0;
    for (const auto& s : segs) {
      v += s.val;
      e += s.err;
    }
    return std::pair<double, double>(v, e);
  };

  while (true) {
    auto [v, e] = totals();
    if (e <= std::max(abs_tol, rel_tol * std::abs(v))) {
      return {v, e, static_cast<int>(segs.size()), true};
    }
    if (static_cast<int>(segs.size()) >= max_intervals) {
      return {v, e, static_cast<int>(segs.size()), false};
    }
    // split the worst interval
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].err > segs[worst].err) worst = i;
    const Seg w = segs[worst];
    const double m = 0.5 * (w.a + w.b);
    Seg left{w.a, m, 0.0, 0.0}, right{m, w.b, 0.0, 0.0};
    detail::kronrod15(f, left.a, left.b, left.val, left.err);
    detail::kronrod15(f, right.a, right.b, right.val, right.err);
    segs[worst] = left;
    segs.push_back(right);
  }
}

}  // namespace razavy
