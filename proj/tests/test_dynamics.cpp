#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "razavy/dynamics.hpp"
#include "razavy/entanglement.hpp"

using namespace razavy;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("survival amplitude starts at 1 and stays in [0, 1]") {
  const auto& s = testfx::well();
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> td(0.0, 400.0), gd(0.0, 0.5);
  for (int i = 0; i < 100; ++i) {
    const Wavepacket w = testfx::random_packet(rng);
    const CoupledSpectrum cs = coupled_eigensystem(s, gd(rng));
    CHECK(std::abs(correlation(w, cs, 0.0) - 1.0) < 1e-14);
    const double gam = correlation(w, cs, td(rng));
    CHECK(gam >= 0.0);
    CHECK(gam <= 1.0 + 1e-12);
  }
}

TEST_CASE("twin packet correlation follows |cos(Omega_3 t / 2)|") {
  const auto& s = testfx::well();
  const CoupledSpectrum cs = coupled_eigensystem(s, 0.1);
  const Wavepacket w = Wavepacket::from_preset(Preset::B);
  for (int i = 0; i <= 30; ++i) {
    const double t = 1.7 * i;
    CHECK(std::abs(correlation(w, cs, t) -
                   std::abs(std::cos(0.5 * cs.omega[2] * t))) < 1e-12);
  }
}

TEST_CASE("packets with exact zeros get the analytic first-passage time") {
  const auto& s = testfx::well();
  const CoupledSpectrum cs = coupled_eigensystem(s, 0.1);
  struct Row {
    Preset p;
    int k;  // tau = pi hbar / Omega_k
  };
  const Row rows[] = {{Preset::B, 2}, {Preset::C, 0}, {Preset::D, 1}};
  for (const Row& row : rows) {
    const Wavepacket w = Wavepacket::from_preset(row.p);
    const OrthogonalityResult r = orthogonality_time(w, cs);
    CHECK(r.found);
    CHECK(r.method == TauMethod::analytic);
    CHECK(r.gamma_residual == 0.0);
    CHECK(std::abs(r.tau - kPi * cs.hbar / cs.omega[row.k]) < 1e-12);
    CHECK(correlation(w, cs, r.tau) < 1e-9);

    // the blind scan lands on the same answer
    OrthogonalitySearch numeric;
    numeric.force_numeric = true;
    const OrthogonalityResult n = orthogonality_time(w, cs, numeric);
    CHECK(n.found);
    CHECK(n.method == TauMethod::numeric);
    CHECK(std::abs(n.tau - r.tau) < 1e-6 * r.tau);
    CHECK(n.bracket_lo < n.tau);
    CHECK(n.tau < n.bracket_hi);
  }

  // an equal-weight two-state packet away from the preset patterns
  const Wavepacket two = Wavepacket::custom(
      {1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0), 0.0});
  const OrthogonalityResult r = orthogonality_time(two, cs);
  CHECK(r.method == TauMethod::analytic);
  CHECK(std::abs(r.tau - kPi * cs.hbar / cs.omega[1]) < 1e-12);
}

TEST_CASE("frozen scan results across the preset/coupling table") {
  const auto& s = testfx::well();
  OrthogonalitySearch numeric;
  numeric.force_numeric = true;
  struct Case {
    Preset p;
    double g, tau;
  };
  const Case cases[] = {
      {Preset::A, 0.0, 36.4033718},  {Preset::A, 0.1, 121.2443054},
      {Preset::A, 0.2, 218.2412238}, {Preset::B, 0.0, 18.20168588},
      {Preset::B, 0.1, 10.09070461}, {Preset::B, 0.2, 5.751600282},
      {Preset::C, 0.0, 36.40337176}, {Preset::C, 0.1, 120.3148503},
      {Preset::C, 0.2, 224.5035671}, {Preset::D, 0.0, 36.40337182},
      {Preset::D, 0.1, 11.01447969}, {Preset::D, 0.2, 5.902825921},
  };
  for (const Case& c : cases) {
    const CoupledSpectrum cs = coupled_eigensystem(s, c.g);
    const OrthogonalityResult r =
        orthogonality_time(Wavepacket::from_preset(c.p), cs, numeric);
    CHECK(r.found);
    CHECK(std::abs(r.tau - c.tau) < 1e-4 * c.tau);
    CHECK(r.gamma_residual < 5e-3);
  }
}

TEST_CASE("a dip that stays above a strict threshold is not reported found") {
  const auto& s = testfx::well();
  const CoupledSpectrum cs = coupled_eigensystem(s, 0.2);
  OrthogonalitySearch strict;
  strict.force_numeric = true;
  strict.threshold = 1e-12;
  strict.t_max = 220.0;
  const OrthogonalityResult r =
      orthogonality_time(Wavepacket::from_preset(Preset::A), cs, strict);
  CHECK_FALSE(r.found);
  CHECK(r.tau == 0.0);
  CHECK(r.min_gamma > 1e-3);
  CHECK(r.min_gamma < 5e-3);
  CHECK(std::abs(r.min_t - 218.2412238) < 0.1);
}

TEST_CASE("unequal two-state packets never reach orthogonality") {
  const auto& s = testfx::well();
  const CoupledSpectrum cs = coupled_eigensystem(s, 0.1);
  const Wavepacket w =
      Wavepacket::custom({std::sqrt(0.9), std::sqrt(0.1), 0.0, 0.0});
  const OrthogonalityResult r = orthogonality_time(w, cs);
  CHECK_FALSE(r.found);
  CHECK(r.method == TauMethod::numeric);
  CHECK(std::abs(r.min_gamma - 0.8) < 1e-6);
  CHECK(std::abs(r.min_t - kPi / cs.omega[0]) < 1e-3);
}

TEST_CASE("stationary packets are rejected or bounded honestly") {
  const auto& s = testfx::well();
  const CoupledSpectrum cs = coupled_eigensystem(s, 0.1);
  CHECK_THROWS_AS(orthogonality_time(Wavepacket::custom({1, 0, 0, 0}), cs),
                  std::invalid_argument);
  CHECK_THROWS_AS(orthogonality_time(Wavepacket::custom({0, 0, 1, 0}), cs),
                  std::invalid_argument);
  CHECK_THROWS_AS(speed_limit(Wavepacket::custom({1, 0, 0, 0}), cs),
                  std::invalid_argument);
  // a single excited eigenstate is stationary: zero spread, infinite bound
  const SpeedLimit sl = speed_limit(Wavepacket::custom({0, 1, 0, 0}), cs);
  CHECK(sl.energy_spread == 0.0);
  CHECK(std::isinf(sl.tau_min));
  CHECK(std::abs(sl.mean_energy - cs.hbar * cs.omega[0]) < 1e-15);

  OrthogonalitySearch bad;
  bad.t_max = -1.0;
  CHECK_THROWS_AS(orthogonality_time(Wavepacket::from_preset(Preset::B), cs,
                                     bad),
                  std::invalid_argument);
  OrthogonalitySearch bad2;
  bad2.threshold = 0.0;
  CHECK_THROWS_AS(orthogonality_time(Wavepacket::from_preset(Preset::B), cs,
                                     bad2),
                  std::invalid_argument);
}

TEST_CASE("frozen speed-limit components") {
  const auto& s = testfx::well();
  const CoupledSpectrum cs0 = coupled_eigensystem(s, 0.0);
  const CoupledSpectrum cs1 = coupled_eigensystem(s, 0.1);
  const Wavepacket wa = Wavepacket::from_preset(Preset::A);

  const SpeedLimit a0 = speed_limit(wa, cs0);
  CHECK(std::abs(a0.mean_energy - 0.08629949650428603) < 1e-12);
  CHECK(std::abs(a0.energy_spread - 0.0610229592) < 1e-9);
  CHECK(std::abs(a0.tau_min - 25.741071) < 1e-5);
  // the spread term is the binding one here
  CHECK(std::abs(a0.tau_min - 0.5 * kPi / a0.energy_spread) < 1e-12);

  const SpeedLimit a1 = speed_limit(wa, cs1);
  CHECK(std::abs(a1.mean_energy - 0.0908895421) < 1e-9);
  CHECK(std::abs(a1.energy_spread - 0.127720059) < 1e-8);
  CHECK(std::abs(a1.tau_min - 17.282476) < 1e-5);
  // here the mean-energy term binds instead
  CHECK(std::abs(a1.tau_min - 0.5 * kPi / a1.mean_energy) < 1e-12);

  // equal-weight pair: mean and spread coincide, bound equals the passage time
  const SpeedLimit b1 = speed_limit(Wavepacket::from_preset(Preset::B), cs1);
  CHECK(std::abs(b1.mean_energy - b1.energy_spread) < 1e-15);
  CHECK(std::abs(b1.tau_min - 10.0907046) < 1e-6);
}

TEST_CASE("bound saturation ratios") {
  const auto& s = testfx::well();
  for (double g : {0.0, 0.03, 0.1, 0.2}) {
    const CoupledSpectrum cs = coupled_eigensystem(s, g);
    for (Preset p : {Preset::B, Preset::C}) {
      const Wavepacket w = Wavepacket::from_preset(p);
      const double ratio =
          orthogonality_time(w, cs).tau / speed_limit(w, cs).tau_min;
      CHECK(std::abs(ratio - 1.0) < 1e-12);
    }
  }
  const Wavepacket wd = Wavepacket::from_preset(Preset::D);
  const CoupledSpectrum cs0 = coupled_eigensystem(s, 0.0);
  const double r0 =
      orthogonality_time(wd, cs0).tau / speed_limit(wd, cs0).tau_min;
  CHECK(std::abs(r0 - std::sqrt(2.0)) < 1e-9);
  const CoupledSpectrum cs1 = coupled_eigensystem(s, 0.1);
  const double r1 =
      orthogonality_time(wd, cs1).tau / speed_limit(wd, cs1).tau_min;
  CHECK(std::abs(r1 - 1.0041817) < 1e-6);
}

TEST_CASE("no found passage undercuts the speed limit") {
  const auto& s = testfx::well();
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> gd(0.0, 0.4);
  // exact-zero packets must sit on or above the bound to near-roundoff
  for (double g : {0.05, 0.1, 0.15, 0.2}) {
    const CoupledSpectrum cs = coupled_eigensystem(s, g);
    for (Preset p : {Preset::B, Preset::C, Preset::D}) {
      const Wavepacket w = Wavepacket::from_preset(p);
      const OrthogonalityResult r = orthogonality_time(w, cs);
      CHECK(r.tau >= speed_limit(w, cs).tau_min * (1.0 - 1e-9));
    }
  }
  // random packets: allow slack of the detection threshold, since a dip is
  // accepted once Gamma < 5e-3 rather than at an exact zero
  for (int i = 0; i < 40; ++i) {
    const Wavepacket w = testfx::random_packet(rng);
    const CoupledSpectrum cs = coupled_eigensystem(s, gd(rng));
    const OrthogonalityResult r = orthogonality_time(w, cs);
    if (!r.found) continue;
    CHECK(r.tau >= speed_limit(w, cs).tau_min * (1.0 - 5e-3));
  }
}

TEST_CASE("twin-packet identity links tau to both concurrence measures") {
  const auto& s = testfx::well();
  const Wavepacket wb = Wavepacket::from_preset(Preset::B);
  for (int i = 0; i <= 10; ++i) {
    const double g = 0.02 * i;
    const CoupledSpectrum cs = coupled_eigensystem(s, g);
    const double tau = orthogonality_time(wb, cs).tau;
    const double cav = concurrence_average(wb, cs).c_rms;
    const double c0 = concurrence_initial(wb, cs);
    const double k = kPi / (2.0 * cs.delta);
    CHECK(std::abs(tau - k * std::sqrt(std::max(0.0, 2.0 * cav * cav - 1.0))) <
          1e-6 * tau);
    CHECK(std::abs(tau - k * c0) < 1e-6 * tau);
  }
}
