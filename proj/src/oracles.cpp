#include "razavy/oracles.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace razavy {
namespace {

// Lowest eigenpairs of the banded FD Hamiltonian on the interior grid
// (Dirichlet walls). v holds the potential at the m interior points, t is
// hbar^2/(2 mass h^2). LAPACK lower-banded column-major storage:
// ab[col*ldab + (row-col)] for 0 <= row-col <= kd.
struct BandedResult {
  std::vector<double> energies;
  std::vector<std::vector<double>> vectors;  // unit 2-norm
};

BandedResult banded_lowest(const std::vector<double>& v, double t, int order,
                           int n_states) {
  const lapack_int m = static_cast<lapack_int>(v.size());
  const lapack_int kd = (order == 2) ? 1 : 2;
  const lapack_int ldab = kd + 1;

  std::vector<double> ab(static_cast<std::size_t>(ldab) * m, 0.0);
  for (lapack_int j = 0; j < m; ++j) {
    if (order == 2) {
      ab[j * ldab + 0] = 2.0 * t + v[j];
      if (j + 1 < m) ab[j * ldab + 1] = -t;
    } else {
      ab[j * ldab + 0] = 2.5 * t + v[j];
      if (j + 1 < m) ab[j * ldab + 1] = -(4.0 / 3.0) * t;
      if (j + 2 < m) ab[j * ldab + 2] = t / 12.0;
    }
  }

  std::vector<double> q(static_cast<std::size_t>(m) * m);
  std::vector<double> w(m), z(static_cast<std::size_t>(m) * n_states);
  std::vector<lapack_int> ifail(m);
  lapack_int found = 0;
  const double abstol = 2.0 * LAPACKE_dlamch('S');
  const lapack_int info = LAPACKE_dsbevx(
      LAPACK_COL_MAJOR, 'V', 'I', 'L', m, kd, ab.data(), ldab, q.data(), m,
      0.0, 0.0, 1, n_states, abstol, &found, w.data(), z.data(), m,
      ifail.data());
  if (info != 0 || found < n_states)
    throw std::runtime_error("banded eigensolver failed, LAPACK info = " +
                             std::to_string(info));

  BandedResult out;
  out.energies.assign(w.begin(), w.begin() + n_states);
  out.vectors.resize(n_states);
  for (int s = 0; s < n_states; ++s)
    out.vectors[s].assign(z.begin() + static_cast<std::size_t>(s) * m,
                          z.begin() + static_cast<std::size_t>(s + 1) * m);
  return out;
}

// Flip signs so each state is positive where it is largest on x > 0; for the
// node-at-zero pair this reproduces the closed-form convention.
void fix_signs(FdEigenpairs& e) {
  for (auto& st : e.states) {
    double best = 0.0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < st.size(); ++i) {
      if (e.x[i] <= 0.0) continue;
      if (std::abs(st[i]) > best) {
        best = std::abs(st[i]);
        at = i;
      }
    }
    if (st[at] < 0.0)
      for (double& u : st) u = -u;
  }
}

}  // namespace

void FdConfig::validate(const PotentialParams& p) const {
  if (points < 501)
    throw std::invalid_argument("FdConfig: need at least 501 grid points");
  if (!(half_width >= 5.0 / p.kappa))
    throw std::invalid_argument("FdConfig: domain must reach 5/kappa");
  if (stencil_order != 2 && stencil_order != 4)
    throw std::invalid_argument("FdConfig: stencil order must be 2 or 4");
}

FdEigenpairs fd_eigenpairs(const PotentialParams& p, const FdConfig& cfg,
                           int n_states) {
  p.validate();
  cfg.validate(p);
  if (n_states < 1 || n_states > cfg.points / 4)
    throw std::invalid_argument("fd_eigenpairs: bad n_states");

  const int m = cfg.points - 2;  // interior points
  const double h = cfg.step();
  FdEigenpairs e;
  e.x.resize(m);
  std::vector<double> v(m);
  for (int i = 0; i < m; ++i) {
    e.x[i] = -cfg.half_width + h * (i + 1);
    v[i] = potential(e.x[i], p);
  }
  const double t = p.hbar * p.hbar / (2.0 * p.mass * h * h);

  BandedResult r = banded_lowest(v, t, cfg.stencil_order, n_states);
  e.energies = std::move(r.energies);
  e.states = std::move(r.vectors);
  // unit 2-norm -> unit L2 norm on the grid
  const double scale = 1.0 / std::sqrt(h);
  for (auto& st : e.states)
    for (double& u : st) u *= scale;
  fix_signs(e);
  return e;
}

double fd_overlap_gamma(const FdEigenpairs& e) {
  if (e.states.size() < 2)
    throw std::invalid_argument("fd_overlap_gamma: need two states");
  const double h = e.x[1] - e.x[0];
  double acc = 0.0;  // plain sum: the integrand vanishes at the walls
  for (std::size_t i = 0; i < e.x.size(); ++i)
    acc += e.states[0][i] * e.x[i] * e.states[1][i];
  return acc * h;
}

double fd_vs_analytic_l2(const FdEigenpairs& e, int n,
                         const SingleWellSolution& s) {
  const double h = e.x[1] - e.x[0];
  double acc = 0.0;
  for (std::size_t i = 0; i < e.x.size(); ++i) {
    const double d = e.states[n][i] - eigenfunction(n, e.x[i], s);
    acc += d * d;
  }
  return std::sqrt(acc * h);
}

std::array<double, 4> symmetric4_eigenvalues(const Mat4& m) {
  double a[16];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i * 4 + j] = m[i][j];
  double w[4];
  const lapack_int info =
      LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'N', 'U', 4, a, 4, w);
  if (info != 0)
    throw std::runtime_error("dsyev failed, info = " + std::to_string(info));
  return {w[0], w[1], w[2], w[3]};
}

std::vector<double> fd_harmonic_levels(const FdConfig& cfg, int n_states) {
  const int m = cfg.points - 2;
  const double h = cfg.step();
  std::vector<double> v(m);
  for (int i = 0; i < m; ++i) {
    const double x = -cfg.half_width + h * (i + 1);
    v[i] = 0.5 * x * x;
  }
  const double t = 1.0 / (2.0 * h * h);  // hbar = mass = 1
  return banded_lowest(v, t, cfg.stencil_order, n_states).energies;
}

}  // namespace razavy
