// SPDX-License-Identifier: Apache-2.0
#pragma once

// Bloch decomposition of the walk, principal-branch effective Hamiltonian, quasi-energy
// bands and the chiral / particle-hole / time-reversal residuals.
//
// Fourier convention: the block at momentum k acts on modes u·e^{-ikx}, so that L± ↦ e^{±ik}.
// With an even ring size N the grid k_j = 2πj/N − π consists of exact Bloch momenta of the ring
// and −k_j is the grid point (N − j) mod N.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "qwsi/errors.hpp"
#include "qwsi/linalg.hpp"
#include "qwsi/walk.hpp"

namespace qwsi {

class MomentumGrid {
 public:
  explicit MomentumGrid(int n) : n_(n) {
    if (n < 2 || n % 2 != 0) throw invalid_argument("momentum grid size must be even and >= 2");
  }

  int size() const { return n_; }
  double k(int j) const { return 2.0 * pi * j / n_ - pi; }
  double spacing() const { return 2.0 * pi / n_; }

  /// Index of −k_j. k = −π pairs with itself.
  int negated(int j) const { return (n_ - j) % n_; }

  /// Index of the grid point closest to k (k is taken modulo 2π).
  int nearest(double k) const {
    const double t = wrap_phase(k) + pi;
    return static_cast<int>(std::lround(t / spacing())) % n_;
  }

 private:
  int n_;
};

/// W(k) for a single momentum.
inline Matrix2c bloch_matrix(const WalkSpec& spec, double k) {
  const cplx up = std::exp(I * k), down = std::exp(-I * k);
  if (spec.kind == WalkKind::standard) {
    Matrix2c s = Matrix2c::Zero();
    s(0, 0) = up;
    s(1, 1) = down;
    return s * spec.standard_coin().matrix();
  }
  Matrix2c s_plus = Matrix2c::Identity(), s_minus = Matrix2c::Identity();
  s_plus(0, 0) = up;
  s_minus(1, 1) = down;
  return s_minus * coin_rotation(spec.theta2).matrix() * s_plus * coin_rotation(spec.theta1).matrix();
}

struct BlochFamily {
  MomentumGrid grid;
  std::vector<Matrix2c> w;
};

inline BlochFamily bloch_decompose(const WalkSpec& spec, const MomentumGrid& grid) {
  spec.validate();
  if (spec.lattice_size != grid.size()) {
    throw invalid_argument("walk lattice size and momentum grid size differ");
  }
  BlochFamily fam{grid, {}};
  fam.w.reserve(grid.size());
  for (int j = 0; j < grid.size(); ++j) fam.w.push_back(bloch_matrix(spec, grid.k(j)));
  return fam;
}

/// H(k) = offset·I + energy·(axis·σ); quasi-energies are offset ± energy.
struct EffectiveHamiltonian {
  MomentumGrid grid;
  std::vector<Matrix2c> h;
  std::vector<double> offset;
  std::vector<double> energy;
  std::vector<Vector3> axis;
  std::vector<bool> branch_flag;  // W(k) has an eigenvalue within 1e-10 of −1

  int flagged_count() const { return static_cast<int>(std::count(branch_flag.begin(), branch_flag.end(), true)); }

  /// min_k |E(k)| over unflagged momenta.
  double gap() const {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < energy.size(); ++j) {
      if (!branch_flag[j]) g = std::min(g, std::abs(energy[j]));
    }
    return g;
  }
};

inline constexpr double branch_tol = 1e-10;

struct PrincipalLog {
  Matrix2c h;
  double offset = 0.0;
  double energy = 0.0;
  Vector3 axis = Vector3::UnitZ();
  bool axis_defined = false;
  bool branch_flag = false;
};

/// H = i·log W on the principal branch, via W = e^{iα}·exp(−iβ a·σ) with det W = e^{2iα}.
inline PrincipalLog principal_log(const Matrix2c& w) {
  const double alpha = 0.5 * std::arg(w.determinant());
  const Matrix2c v = std::exp(-I * alpha) * w;
  const double a0 = 0.5 * (v(0, 0) + v(1, 1)).real();
  const Vector3 a{-0.5 * (v(0, 1) + v(1, 0)).imag(), 0.5 * (v(1, 0) - v(0, 1)).real(),
                  -0.5 * (v(0, 0) - v(1, 1)).imag()};
  const double sin_beta = a.norm();
  const double beta = std::atan2(sin_beta, a0);

  // eigenphase α∓β on the ±1 eigenvector of a·σ
  const double phase_plus = wrap_phase(alpha - beta);
  const double phase_minus = wrap_phase(alpha + beta);
  PrincipalLog out;
  out.branch_flag = std::abs(std::exp(I * phase_plus) + 1.0) <= branch_tol ||
                    std::abs(std::exp(I * phase_minus) + 1.0) <= branch_tol;
  const double e_plus = -phase_plus, e_minus = -phase_minus;
  out.offset = 0.5 * (e_plus + e_minus);
  out.energy = 0.5 * (e_plus - e_minus);
  Vector3 coeff = Vector3::Zero();
  if (sin_beta > 0.0) {
    out.axis = a / sin_beta;
    out.axis_defined = true;
    coeff = out.energy * out.axis;
  }
  out.h = out.offset * pauli::identity() + pauli::dot(coeff);
  return out;
}

inline EffectiveHamiltonian effective_hamiltonian(const BlochFamily& fam) {
  EffectiveHamiltonian eh{fam.grid, {}, {}, {}, {}, {}};
  for (const auto& w : fam.w) {
    if (unitarity_defect(w) > CoinOperator::unitarity_tol) {
      throw invalid_argument("Bloch matrix is not unitary");
    }
    PrincipalLog lg = principal_log(w);
    eh.h.push_back(lg.h);
    eh.offset.push_back(lg.offset);
    eh.energy.push_back(lg.energy);
    eh.axis.push_back(lg.axis);
    eh.branch_flag.push_back(lg.branch_flag);
  }
  return eh;
}

struct DispersionPoint {
  double k = 0.0;
  double e_plus = 0.0;
  double e_minus = 0.0;
  bool branch_flag = false;
};

namespace detail {

/// Unit eigenvector of n·σ with eigenvalue +1.
inline Vector2c up_eigenvector(const Vector3& n) {
  Vector2c v;
  if (n[2] > -0.5) {
    v << 1.0 + n[2], cplx(n[0], n[1]);
  } else {
    v << cplx(n[0], -n[1]), 1.0 - n[2];
  }
  return v.normalized();
}

}  // namespace detail

/// Two quasi-energy bands, connected across k by eigenvector overlap rather than by sorting.
inline std::vector<DispersionPoint> dispersion(const WalkSpec& spec, const MomentumGrid& grid) {
  const EffectiveHamiltonian eh = effective_hamiltonian(bloch_decompose(spec, grid));
  std::vector<DispersionPoint> out;
  out.reserve(grid.size());
  Vector2c tracked;  // eigenvector currently carried by the "+" band
  bool have_tracked = false;
  for (int j = 0; j < grid.size(); ++j) {
    const double e = std::abs(eh.energy[j]);
    DispersionPoint pt{grid.k(j), eh.offset[j] + e, eh.offset[j] - e, eh.branch_flag[j]};
    if (e > 0.0) {
      const Vector3 n_max = eh.energy[j] >= 0.0 ? eh.axis[j] : Vector3(-eh.axis[j]);
      const Vector2c v_max = detail::up_eigenvector(n_max);
      const Vector2c v_min = detail::up_eigenvector(-n_max);
      if (!have_tracked || std::abs(tracked.dot(v_max)) >= std::abs(tracked.dot(v_min))) {
        tracked = v_max;
      } else {
        std::swap(pt.e_plus, pt.e_minus);
        tracked = v_min;
      }
      have_tracked = true;
    }
    out.push_back(pt);
  }
  return out;
}

struct ChiralAxisResult {
  Vector3 axis = Vector3::UnitX();
  double residual = 0.0;           // max_k |n(k)·A| over momenta where n(k) is defined
  double min_singular_value = 0.0; // smallest singular value of the rows n(k_j)
  double gap = 0.0;
  bool gap_open = false;
  bool degenerate = false;  // null space of dimension > 1: any axis in it is valid
  bool found = false;
};

inline constexpr double chiral_failure_tol = 1e-6;
inline constexpr double gap_tol = 1e-8;

/// Axis sign convention: first component with |A_i| > 1e-12 is positive.
inline Vector3 canonical_axis(Vector3 a) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(a[i]) > 1e-12) return a[i] < 0 ? Vector3(-a) : a;
  }
  return a;
}

/// Least-squares chiral axis for a family: the right singular vector of the stacked rows n(k).
inline ChiralAxisResult chiral_axis_search(const EffectiveHamiltonian& eh) {
  ChiralAxisResult r;
  r.gap = eh.gap();
  r.gap_open = r.gap > gap_tol;
  std::vector<int> rows;
  for (int j = 0; j < eh.grid.size(); ++j) {
    if (!eh.branch_flag[j] && std::abs(eh.energy[j]) > gap_tol) rows.push_back(j);
  }
  if (rows.empty()) return r;
  Eigen::MatrixX3d m(static_cast<Eigen::Index>(rows.size()), 3);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = eh.axis[rows[i]].transpose();
  Eigen::JacobiSVD<Eigen::MatrixX3d> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const Eigen::Index last = s.size() - 1;
  r.min_singular_value = s[last];
  r.degenerate = s.size() < 3 || s[last - 1] <= chiral_failure_tol;
  r.axis = canonical_axis(s.size() < 3 ? Vector3(svd.matrixV().col(2)) : Vector3(svd.matrixV().col(last)));
  for (int j : rows) r.residual = std::max(r.residual, std::abs(eh.axis[j].dot(r.axis)));
  r.found = (s.size() < 3 ? 0.0 : r.min_singular_value) <= chiral_failure_tol;
  return r;
}

inline ChiralAxisResult chiral_axis_search(double theta1, double theta2, int grid_size = 256) {
  const MomentumGrid grid(grid_size);
  return chiral_axis_search(effective_hamiltonian(bloch_decompose(WalkSpec::split_step(theta1, theta2, grid_size), grid)));
}

/// Γ = exp(iπ A·σ/2).
inline Matrix2c chiral_operator(const Vector3& a) {
  return std::cos(pi / 2) * pauli::identity() + I * std::sin(pi / 2) * pauli::dot(a);
}

inline void require_unit(const Vector3& a) {
  if (std::abs(a.norm() - 1.0) > 1e-12) throw invalid_argument("symmetry axis must be a unit vector");
}

/// max_k ‖Γ⁻¹H(k)Γ + H(k)‖_max over unflagged momenta.
inline double verify_chiral(const Vector3& a, const EffectiveHamiltonian& eh) {
  require_unit(a);
  const Matrix2c g = chiral_operator(a);
  const Matrix2c g_inv = g.adjoint();
  double r = 0.0;
  for (int j = 0; j < eh.grid.size(); ++j) {
    if (eh.branch_flag[j]) continue;
    r = std::max(r, max_abs(g_inv * eh.h[j] * g + eh.h[j]));
  }
  return r;
}

/// max_k ‖conj(H(−k)) + H(k)‖_max: complex conjugation in position space sends k to −k.
inline double verify_particle_hole(const EffectiveHamiltonian& eh) {
  double r = 0.0;
  for (int j = 0; j < eh.grid.size(); ++j) {
    const int jn = eh.grid.negated(j);
    if (eh.branch_flag[j] || eh.branch_flag[jn]) continue;
    r = std::max(r, max_abs(Matrix2c(eh.h[jn].conjugate()) + eh.h[j]));
  }
  return r;
}

/// max_k ‖Γ·conj(H(−k))·Γ⁻¹ − H(k)‖_max with T = Γ·K.
inline double verify_time_reversal(const Vector3& a, const EffectiveHamiltonian& eh) {
  require_unit(a);
  const Matrix2c g = chiral_operator(a);
  const Matrix2c g_inv = g.adjoint();
  double r = 0.0;
  for (int j = 0; j < eh.grid.size(); ++j) {
    const int jn = eh.grid.negated(j);
    if (eh.branch_flag[j] || eh.branch_flag[jn]) continue;
    r = std::max(r, max_abs(g * Matrix2c(eh.h[jn].conjugate()) * g_inv - eh.h[j]));
  }
  return r;
}

struct SymmetryReport {
  ChiralAxisResult axis_search;
  Vector3 chiral_axis = Vector3::UnitX();
  double residual_chiral = 0.0;
  double residual_ph = 0.0;
  double residual_tr = 0.0;
  double gap = 0.0;
  int flagged_momenta = 0;
};

/// Negative control: the family shifted cyclically by `offset` grid points.
inline EffectiveHamiltonian shifted_family(const EffectiveHamiltonian& eh, int offset) {
  EffectiveHamiltonian out = eh;
  const int n = eh.grid.size();
  for (int j = 0; j < n; ++j) {
    const int src = SpinorField::wrap(j + offset, n);
    out.h[j] = eh.h[src];
    out.offset[j] = eh.offset[src];
    out.energy[j] = eh.energy[src];
    out.axis[j] = eh.axis[src];
    out.branch_flag[j] = eh.branch_flag[src];
  }
  return out;
}

/// The Bloch axis n(k) at the momentum of largest |E(k)|: an axis along which the chiral relation fails.
inline Vector3 wrong_axis(const EffectiveHamiltonian& eh) {
  int best = 0;
  for (int j = 0; j < eh.grid.size(); ++j) {
    if (!eh.branch_flag[j] && std::abs(eh.energy[j]) > std::abs(eh.energy[best])) best = j;
  }
  return eh.axis[best];
}

/// Chiral axis search plus all three residuals. `scramble` evaluates the negative control
/// (family shifted by N/4, axis replaced by wrong_axis()).
inline SymmetryReport symmetry_report(const WalkSpec& spec, bool scramble = false) {
  const MomentumGrid grid(spec.lattice_size);
  EffectiveHamiltonian eh = effective_hamiltonian(bloch_decompose(spec, grid));
  SymmetryReport rep;
  rep.axis_search = chiral_axis_search(eh);
  rep.chiral_axis = rep.axis_search.axis;
  rep.gap = rep.axis_search.gap;
  rep.flagged_momenta = eh.flagged_count();
  if (scramble) {
    rep.chiral_axis = wrong_axis(eh);
    eh = shifted_family(eh, grid.size() / 4);
  }
  rep.residual_chiral = verify_chiral(rep.chiral_axis, eh);
  rep.residual_ph = verify_particle_hole(eh);
  rep.residual_tr = verify_time_reversal(rep.chiral_axis, eh);
  return rep;
}

/// Eigenvalues of every W(k_j), concatenated.
inline std::vector<cplx> bloch_spectrum(const BlochFamily& fam) {
  std::vector<cplx> out;
  for (const auto& w : fam.w) {
    Eigen::ComplexEigenSolver<Matrix2c> es(w, false);
    for (int i = 0; i < 2; ++i) out.push_back(es.eigenvalues()[i]);
  }
  return out;
}

/// Greedy matching distance between two eigenvalue multisets of equal size.
inline double spectral_distance(std::vector<cplx> a, std::vector<cplx> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const cplx& x : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(x - b[i]);
      if (d < best) best = d, arg = i;
    }
    used[arg] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace qwsi
