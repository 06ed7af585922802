// SPDX-License-Identifier: Apache-2.0
#pragma once

// Standard and split-step discrete-time quantum walks on a periodic ring of N sites.
//
// State layout is site-blocked: amplitude index 2*x + c for site x and coin c.
// Coin 0 steps towards +x, coin 1 towards -x:
//   S  = Π0⊗L+ + Π1⊗L-
//   S+ = Π0⊗L+ + Π1⊗I
//   S- = Π0⊗I  + Π1⊗L-
// standard walk   U = S (T ⊗ I)
// split-step walk W = S- (T(θ2) ⊗ I) S+ (T(θ1) ⊗ I)

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwsi/errors.hpp"
#include "qwsi/linalg.hpp"

namespace qwsi {

/// Unitary 2×2 coin. Construction rejects matrices with ‖U†U − I‖_max > 1e-12.
class CoinOperator {
 public:
  static constexpr double unitarity_tol = 1e-12;

  explicit CoinOperator(const Matrix2c& m) : m_(m) {
    if (!m.allFinite() || unitarity_defect(m) > unitarity_tol) {
      throw invalid_argument("coin operator is not unitary");
    }
  }

  const Matrix2c& matrix() const { return m_; }
  cplx operator()(int r, int c) const { return m_(r, c); }

  friend CoinOperator operator*(const CoinOperator& a, const CoinOperator& b) {
    return CoinOperator(a.m_ * b.m_);
  }

 private:
  Matrix2c m_;
};

inline CoinOperator hadamard() {
  Matrix2c m;
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return CoinOperator(m);
}

/// T(θ) = exp(−iθσ_y) = [[cos θ, −sin θ], [sin θ, cos θ]].
inline CoinOperator coin_rotation(double theta) {
  if (!std::isfinite(theta)) throw invalid_argument("coin angle must be finite");
  Matrix2c m;
  const double c = std::cos(theta), s = std::sin(theta);
  m << c, -s, s, c;
  return CoinOperator(m);
}

/// Amplitudes of a walker ⊗ coin state on a ring of `lattice_size` sites.
class SpinorField {
 public:
  explicit SpinorField(int lattice_size) : n_(lattice_size) {
    if (lattice_size < 1) throw invalid_argument("lattice size must be positive");
    amp_ = VectorXc::Zero(2 * static_cast<Eigen::Index>(lattice_size));
  }

  SpinorField(int lattice_size, VectorXc amplitudes) : n_(lattice_size), amp_(std::move(amplitudes)) {
    if (lattice_size < 1 || amp_.size() != 2 * static_cast<Eigen::Index>(lattice_size)) {
      throw invalid_argument("amplitude vector must have 2*lattice_size entries");
    }
  }

  /// δ_x ⊗ |coin⟩. Negative x wraps around the ring.
  static SpinorField localized(int lattice_size, int x, int coin) {
    SpinorField f(lattice_size);
    f.at(x, coin) = 1.0;
    return f;
  }

  int lattice_size() const { return n_; }

  static int wrap(int x, int n) {
    const int r = x % n;
    return r < 0 ? r + n : r;
  }

  cplx& at(int x, int coin) { return amp_[2 * wrap(x, n_) + coin]; }
  cplx at(int x, int coin) const { return amp_[2 * wrap(x, n_) + coin]; }

  const VectorXc& amplitudes() const { return amp_; }
  VectorXc& amplitudes() { return amp_; }

  double norm_squared() const { return amp_.squaredNorm(); }

 private:
  int n_;
  VectorXc amp_;
};

enum class WalkKind { standard, split_step };

struct WalkSpec {
  WalkKind kind = WalkKind::split_step;
  double theta1 = 0.0;
  double theta2 = 0.0;  // unused by the standard walk
  std::optional<CoinOperator> coin_override;  // standard walk only
  int lattice_size = 2;

  void validate() const {
    if (lattice_size < 2) throw invalid_argument("lattice size must be at least 2");
    if (!std::isfinite(theta1) || !std::isfinite(theta2)) {
      throw invalid_argument("coin angles must be finite");
    }
    if (kind == WalkKind::split_step && coin_override) {
      throw invalid_argument("coin override applies to the standard walk only");
    }
  }

  /// The single coin of the standard walk.
  CoinOperator standard_coin() const { return coin_override ? *coin_override : coin_rotation(theta1); }

  static WalkSpec standard(CoinOperator coin, int n) {
    WalkSpec s;
    s.kind = WalkKind::standard;
    s.coin_override = coin;
    s.lattice_size = n;
    return s;
  }

  static WalkSpec split_step(double theta1, double theta2, int n) {
    WalkSpec s;
    s.kind = WalkKind::split_step;
    s.theta1 = theta1;
    s.theta2 = theta2;
    s.lattice_size = n;
    return s;
  }
};

enum class ShiftKind { full, half_up, half_down };
enum class ShiftDirection { forward, backward };  // backward is the inverse shift

namespace detail {

inline void apply_coin(VectorXc& amp, const Matrix2c& t) {
  const Eigen::Index n = amp.size() / 2;
  for (Eigen::Index x = 0; x < n; ++x) {
    const cplx a0 = amp[2 * x], a1 = amp[2 * x + 1];
    amp[2 * x] = t(0, 0) * a0 + t(0, 1) * a1;
    amp[2 * x + 1] = t(1, 0) * a0 + t(1, 1) * a1;
  }
}

/// Conditional shift in place: coin-0 amplitudes move by `step0`, coin-1 by `step1`.
inline void apply_shift(VectorXc& amp, int step0, int step1, VectorXc& scratch) {
  const int n = static_cast<int>(amp.size() / 2);
  scratch.resize(amp.size());
  for (int x = 0; x < n; ++x) {
    scratch[2 * SpinorField::wrap(x + step0, n)] = amp[2 * x];
    scratch[2 * SpinorField::wrap(x + step1, n) + 1] = amp[2 * x + 1];
  }
  amp.swap(scratch);
}

inline void shift_steps(ShiftKind kind, ShiftDirection dir, int& step0, int& step1) {
  switch (kind) {
    case ShiftKind::full: step0 = 1, step1 = -1; break;
    case ShiftKind::half_up: step0 = 1, step1 = 0; break;
    case ShiftKind::half_down: step0 = 0, step1 = -1; break;
  }
  if (dir == ShiftDirection::backward) step0 = -step0, step1 = -step1;
}

/// One application of the walk operator, matrix-free.
inline void apply_step(VectorXc& amp, const WalkSpec& spec, VectorXc& scratch) {
  if (spec.kind == WalkKind::standard) {
    apply_coin(amp, spec.standard_coin().matrix());
    apply_shift(amp, 1, -1, scratch);
  } else {
    apply_coin(amp, coin_rotation(spec.theta1).matrix());
    apply_shift(amp, 1, 0, scratch);
    apply_coin(amp, coin_rotation(spec.theta2).matrix());
    apply_shift(amp, 0, -1, scratch);
  }
}

}  // namespace detail

inline constexpr int max_dense_lattice = 4096;

/// Dense conditional-shift operator on C^{2N} with periodic wraparound.
inline MatrixXc shift(ShiftKind kind, int n, ShiftDirection dir = ShiftDirection::forward) {
  if (n < 2) throw invalid_argument("lattice size must be at least 2");
  int s0 = 0, s1 = 0;
  detail::shift_steps(kind, dir, s0, s1);
  MatrixXc m = MatrixXc::Zero(2 * n, 2 * n);
  for (int x = 0; x < n; ++x) {
    m(2 * SpinorField::wrap(x + s0, n), 2 * x) = 1.0;
    m(2 * SpinorField::wrap(x + s1, n) + 1, 2 * x + 1) = 1.0;
  }
  return m;
}

/// T ⊗ I_N in the site-blocked layout.
inline MatrixXc coin_on_lattice(const CoinOperator& t, int n) {
  MatrixXc m = MatrixXc::Zero(2 * n, 2 * n);
  for (int x = 0; x < n; ++x) m.block<2, 2>(2 * x, 2 * x) = t.matrix();
  return m;
}

/// Cyclic one-site translation R: δ_x⊗|c⟩ → δ_{x+1}⊗|c⟩.
inline MatrixXc translation_operator(int n) {
  MatrixXc m = MatrixXc::Zero(2 * n, 2 * n);
  for (int x = 0; x < n; ++x) {
    const int y = SpinorField::wrap(x + 1, n);
    m(2 * y, 2 * x) = 1.0;
    m(2 * y + 1, 2 * x + 1) = 1.0;
  }
  return m;
}

/// Dense one-step operator, assembled column by column from the matrix-free step.
inline MatrixXc one_step_operator(const WalkSpec& spec) {
  spec.validate();
  const int n = spec.lattice_size;
  if (n > max_dense_lattice) {
    throw invalid_argument("dense operator limited to lattice_size <= 4096; use evolve()");
  }
  MatrixXc u(2 * n, 2 * n);
  VectorXc col, scratch;
  for (int j = 0; j < 2 * n; ++j) {
    col = VectorXc::Unit(2 * n, j);
    detail::apply_step(col, spec, scratch);
    u.col(j) = col;
  }
  return u;
}

/// U^steps ψ0.
inline SpinorField evolve(const SpinorField& psi0, const WalkSpec& spec, std::uint64_t steps) {
  spec.validate();
  if (psi0.lattice_size() != spec.lattice_size) {
    throw invalid_argument("state lattice size " + std::to_string(psi0.lattice_size()) +
                           " does not match walk lattice size " + std::to_string(spec.lattice_size));
  }
  VectorXc amp = psi0.amplitudes();
  VectorXc scratch;
  for (std::uint64_t s = 0; s < steps; ++s) detail::apply_step(amp, spec, scratch);
  return SpinorField(spec.lattice_size, std::move(amp));
}

/// p(x) = |ψ0(x)|² + |ψ1(x)|², indexed by ring site 0..N-1.
inline std::vector<double> position_distribution(const SpinorField& psi) {
  std::vector<double> p(psi.lattice_size());
  for (int x = 0; x < psi.lattice_size(); ++x) p[x] = std::norm(psi.at(x, 0)) + std::norm(psi.at(x, 1));
  return p;
}

/// Ring site 0..N-1 mapped to the centred coordinate in [-N/2, N/2).
inline int signed_site(int x, int n) { return x < (n + 1) / 2 ? x : x - n; }

}  // namespace qwsi
