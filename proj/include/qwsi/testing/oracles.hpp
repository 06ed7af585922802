// SPDX-License-Identifier: Apache-2.0
#pragma once

// Independent reference computations. None of these reuse the library routine they check:
// operators are built from Kronecker products, walks and automorphisms are enumerated
// exhaustively, and closed forms are written out directly.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "qwsi/graph.hpp"
#include "qwsi/group.hpp"
#include "qwsi/linalg.hpp"

namespace qwsi::oracle {

/// Position-space cyclic shift L: δ_x ↦ δ_{x+step} as an N×N matrix.
inline MatrixXc ring_shift(int n, int step) {
  MatrixXc l = MatrixXc::Zero(n, n);
  for (int x = 0; x < n; ++x) l(((x + step) % n + n) % n, x) = 1.0;
  return l;
}

/// Kronecker product in the site-blocked layout (site ⊗ coin), index 2x + c.
inline MatrixXc site_coin(const MatrixXc& site, const Matrix2c& coin) {
  const Eigen::Index n = site.rows();
  MatrixXc out = MatrixXc::Zero(2 * n, 2 * n);
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y)
      if (site(x, y) != cplx(0.0)) out.block<2, 2>(2 * x, 2 * y) = site(x, y) * coin;
  return out;
}

inline Matrix2c projector(int c) {
  Matrix2c p = Matrix2c::Zero();
  p(c, c) = 1.0;
  return p;
}

inline Matrix2c rotation(double theta) {
  Matrix2c t;
  t << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return t;
}

/// S = Π0⊗L₊ + Π1⊗L₋.
inline MatrixXc full_shift(int n) { return site_coin(ring_shift(n, 1), projector(0)) + site_coin(ring_shift(n, -1), projector(1)); }

/// S₊ = Π0⊗L₊ + Π1⊗I,  S₋ = Π0⊗I + Π1⊗L₋.
inline MatrixXc half_shift_up(int n) {
  return site_coin(ring_shift(n, 1), projector(0)) + site_coin(MatrixXc::Identity(n, n), projector(1));
}
inline MatrixXc half_shift_down(int n) {
  return site_coin(MatrixXc::Identity(n, n), projector(0)) + site_coin(ring_shift(n, -1), projector(1));
}

inline MatrixXc coin_layer(int n, const Matrix2c& t) { return site_coin(MatrixXc::Identity(n, n), t); }

/// S · (T⊗I).
inline MatrixXc standard_walk(int n, const Matrix2c& coin) { return full_shift(n) * coin_layer(n, coin); }

/// S₋ (T(θ2)⊗I) S₊ (T(θ1)⊗I).
inline MatrixXc split_step_walk(int n, double theta1, double theta2) {
  return half_shift_down(n) * coin_layer(n, rotation(theta2)) * half_shift_up(n) * coin_layer(n, rotation(theta1));
}

/// Unitary DFT on the site index with momentum grid k_j = 2πj/N − π: F_{j,x} = e^{i k_j x}/√N (N even).
/// Conjugating the site-blocked operator by F⊗I yields 2×2 blocks B_j with L± ↦ e^{±ik}.
inline MatrixXc fourier_site(int n) {
  MatrixXc f(n, n);
  for (int j = 0; j < n; ++j) {
    const double k = 2.0 * pi * j / n - pi;
    for (int x = 0; x < n; ++x) f(j, x) = std::exp(I * (k * x)) / std::sqrt(static_cast<double>(n));
  }
  return f;
}

/// Exhaustive path sum: amplitude of every coin path of length `steps` from (x0, c0), where a path
/// applies `coin` then moves coin-0 amplitude right and coin-1 amplitude left. Returns P(x), x signed.
inline std::vector<std::pair<int, double>> enumerate_standard_walk(const Matrix2c& coin, int steps, int x0 = 0, int c0 = 0) {
  // amplitude keyed by (x, c), accumulated over all 2^steps coin sequences
  std::vector<std::vector<cplx>> amp(2 * steps + 1, std::vector<cplx>(2, 0.0));
  std::function<void(int, int, int, cplx)> go = [&](int depth, int x, int c, cplx a) {
    if (depth == steps) {
      amp[x + steps][c] += a;
      return;
    }
    for (int next = 0; next < 2; ++next) {
      const cplx b = a * coin(next, c);
      if (b == cplx(0.0)) continue;
      go(depth + 1, x + (next == 0 ? 1 : -1), next, b);
    }
  };
  go(0, x0, c0, 1.0);
  std::vector<std::pair<int, double>> out;
  for (int i = 0; i <= 2 * steps; ++i) {
    const double p = std::norm(amp[i][0]) + std::norm(amp[i][1]);
    if (p > 0.0) out.emplace_back(i - steps + x0, p);
  }
  return out;
}

/// Closed walks of length m from o, by depth-first enumeration.
inline std::int64_t count_closed_walks(const Graph& g, int o, int m) {
  std::int64_t count = 0;
  std::function<void(int, int)> go = [&](int v, int left) {
    if (left == 0) {
      count += v == o;
      return;
    }
    for (int w : g.neighbors(v)) go(w, left - 1);
  };
  go(o, m);
  return count;
}

/// Automorphism group order by trying every permutation (n ≤ 10).
inline std::int64_t automorphism_count_bruteforce(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  const auto edges = g.edges();
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : edges)
      if (!g.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Searches for a bijection f with f(ab) = f(a)f(b). Exhaustive over |G|! maps (order ≤ 8).
inline bool isomorphic_bruteforce(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> f(a.order());
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < a.order() && ok; ++x)
      for (int y = 0; y < a.order() && ok; ++y) ok = f[a.mul(x, y)] == b.mul(f[x], f[y]);
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

/// Element orders by repeated multiplication from the Cayley table.
inline std::vector<int> element_orders(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    int k = 1;
    for (int y = x; y != g.identity(); y = g.mul(y, x)) ++k;
    out.push_back(k);
  }
  return out;
}

/// Spinor boost exp(φσx/2) = cosh(φ/2) I + sinh(φ/2) σx.
inline Matrix2c spinor_boost(double phi) {
  Matrix2c s;
  s << std::cosh(phi / 2), std::sinh(phi / 2), std::sinh(phi / 2), std::cosh(phi / 2);
  return s;
}

/// ∫₀¹ du / (m cosh u) = gd(1)/m, gd(x) = 2 atan(eˣ) − π/2.
inline double sech_integral_unit(double m) { return (2.0 * std::atan(std::exp(1.0)) - pi / 2) / m; }

/// Intersection numbers of the d-cube: p^k_{ij} = C(k, (i−j+k)/2) C(d−k, (i+j−k)/2) when i+j−k is even.
inline std::int64_t hypercube_intersection(int d, int k, int i, int j) {
  auto binom = [](int n, int r) -> std::int64_t {
    if (r < 0 || r > n) return 0;
    std::int64_t v = 1;
    for (int t = 1; t <= r; ++t) v = v * (n - r + t) / t;
    return v;
  };
  if ((i + j - k) % 2 != 0 || i + j < k) return 0;
  return binom(k, (i - j + k) / 2) * binom(d - k, (i + j - k) / 2);
}

}  // namespace qwsi::oracle
