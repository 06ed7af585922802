// SPDX-License-Identifier: Apache-2.0
#pragma once

// Small dense complex helpers shared by the walk, momentum and relativistic layers.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace qwsi {

using cplx = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;
using Vector3 = Eigen::Vector3d;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

namespace pauli {

inline Matrix2c identity() { return Matrix2c::Identity(); }

inline Matrix2c x() {
  Matrix2c m;
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix2c y() {
  Matrix2c m;
  m << 0, -I, I, 0;
  return m;
}

inline Matrix2c z() {
  Matrix2c m;
  m << 1, 0, 0, -1;
  return m;
}

/// n·σ for a real 3-vector n.
inline Matrix2c dot(const Vector3& n) { return n[0] * x() + n[1] * y() + n[2] * z(); }

}  // namespace pauli

/// Largest entry modulus, ‖M‖_max.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

/// ‖U†U − I‖_max.
template <typename Derived>
double unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  const auto n = u.cols();
  return max_abs(u.adjoint() * u - MatrixXc::Identity(n, n));
}

/// Maps an angle to the principal interval (−π, π].
inline double wrap_phase(double phi) {
  double r = std::remainder(phi, 2.0 * pi);
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

/// exp(−i h) for a 2×2 Hermitian h = c0·I + c·σ, in closed form.
inline Matrix2c expm_minus_i(const Matrix2c& h) {
  const double c0 = 0.5 * (h(0, 0) + h(1, 1)).real();
  const Vector3 c{h(0, 1).real(), -h(0, 1).imag(), 0.5 * (h(0, 0) - h(1, 1)).real()};
  const double r = c.norm();
  Matrix2c su = std::cos(r) * pauli::identity();
  if (r > 0.0) su -= I * (std::sin(r) / r) * pauli::dot(c);
  return std::exp(-I * c0) * su;
}

}  // namespace qwsi
