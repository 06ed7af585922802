// SPDX-License-Identifier: Apache-2.0
#pragma once

// 1+1-D momentum space: mass-shell orbits, boosts, the invariant shell measure in rapidity,
// spinor trivialization of the mass-shell bundle, the de Sitter first-order operator and the
// continuum Dirac limit of the split-step walk. Units c = ħ = 1; p = (p0, p1), p0 the energy.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qwsi/errors.hpp"
#include "qwsi/linalg.hpp"
#include "qwsi/momentum.hpp"
#include "qwsi/walk.hpp"

namespace qwsi {

struct MomentumPoint {
  double p0 = 0.0;
  double p1 = 0.0;

  /// Minkowski square p0² − p1².
  double square() const { return p0 * p0 - p1 * p1; }
};

/// Point of the forward shell at rapidity u: (m cosh u, m sinh u).
inline MomentumPoint shell_point(double m, double u) { return {m * std::cosh(u), m * std::sinh(u)}; }

struct OrbitLabel {
  enum class Kind { forward_mass, backward_mass, origin, spacelike, off_shell };
  Kind kind = Kind::off_shell;
  double invariant = 0.0;  // m for mass shells, q = √(p1² − p0²) for spacelike points

  bool operator==(const OrbitLabel& o) const { return kind == o.kind; }
};

inline std::string to_string(OrbitLabel::Kind k) {
  switch (k) {
    case OrbitLabel::Kind::forward_mass: return "forward_mass";
    case OrbitLabel::Kind::backward_mass: return "backward_mass";
    case OrbitLabel::Kind::origin: return "origin";
    case OrbitLabel::Kind::spacelike: return "spacelike";
    case OrbitLabel::Kind::off_shell: return "off_shell";
  }
  return "off_shell";
}

/// Mass-shell labels need |p0² − p1² − m²| ≤ tol. Timelike points off the m-shell are off_shell.
inline OrbitLabel classify_orbit(const MomentumPoint& p, double m, double tol = 1e-10) {
  if (!(tol > 0.0)) throw invalid_argument("tolerance must be positive");
  if (!std::isfinite(p.p0) || !std::isfinite(p.p1) || !std::isfinite(m)) throw invalid_argument("non-finite momentum");
  const double s = p.square();
  if (std::abs(p.p0) <= tol && std::abs(p.p1) <= tol) return {OrbitLabel::Kind::origin, 0.0};
  if (std::abs(s - m * m) <= tol && m > 0.0) {
    return {p.p0 > 0.0 ? OrbitLabel::Kind::forward_mass : OrbitLabel::Kind::backward_mass, m};
  }
  if (s < 0.0) return {OrbitLabel::Kind::spacelike, std::sqrt(-s)};
  return {OrbitLabel::Kind::off_shell, 0.0};
}

struct Boost {
  double rapidity = 0.0;

  Eigen::Matrix2d matrix() const {
    Eigen::Matrix2d l;
    l << std::cosh(rapidity), std::sinh(rapidity), std::sinh(rapidity), std::cosh(rapidity);
    return l;
  }
};

inline MomentumPoint boost_point(double phi, const MomentumPoint& p) {
  const double c = std::cosh(phi), s = std::sinh(phi);
  return {c * p.p0 + s * p.p1, s * p.p0 + c * p.p1};
}

// ---------------------------------------------------------------------------
// spinor trivialization

/// D(p) = p0σz + p1γ¹ with γ¹ = σzσx = iσy, i.e. [[p0, −p1], [p1, −p0]]; det(D − m) = m² − p0² + p1².
inline Matrix2c trivializing_operator(const MomentumPoint& p) {
  return p.p0 * pauli::z() - I * p.p1 * pauli::y();
}

/// Caption form p0σx + p1σxσz; its shifted determinant coincides with the operator above.
inline Matrix2c caption_operator(const MomentumPoint& p) { return p.p0 * pauli::x() + p.p1 * pauli::x() * pauli::z(); }

inline cplx shell_determinant(const MomentumPoint& p, double m) {
  return (trivializing_operator(p) - m * Matrix2c::Identity()).determinant();
}

class OffShellError : public Error {
 public:
  OffShellError(const MomentumPoint& p, double m, double det)
      : Error(ErrorKind::off_shell, "momentum (" + std::to_string(p.p0) + ", " + std::to_string(p.p1) +
                                        ") is off the m=" + std::to_string(m) + " shell: det = " + std::to_string(det)),
        det(det) {}

  double det;
};

struct SpinorSolution {
  MomentumPoint p;
  Vector2c v;
  double residual = 0.0;  // ‖(D(p) − m)v‖
};

/// Fixes the phase so the first component with modulus above 1e-14 is real positive.
inline Vector2c canonical_phase(Vector2c v) {
  for (int i = 0; i < 2; ++i) {
    if (std::abs(v[i]) > 1e-14) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      v[i] = std::abs(v[i]);
      break;
    }
  }
  return v;
}

/// Unit kernel vector of D(p) − m. `tol` bounds |det| relative to max(1, m², p0²).
inline SpinorSolution trivialize(const MomentumPoint& p, double m, double tol = 1e-10) {
  if (!(m > 0.0)) throw invalid_argument("trivialization needs m > 0");
  const double det = shell_determinant(p, m).real();
  const double scale = std::max({1.0, m * m, p.p0 * p.p0});
  if (std::abs(det) > tol * scale) throw OffShellError(p, m, det);
  const Matrix2c k = trivializing_operator(p) - m * Matrix2c::Identity();
  // a rank-one 2×2 matrix [[a, b], [c, d]] annihilates (−b, a) and (−d, c); take the larger row
  const Vector2c r0(-k(0, 1), k(0, 0)), r1(-k(1, 1), k(1, 0));
  Vector2c v = r0.norm() >= r1.norm() ? r0 : r1;
  if (v.norm() == 0.0) throw invalid_argument("degenerate trivializing operator");
  v = canonical_phase(v.normalized());
  return {p, v, (k * v).norm()};
}

struct SpinorBoost {
  Matrix2c s;
  double residual = 0.0;  // max over samples of sin∠(S v(p), v(Λp))
  std::vector<double> sample_rapidities;
};

/// sin of the angle between nonzero complex vectors, as the norm of the rejection of â from b̂.
inline double projective_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const Eigen::VectorXcd x = a.normalized(), y = b.normalized();
  return (x - y * y.dot(x)).norm();
}

/// Projective distance between 2×2 matrices viewed as vectors in C⁴.
inline double matrix_projective_distance(const Matrix2c& a, const Matrix2c& b) {
  return projective_distance(Eigen::Map<const Eigen::VectorXcd>(a.data(), 4), Eigen::Map<const Eigen::VectorXcd>(b.data(), 4));
}

/// Solves for S with S v(p_i) ∥ v(Λ_φ p_i) over sampled shell points, normalised to det S = 1.
/// Each sample contributes the linear condition w1 (Sv)_0 − w0 (Sv)_1 = 0 on the entries of S;
/// S spans the null space of the stacked system (smallest right singular vector).
inline SpinorBoost boost_spinor_rep(double phi, double m, std::vector<double> rapidities = {}) {
  if (!(m > 0.0)) throw invalid_argument("spinor boost needs m > 0");
  if (rapidities.empty())
    for (int i = -8; i <= 8; ++i) rapidities.push_back(0.25 * i);
  Eigen::MatrixXcd rows(static_cast<Eigen::Index>(rapidities.size()), 4);
  std::vector<Vector2c> from, to;
  for (std::size_t i = 0; i < rapidities.size(); ++i) {
    const MomentumPoint p = shell_point(m, rapidities[i]);
    const Vector2c v = trivialize(p, m, 1e-8).v;
    const Vector2c w = trivialize(boost_point(phi, p), m, 1e-8).v;
    from.push_back(v);
    to.push_back(w);
    // entries ordered (s00, s01, s10, s11)
    rows.row(static_cast<Eigen::Index>(i)) << w[1] * v[0], w[1] * v[1], -w[0] * v[0], -w[0] * v[1];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rows, Eigen::ComputeFullV);
  const Eigen::Vector4cd x = svd.matrixV().col(3);
  Matrix2c s;
  s << x[0], x[1], x[2], x[3];
  const cplx det = s.determinant();
  if (std::abs(det) < 1e-12) throw Error(ErrorKind::tolerance, "spinor boost solution is singular");
  s /= std::sqrt(det);
  // fix the residual sign ambiguity of the square root: prefer Re tr S > 0
  if (s.trace().real() < 0.0) s = -s;
  SpinorBoost out{s, 0.0, rapidities};
  for (std::size_t i = 0; i < from.size(); ++i) out.residual = std::max(out.residual, projective_distance(s * from[i], to[i]));
  return out;
}

// ---------------------------------------------------------------------------
// invariant measure and Hilbert norm on the forward shell

struct ShellQuadrature {
  double m = 1.0;
  double u_min = -20.0;
  double u_max = 20.0;
  int n_points = 10001;

  void validate() const {
    if (!(m > 0.0)) throw invalid_argument("shell quadrature needs m > 0");
    if (!(u_max > u_min)) throw invalid_argument("shell quadrature needs u_max > u_min");
    if (n_points < 2) throw invalid_argument("shell quadrature needs at least 2 points");
  }

  double step() const { return (u_max - u_min) / (n_points - 1); }
  double u(int i) const { return u_min + step() * i; }
  double weight(int i) const { return (i == 0 || i == n_points - 1) ? 0.5 * step() : step(); }
};

/// Trapezoid rule in rapidity for ∫ g(u) du.
inline double integrate_rapidity(const std::function<double(double)>& g, const ShellQuadrature& q) {
  q.validate();
  double sum = 0.0;
  for (int i = 0; i < q.n_points; ++i) sum += q.weight(i) * g(q.u(i));
  return sum;
}

enum class ShellMeasure {
  invariant,  // dp1/p0 = du
  flat,       // dp1 = m cosh u du (control)
};

struct MeasureCheck {
  double integral = 0.0;
  double boosted_integral = 0.0;
  double residual = 0.0;
};

/// |∫ f(Λ_φ p) dμ − ∫ f(p) dμ| over the forward shell.
inline MeasureCheck invariant_measure_check(const std::function<double(const MomentumPoint&)>& f, double phi,
                                            const ShellQuadrature& q, ShellMeasure measure = ShellMeasure::invariant) {
  auto density = [&](double u) { return measure == ShellMeasure::invariant ? 1.0 : q.m * std::cosh(u); };
  MeasureCheck out;
  out.integral = integrate_rapidity([&](double u) { return f(shell_point(q.m, u)) * density(u); }, q);
  out.boosted_integral =
      integrate_rapidity([&](double u) { return f(boost_point(phi, shell_point(q.m, u))) * density(u); }, q);
  out.residual = std::abs(out.boosted_integral - out.integral);
  return out;
}

/// Rapidity of a forward-shell point.
inline double rapidity(const MomentumPoint& p, double m) { return std::asinh(p.p1 / m); }

/// ‖ψ‖² = ∫ p0⁻¹ ‖ψ(p)‖² dp1/p0-measure, with the section given as a function of rapidity.
inline double hilbert_norm(const std::function<Vector2c(double)>& section, const ShellQuadrature& q) {
  return integrate_rapidity([&](double u) { return section(u).squaredNorm() / (q.m * std::cosh(u)); }, q);
}

/// Sampled-section overload: values at the quadrature nodes q.u(i).
inline double hilbert_norm(const std::vector<Vector2c>& samples, const ShellQuadrature& q) {
  q.validate();
  if (static_cast<int>(samples.size()) != q.n_points) throw invalid_argument("one sample per quadrature node required");
  double sum = 0.0;
  for (int i = 0; i < q.n_points; ++i) sum += q.weight(i) * samples[i].squaredNorm() / (q.m * std::cosh(q.u(i)));
  return sum;
}

/// Boosted bundle section (Sψ)(p) = S(φ) ψ(Λ_φ⁻¹ p), in rapidity coordinates.
inline std::function<Vector2c(double)> transport_section(std::function<Vector2c(double)> section, double phi, double m) {
  const Matrix2c s = boost_spinor_rep(phi, m).s;
  return [section = std::move(section), s, phi](double u) -> Vector2c { return s * section(u - phi); };
}

// ---------------------------------------------------------------------------
// de Sitter first-order operator

struct DeSitterKernel {
  Matrix2c d;
  cplx det;
  bool kernel_exists = false;
};

/// D = p2 I + p1σy − mσyσz = p2 I + p1σy − i m σx; det D = p2² − p1² + m².
inline DeSitterKernel desitter_dirac_kernel(double p1, double p2, double m, double tol = 1e-12) {
  const Matrix2c d = p2 * pauli::identity() + p1 * pauli::y() - m * pauli::y() * pauli::z();
  const cplx det = d.determinant();
  const double scale = std::max({1.0, p1 * p1, p2 * p2, m * m});
  return {d, det, std::abs(det) <= tol * scale};
}

// ---------------------------------------------------------------------------
// continuum Dirac limit of the split-step walk

struct Refinement {
  double a = 0.0;          // lattice spacing
  double theta = 0.0;      // θ1 = θ2 = m a / 2
  int lattice_size = 0;    // N = L / a
  int window_points = 0;   // momenta with |k| ≤ K a
  double max_dev = 0.0;    // max |E(k)/a − √(m² + (k/a)²)| over the window
  double fitted_m = 0.0;   // E(0)/a
};

struct ContinuumReport {
  double m = 1.0;
  std::vector<Refinement> refinements;
  std::vector<double> orders;  // log2(dev_i / dev_{i+1})
  double order_estimate = 0.0; // least-squares slope of −log2 dev against log2(1/a)
  bool monotone = false;
};

struct ContinuumConfig {
  double m = 1.0;
  std::vector<double> spacings{1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64};
  double window = 1.0;  // |k/a| ≤ window
  double length = 64.0; // physical ring length; N = length / a, rounded to even
};

/// Positive quasi-energy band of the split-step walk with θ1 = θ2 = m a / 2 compared with √(m² + q²),
/// q = k/a. Aborts if a window momentum is branch-flagged or the gap is closed (for m > 0).
inline ContinuumReport dirac_continuum_check(const ContinuumConfig& cfg) {
  if (cfg.spacings.size() < 3) throw invalid_argument("continuum check needs at least 3 refinements");
  if (!(cfg.m >= 0.0) || !(cfg.window > 0.0) || !(cfg.length > 0.0)) throw invalid_argument("invalid continuum config");
  ContinuumReport rep;
  rep.m = cfg.m;
  for (double a : cfg.spacings) {
    if (!(a > 0.0)) throw invalid_argument("lattice spacing must be positive");
    Refinement r;
    r.a = a;
    r.theta = cfg.m * a / 2.0;
    r.lattice_size = 2 * static_cast<int>(std::lround(cfg.length / a / 2.0));
    if (r.lattice_size < 2) throw invalid_argument("ring too short for the lattice spacing");
    const MomentumGrid grid(r.lattice_size);
    const WalkSpec spec = WalkSpec::split_step(r.theta, r.theta, r.lattice_size);
    double gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j < grid.size(); ++j) {
      const double k = grid.k(j);
      if (std::abs(k) > cfg.window * a + 1e-12) continue;
      const PrincipalLog pl = principal_log(bloch_matrix(spec, k));
      if (pl.branch_flag) {
        throw Error(ErrorKind::tolerance, "branch-flagged quasi-energy at k = " + std::to_string(k) + " in the window");
      }
      const double e = std::abs(pl.energy);
      gap = std::min(gap, 2.0 * e);
      const double q = k / a;
      r.max_dev = std::max(r.max_dev, std::abs(e / a - std::sqrt(cfg.m * cfg.m + q * q)));
      if (std::abs(k) < 1e-15) r.fitted_m = e / a;
      ++r.window_points;
    }
    if (r.window_points == 0) throw invalid_argument("momentum window contains no grid points");
    if (cfg.m > 0.0 && gap <= gap_tol) throw Error(ErrorKind::tolerance, "gap closed in the momentum window");
    rep.refinements.push_back(r);
  }
  rep.monotone = true;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t i = 0; i < rep.refinements.size(); ++i) {
    const auto& r = rep.refinements[i];
    if (i + 1 < rep.refinements.size()) {
      const auto& next = rep.refinements[i + 1];
      rep.monotone = rep.monotone && next.max_dev < r.max_dev;
      if (r.max_dev > 0.0 && next.max_dev > 0.0) rep.orders.push_back(std::log2(r.max_dev / next.max_dev) / std::log2(r.a / next.a));
    }
    if (r.max_dev > 0.0) {
      const double x = std::log2(1.0 / r.a), y = -std::log2(r.max_dev);
      sx += x, sy += y, sxx += x * x, sxy += x * y, ++count;
    }
  }
  if (count >= 2) rep.order_estimate = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return rep;
}

}  // namespace qwsi
