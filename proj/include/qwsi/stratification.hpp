// SPDX-License-Identifier: Apache-2.0
#pragma once

// Rooted-graph stratification, the quantum decomposition A = A⁺ + A⁻ + A°, distance-regularity
// with intersection numbers p^k_{ij}, the Bose–Mesner product identity and the Jacobi sequence
// of the interacting Fock space. All arithmetic is exact (int64, overflow-checked).

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qwsi/errors.hpp"
#include "qwsi/graph.hpp"
#include "qwsi/int_matrix.hpp"

namespace qwsi {

struct Stratification {
  int origin = 0;
  std::vector<std::vector<int>> strata;  // strata[n] = V_n, sorted
  std::vector<int> distance;             // ∂(o, x), −1 if unreachable

  int depth() const { return static_cast<int>(strata.size()) - 1; }
  int stratum_of(int x) const { return distance[x]; }
  int reachable_count() const {
    int c = 0;
    for (const auto& s : strata) c += static_cast<int>(s.size());
    return c;
  }
};

inline Stratification stratify(const Graph& g, int origin) {
  if (!g.contains(origin)) throw invalid_argument("origin " + std::to_string(origin) + " is not a vertex");
  Stratification s;
  s.origin = origin;
  s.distance = bfs_distances(g, origin);
  for (int x = 0; x < g.order(); ++x) {
    const int d = s.distance[x];
    if (d < 0) continue;
    if (d >= static_cast<int>(s.strata.size())) s.strata.resize(d + 1);
    s.strata[d].push_back(x);
  }
  return s;
}

struct QuantumDecomposition {
  IntMatrix plus, minus, zero;
};

/// (A^ε)_{xy} = A_{xy} when y ∈ V_n and x ∈ V_{n+ε}. Edges outside the origin's component are
/// not assigned, so the three parts sum to A only on connected graphs.
inline QuantumDecomposition quantum_decompose(const Graph& g, const Stratification& s) {
  const int n = g.order();
  QuantumDecomposition q{IntMatrix(n, n), IntMatrix(n, n), IntMatrix(n, n)};
  for (int y = 0; y < n; ++y) {
    if (s.distance[y] < 0) continue;
    for (int x : g.neighbors(y)) {
      const int eps = s.distance[x] - s.distance[y];
      if (eps == 1) q.plus(x, y) = 1;
      else if (eps == -1) q.minus(x, y) = 1;
      else if (eps == 0) q.zero(x, y) = 1;
    }
  }
  return q;
}

struct DegreeDecomposition {
  int zero = 0, plus = 0, minus = 0;
  int total() const { return zero + plus + minus; }
  bool operator==(const DegreeDecomposition&) const = default;
};

/// (ω_o, ω_+, ω_−)(x): neighbours of x in the same, next and previous stratum.
inline DegreeDecomposition degree_decomposition(const Graph& g, const Stratification& s, int x) {
  if (!g.contains(x) || s.distance[x] < 0) throw invalid_argument("vertex is not reachable from the origin");
  DegreeDecomposition d;
  for (int y : g.neighbors(x)) {
    const int eps = s.distance[y] - s.distance[x];
    if (eps == 0) ++d.zero;
    else if (eps == 1) ++d.plus;
    else ++d.minus;
  }
  return d;
}

/// Number of m-step walks from x to y, (A^m)_{xy}.
inline std::int64_t walk_count(const Graph& g, int x, int y, int m) {
  if (!g.contains(x) || !g.contains(y)) throw invalid_argument("walk endpoints must be vertices");
  if (m < 0) throw invalid_argument("walk length must be non-negative");
  return g.adjacency().pow(m)(x, y);
}

/// ⟨δ_o, A^m δ_o⟩.
inline std::int64_t vacuum_moment(const Graph& g, int origin, int m) { return walk_count(g, origin, origin, m); }

inline int diameter(const Graph& g) {
  require_connected(g);
  int d = 0;
  for (const auto& row : all_pairs_distances(g))
    for (int v : row) d = std::max(d, v);
  return d;
}

/// (A_k)_{xy} = 1 iff ∂(x,y) = k.
inline IntMatrix distance_adjacency(const Graph& g, int k) {
  require_connected(g);
  if (k < 0) throw invalid_argument("distance must be non-negative");
  const auto d = all_pairs_distances(g);
  IntMatrix a(g.order(), g.order());
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (d[x][y] == k) a(x, y) = 1;
  return a;
}

inline std::vector<IntMatrix> distance_adjacencies(const Graph& g) {
  const int dia = diameter(g);
  std::vector<IntMatrix> out;
  for (int k = 0; k <= dia; ++k) out.push_back(distance_adjacency(g, k));
  return out;
}

struct IntersectionNumbers {
  int diameter = 0;
  std::vector<std::vector<std::vector<std::int64_t>>> p;  // p[k][i][j] = p^k_{ij}

  std::int64_t at(int k, int i, int j) const { return p[k][i][j]; }
};

/// A pair (x, y) whose count |{z : ∂(x,z)=i, ∂(y,z)=j}| differs from the reference pair at the same distance.
struct RegularityWitness {
  int x = 0, y = 0, k = 0, i = 0, j = 0;
  std::int64_t count = 0;
  int ref_x = 0, ref_y = 0;
  std::int64_t ref_count = 0;

  std::string describe() const {
    return "pair (" + std::to_string(x) + "," + std::to_string(y) + ") at distance " + std::to_string(k) +
           " has " + std::to_string(count) + " vertices at distances (" + std::to_string(i) + "," +
           std::to_string(j) + ") but pair (" + std::to_string(ref_x) + "," + std::to_string(ref_y) + ") has " +
           std::to_string(ref_count);
  }
};

struct DistanceRegularity {
  bool regular = false;
  std::optional<IntersectionNumbers> numbers;
  std::optional<RegularityWitness> witness;
};

inline DistanceRegularity is_distance_regular(const Graph& g) {
  require_connected(g);
  const auto d = all_pairs_distances(g);
  const int n = g.order();
  int dia = 0;
  for (const auto& row : d)
    for (int v : row) dia = std::max(dia, v);

  using Table = std::vector<std::vector<std::int64_t>>;
  std::vector<std::optional<Table>> ref(dia + 1);
  std::vector<std::pair<int, int>> ref_pair(dia + 1);
  Table count(dia + 1, std::vector<std::int64_t>(dia + 1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int k = d[x][y];
      for (auto& row : count) std::fill(row.begin(), row.end(), 0);
      for (int z = 0; z < n; ++z) ++count[d[x][z]][d[y][z]];
      if (!ref[k]) {
        ref[k] = count;
        ref_pair[k] = {x, y};
        continue;
      }
      for (int i = 0; i <= dia; ++i) {
        for (int j = 0; j <= dia; ++j) {
          if (count[i][j] != (*ref[k])[i][j]) {
            DistanceRegularity out;
            out.witness = RegularityWitness{x, y, k, i, j, count[i][j], ref_pair[k].first, ref_pair[k].second,
                                            (*ref[k])[i][j]};
            return out;
          }
        }
      }
    }
  }
  IntersectionNumbers p;
  p.diameter = dia;
  for (int k = 0; k <= dia; ++k) p.p.push_back(*ref[k]);
  return DistanceRegularity{true, std::move(p), std::nullopt};
}

/// max_{i,j} ‖A_iA_j − Σ_{k=|i−j|}^{i+j} p^k_{ij}A_k‖_max.
inline std::int64_t verify_bose_mesner(const Graph& g, const IntersectionNumbers& p) {
  const auto a = distance_adjacencies(g);
  const int dia = static_cast<int>(a.size()) - 1;
  if (dia != p.diameter) throw invalid_argument("intersection numbers do not match the graph diameter");
  std::int64_t worst = 0;
  for (int i = 0; i <= dia; ++i) {
    for (int j = 0; j <= dia; ++j) {
      IntMatrix rhs(g.order(), g.order());
      for (int k = std::abs(i - j); k <= std::min(i + j, dia); ++k) rhs = rhs + p.at(k, i, j) * a[k];
      worst = std::max(worst, (a[i] * a[j] - rhs).max_abs());
    }
  }
  return worst;
}

struct JacobiSequence {
  // omega[n-1] = ω_n for n = 1..D, also kept as the exact fraction num/den
  std::vector<double> omega;
  std::vector<std::int64_t> omega_num, omega_den;
  // alpha[n-1] = α_n = ω_o(y), y ∈ V_{n−1}, for n = 1..D+1
  std::vector<std::int64_t> alpha;
};

/// Raised when representatives of one stratum disagree on ω_−(y) or ω_o(y).
class JacobiMismatch : public Error {
 public:
  JacobiMismatch(const std::string& quantity, int stratum, int y, std::int64_t value, int ref_y, std::int64_t ref_value)
      : Error(ErrorKind::invalid_graph,
              quantity + " is not constant on stratum " + std::to_string(stratum) + ": vertex " + std::to_string(y) +
                  " has " + std::to_string(value) + ", vertex " + std::to_string(ref_y) + " has " +
                  std::to_string(ref_value)),
        stratum(stratum), vertex(y), ref_vertex(ref_y) {}

  int stratum, vertex, ref_vertex;
};

/// ω_n = |V_n|/|V_{n−1}|·ω_−(y)², y ∈ V_n;  α_n = ω_o(y), y ∈ V_{n−1}.
/// Representative-independence is checked over every vertex of every stratum.
inline JacobiSequence jacobi_sequence(const Graph& g, int origin) {
  require_connected(g);
  const Stratification s = stratify(g, origin);
  JacobiSequence out;
  for (int n = 0; n <= s.depth(); ++n) {
    const auto& layer = s.strata[n];
    const int ref_y = layer.front();
    const DegreeDecomposition ref = degree_decomposition(g, s, ref_y);
    for (int y : layer) {
      const DegreeDecomposition dd = degree_decomposition(g, s, y);
      if (n > 0 && dd.minus != ref.minus) throw JacobiMismatch("omega_minus", n, y, dd.minus, ref_y, ref.minus);
      if (dd.zero != ref.zero) throw JacobiMismatch("omega_o", n, y, dd.zero, ref_y, ref.zero);
    }
    out.alpha.push_back(ref.zero);
    if (n > 0) {
      std::int64_t num = static_cast<std::int64_t>(layer.size()) * ref.minus * ref.minus;
      std::int64_t den = static_cast<std::int64_t>(s.strata[n - 1].size());
      const std::int64_t gcd = std::gcd(num, den);
      num /= gcd, den /= gcd;
      out.omega_num.push_back(num);
      out.omega_den.push_back(den);
      out.omega.push_back(static_cast<double>(num) / static_cast<double>(den));
    }
  }
  return out;
}

/// Φ_n = Σ_{x∈V_n} δ_x.
inline std::vector<std::vector<std::int64_t>> strata_vectors(const Graph& g, const Stratification& s) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& layer : s.strata) {
    std::vector<std::int64_t> phi(g.order(), 0);
    for (int x : layer) phi[x] = 1;
    out.push_back(std::move(phi));
  }
  return out;
}

/// ⟨Φ_i, A Φ_j⟩ for all strata pairs; tridiagonal for every rooted graph.
inline IntMatrix strata_action(const Graph& g, const Stratification& s) {
  const auto phi = strata_vectors(g, s);
  const IntMatrix a = g.adjacency();
  const int m = static_cast<int>(phi.size());
  IntMatrix out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::int64_t v = 0;
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) v += phi[i][x] * a(x, y) * phi[j][y];
      out(i, j) = v;
    }
  return out;
}

}  // namespace qwsi
