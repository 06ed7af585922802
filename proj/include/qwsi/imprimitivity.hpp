// SPDX-License-Identifier: Apache-2.0
#pragma once

// Permutation (regular) representations, projection-valued measures and the covariance relation
//   U_g P_E U_g⁻¹ = P_{g·E}
// of a system of imprimitivity, for finite groups and for graph automorphism groups acting on
// the strata of a rooted graph.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwsi/errors.hpp"
#include "qwsi/graph.hpp"
#include "qwsi/group.hpp"
#include "qwsi/int_matrix.hpp"
#include "qwsi/linalg.hpp"
#include "qwsi/stratification.hpp"

namespace qwsi {

/// Unitary representation by permutation matrices: U_g δ_x = δ_{g·x}, i.e. (U_g f)(x) = f(g⁻¹x).
class PermutationRep {
 public:
  explicit PermutationRep(const GroupAction& action) : group_(action.group()), dim_(action.set_size()) {
    for (int g = 0; g < group_.order(); ++g) perms_.push_back(action.permutation(g));
  }

  const FiniteGroup& group() const { return group_; }
  int dim() const { return dim_; }
  const Permutation& permutation(int g) const { return perms_[g]; }

  /// (U_g)_{yx} = 1 iff y = g·x.
  IntMatrix matrix(int g) const {
    IntMatrix m(dim_, dim_);
    for (int x = 0; x < dim_; ++x) m(perms_[g][x], x) = 1;
    return m;
  }

  MatrixXc complex_matrix(int g) const {
    MatrixXc m = MatrixXc::Zero(dim_, dim_);
    for (int x = 0; x < dim_; ++x) m(perms_[g][x], x) = 1.0;
    return m;
  }

  /// trace(U_g): the number of fixed points.
  std::int64_t character(int g) const {
    std::int64_t c = 0;
    for (int x = 0; x < dim_; ++x) c += perms_[g][x] == x;
    return c;
  }

  /// max_{g1,g2} ‖U_{g1g2} − U_{g1}U_{g2}‖_max, computed with integer matrix products.
  std::int64_t homomorphism_defect() const {
    std::int64_t worst = (matrix(group_.identity()) - IntMatrix::identity(dim_)).max_abs();
    for (int a = 0; a < group_.order(); ++a) {
      const IntMatrix ua = matrix(a);
      for (int b = 0; b < group_.order(); ++b) {
        worst = std::max(worst, (matrix(group_.mul(a, b)) - ua * matrix(b)).max_abs());
      }
    }
    return worst;
  }

 private:
  FiniteGroup group_;
  int dim_;
  std::vector<Permutation> perms_;
};

/// Left regular representation on L²(G).
inline PermutationRep regular_representation(const FiniteGroup& g) { return PermutationRep(left_regular_action(g)); }

inline PermutationRep right_regular_representation(const FiniteGroup& g) {
  return PermutationRep(right_regular_action(g));
}

/// Orthogonal projection family. Set projections are diagonal 0/1 and remember their base sets.
struct PVM {
  enum class Kind { set, rank_one };

  Kind kind = Kind::set;
  int dim = 0;
  std::vector<MatrixXc> projections;
  std::vector<std::vector<int>> base_sets;  // kind == set, or the supports of rank-one vectors

  int size() const { return static_cast<int>(projections.size()); }

  /// ‖Σ_i P_i − I‖_max.
  double resolution_defect() const {
    MatrixXc sum = MatrixXc::Zero(dim, dim);
    for (const auto& p : projections) sum += p;
    return max_abs(sum - MatrixXc::Identity(dim, dim));
  }

  /// max_{i,j} ‖P_iP_j − δ_ij P_i‖_max, and Hermiticity.
  double orthogonality_defect() const {
    double worst = 0.0;
    for (int i = 0; i < size(); ++i) {
      worst = std::max(worst, max_abs(projections[i] - projections[i].adjoint()));
      for (int j = 0; j < size(); ++j) {
        const MatrixXc target = i == j ? projections[i] : MatrixXc::Zero(dim, dim);
        worst = std::max(worst, max_abs(projections[i] * projections[j] - target));
      }
    }
    return worst;
  }
};

/// Diagonal projections onto the blocks of a partition of {0, …, dim−1}.
inline PVM pvm_from_partition(const std::vector<std::vector<int>>& partition, int dim) {
  std::vector<int> owner(dim, -1);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (int x : partition[i]) {
      if (x < 0 || x >= dim) throw invalid_argument("partition element out of range");
      if (owner[x] >= 0) throw invalid_argument("partition blocks overlap at " + std::to_string(x));
      owner[x] = static_cast<int>(i);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw invalid_argument("partition does not cover the set");
  }
  PVM pvm;
  pvm.kind = PVM::Kind::set;
  pvm.dim = dim;
  for (const auto& block : partition) {
    MatrixXc p = MatrixXc::Zero(dim, dim);
    for (int x : block) p(x, x) = 1.0;
    pvm.projections.push_back(std::move(p));
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    pvm.base_sets.push_back(std::move(sorted));
  }
  return pvm;
}

/// Rank-one projections |Φ_n⟩⟨Φ_n| / ⟨Φ_n,Φ_n⟩. They resolve the identity only on span{Φ_n}.
inline PVM pvm_from_strata(const std::vector<std::vector<std::int64_t>>& strata_vectors) {
  PVM pvm;
  pvm.kind = PVM::Kind::rank_one;
  pvm.dim = strata_vectors.empty() ? 0 : static_cast<int>(strata_vectors.front().size());
  for (const auto& phi : strata_vectors) {
    if (static_cast<int>(phi.size()) != pvm.dim) throw invalid_argument("strata vectors differ in length");
    VectorXc v(pvm.dim);
    std::vector<int> support;
    for (int x = 0; x < pvm.dim; ++x) {
      v[x] = static_cast<double>(phi[x]);
      if (phi[x] != 0) support.push_back(x);
    }
    const double nn = v.squaredNorm();
    if (nn == 0.0) throw invalid_argument("strata vector is zero");
    pvm.projections.push_back(v * v.adjoint() / nn);
    pvm.base_sets.push_back(std::move(support));
  }
  return pvm;
}

/// Full-rank strata projections P_n = Σ_{x∈V_n} |δ_x⟩⟨δ_x|; a resolution of the identity on L²(V).
inline PVM pvm_from_strata_subspaces(const Stratification& s, int dim) { return pvm_from_partition(s.strata, dim); }

/// Index action of a group on the blocks of a partition, induced from an action on the points.
/// Throws if some g maps a block onto a set that is not a block.
inline std::vector<Permutation> induced_block_action(const GroupAction& action,
                                                     const std::vector<std::vector<int>>& blocks) {
  std::vector<int> owner(action.set_size(), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int x : blocks[i]) owner[x] = static_cast<int>(i);
  std::vector<Permutation> out;
  for (int g = 0; g < action.group().order(); ++g) {
    Permutation p(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const int target = blocks[i].empty() ? -1 : owner[action.act(g, blocks[i].front())];
      for (int x : blocks[i])
        if (target < 0 || owner[action.act(g, x)] != target) {
          throw invalid_argument("group element " + std::to_string(g) + " does not map block " + std::to_string(i) +
                                 " onto a block");
        }
      p[i] = target;
    }
    if (!is_permutation_of(p, static_cast<int>(blocks.size()))) {
      throw invalid_argument("induced block action is not a permutation");
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// max_{a,b} |(U P U⁻¹)_{ab} − Q_{ab}| for a permutation U, using (U P U⁻¹)_{π(x),π(y)} = P_{xy}.
inline double conjugation_residual(const Permutation& perm, const MatrixXc& p, const MatrixXc& q) {
  double worst = 0.0;
  const int n = static_cast<int>(perm.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) worst = std::max(worst, std::abs(p(x, y) - q(perm[x], perm[y])));
  return worst;
}

/// max over g, E of ‖U_g P_E U_g⁻¹ − P_{g·E}‖_max, where g·E is given by `index_action[g]`.
/// Structural problems (sizes, non-permutations) are reported as errors before any residual.
inline double verify_si(const PermutationRep& rep, const PVM& pvm, const std::vector<Permutation>& index_action) {
  if (rep.dim() != pvm.dim) throw invalid_argument("representation and PVM act on different spaces");
  if (static_cast<int>(index_action.size()) != rep.group().order()) {
    throw invalid_argument("index action needs one permutation per group element");
  }
  for (const auto& p : index_action)
    if (!is_permutation_of(p, pvm.size())) throw invalid_argument("index action does not permute the PVM base sets");
  double worst = 0.0;
  for (int g = 0; g < rep.group().order(); ++g)
    for (int e = 0; e < pvm.size(); ++e)
      worst = std::max(worst, conjugation_residual(rep.permutation(g), pvm.projections[e], pvm.projections[index_action[g][e]]));
  return worst;
}

/// Negative control: the index action with the images of every g rotated by one place.
inline std::vector<Permutation> scrambled_index_action(const std::vector<Permutation>& index_action) {
  std::vector<Permutation> out = index_action;
  for (auto& p : out)
    if (p.size() > 1) std::rotate(p.begin(), p.begin() + 1, p.end());
  return out;
}

// ---------------------------------------------------------------------------
// graph automorphisms and the graph system of imprimitivity

inline constexpr int max_automorphism_search_vertices = 16;

/// All automorphisms of g by backtracking. Candidate images must match the vertex's degree and
/// distance profile and preserve distances to every vertex mapped so far.
inline std::vector<Permutation> find_automorphisms(const Graph& g) {
  const int n = g.order();
  if (n > max_automorphism_search_vertices) {
    throw Error(ErrorKind::search_limit, "automorphism search is limited to " +
                                             std::to_string(max_automorphism_search_vertices) +
                                             " vertices; supply generators instead");
  }
  const auto dist = all_pairs_distances(g);
  std::vector<std::vector<int>> profile(n, std::vector<int>(n + 1, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) ++profile[x][dist[x][y] < 0 ? n : dist[x][y]];

  // visit vertices in BFS order from each component root so that distances constrain early
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  for (int r = 0; r < n; ++r) {
    if (placed[r]) continue;
    const auto d = bfs_distances(g, r);
    std::vector<int> comp;
    for (int x = 0; x < n; ++x)
      if (d[x] >= 0 && !placed[x]) comp.push_back(x);
    std::stable_sort(comp.begin(), comp.end(), [&](int a, int b) { return d[a] < d[b]; });
    for (int x : comp) placed[x] = true, order.push_back(x);
  }

  std::vector<Permutation> found;
  Permutation image(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      found.push_back(image);
      return;
    }
    const int u = order[depth];
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || g.degree(cand) != g.degree(u) || profile[cand] != profile[u]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        const int v = order[i];
        ok = dist[u][v] == dist[cand][image[v]];
      }
      if (!ok) continue;
      image[u] = cand;
      used[cand] = true;
      self(self, depth + 1);
      used[cand] = false;
      image[u] = -1;
    }
  };
  extend(extend, 0);
  return found;
}

inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (!is_permutation_of(p, g.order())) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p[u], p[v])) return false;
  return true;
}

struct GraphSIReport {
  int group_order = 0;
  double residual = 0.0;               // strata-subspace PVM, base point moved to g·o
  double rank_one_residual = 0.0;      // |Φ_n⟩⟨Φ_n| variant
  double fixed_origin_residual = 0.0;  // control: compared against P_n(o) instead of P_n(g·o)
  double resolution_defect = 0.0;      // ‖Σ_n P_n(o) − I‖_max
  bool transitive = false;
  std::vector<int> orbit_sizes;
  std::vector<int> stabilizer_orders;  // of the smallest vertex of each orbit
};

/// Checks U_g P_n(o) U_g⁻¹ = P_n(g·o) for every automorphism g and stratum n, where
/// U_g f(x) = f(g⁻¹x). Automorphisms come from `generators` (closed under composition) or, when
/// none are given, from an exhaustive search (at most 16 vertices).
inline GraphSIReport graph_si_check(const Graph& g, int origin,
                                    const std::optional<std::vector<Permutation>>& generators = std::nullopt) {
  require_connected(g);
  if (!g.contains(origin)) throw invalid_argument("origin is not a vertex");
  std::vector<Permutation> autos;
  if (generators) {
    for (const auto& p : *generators)
      if (!is_automorphism(g, p)) throw invalid_argument("generator is not a graph automorphism");
    autos = generate_permutation_group(*generators, g.order()).elements;
  } else {
    autos = find_automorphisms(g);
  }

  const int n = g.order();
  std::vector<PVM> strata_pvm, rank_one_pvm;
  for (int v = 0; v < n; ++v) {
    const Stratification s = stratify(g, v);
    strata_pvm.push_back(pvm_from_strata_subspaces(s, n));
    rank_one_pvm.push_back(pvm_from_strata(strata_vectors(g, s)));
  }

  GraphSIReport rep;
  rep.group_order = static_cast<int>(autos.size());
  rep.resolution_defect = strata_pvm[origin].resolution_defect();
  const PVM& base = strata_pvm[origin];
  for (const auto& p : autos) {
    const int moved = p[origin];
    // automorphisms preserve distance, so g maps V_n(o) onto V_n(g·o) and the depth is shared
    if (strata_pvm[moved].size() != base.size()) throw invalid_argument("strata depth changed under an automorphism");
    for (int k = 0; k < base.size(); ++k) {
      rep.residual = std::max(rep.residual, conjugation_residual(p, base.projections[k], strata_pvm[moved].projections[k]));
      rep.rank_one_residual = std::max(rep.rank_one_residual, conjugation_residual(p, rank_one_pvm[origin].projections[k],
                                                                                   rank_one_pvm[moved].projections[k]));
      rep.fixed_origin_residual =
          std::max(rep.fixed_origin_residual, conjugation_residual(p, base.projections[k], base.projections[k]));
    }
  }

  std::vector<bool> seen(n, false);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    int size = 0, stab = 0;
    std::vector<bool> in_orbit(n, false);
    for (const auto& p : autos) {
      in_orbit[p[v]] = true;
      stab += p[v] == v;
    }
    for (int w = 0; w < n; ++w)
      if (in_orbit[w]) seen[w] = true, ++size;
    rep.orbit_sizes.push_back(size);
    rep.stabilizer_orders.push_back(stab);
  }
  rep.transitive = rep.orbit_sizes.size() == 1;
  return rep;
}

}  // namespace qwsi
