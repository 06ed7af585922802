// SPDX-License-Identifier: Apache-2.0
#pragma once

// Finite groups as Cayley tables, group actions on finite sets, permutation groups,
// semidirect products, orbits and stabilizers (little groups).

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "qwsi/errors.hpp"

namespace qwsi {

using Permutation = std::vector<int>;

/// (a∘b)[x] = a[b[x]]: apply b first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

inline Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<int>(x);
  return out;
}

inline Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_permutation_of(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

class FiniteGroup {
 public:
  /// Largest order for which associativity is verified over all triples on construction.
  static constexpr int associativity_check_limit = 64;

  FiniteGroup() = default;

  /// Validates closure, identity, inverses and (for order ≤ 64) associativity.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw invalid_argument("group must have at least one element");
    FiniteGroup g;
    g.order_ = n;
    g.mult_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(table[a].size()) != n) throw invalid_argument("Cayley table must be square");
      for (int b = 0; b < n; ++b) {
        const int c = table[a][b];
        if (c < 0 || c >= n) throw invalid_argument("Cayley table entry out of range");
        g.mult_[static_cast<std::size_t>(a) * n + b] = c;
      }
    }
    g.finish(n <= associativity_check_limit);
    return g;
  }

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  std::vector<std::vector<int>> cayley_table() const {
    std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b) t[a][b] = mul(a, b);
    return t;
  }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Number of elements of each order.
  std::map<int, int> order_census() const {
    std::map<int, int> c;
    for (int a = 0; a < order_; ++a) ++c[element_order(a)];
    return c;
  }

 private:
  friend FiniteGroup group_from_unchecked_table(std::vector<int> mult, int n);

  void finish(bool check_associativity) {
    const int n = order_;
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw invalid_argument("Cayley table has no identity element");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (mul(a, b) == identity_ && mul(b, a) == identity_) {
          inverse_[a] = b;
          break;
        }
      }
      if (inverse_[a] < 0) throw invalid_argument("element " + std::to_string(a) + " has no inverse");
    }
    if (check_associativity) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
              throw invalid_argument("Cayley table is not associative at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
            }
    }
  }

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mult_;
  std::vector<int> inverse_;
};

/// Table built from a construction that is associative by design (composition of permutations).
inline FiniteGroup group_from_unchecked_table(std::vector<int> mult, int n) {
  FiniteGroup g;
  g.order_ = n;
  g.mult_ = std::move(mult);
  g.finish(false);
  return g;
}

/// Action of a finite group on {0, …, set_size−1}.
class GroupAction {
 public:
  GroupAction(FiniteGroup group, int set_size, std::vector<int> table)
      : group_(std::move(group)), set_size_(set_size), table_(std::move(table)) {
    if (set_size < 0 || table_.size() != static_cast<std::size_t>(group_.order()) * set_size) {
      throw invalid_argument("action table must have |G|·|X| entries");
    }
    for (int v : table_)
      if (v < 0 || v >= set_size_) throw invalid_argument("action table entry out of range");
    for (int x = 0; x < set_size_; ++x)
      if (act(group_.identity(), x) != x) throw invalid_argument("identity does not act trivially");
    for (int g1 = 0; g1 < group_.order(); ++g1)
      for (int g2 = 0; g2 < group_.order(); ++g2)
        for (int x = 0; x < set_size_; ++x)
          if (act(group_.mul(g1, g2), x) != act(g1, act(g2, x))) {
            throw invalid_argument("action is not compatible with the group law");
          }
  }

  const FiniteGroup& group() const { return group_; }
  int set_size() const { return set_size_; }
  int act(int g, int x) const { return table_[static_cast<std::size_t>(g) * set_size_ + x]; }

  Permutation permutation(int g) const {
    Permutation p(set_size_);
    for (int x = 0; x < set_size_; ++x) p[x] = act(g, x);
    return p;
  }

 private:
  FiniteGroup group_;
  int set_size_;
  std::vector<int> table_;
};

// ---------------------------------------------------------------------------
// constructions

inline FiniteGroup cyclic(int n) {
  if (n < 1) throw invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_cayley_table(t);
}

/// A permutation group together with its elements (element 0 is the identity).
struct PermutationGroup {
  FiniteGroup group;
  std::vector<Permutation> elements;
  int degree = 0;

  GroupAction natural_action() const {
    std::vector<int> table;
    table.reserve(elements.size() * degree);
    for (const auto& p : elements) table.insert(table.end(), p.begin(), p.end());
    return GroupAction(group, degree, std::move(table));
  }
};

/// Closure of the generators under composition. Refuses groups larger than `max_order`.
inline PermutationGroup generate_permutation_group(const std::vector<Permutation>& generators, int degree,
                                                   int max_order = 5040) {
  for (const auto& gen : generators)
    if (!is_permutation_of(gen, degree)) throw invalid_argument("generator is not a permutation of the degree");
  PermutationGroup pg;
  pg.degree = degree;
  std::map<Permutation, int> index;
  pg.elements.push_back(identity_permutation(degree));
  index[pg.elements[0]] = 0;
  for (std::size_t i = 0; i < pg.elements.size(); ++i) {
    for (const auto& gen : generators) {
      Permutation p = compose(gen, pg.elements[i]);
      if (!index.count(p)) {
        if (static_cast<int>(pg.elements.size()) >= max_order) {
          throw Error(ErrorKind::search_limit, "permutation group exceeds " + std::to_string(max_order) + " elements");
        }
        index[p] = static_cast<int>(pg.elements.size());
        pg.elements.push_back(std::move(p));
      }
    }
  }
  const int n = static_cast<int>(pg.elements.size());
  std::vector<int> mult(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>(a) * n + b] = index.at(compose(pg.elements[a], pg.elements[b]));
  pg.group = group_from_unchecked_table(std::move(mult), n);
  return pg;
}

/// Symmetries of the regular n-gon acting on its vertices (order 2n).
inline PermutationGroup dihedral(int n) {
  if (n < 3) throw invalid_argument("dihedral group needs n >= 3");
  Permutation rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return generate_permutation_group({rot, refl}, n);
}

inline PermutationGroup symmetric(int n) {
  if (n < 1) throw invalid_argument("symmetric group needs n >= 1");
  if (n == 1) return generate_permutation_group({}, 1);
  Permutation swap01 = identity_permutation(n), cycle(n);
  std::swap(swap01[0], swap01[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return generate_permutation_group({swap01, cycle}, n);
}

/// H ⋊ A on pairs (h, a), element index h·|A| + a, with
///   (h1,a1)(h2,a2) = (h1h2, a1·t_{h1}[a2]),   (h,a)⁻¹ = (h⁻¹, t_{h⁻¹}[a⁻¹]).
/// `automorphisms[h]` is t_h as a permutation of A's elements.
inline FiniteGroup semidirect_product(const FiniteGroup& h, const FiniteGroup& a,
                                      const std::vector<Permutation>& automorphisms) {
  const int nh = h.order(), na = a.order();
  if (static_cast<int>(automorphisms.size()) != nh) throw invalid_argument("need one automorphism per element of H");
  for (int x = 0; x < nh; ++x) {
    const auto& t = automorphisms[x];
    if (!is_permutation_of(t, na)) throw invalid_argument("t_h is not a bijection of A");
    for (int a1 = 0; a1 < na; ++a1)
      for (int a2 = 0; a2 < na; ++a2)
        if (t[a.mul(a1, a2)] != a.mul(t[a1], t[a2])) {
          throw invalid_argument("t_" + std::to_string(x) + " is not an automorphism of A");
        }
  }
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y)
      if (automorphisms[h.mul(x, y)] != compose(automorphisms[x], automorphisms[y])) {
        throw invalid_argument("h -> t_h is not a homomorphism");
      }

  std::vector<std::vector<int>> table(nh * na, std::vector<int>(nh * na));
  for (int h1 = 0; h1 < nh; ++h1)
    for (int a1 = 0; a1 < na; ++a1)
      for (int h2 = 0; h2 < nh; ++h2)
        for (int a2 = 0; a2 < na; ++a2)
          table[h1 * na + a1][h2 * na + a2] = h.mul(h1, h2) * na + a.mul(a1, automorphisms[h1][a2]);
  return FiniteGroup::from_cayley_table(table);
}

/// (h,a)⁻¹ = (h⁻¹, t_{h⁻¹}[a⁻¹]) as an element index of semidirect_product(h, a, automorphisms).
inline int semidirect_inverse(const FiniteGroup& h, const FiniteGroup& a, const std::vector<Permutation>& automorphisms,
                              int element) {
  const int na = a.order();
  const int hi = h.inv(element / na);
  return hi * na + automorphisms[hi][a.inv(element % na)];
}

inline FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& a) {
  return semidirect_product(h, a, std::vector<Permutation>(h.order(), identity_permutation(a.order())));
}

/// Automorphisms a ↦ r^h·a of Z_n indexed by h ∈ Z_m. Requires r^m ≡ 1 (mod n).
inline std::vector<Permutation> cyclic_power_automorphisms(int n, int m, int r) {
  std::vector<Permutation> out;
  long long mult = 1;
  for (int h = 0; h < m; ++h) {
    Permutation p(n);
    for (int x = 0; x < n; ++x) p[x] = static_cast<int>((mult * x) % n);
    out.push_back(std::move(p));
    mult = (mult * r) % n;
  }
  return out;
}

/// Z_n ⋊ Z_m with the generator of Z_m acting as multiplication by r.
inline FiniteGroup cyclic_semidirect(int n, int m, int r) {
  r = ((r % n) + n) % n;
  return semidirect_product(cyclic(m), cyclic(n), cyclic_power_automorphisms(n, m, r));
}

// ---------------------------------------------------------------------------
// standard actions

/// g·x = gx on the group's own elements.
inline GroupAction left_regular_action(const FiniteGroup& g) {
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(g.order()) * g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x) t.push_back(g.mul(a, x));
  return GroupAction(g, g.order(), std::move(t));
}

/// g·x = x g⁻¹.
inline GroupAction right_regular_action(const FiniteGroup& g) {
  std::vector<int> t;
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x) t.push_back(g.mul(x, g.inv(a)));
  return GroupAction(g, g.order(), std::move(t));
}

/// g·x = g x g⁻¹.
inline GroupAction conjugation_action(const FiniteGroup& g) {
  std::vector<int> t;
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x) t.push_back(g.mul(g.mul(a, x), g.inv(a)));
  return GroupAction(g, g.order(), std::move(t));
}

inline GroupAction trivial_action(const FiniteGroup& g, int set_size) {
  std::vector<int> t;
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < set_size; ++x) t.push_back(x);
  return GroupAction(g, set_size, std::move(t));
}

// ---------------------------------------------------------------------------
// orbits and little groups

inline std::vector<int> orbit(const GroupAction& action, int x) {
  if (x < 0 || x >= action.set_size()) throw invalid_argument("point outside the acted-on set");
  std::vector<bool> seen(action.set_size(), false);
  for (int g = 0; g < action.group().order(); ++g) seen[action.act(g, x)] = true;
  std::vector<int> out;
  for (int y = 0; y < action.set_size(); ++y)
    if (seen[y]) out.push_back(y);
  return out;
}

/// A subgroup with its own Cayley table; `elements[i]` is the parent index of subgroup element i.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> elements;
};

inline Subgroup subgroup(const FiniteGroup& parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<int> local(parent.order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) local[elements[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(elements.size(), std::vector<int>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const int c = local[parent.mul(elements[i], elements[j])];
      if (c < 0) throw invalid_argument("subset is not closed under the group product");
      table[i][j] = c;
    }
  return Subgroup{FiniteGroup::from_cayley_table(table), std::move(elements)};
}

/// {g : g·x = x}.
inline Subgroup stabilizer(const GroupAction& action, int x) {
  if (x < 0 || x >= action.set_size()) throw invalid_argument("point outside the acted-on set");
  std::vector<int> fix;
  for (int g = 0; g < action.group().order(); ++g)
    if (action.act(g, x) == x) fix.push_back(g);
  return subgroup(action.group(), std::move(fix));
}

/// All orbits, each sorted, ordered by smallest element.
inline std::vector<std::vector<int>> orbits(const GroupAction& action) {
  std::vector<bool> done(action.set_size(), false);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < action.set_size(); ++x) {
    if (done[x]) continue;
    auto o = orbit(action, x);
    for (int y : o) done[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

inline bool is_transitive(const GroupAction& action) { return orbits(action).size() <= 1; }

/// Left cosets gH of a subgroup, as a partition of the group's elements.
inline std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const std::vector<int>& sub) {
  std::vector<bool> done(g.order(), false);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    std::vector<int> coset;
    for (int h : sub) coset.push_back(g.mul(a, h));
    std::sort(coset.begin(), coset.end());
    for (int c : coset) done[c] = true;
    out.push_back(std::move(coset));
  }
  return out;
}

inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) { return orbits(conjugation_action(g)); }

}  // namespace qwsi
