// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "qwsi/group.hpp"
#include "qwsi/testing/oracles.hpp"

using namespace qwsi;

namespace {

std::vector<std::vector<int>> z2_table() { return {{0, 1}, {1, 0}}; }

// Orbit–stabilizer plus the orbit partition, for any action.
void expect_orbit_stabilizer(const GroupAction& action) {
  const int n = action.group().order();
  int covered = 0;
  for (const auto& o : orbits(action)) {
    covered += static_cast<int>(o.size());
    for (int x : o) {
      EXPECT_EQ(static_cast<int>(o.size()) * stabilizer(action, x).group.order(), n);
      EXPECT_EQ(orbit(action, x), o);
    }
  }
  EXPECT_EQ(covered, action.set_size());
}

}  // namespace

TEST(Cayley, CyclicGroupAxioms) {
  const FiniteGroup g = cyclic(5);
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.identity(), 0);
  for (int a = 0; a < 5; ++a) {
    EXPECT_EQ(g.mul(a, g.inv(a)), 0);
    EXPECT_EQ(g.element_order(a), a == 0 ? 1 : 5);
  }
  EXPECT_TRUE(g.is_abelian());
}

TEST(Cayley, NonZeroIdentityIndex) {
  const FiniteGroup g = FiniteGroup::from_cayley_table({{1, 0}, {0, 1}});
  EXPECT_EQ(g.identity(), 1);
  EXPECT_EQ(g.inv(0), 0);
}

TEST(Cayley, RejectsMalformedTables) {
  EXPECT_THROW(FiniteGroup::from_cayley_table({}), Error);
  EXPECT_THROW(FiniteGroup::from_cayley_table({{0, 1}, {1}}), Error);
  EXPECT_THROW(FiniteGroup::from_cayley_table({{0, 2}, {1, 0}}), Error);
  EXPECT_THROW(FiniteGroup::from_cayley_table({{0, 1}, {1, 1}}), Error);                     // no inverse for 1
  EXPECT_THROW(FiniteGroup::from_cayley_table({{1, 1}, {1, 1}}), Error);                     // no identity
  EXPECT_THROW(FiniteGroup::from_cayley_table({{0, 1, 2}, {1, 0, 1}, {2, 2, 0}}), Error);    // not associative
}

TEST(Cayley, RoundTrip) {
  const FiniteGroup d = dihedral(5).group;
  EXPECT_EQ(FiniteGroup::from_cayley_table(d.cayley_table()).cayley_table(), d.cayley_table());
}

TEST(Permutations, ComposeAppliesRightFirst) {
  const Permutation a{1, 2, 0}, b{1, 0, 2};
  EXPECT_EQ(compose(a, b), (Permutation{2, 1, 0}));
  EXPECT_EQ(compose(a, inverse(a)), identity_permutation(3));
  EXPECT_FALSE(is_permutation_of({0, 0, 1}, 3));
  EXPECT_FALSE(is_permutation_of({0, 1}, 3));
}

TEST(Permutations, NamedGroupOrders) {
  EXPECT_EQ(dihedral(4).group.order(), 8);
  EXPECT_EQ(dihedral(7).group.order(), 14);
  EXPECT_EQ(symmetric(1).group.order(), 1);
  EXPECT_EQ(symmetric(4).group.order(), 24);
  EXPECT_EQ(symmetric(5).group.order(), 120);
  EXPECT_EQ(dihedral(3).elements[0], identity_permutation(3));
}

TEST(Permutations, GenerationLimit) {
  try {
    generate_permutation_group(symmetric(6).elements, 6, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::search_limit);
  }
  EXPECT_THROW(generate_permutation_group({{0, 0}}, 2), Error);
}

TEST(Semidirect, DihedralFromCyclicPieces) {
  const FiniteGroup d4 = cyclic_semidirect(4, 2, -1);
  EXPECT_EQ(d4.order(), 8);
  EXPECT_FALSE(d4.is_abelian());
  EXPECT_EQ(d4.order_census(), (std::map<int, int>{{1, 1}, {2, 5}, {4, 2}}));
  EXPECT_TRUE(oracle::isomorphic_bruteforce(d4, dihedral(4).group));
}

TEST(Semidirect, SymmetricThreeFromCyclicPieces) {
  const FiniteGroup s3 = cyclic_semidirect(3, 2, -1);
  EXPECT_EQ(s3.order_census(), (std::map<int, int>{{1, 1}, {2, 3}, {3, 2}}));
  EXPECT_TRUE(oracle::isomorphic_bruteforce(s3, symmetric(3).group));
  EXPECT_FALSE(oracle::isomorphic_bruteforce(s3, cyclic(6)));
}

TEST(Semidirect, TrivialTwistIsDirect) {
  const FiniteGroup g = cyclic_semidirect(3, 2, 1);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_TRUE(oracle::isomorphic_bruteforce(g, cyclic(6)));
  EXPECT_EQ(direct_product(cyclic(2), cyclic(3)).cayley_table(), g.cayley_table());
}

TEST(Semidirect, InverseFormula) {
  const FiniteGroup h = cyclic(2), a = cyclic(5);
  const auto t = cyclic_power_automorphisms(5, 2, 4);
  const FiniteGroup g = semidirect_product(h, a, t);
  for (int x = 0; x < g.order(); ++x) EXPECT_EQ(semidirect_inverse(h, a, t, x), g.inv(x));
}

TEST(Semidirect, RejectsBadTwists) {
  const FiniteGroup h = cyclic(2), a = cyclic(4);
  EXPECT_THROW(semidirect_product(h, a, {identity_permutation(4)}), Error);
  EXPECT_THROW(semidirect_product(h, a, {identity_permutation(4), {1, 0, 2, 3}}), Error);  // not an automorphism
  EXPECT_THROW(semidirect_product(cyclic(3), cyclic(3), cyclic_power_automorphisms(3, 3, 2)), Error);  // 2³ ≢ 1
}

TEST(Semidirect, ElementOrdersAgreeWithOracle) {
  for (int n = 3; n <= 7; ++n) {
    const FiniteGroup g = cyclic_semidirect(n, 2, -1);
    const auto orders = oracle::element_orders(g);
    for (int x = 0; x < g.order(); ++x) EXPECT_EQ(g.element_order(x), orders[x]);
    EXPECT_TRUE(oracle::isomorphic_bruteforce(g, dihedral(n).group));
  }
}

TEST(Actions, Validation) {
  const FiniteGroup z2 = FiniteGroup::from_cayley_table(z2_table());
  EXPECT_THROW(GroupAction(z2, 2, {0, 1, 1}), Error);
  EXPECT_THROW(GroupAction(z2, 2, {1, 0, 1, 0}), Error);  // identity moves points
  EXPECT_THROW(GroupAction(z2, 3, {0, 1, 2, 1, 2, 0}), Error);  // 3-cycle squared ≠ identity
  EXPECT_NO_THROW(GroupAction(z2, 3, {0, 1, 2, 1, 0, 2}));
}

TEST(Actions, RegularActionsAreFree) {
  const FiniteGroup g = cyclic_semidirect(4, 2, -1);
  for (const auto& act : {left_regular_action(g), right_regular_action(g)}) {
    EXPECT_TRUE(is_transitive(act));
    for (int x = 0; x < g.order(); ++x) EXPECT_EQ(stabilizer(act, x).group.order(), 1);
  }
}

TEST(Actions, ConjugacyClassesOfD4) {
  const auto classes = conjugacy_classes(cyclic_semidirect(4, 2, -1));
  std::vector<int> sizes;
  for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{1, 1, 2, 2, 2}));
}

TEST(Actions, VertexStabilizerOfSquare) {
  const PermutationGroup d4 = dihedral(4);
  const GroupAction act = d4.natural_action();
  EXPECT_TRUE(is_transitive(act));
  const Subgroup s = stabilizer(act, 0);
  EXPECT_EQ(s.group.order(), 2);
  for (int g : s.elements) EXPECT_EQ(d4.elements[g][0], 0);
  expect_orbit_stabilizer(act);
}

TEST(Actions, TrivialAction) {
  const GroupAction act = trivial_action(cyclic(6), 4);
  EXPECT_EQ(orbits(act).size(), 4u);
  EXPECT_EQ(stabilizer(act, 2).group.order(), 6);
  EXPECT_FALSE(is_transitive(act));
}

TEST(Actions, OrbitStabilizerOnSeveralActions) {
  expect_orbit_stabilizer(conjugation_action(symmetric(4).group));
  expect_orbit_stabilizer(symmetric(4).natural_action());
  expect_orbit_stabilizer(left_regular_action(cyclic_semidirect(5, 4, 2)));
  expect_orbit_stabilizer(trivial_action(dihedral(3).group, 3));
}

TEST(Actions, PointOutOfRange) {
  const GroupAction act = trivial_action(cyclic(2), 2);
  EXPECT_THROW(stabilizer(act, 2), Error);
  EXPECT_THROW(orbit(act, -1), Error);
}

TEST(Subgroups, ClosureAndCosets) {
  const FiniteGroup g = cyclic(6);
  EXPECT_EQ(subgroup(g, {0, 3}).group.order(), 2);
  EXPECT_THROW(subgroup(g, {0, 1}), Error);
  const auto cosets = left_cosets(g, {0, 2, 4});
  EXPECT_EQ(cosets, (std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}}));
}
