// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "qwsi/stratification.hpp"
#include "qwsi/testing/oracles.hpp"

using namespace qwsi;

namespace {

// Floyd–Warshall distances, independent of the BFS in the library.
std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.order(), inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int x = 0; x < n; ++x) {
    d[x][x] = 0;
    for (int y : g.neighbors(x)) d[x][y] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

std::vector<int> sizes(const Stratification& s) {
  std::vector<int> out;
  for (const auto& layer : s.strata) out.push_back(static_cast<int>(layer.size()));
  return out;
}

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::tolerance;
}

}  // namespace

TEST(Corpus, Orders) {
  EXPECT_EQ(corpus::petersen().order(), 10);
  EXPECT_EQ(corpus::petersen().edge_count(), 15);
  EXPECT_EQ(corpus::hypercube(4).edge_count(), 32);
  EXPECT_EQ(corpus::k33_minus_edge().edge_count(), 8);
  EXPECT_EQ(corpus::by_name("K3,4").edge_count(), 12);
  EXPECT_EQ(corpus::by_name("c7").order(), 7);
  EXPECT_THROW(corpus::by_name("x9"), Error);
}

TEST(Distances, MatchFloydWarshall) {
  for (const auto& [name, g] : corpus::standard()) EXPECT_EQ(all_pairs_distances(g), floyd(g)) << name;
}

TEST(Stratify, CompleteGraph) {
  const auto s = stratify(corpus::complete(4), 2);
  EXPECT_EQ(sizes(s), (std::vector<int>{1, 3}));
  EXPECT_EQ(s.strata[0], (std::vector<int>{2}));
}

TEST(Stratify, EvenCycle) {
  const auto s = stratify(corpus::cycle(6), 0);
  EXPECT_EQ(sizes(s), (std::vector<int>{1, 2, 2, 1}));
  EXPECT_EQ(s.strata[3], (std::vector<int>{3}));
}

TEST(Stratify, PathFromEnd) {
  const auto s = stratify(corpus::path(3), 0);
  EXPECT_EQ(sizes(s), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(s.depth(), 2);
}

TEST(Stratify, PartitionsVertexSet) {
  for (const auto& [name, g] : corpus::standard()) {
    for (int o = 0; o < g.order(); ++o) {
      const auto s = stratify(g, o);
      std::vector<int> seen(g.order(), 0);
      for (const auto& layer : s.strata)
        for (int x : layer) ++seen[x];
      EXPECT_EQ(seen, std::vector<int>(g.order(), 1)) << name;
    }
  }
}

TEST(Stratify, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { stratify(corpus::cycle(4), 4); }), ErrorKind::invalid_argument);
}

TEST(Stratify, UnreachableVerticesLeftOut) {
  const auto s = stratify(Graph::from_edges(4, {{0, 1}, {2, 3}}), 0);
  EXPECT_EQ(s.reachable_count(), 2);
  EXPECT_EQ(s.distance[3], -1);
}

TEST(Decompose, ZeroPartVanishesOnBipartite) {
  const Graph g = corpus::cycle(4);
  const auto q = quantum_decompose(g, stratify(g, 0));
  EXPECT_EQ(q.zero.max_abs(), 0);
  EXPECT_EQ(q.plus + q.minus, g.adjacency());
  EXPECT_EQ(q.plus.transpose(), q.minus);
}

TEST(Decompose, TriangleHasZeroPart) {
  const Graph g = corpus::complete(3);
  const auto q = quantum_decompose(g, stratify(g, 0));
  EXPECT_EQ(q.zero(1, 2), 1);
  EXPECT_EQ(q.zero(2, 1), 1);
  EXPECT_EQ(q.plus(1, 0), 1);  // raises V_0 → V_1
  EXPECT_EQ(q.minus(0, 1), 1);
  EXPECT_EQ(q.plus + q.minus + q.zero, g.adjacency());
}

TEST(Decompose, SumsToAdjacencyOnCorpus) {
  for (const auto& [name, g] : corpus::standard()) {
    const auto q = quantum_decompose(g, stratify(g, g.order() - 1));
    EXPECT_EQ(q.plus + q.minus + q.zero, g.adjacency()) << name;
    EXPECT_EQ(q.zero.transpose(), q.zero) << name;
  }
}

TEST(DegreeDecomposition, Examples) {
  const Graph p = corpus::petersen();
  const auto sp = stratify(p, 0);
  const auto d = degree_decomposition(p, sp, sp.strata[2].front());
  EXPECT_EQ((std::array{d.zero, d.plus, d.minus}), (std::array{2, 0, 1}));
  const Graph k = corpus::complete(6);
  const auto dk = degree_decomposition(k, stratify(k, 0), 3);
  EXPECT_EQ((std::array{dk.zero, dk.plus, dk.minus}), (std::array{4, 0, 1}));
  const Graph single(1);
  const auto ds = degree_decomposition(single, stratify(single, 0), 0);
  EXPECT_EQ(ds.total(), 0);
}

TEST(Walks, Counts) {
  EXPECT_EQ(walk_count(corpus::cycle(4), 0, 0, 4), 8);
  EXPECT_EQ(walk_count(corpus::cycle(4), 0, 2, 2), 2);
  const Graph p = corpus::petersen();
  for (int x = 0; x < 10; ++x) EXPECT_EQ(walk_count(p, x, x, 2), p.degree(x));
  EXPECT_EQ(walk_count(p, 0, 0, 0), 1);
  EXPECT_EQ(walk_count(p, 0, 1, 0), 0);
}

TEST(Walks, MatchDepthFirstOracle) {
  for (const auto& [name, g] : corpus::standard()) {
    if (g.order() > 10) continue;
    for (int m = 0; m <= 6; ++m) EXPECT_EQ(vacuum_moment(g, 0, m), oracle::count_closed_walks(g, 0, m)) << name << " m=" << m;
  }
}

TEST(Walks, OddMomentsVanishOnBipartite) {
  for (const char* name : {"c8", "q3", "k33", "p5"})
    for (int m = 1; m <= 9; m += 2) EXPECT_EQ(vacuum_moment(corpus::by_name(name), 0, m), 0) << name;
  EXPECT_EQ(vacuum_moment(corpus::complete(3), 0, 3), 2);
}

TEST(Walks, OverflowIsReported) {
  EXPECT_THROW(walk_count(corpus::complete(8), 0, 0, 40), Error);
  EXPECT_THROW(walk_count(corpus::complete(3), 0, 0, -1), Error);
}

TEST(DistanceAdjacency, PartitionOfAllOnes) {
  const Graph g = corpus::cycle(5);
  const auto a = distance_adjacencies(g);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0], IntMatrix::identity(5));
  EXPECT_EQ(a[1], g.adjacency());
  EXPECT_EQ(a[0] + a[1] + a[2], IntMatrix::constant(5, 5, 1));
  EXPECT_EQ(distance_adjacency(g, 3).max_abs(), 0);
}

TEST(DistanceRegular, CorpusClassification) {
  for (const auto& [name, g] : corpus::standard()) {
    const auto r = is_distance_regular(g);
    const bool is_path = name[0] == 'p' && std::isdigit(static_cast<unsigned char>(name[1]));
    const bool expect = !is_path || g.order() <= 2;
    EXPECT_EQ(r.regular, expect) << name;
    EXPECT_EQ(r.witness.has_value(), !expect) << name;
  }
  EXPECT_FALSE(is_distance_regular(corpus::k33_minus_edge()).regular);
}

TEST(DistanceRegular, WitnessIsGenuine) {
  const Graph g = corpus::k33_minus_edge();
  const auto r = is_distance_regular(g);
  ASSERT_TRUE(r.witness);
  const auto w = *r.witness;
  const auto d = floyd(g);
  EXPECT_EQ(d[w.x][w.y], w.k);
  EXPECT_EQ(d[w.ref_x][w.ref_y], w.k);
  auto count = [&](int x, int y) {
    std::int64_t c = 0;
    for (int z = 0; z < g.order(); ++z) c += d[x][z] == w.i && d[y][z] == w.j;
    return c;
  };
  EXPECT_EQ(count(w.x, w.y), w.count);
  EXPECT_EQ(count(w.ref_x, w.ref_y), w.ref_count);
  EXPECT_NE(w.count, w.ref_count);
}

TEST(DistanceRegular, IntersectionNumbersAgainstBruteCount) {
  for (const char* name : {"petersen", "c7", "k33", "q3"}) {
    const Graph g = corpus::by_name(name);
    const auto r = is_distance_regular(g);
    ASSERT_TRUE(r.numbers) << name;
    const auto d = floyd(g);
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y)
        for (int i = 0; i <= r.numbers->diameter; ++i)
          for (int j = 0; j <= r.numbers->diameter; ++j) {
            std::int64_t c = 0;
            for (int z = 0; z < g.order(); ++z) c += d[x][z] == i && d[y][z] == j;
            ASSERT_EQ(r.numbers->at(d[x][y], i, j), c) << name;
          }
  }
}

TEST(DistanceRegular, HypercubeClosedForm) {
  for (int dim = 2; dim <= 4; ++dim) {
    const auto r = is_distance_regular(corpus::hypercube(dim));
    ASSERT_TRUE(r.numbers);
    for (int k = 0; k <= dim; ++k)
      for (int i = 0; i <= dim; ++i)
        for (int j = 0; j <= dim; ++j) EXPECT_EQ(r.numbers->at(k, i, j), oracle::hypercube_intersection(dim, k, i, j));
  }
}

TEST(DistanceRegular, PetersenValencies) {
  const auto r = is_distance_regular(corpus::petersen());
  ASSERT_TRUE(r.numbers);
  EXPECT_EQ(r.numbers->at(0, 1, 1), 3);
  EXPECT_EQ(r.numbers->at(0, 2, 2), 6);
  EXPECT_EQ(r.numbers->at(1, 1, 1), 0);
  EXPECT_EQ(r.numbers->at(2, 1, 1), 1);
}

TEST(DistanceRegular, DisconnectedRejected) {
  EXPECT_EQ(kind_of([] { is_distance_regular(Graph::from_edges(3, {{0, 1}})); }), ErrorKind::invalid_graph);
}

TEST(BoseMesner, ExactOnDistanceRegularCorpus) {
  for (const auto& [name, g] : corpus::standard()) {
    const auto r = is_distance_regular(g);
    if (r.regular) EXPECT_EQ(verify_bose_mesner(g, *r.numbers), 0) << name;
  }
}

TEST(BoseMesner, PerturbedNumbersDetected) {
  const Graph g = corpus::petersen();
  auto p = *is_distance_regular(g).numbers;
  p.p[1][1][1] += 1;
  EXPECT_EQ(verify_bose_mesner(g, p), 1);
}

TEST(Jacobi, CompleteGraph) {
  for (int n = 2; n <= 8; ++n) {
    const auto j = jacobi_sequence(corpus::complete(n), 0);
    EXPECT_EQ(j.omega_num, (std::vector<std::int64_t>{n - 1}));
    EXPECT_EQ(j.omega_den, (std::vector<std::int64_t>{1}));
    EXPECT_EQ(j.alpha, (std::vector<std::int64_t>{0, n - 2}));
  }
}

TEST(Jacobi, HexagonAndCube) {
  const auto c = jacobi_sequence(corpus::cycle(6), 0);
  EXPECT_EQ(c.omega, (std::vector<double>{2, 1, 2}));
  EXPECT_EQ(c.alpha, (std::vector<std::int64_t>{0, 0, 0, 0}));
  const auto q = jacobi_sequence(corpus::hypercube(3), 5);
  EXPECT_EQ(q.omega, (std::vector<double>{3, 4, 3}));
}

TEST(Jacobi, PetersenHasLoopAtDepthTwo) {
  const auto p = jacobi_sequence(corpus::petersen(), 0);
  EXPECT_EQ(p.omega, (std::vector<double>{3, 2}));
  EXPECT_EQ(p.alpha, (std::vector<std::int64_t>{0, 0, 2}));
}

TEST(Jacobi, ReducedFraction) {
  // path 0-1-2-3 plus 1-4, 1-5: strata 1,1,3,1 from 0
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}});
  const auto j = jacobi_sequence(g, 0);
  EXPECT_EQ(j.omega_num, (std::vector<std::int64_t>{1, 3, 1}));
  EXPECT_EQ(j.omega_den, (std::vector<std::int64_t>{1, 1, 3}));
}

TEST(Jacobi, MismatchNamesVertices) {
  // origin 0 joined to 1,2,3 with an extra edge 1-2: ω_o differs across V_1
  const Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  try {
    jacobi_sequence(g, 0);
    FAIL() << "expected mismatch";
  } catch (const JacobiMismatch& e) {
    EXPECT_EQ(e.stratum, 1);
    EXPECT_EQ(e.ref_vertex, 1);
    EXPECT_EQ(e.vertex, 3);
    EXPECT_EQ(e.kind(), ErrorKind::invalid_graph);
  }
}

TEST(Strata, ActionIsTridiagonal) {
  for (const auto& [name, g] : corpus::standard()) {
    const auto s = stratify(g, 0);
    const IntMatrix t = strata_action(g, s);
    for (int i = 0; i < t.rows(); ++i)
      for (int j = 0; j < t.cols(); ++j)
        if (std::abs(i - j) > 1) EXPECT_EQ(t(i, j), 0) << name;
    EXPECT_EQ(t.transpose(), t) << name;
  }
}

TEST(Strata, VectorsAreIndicators) {
  const Graph g = corpus::cycle(6);
  const auto phi = strata_vectors(g, stratify(g, 0));
  ASSERT_EQ(phi.size(), 4u);
  EXPECT_EQ(phi[1], (std::vector<std::int64_t>{0, 1, 0, 0, 0, 1}));
  const IntMatrix t = strata_action(g, stratify(g, 0));
  EXPECT_EQ(t(0, 1), 2);
  EXPECT_EQ(t(1, 2), 2);
  EXPECT_EQ(t(2, 3), 2);
}

TEST(EdgeList, RoundTrip) {
  for (const auto& [name, g] : corpus::standard()) {
    const Graph h = parse(write_edge_list(g));
    EXPECT_EQ(h.edges(), g.edges()) << name;
  }
}

TEST(EdgeList, BlankLinesTolerated) { EXPECT_EQ(parse("\n3 2\n\n0 1\n1 2\n\n").edge_count(), 2); }

TEST(EdgeList, Errors) {
  for (const char* text : {"", "3", "3 x", "3 1\n0 0\n", "3 2\n0 1\n1 0\n", "3 1\n0 5\n", "3 2\n0 1\n", "3 1\n0 1 2\n",
                           "3 1\n0 1\n1 2\n", "-1 0\n"}) {
    EXPECT_EQ(kind_of([&] { parse(text); }), ErrorKind::invalid_graph) << '"' << text << '"';
  }
}
