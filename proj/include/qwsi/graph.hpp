// SPDX-License-Identifier: Apache-2.0
#pragma once

// Simple undirected graphs, distances, the named test corpus and the edge-list file format
// (first line "n m", then m lines "u v", 0-indexed).

#include <algorithm>
#include <cctype>
#include <istream>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qwsi/errors.hpp"
#include "qwsi/int_matrix.hpp"

namespace qwsi {

class Graph {
 public:
  explicit Graph(int n = 0) : adj_(n) {
    if (n < 0) throw invalid_graph("vertex count must be non-negative");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order()) {
      throw invalid_graph("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw invalid_graph("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) throw invalid_graph("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++edges_;
  }

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edges_; }
  int degree(int x) const { return static_cast<int>(adj_[x].size()); }
  const std::vector<int>& neighbors(int x) const { return adj_[x]; }

  bool adjacent(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

  bool contains(int x) const { return x >= 0 && x < order(); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  IntMatrix adjacency() const {
    IntMatrix a(order(), order());
    for (int u = 0; u < order(); ++u)
      for (int v : adj_[u]) a(u, v) = 1;
    return a;
  }

 private:
  static void insert_sorted(std::vector<int>& v, int x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); }

  std::vector<std::vector<int>> adj_;
  int edges_ = 0;
};

/// BFS distances from `source`; −1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> d(g.order(), -1);
  std::queue<int> q;
  d[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        q.push(v);
      }
    }
  }
  return d;
}

inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.order());
  for (int x = 0; x < g.order(); ++x) d.push_back(bfs_distances(g, x));
  return d;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int v) { return v < 0; });
}

inline void require_connected(const Graph& g) {
  if (g.order() == 0) throw invalid_graph("graph has no vertices");
  if (!is_connected(g)) throw invalid_graph("graph is disconnected; graph distance is undefined across components");
}

// ---------------------------------------------------------------------------
// corpus

namespace corpus {

inline Graph cycle(int n) {
  if (n < 3) throw invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph complete(int n) {
  if (n < 1) throw invalid_argument("complete graph needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// Path on n vertices 0–1–…–(n−1).
inline Graph path(int n) {
  if (n < 1) throw invalid_argument("path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

inline Graph hypercube(int d) {
  if (d < 1 || d > 10) throw invalid_argument("hypercube dimension must be in 1..10");
  Graph g(1 << d);
  for (int x = 0; x < (1 << d); ++x)
    for (int b = 0; b < d; ++b)
      if (int y = x ^ (1 << b); x < y) g.add_edge(x, y);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw invalid_argument("complete bipartite graph needs both sides non-empty");
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

/// K_{3,3} with the edge (0,3) removed.
inline Graph k33_minus_edge() {
  Graph g(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j)
      if (!(i == 0 && j == 3)) g.add_edge(i, j);
  return g;
}

namespace detail {
inline bool parse_int(const std::string& s, int& out) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return false;
  }
  out = std::stoi(s);
  return true;
}
}  // namespace detail

/// Named graphs: cN, kN, pN, qN, kA,B (or k33), petersen, k33-minus-edge.
inline Graph by_name(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  if (name == "petersen") return petersen();
  if (name == "k33-minus-edge" || name == "k3,3-minus-edge") return k33_minus_edge();
  if (name == "k33") return complete_bipartite(3, 3);
  int a = 0, b = 0;
  if (name.size() >= 2) {
    const std::string rest = name.substr(1);
    if (const auto comma = rest.find(','); name[0] == 'k' && comma != std::string::npos) {
      if (detail::parse_int(rest.substr(0, comma), a) && detail::parse_int(rest.substr(comma + 1), b)) {
        return complete_bipartite(a, b);
      }
    } else if (detail::parse_int(rest, a)) {
      switch (name[0]) {
        case 'c': return cycle(a);
        case 'k': return complete(a);
        case 'p': return path(a);
        case 'q': return hypercube(a);
        default: break;
      }
    }
  }
  throw invalid_argument("unknown corpus graph '" + name + "'");
}

/// The canonical acceptance corpus: C3–C12, K2–K8, P2–P6, Petersen, Q2–Q4, K3,3.
inline std::vector<std::pair<std::string, Graph>> standard() {
  std::vector<std::pair<std::string, Graph>> out;
  for (int n = 3; n <= 12; ++n) out.emplace_back("c" + std::to_string(n), cycle(n));
  for (int n = 2; n <= 8; ++n) out.emplace_back("k" + std::to_string(n), complete(n));
  for (int n = 2; n <= 6; ++n) out.emplace_back("p" + std::to_string(n), path(n));
  out.emplace_back("petersen", petersen());
  for (int d = 2; d <= 4; ++d) out.emplace_back("q" + std::to_string(d), hypercube(d));
  out.emplace_back("k33", complete_bipartite(3, 3));
  return out;
}

}  // namespace corpus

// ---------------------------------------------------------------------------
// edge-list format

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) throw invalid_graph("empty graph file");
  long long n = -1, m = -1;
  {
    std::istringstream hdr(line);
    std::string extra;
    if (!(hdr >> n >> m) || (hdr >> extra) || n < 0 || m < 0 || n > 1000000) {
      throw invalid_graph("graph header must be 'n m'");
    }
  }
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) throw invalid_graph("graph file ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) throw invalid_graph("malformed edge line '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw invalid_graph("edge line '" + line + "' out of range");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line(line)) throw invalid_graph("graph file has more than " + std::to_string(m) + " edge lines");
  return g;
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace qwsi
