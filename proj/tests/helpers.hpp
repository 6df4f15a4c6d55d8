#pragma once

#include <climits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dbr/graph.hpp"
#include "dbr/orthopoly.hpp"

namespace test_helpers {

// Girth by deleting each edge in turn and measuring the detour; exact and
// independent of anything in the library's distance machinery.
inline int girth(const dbr::Graph& g) {
  int best = INT_MAX;
  for (auto [eu, ev] : g.edges()) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> frontier{eu};
    dist[eu] = 0;
    while (!frontier.empty() && dist[ev] < 0) {
      std::vector<int> next;
      for (int x : frontier) {
        for (int y : g.neighbors(x)) {
          if ((x == eu && y == ev) || (x == ev && y == eu)) continue;
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    if (dist[ev] >= 0) best = std::min(best, dist[ev] + 1);
  }
  return best;
}

// Rank of the side1 x side2 biadjacency matrix via fraction-free (Bareiss)
// elimination; exact in 64-bit integers at the sizes used here.
inline int biadjacency_rank(const dbr::Graph& g, const dbr::Bipartition& b) {
  int rows = b.n1, cols = b.n2;
  std::vector<int> col_of(g.vertex_count(), -1), row_of(g.vertex_count(), -1);
  for (int i = 0; i < rows; ++i) row_of[b.side1[i]] = i;
  for (int j = 0; j < cols; ++j) col_of[b.side2[j]] = j;
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols, 0));
  for (auto [u, v] : g.edges()) {
    int r = row_of[u] >= 0 ? row_of[u] : row_of[v];
    int c = col_of[v] >= 0 ? col_of[v] : col_of[u];
    m[r][c] = 1;
  }
  int rank = 0;
  long long prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

inline dbr::Graph complete_graph(int n) {
  std::vector<dbr::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return dbr::build_graph(edges, n);
}

// The classification corpus used throughout the test suites.
inline std::vector<std::pair<std::string, dbr::Graph>> classification_corpus() {
  std::vector<std::pair<std::string, dbr::Graph>> out;
  for (int n = 4; n <= 12; n += 2)
    out.emplace_back("C" + std::to_string(n), dbr::generate("cycle", {n}));
  for (int m = 1; m <= 5; ++m)
    for (int n = m; n <= 5; ++n)
      out.emplace_back("K_" + std::to_string(m) + "," + std::to_string(n),
                       dbr::generate("complete_bipartite", {m, n}));
  for (int k = 2; k <= 4; ++k)
    out.emplace_back("Q" + std::to_string(k), dbr::generate("hypercube", {k}));
  out.emplace_back("P3", dbr::generate("path", {3}));
  out.emplace_back("S(Petersen)", dbr::subdivide(dbr::generate("petersen", {})));
  out.emplace_back("S(K4)", dbr::subdivide(complete_graph(4)));
  out.emplace_back("S(C5)", dbr::subdivide(dbr::generate("cycle", {5})));
  return out;
}

// Decreasing mesh with comfortably separated points and weights bounded away
// from zero, so the documented residual bounds are meaningful.
inline dbr::WeightedMesh random_mesh(std::mt19937& rng, int npoints) {
  std::uniform_real_distribution<double> point(-2.5, 2.5);
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  dbr::WeightedMesh mesh;
  for (;;) {
    mesh.points.clear();
    for (int i = 0; i < npoints; ++i) mesh.points.push_back(point(rng));
    std::sort(mesh.points.rbegin(), mesh.points.rend());
    bool ok = true;
    for (int i = 1; i < npoints; ++i)
      if (mesh.points[i - 1] - mesh.points[i] < 0.15) ok = false;
    if (ok) break;
  }
  mesh.weights.clear();
  double total = 0.0;
  for (int i = 0; i < npoints; ++i) {
    mesh.weights.push_back(weight(rng));
    total += mesh.weights.back();
  }
  for (double& w : mesh.weights) w /= total;
  return mesh;
}

inline dbr::Graph random_connected_graph(std::mt19937& rng, int n, int extra) {
  std::vector<dbr::Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int t = 0; t < extra; ++t) {
    int u = any(rng), v = any(rng);
    if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return dbr::build_graph(edges, n);
}

inline dbr::Graph without_edge(const dbr::Graph& g, dbr::Edge e) {
  std::vector<dbr::Edge> edges;
  for (auto ed : g.edges())
    if (ed != e) edges.push_back(ed);
  return dbr::build_graph(edges, g.vertex_count());
}

inline dbr::Graph with_edge(const dbr::Graph& g, dbr::Edge e) {
  auto edges = g.edges();
  edges.push_back(e);
  return dbr::build_graph(edges, g.vertex_count());
}

}  // namespace test_helpers
