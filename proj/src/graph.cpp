#include "dbr/graph.hpp"

#include <algorithm>
#include <queue>

namespace dbr {

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> frontier{source};
  dist[source] = 0;
  int level = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    ++level;
    for (int u : frontier) {
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = level;
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) {
  if (n < 0) throw Error(ErrorCode::BadParams, "negative vertex count");
  n_ = n;
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") with n=" + std::to_string(n));
    if (u == v)
      throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (int u = 0; u < n; ++u) offsets_[u + 1] = offsets_[u] + deg[u];
  adjacency_.resize(offsets_[n]);
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
  for (int u = 0; u < n; ++u)
    std::sort(adjacency_.begin() + offsets_[u],
              adjacency_.begin() + offsets_[u + 1]);

  connected_ = true;
  if (n > 1) {
    auto dist = bfs_distances(*this, 0);
    connected_ = std::none_of(dist.begin(), dist.end(),
                              [](int d) { return d < 0; });
  }
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(const std::vector<Edge>& edges, int n) {
  return Graph(n, edges);
}

Graph generate(const std::string& family, const std::vector<int>& params) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw Error(ErrorCode::BadParams,
                  family + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (family == "cycle") {
    want(1);
    int n = params[0];
    if (n < 3) throw Error(ErrorCode::BadParams, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
  }
  if (family == "path") {
    want(1);
    int n = params[0];
    if (n < 2) throw Error(ErrorCode::BadParams, "path needs n >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
  }
  if (family == "complete_bipartite") {
    want(2);
    int m = params[0], n = params[1];
    if (m < 1 || n < 1)
      throw Error(ErrorCode::BadParams, "complete_bipartite needs m,n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph(m + n, std::move(edges));
  }
  if (family == "hypercube") {
    want(1);
    int k = params[0];
    if (k < 1 || k > 20) throw Error(ErrorCode::BadParams, "hypercube needs 1 <= k <= 20");
    int n = 1 << k;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int b = 0; b < k; ++b) {
        int v = u ^ (1 << b);
        if (u < v) edges.emplace_back(u, v);
      }
    return Graph(n, std::move(edges));
  }
  if (family == "petersen") {
    want(0);
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
      edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph(10, std::move(edges));
  }
  throw Error(ErrorCode::UnknownFamily, family);
}

Graph subdivide(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(2 * g.edges().size());
  int next = n;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, next);
    edges.emplace_back(v, next);
    ++next;
  }
  return Graph(next, std::move(edges));
}

DistanceProfile distance_profile(const Graph& g, int u) {
  DistanceProfile p;
  p.source = u;
  p.dist = bfs_distances(g, u);
  int ecc = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (p.dist[v] < 0)
      throw Error(ErrorCode::Disconnected,
                  "vertex " + std::to_string(v) + " unreachable from " +
                      std::to_string(u));
    ecc = std::max(ecc, p.dist[v]);
  }
  p.shells.assign(ecc + 1, {});
  for (int v = 0; v < g.vertex_count(); ++v) p.shells[p.dist[v]].push_back(v);
  p.counts.resize(ecc + 1);
  for (int i = 0; i <= ecc; ++i) p.counts[i] = static_cast<int>(p.shells[i].size());
  return p;
}

Bipartition bipartition(const Graph& g) {
  int n = g.vertex_count();
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "analysis needs a connected graph");

  std::vector<int> color(n, -1), parent(n, -1);
  color[0] = 0;
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int v : g.neighbors(u)) {
      if (color[v] < 0) {
        color[v] = 1 - color[u];
        parent[v] = u;
        queue.push_back(v);
      } else if (color[v] == color[u]) {
        // Odd cycle: u -> ... -> lca -> ... -> v plus the edge (v,u).
        std::vector<int> up_u, up_v;
        std::vector<char> on_u_path(n, 0);
        for (int x = u; x >= 0; x = parent[x]) {
          up_u.push_back(x);
          on_u_path[x] = 1;
        }
        int meet = v;
        while (!on_u_path[meet]) {
          up_v.push_back(meet);
          meet = parent[meet];
        }
        std::vector<int> cycle;
        for (int x : up_u) {
          cycle.push_back(x);
          if (x == meet) break;
        }
        for (auto it = up_v.rbegin(); it != up_v.rend(); ++it) cycle.push_back(*it);
        throw NotBipartiteError(std::move(cycle));
      }
    }
  }

  auto table = distance_count_table(g);
  std::vector<int> ecc(n);
  for (int u = 0; u < n; ++u) ecc[u] = static_cast<int>(table[u].size()) - 1;

  int Dc[2] = {0, 0}, nc[2] = {0, 0};
  for (int u = 0; u < n; ++u) {
    Dc[color[u]] = std::max(Dc[color[u]], ecc[u]);
    ++nc[color[u]];
  }
  // Side containing vertex 0 is color 0, so the final tie-break (smallest
  // vertex id in side1) means keeping color 0 as side1.
  bool swap_sides = false;
  if (Dc[1] != Dc[0]) swap_sides = Dc[1] > Dc[0];
  else if (nc[1] != nc[0]) swap_sides = nc[1] > nc[0];

  Bipartition b;
  b.side_of.resize(n);
  for (int u = 0; u < n; ++u) b.side_of[u] = swap_sides ? 1 - color[u] : color[u];
  for (int u = 0; u < n; ++u)
    (b.side_of[u] == 0 ? b.side1 : b.side2).push_back(u);
  b.n1 = static_cast<int>(b.side1.size());
  b.n2 = static_cast<int>(b.side2.size());
  b.D1 = Dc[swap_sides ? 1 : 0];
  b.D2 = Dc[swap_sides ? 0 : 1];

  auto common_degree = [&](const std::vector<int>& side) -> std::optional<int> {
    int d = g.degree(side.front());
    for (int u : side)
      if (g.degree(u) != d) return std::nullopt;
    return d;
  };
  b.delta1 = common_degree(b.side1);
  b.delta2 = common_degree(b.side2);
  return b;
}

std::vector<std::vector<int>> distance_count_table_serial(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> table(n);
  for (int u = 0; u < n; ++u) table[u] = distance_profile(g, u).counts;
  return table;
}

std::vector<std::vector<int>> distance_count_table(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> table(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (int u = 0; u < n; ++u) table[u] = distance_profile(g, u).counts;
  return table;
}

SideAverages side_distance_averages(const Graph& g, const Bipartition& b) {
  auto table = distance_count_table(g);
  int n = g.vertex_count();
  int D = 0, D1 = 0, D2 = 0;
  for (int u = 0; u < n; ++u) {
    int e = static_cast<int>(table[u].size()) - 1;
    D = std::max(D, e);
    (b.side_of[u] == 0 ? D1 : D2) = std::max(b.side_of[u] == 0 ? D1 : D2, e);
  }
  SideAverages avg;
  avg.total_global.assign(D + 1, 0);
  avg.total_side1.assign(D1 + 1, 0);
  avg.total_side2.assign(D2 + 1, 0);
  for (int u = 0; u < n; ++u) {
    auto& tot = b.side_of[u] == 0 ? avg.total_side1 : avg.total_side2;
    for (size_t i = 0; i < table[u].size(); ++i) {
      avg.total_global[i] += table[u][i];
      tot[i] += table[u][i];
    }
  }
  auto divide = [](const std::vector<long long>& tot, int count) {
    std::vector<double> out(tot.size());
    for (size_t i = 0; i < tot.size(); ++i)
      out[i] = static_cast<double>(tot[i]) / count;
    return out;
  };
  avg.global = divide(avg.total_global, n);
  avg.side1 = divide(avg.total_side1, b.n1);
  avg.side2 = divide(avg.total_side2, b.n2);
  return avg;
}

}  // namespace dbr
