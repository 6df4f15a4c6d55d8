#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dbr/errors.hpp"

namespace dbr {

using Edge = std::pair<int, int>;

// Simple undirected graph, immutable after construction.  Edges are stored
// deduplicated with u < v in lexicographic order; adjacency is CSR with
// sorted neighbor lists.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  std::span<const int> neighbors(int u) const {
    return {adjacency_.data() + offsets_[u],
            adjacency_.data() + offsets_[u + 1]};
  }
  int degree(int u) const { return offsets_[u + 1] - offsets_[u]; }
  bool connected() const { return connected_; }
  bool has_edge(int u, int v) const;
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<int> offsets_{0};
  std::vector<int> adjacency_;
  std::vector<Edge> edges_;
  bool connected_ = true;
};

Graph build_graph(const std::vector<Edge>& edges, int n);

// Named families: cycle n, path n, complete_bipartite m n, hypercube k,
// petersen.  Vertex numbering is fixed; see README.
Graph generate(const std::string& family, const std::vector<int>& params);

// Replaces every edge by a two-edge path through a fresh vertex.  The vertex
// inserted into the j-th edge (in the stored lexicographic order) gets id n+j.
Graph subdivide(const Graph& g);

struct DistanceProfile {
  int source = 0;
  std::vector<int> dist;                 // per vertex
  std::vector<std::vector<int>> shells;  // shells[i] = vertices at distance i
  std::vector<int> counts;               // counts[i] = |shells[i]|
  int eccentricity() const { return static_cast<int>(counts.size()) - 1; }
};

DistanceProfile distance_profile(const Graph& g, int u);

struct Bipartition {
  std::vector<int> side_of;  // 0 => side1, 1 => side2
  std::vector<int> side1, side2;
  int n1 = 0, n2 = 0;
  int D1 = 0, D2 = 0;  // max eccentricity per side, labeled so D1 >= D2
  std::optional<int> delta1, delta2;  // common degrees when semiregular
};

// Two-colors a connected graph; throws NotBipartiteError with an odd-cycle
// witness.  Sides are labeled so that D1 >= D2, ties broken by n1 >= n2 and
// then by which side contains the smallest vertex id.
Bipartition bipartition(const Graph& g);

struct SideAverages {
  // averages[i] = mean of k_i(u) over the vertex set in question
  std::vector<double> global, side1, side2;
  // integer totals sum_u k_i(u), kept for exact double-counting checks
  std::vector<long long> total_global, total_side1, total_side2;

  double global_at(int i) const {
    return i < static_cast<int>(global.size()) ? global[i] : 0.0;
  }
  double side1_at(int i) const {
    return i < static_cast<int>(side1.size()) ? side1[i] : 0.0;
  }
  double side2_at(int i) const {
    return i < static_cast<int>(side2.size()) ? side2[i] : 0.0;
  }
};

SideAverages side_distance_averages(const Graph& g, const Bipartition& b);

// Shell counts from every source: row u holds k_0(u)..k_ecc(u).  The default
// entry point runs the sources in parallel; the serial variant is the
// reference used in tests and benchmarks.
std::vector<std::vector<int>> distance_count_table(const Graph& g);
std::vector<std::vector<int>> distance_count_table_serial(const Graph& g);

}  // namespace dbr
