#pragma once

#include <array>
#include <vector>

#include "dbr/graph.hpp"

namespace dbr {

// Intersection numbers per distance level around a base vertex:
// b[i] counts forward neighbors at levels 0..ecc-1, c[i] backward neighbors
// at levels 1..ecc (stored at index i-1), a[i] same-level neighbors.
struct IntersectionArray {
  std::vector<long long> b;  // size ecc
  std::vector<long long> c;  // size ecc, c[i-1] is the level-i number
  std::vector<long long> a;  // size ecc+1
  int ecc = 0;

  bool operator==(const IntersectionArray&) const = default;
};

struct IntersectionScan {
  bool constant = false;
  IntersectionArray array;  // meaningful when constant
  // per-vertex (c_i(v), a_i(v), b_i(v)) with i = dist(u, v)
  std::vector<std::array<long long, 3>> table;
};

IntersectionScan intersection_numbers_around(const Graph& g, int u);

struct PseudoNumbers {
  bool constant = false;
  std::vector<double> c, a, b;  // level numbers, meaningful when constant
  std::vector<std::array<double, 3>> table;
};

// Weighted intersection numbers: each neighbor contributes alpha_w, scaled
// by 1/alpha_v.  Constancy is judged with an absolute tolerance.
PseudoNumbers pseudo_intersection_numbers(const Graph& g, int u,
                                          const std::vector<double>& alpha,
                                          double tol = 1e-9);

struct DistanceRegularResult {
  bool regular = false;
  IntersectionArray array;
};
DistanceRegularResult is_distance_regular(const Graph& g);

struct DistanceBiregularResult {
  bool biregular = false;
  IntersectionArray side1, side2;  // meaningful when biregular
};
DistanceBiregularResult is_distance_biregular(const Graph& g);
DistanceBiregularResult is_distance_biregular_serial(const Graph& g);

}  // namespace dbr
