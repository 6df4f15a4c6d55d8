#pragma once

#include <cstdint>
#include <vector>

#include "dbr/graph.hpp"

namespace dbr {

// Dense square matrix, row-major.
struct Matrix {
  int n = 0;
  std::vector<double> a;

  Matrix() = default;
  explicit Matrix(int size) : n(size), a(static_cast<size_t>(size) * size, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static Matrix identity(int size) {
    Matrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

Matrix adjacency_matrix(const Graph& g);

// out = lhs * rhs.  Parallel over rows; the serial variant is the reference.
void matmul(const Matrix& lhs, const Matrix& rhs, Matrix& out);
void matmul_serial(const Matrix& lhs, const Matrix& rhs, Matrix& out);

// Gram projector V[:, lo..hi) * V[:, lo..hi)^T.
Matrix projector_from_columns(const Matrix& v, int lo, int hi);
Matrix projector_from_columns_serial(const Matrix& v, int lo, int hi);

double max_abs_diff(const Matrix& x, const Matrix& y);
double max_abs(const Matrix& x);

// Exact closed-walk counts: powers[l][u] = (A^l)_{uu} for l = 0..ell_max.
// Integer arithmetic; entries must stay below 2^63.
std::vector<std::vector<int64_t>> closed_walk_counts(const Graph& g, int ell_max);

}  // namespace dbr
