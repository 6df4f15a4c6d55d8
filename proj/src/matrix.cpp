#include "dbr/matrix.hpp"

#include <cmath>

namespace dbr {

Matrix adjacency_matrix(const Graph& g) {
  Matrix m(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    m.at(u, v) = 1.0;
    m.at(v, u) = 1.0;
  }
  return m;
}

namespace {

inline void matmul_row(const Matrix& lhs, const Matrix& rhs, Matrix& out, int i) {
  const int n = lhs.n;
  double* dst = out.a.data() + static_cast<size_t>(i) * n;
  for (int j = 0; j < n; ++j) dst[j] = 0.0;
  const double* lrow = lhs.a.data() + static_cast<size_t>(i) * n;
  for (int k = 0; k < n; ++k) {
    double lik = lrow[k];
    if (lik == 0.0) continue;
    const double* rrow = rhs.a.data() + static_cast<size_t>(k) * n;
    for (int j = 0; j < n; ++j) dst[j] += lik * rrow[j];
  }
}

inline void projector_row(const Matrix& v, int lo, int hi, Matrix& out, int i) {
  const int n = v.n;
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int k = lo; k < hi; ++k) s += v.at(i, k) * v.at(j, k);
    out.at(i, j) = s;
  }
}

}  // namespace

void matmul_serial(const Matrix& lhs, const Matrix& rhs, Matrix& out) {
  out = Matrix(lhs.n);
  for (int i = 0; i < lhs.n; ++i) matmul_row(lhs, rhs, out, i);
}

void matmul(const Matrix& lhs, const Matrix& rhs, Matrix& out) {
  out = Matrix(lhs.n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < lhs.n; ++i) matmul_row(lhs, rhs, out, i);
}

Matrix projector_from_columns_serial(const Matrix& v, int lo, int hi) {
  Matrix out(v.n);
  for (int i = 0; i < v.n; ++i) projector_row(v, lo, hi, out, i);
  return out;
}

Matrix projector_from_columns(const Matrix& v, int lo, int hi) {
  Matrix out(v.n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < v.n; ++i) projector_row(v, lo, hi, out, i);
  return out;
}

double max_abs_diff(const Matrix& x, const Matrix& y) {
  double m = 0.0;
  for (size_t i = 0; i < x.a.size(); ++i)
    m = std::max(m, std::fabs(x.a[i] - y.a[i]));
  return m;
}

double max_abs(const Matrix& x) {
  double m = 0.0;
  for (double v : x.a) m = std::max(m, std::fabs(v));
  return m;
}

std::vector<std::vector<int64_t>> closed_walk_counts(const Graph& g, int ell_max) {
  const int n = g.vertex_count();
  std::vector<std::vector<int64_t>> diag(ell_max + 1, std::vector<int64_t>(n, 0));
  for (int u = 0; u < n; ++u) diag[0][u] = 1;

  // power[u][v] = (A^l)_{uv}, advanced one multiply per level
  std::vector<std::vector<int64_t>> power(n, std::vector<int64_t>(n, 0));
  for (int u = 0; u < n; ++u) power[u][u] = 1;
  std::vector<std::vector<int64_t>> next(n, std::vector<int64_t>(n));
  for (int l = 1; l <= ell_max; ++l) {
#pragma omp parallel for schedule(static)
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        int64_t s = 0;
        for (int w : g.neighbors(v)) s += power[u][w];
        next[u][v] = s;
      }
    }
    power.swap(next);
    for (int u = 0; u < n; ++u) diag[l][u] = power[u][u];
  }
  return diag;
}

}  // namespace dbr
