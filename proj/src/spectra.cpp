#include "dbr/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dbr {

DenseEigen jacobi_eigensolve(Matrix a, int max_sweeps) {
  const int n = a.n;
  Matrix v = Matrix::identity(n);
  if (n == 1) return {{a.at(0, 0)}, v};

  double frob = 0.0;
  for (double x : a.a) frob += x * x;
  frob = std::sqrt(frob);
  const double stop = 1e-14 * std::max(1.0, frob);

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * a.at(p, q) * a.at(p, q);
    if (std::sqrt(off) <= stop) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a.at(p, q);
        if (apq == 0.0) continue;
        // Skip rotations that cannot move the diagonal at double precision.
        if (std::fabs(apq) <
            1e-18 * (std::fabs(a.at(p, p)) + std::fabs(a.at(q, q)) + 1.0))
          continue;
        double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);

        double app = a.at(p, p), aqq = a.at(q, q);
        a.at(p, p) = app - t * apq;
        a.at(q, q) = aqq + t * apq;
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i != p && i != q) {
            double aip = a.at(i, p), aiq = a.at(i, q);
            a.at(i, p) = aip - s * (aiq + tau * aip);
            a.at(i, q) = aiq + s * (aip - tau * aiq);
            a.at(p, i) = a.at(i, p);
            a.at(q, i) = a.at(i, q);
          }
          double vip = v.at(i, p), viq = v.at(i, q);
          v.at(i, p) = vip - s * (viq + tau * vip);
          v.at(i, q) = viq + s * (vip - tau * viq);
        }
      }
    }
  }
  if (sweep == max_sweeps)
    throw Error(ErrorCode::NoConvergence,
                "eigensolver did not settle in " + std::to_string(max_sweeps) +
                    " sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a.at(i, i) > a.at(j, j); });

  DenseEigen out;
  out.values.resize(n);
  out.vectors = Matrix(n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a.at(order[k], order[k]);
    for (int i = 0; i < n; ++i) out.vectors.at(i, k) = v.at(i, order[k]);
  }
  return out;
}

Decomposition eigendecompose(const Graph& g, double tol) {
  if (!g.connected())
    throw Error(ErrorCode::Disconnected, "eigendecomposition entry point needs a connected graph");
  if (tol <= 0) throw Error(ErrorCode::BadParams, "grouping tolerance must be positive");

  const int n = g.vertex_count();
  DenseEigen eig = jacobi_eigensolve(adjacency_matrix(g));

  double radius = 0.0;
  for (double x : eig.values) radius = std::max(radius, std::fabs(x));
  const double gap = tol * std::max(1.0, radius);

  Decomposition out;
  std::vector<std::pair<int, int>> groups;  // [lo, hi) column ranges
  int lo = 0;
  for (int k = 1; k <= n; ++k) {
    if (k == n || eig.values[k - 1] - eig.values[k] > gap) {
      groups.emplace_back(lo, k);
      lo = k;
    }
  }
  for (auto [a, b] : groups) {
    double mean = 0.0;
    for (int k = a; k < b; ++k) mean += eig.values[k];
    mean /= (b - a);
    if (std::fabs(mean) < gap) mean = 0.0;
    out.spectrum.distinct.push_back(mean);
    out.spectrum.multiplicity.push_back(b - a);
    out.idempotents.E.push_back(projector_from_columns(eig.vectors, a, b));
  }
  out.top_eigenvector.resize(n);
  for (int i = 0; i < n; ++i) out.top_eigenvector[i] = eig.vectors.at(i, 0);
  return out;
}

LocalSpectrum local_spectrum(const Idempotents& idem, int u,
                             double support_threshold) {
  LocalSpectrum ls;
  ls.vertex = u;
  int support = 0;
  for (const Matrix& e : idem.E) {
    double m = e.at(u, u);
    if (m < 0.0) m = 0.0;  // projector diagonals are sums of squares
    ls.values.push_back(m);
    if (m > support_threshold) ++support;
  }
  ls.d_u = support - 1;
  return ls;
}

std::vector<LocalSpectrum> all_local_spectra(const Idempotents& idem,
                                             double support_threshold) {
  int n = idem.E.front().n;
  std::vector<LocalSpectrum> out(n);
#pragma omp parallel for schedule(static)
  for (int u = 0; u < n; ++u) out[u] = local_spectrum(idem, u, support_threshold);
  return out;
}

WalkMomentResiduals walk_moment_check(const Graph& g, const Spectrum& spec,
                                      const std::vector<LocalSpectrum>& locals,
                                      int ell_max) {
  if (ell_max < 0) ell_max = 2 * spec.d();
  const int n = g.vertex_count();
  auto walks = closed_walk_counts(g, ell_max);

  WalkMomentResiduals res;
  std::vector<double> lambda_pow(spec.distinct.size(), 1.0);
  for (int l = 0; l <= ell_max; ++l) {
    double trace_model = 0.0;
    for (size_t i = 0; i < spec.distinct.size(); ++i)
      trace_model += spec.multiplicity[i] * lambda_pow[i];
    int64_t trace_walks = 0;
    for (int u = 0; u < n; ++u) {
      trace_walks += walks[l][u];
      double local_model = 0.0;
      for (size_t i = 0; i < spec.distinct.size(); ++i)
        local_model += locals[u].values[i] * lambda_pow[i];
      res.max_local = std::max(
          res.max_local, std::fabs(local_model - static_cast<double>(walks[l][u])));
    }
    res.max_global = std::max(
        res.max_global, std::fabs(trace_model - static_cast<double>(trace_walks)));
    for (size_t i = 0; i < spec.distinct.size(); ++i)
      lambda_pow[i] *= spec.distinct[i];
  }
  return res;
}

Matrix evaluate_sum_on_matrix(const OrthoSequence& seq, const Matrix& adj) {
  const int s = seq.degree();
  Matrix prev;
  Matrix cur = Matrix::identity(adj.n);  // r_0 = 1
  Matrix total = cur;
  Matrix shifted;
  for (int i = 0; i < s; ++i) {
    matmul(adj, cur, shifted);
    // r_{i+1} = (x r_i - a_i r_i - b_{i-1} r_{i-1}) / c_{i+1}
    Matrix next(adj.n);
    for (size_t k = 0; k < next.a.size(); ++k) {
      double v = shifted.a[k] - seq.a[i] * cur.a[k];
      if (i >= 1) v -= seq.b[i - 1] * prev.a[k];
      next.a[k] = v / seq.c[i + 1];
    }
    for (size_t k = 0; k < total.a.size(); ++k) total.a[k] += next.a[k];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return total;
}

PerronWeights perron_weights(const Graph& g, const Spectrum& spec,
                             const std::vector<double>& top_eigenvector) {
  const int n = g.vertex_count();
  if (spec.multiplicity.front() != 1)
    throw Error(ErrorCode::SignFailure,
                "top eigenvalue has grouped multiplicity " +
                    std::to_string(spec.multiplicity.front()));
  PerronWeights pw;
  pw.alpha = top_eigenvector;
  double norm_sq = 0.0;
  for (double x : pw.alpha) norm_sq += x * x;
  double scale = std::sqrt(n / norm_sq);
  int sign_votes = 0;
  for (double x : pw.alpha) sign_votes += (x > 0) - (x < 0);
  if (sign_votes < 0) scale = -scale;
  for (double& x : pw.alpha) x *= scale;
  for (double x : pw.alpha)
    if (x <= 1e-12)
      throw Error(ErrorCode::SignFailure,
                  "normalized top eigenvector is not strictly positive");
  return pw;
}

}  // namespace dbr
