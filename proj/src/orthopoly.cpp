#include "dbr/orthopoly.hpp"

#include <algorithm>
#include <cmath>

namespace dbr {

bool WeightedMesh::full_support(double eps) const {
  return std::all_of(weights.begin(), weights.end(),
                     [eps](double w) { return w > eps; });
}

WeightedMesh WeightedMesh::support_restricted(double eps) const {
  WeightedMesh out;
  for (int i = 0; i < size(); ++i) {
    if (weights[i] > eps) {
      out.points.push_back(points[i]);
      out.weights.push_back(weights[i]);
    }
  }
  return out;
}

double inner_product(const WeightedMesh& mesh, std::span<const double> f,
                     std::span<const double> g) {
  double s = 0.0;
  for (int i = 0; i < mesh.size(); ++i) s += mesh.weights[i] * f[i] * g[i];
  return s;
}

std::vector<double> mesh_values(const WeightedMesh& mesh,
                                std::span<const double> monomial_coeffs) {
  std::vector<double> out(mesh.size(), 0.0);
  for (int j = 0; j < mesh.size(); ++j) {
    double v = 0.0;
    for (auto it = monomial_coeffs.rbegin(); it != monomial_coeffs.rend(); ++it)
      v = v * mesh.points[j] + *it;
    out[j] = v;
  }
  return out;
}

std::vector<double> pi_constants(const std::vector<double>& points) {
  std::vector<double> pi(points.size(), 1.0);
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = 0; j < points.size(); ++j)
      if (j != i) pi[i] *= std::fabs(points[i] - points[j]);
  return pi;
}

OrthoSequence orthogonal_sequence(const WeightedMesh& input) {
  OrthoSequence seq;
  seq.mesh = input.support_restricted();
  const WeightedMesh& mesh = seq.mesh;
  const int s = mesh.size() - 1;
  if (s < 0) throw Error(ErrorCode::DegenerateMesh, "mesh has empty support");

  // Candidate for degree i is x * r_{i-1}; classical Gram-Schmidt against all
  // previous members with one re-orthogonalization pass, then rescaled so
  // that ||r_i||^2 = r_i(lambda_0).
  std::vector<double> norm_sq;
  for (int i = 0; i <= s; ++i) {
    std::vector<double> v;
    if (i == 0) {
      v.assign(mesh.size(), 1.0);
    } else {
      v = seq.values[i - 1];
      for (int j = 0; j <= s; ++j) v[j] *= mesh.points[j];
      for (int pass = 0; pass < 2; ++pass)
        for (int k = 0; k < i; ++k) {
          double proj = inner_product(mesh, v, seq.values[k]) / norm_sq[k];
          for (int j = 0; j <= s; ++j) v[j] -= proj * seq.values[k][j];
        }
    }
    double vv = inner_product(mesh, v, v);
    double scale = i == 0 ? 1.0 : v[0] / vv;
    for (double& x : v) x *= scale;
    seq.values.push_back(std::move(v));
    norm_sq.push_back(scale * scale * vv);
    seq.top.push_back(seq.values[i][0]);
    seq.sum_top.push_back((i == 0 ? 0.0 : seq.sum_top[i - 1]) + seq.top[i]);
  }

  // Recurrence constants from cross inner products.
  auto shifted = [&](int i) {
    std::vector<double> xv = seq.values[i];
    for (int j = 0; j <= s; ++j) xv[j] *= mesh.points[j];
    return xv;
  };
  seq.a.assign(s + 1, 0.0);
  seq.b.assign(s + 1, 0.0);
  seq.c.assign(s + 1, 0.0);
  for (int i = 0; i <= s; ++i) {
    auto xv = shifted(i);
    seq.a[i] = inner_product(mesh, xv, seq.values[i]) / norm_sq[i];
    if (i + 1 <= s) seq.b[i] = inner_product(mesh, shifted(i + 1), seq.values[i]) / norm_sq[i];
    if (i >= 1) seq.c[i] = inner_product(mesh, shifted(i - 1), seq.values[i]) / norm_sq[i];
  }
  return seq;
}

RecurrenceResiduals recurrence_check(const OrthoSequence& seq) {
  RecurrenceResiduals res;
  const WeightedMesh& mesh = seq.mesh;
  const int s = seq.degree();
  const double lambda0 = mesh.points[0];
  for (int i = 0; i <= s; ++i)
    res.max_coefficient = std::max(
        res.max_coefficient, std::fabs(seq.a[i] + seq.b[i] + seq.c[i] - lambda0));
  for (int i = 0; i <= s; ++i) {
    for (int j = 0; j <= s; ++j) {
      double lhs = mesh.points[j] * seq.values[i][j];
      double rhs = seq.a[i] * seq.values[i][j];
      if (i >= 1) rhs += seq.b[i - 1] * seq.values[i - 1][j];
      if (i + 1 <= s) rhs += seq.c[i + 1] * seq.values[i + 1][j];
      res.max_pointwise = std::max(res.max_pointwise, std::fabs(lhs - rhs));
    }
  }
  return res;
}

double top_value_closed_form(const WeightedMesh& mesh) {
  if (mesh.size() == 0) throw Error(ErrorCode::DegenerateMesh, "empty mesh");
  if (!mesh.full_support())
    throw Error(ErrorCode::ZeroWeight,
                "closed form needs full support; restrict the mesh first");
  auto pi = pi_constants(mesh.points);
  double w0 = mesh.weights[0], pi0 = pi[0];
  double sum = 0.0;
  for (int i = 0; i < mesh.size(); ++i)
    sum += (w0 * pi0 * pi0) / (mesh.weights[i] * pi[i] * pi[i]);
  return 1.0 / (w0 * sum);
}

SumPolynomials sum_polynomials(const OrthoSequence& seq) {
  SumPolynomials out;
  const int s = seq.degree();
  const int m = seq.mesh.size();
  out.values.assign(s + 1, std::vector<double>(m, 0.0));
  for (int i = 0; i <= s; ++i)
    for (int j = 0; j < m; ++j)
      out.values[i][j] =
          (i == 0 ? 0.0 : out.values[i - 1][j]) + seq.values[i][j];
  out.top = seq.sum_top;
  for (int i = 1; i <= s; ++i)
    if (!(out.top[i] > out.top[i - 1])) out.chain_strictly_increasing = false;
  out.top_vs_inverse_w0 = std::fabs(out.top[s] - 1.0 / seq.mesh.weights[0]);
  for (int j = 1; j < m; ++j)
    out.max_off_top = std::max(out.max_off_top, std::fabs(out.values[s][j]));
  return out;
}

std::vector<double> monomial_coefficients(const OrthoSequence& seq, int i) {
  // Newton form on the first i+1 mesh points, then expanded.
  const auto& x = seq.mesh.points;
  std::vector<double> divided(seq.values[i].begin(), seq.values[i].begin() + i + 1);
  for (int level = 1; level <= i; ++level)
    for (int k = i; k >= level; --k)
      divided[k] = (divided[k] - divided[k - 1]) / (x[k] - x[k - level]);

  std::vector<double> coeffs{divided[i]};
  for (int k = i - 1; k >= 0; --k) {
    // coeffs <- coeffs * (x - x_k) + divided[k]
    coeffs.insert(coeffs.begin(), 0.0);
    for (size_t j = 0; j + 1 < coeffs.size(); ++j)
      coeffs[j] -= x[k] * coeffs[j + 1];
    coeffs[0] += divided[k];
  }
  return coeffs;
}

}  // namespace dbr
