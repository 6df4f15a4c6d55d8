#pragma once

#include <span>
#include <vector>

#include "dbr/errors.hpp"

namespace dbr {

// Finite strictly decreasing mesh of reals carrying nonnegative weights that
// sum to one; the domain of every discrete scalar product here.
struct WeightedMesh {
  std::vector<double> points;
  std::vector<double> weights;

  int size() const { return static_cast<int>(points.size()); }
  bool full_support(double eps = 1e-10) const;
  WeightedMesh support_restricted(double eps = 1e-10) const;
};

// <f,g> = sum_i w_i f(lambda_i) g(lambda_i) over value vectors on the mesh.
double inner_product(const WeightedMesh& mesh, std::span<const double> f,
                     std::span<const double> g);

// Values of a polynomial given by monomial coefficients (c0 + c1 x + ...).
std::vector<double> mesh_values(const WeightedMesh& mesh,
                                std::span<const double> monomial_coeffs);

// pi_i = prod_{j != i} |x_i - x_j|
std::vector<double> pi_constants(const std::vector<double>& points);

// Orthogonal polynomial sequence r_0..r_s on the support of a mesh,
// normalized so that ||r_i||^2 = r_i(lambda_0), together with the three-term
// recurrence constants x r_i = b_{i-1} r_{i-1} + a_i r_i + c_{i+1} r_{i+1}
// (conventions c_0 = b_s = 0).
struct OrthoSequence {
  WeightedMesh mesh;  // support-restricted
  std::vector<std::vector<double>> values;  // values[i][j] = r_i(lambda_j)
  std::vector<double> a, b, c;
  std::vector<double> top;      // r_i(lambda_0)
  std::vector<double> sum_top;  // s_i(lambda_0) with s_i = r_0 + ... + r_i

  int count() const { return static_cast<int>(values.size()); }
  int degree() const { return count() - 1; }
};

OrthoSequence orthogonal_sequence(const WeightedMesh& mesh);

struct RecurrenceResiduals {
  double max_coefficient = 0.0;  // max_i |a_i + b_i + c_i - lambda_0|
  double max_pointwise = 0.0;    // recurrence identity evaluated on the mesh
};
RecurrenceResiduals recurrence_check(const OrthoSequence& seq);

// r_s(lambda_0) from the pi constants; needs full support.
double top_value_closed_form(const WeightedMesh& mesh);

struct SumPolynomials {
  std::vector<std::vector<double>> values;  // values[i][j] = s_i(lambda_j)
  std::vector<double> top;                  // s_i(lambda_0)
  bool chain_strictly_increasing = true;
  double top_vs_inverse_w0 = 0.0;  // |s_s(lambda_0) - 1/w_0|
  double max_off_top = 0.0;        // max_j>0 |s_s(lambda_j)|
};
SumPolynomials sum_polynomials(const OrthoSequence& seq);

// Monomial coefficients of r_i via Newton-form interpolation on the mesh.
std::vector<double> monomial_coefficients(const OrthoSequence& seq, int i);

}  // namespace dbr
