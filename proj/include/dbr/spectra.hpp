#pragma once

#include <vector>

#include "dbr/graph.hpp"
#include "dbr/matrix.hpp"
#include "dbr/orthopoly.hpp"

namespace dbr {

struct Spectrum {
  std::vector<double> distinct;    // strictly decreasing
  std::vector<int> multiplicity;   // positive, sums to n
  int d() const { return static_cast<int>(distinct.size()) - 1; }
  double spectral_radius() const { return distinct.front(); }

  // Index of the eigenvalue snapped to exactly zero, or -1.
  int zero_index() const {
    for (size_t i = 0; i < distinct.size(); ++i)
      if (distinct[i] == 0.0) return static_cast<int>(i);
    return -1;
  }
  int zero_multiplicity() const {
    int z = zero_index();
    return z < 0 ? 0 : multiplicity[z];
  }
};

struct Idempotents {
  std::vector<Matrix> E;  // one projector per distinct eigenvalue
};

struct Decomposition {
  Spectrum spectrum;
  Idempotents idempotents;
  std::vector<double> top_eigenvector;  // unit norm, sign as produced
};

// Full symmetric eigendecomposition of the adjacency matrix via cyclic
// Jacobi, with eigenvalues grouped into distinct values when consecutive
// gaps fall below tol * max(1, spectral radius).  Values within the same
// threshold of zero are snapped to exactly zero.
Decomposition eigendecompose(const Graph& g, double tol = 1e-8);

struct LocalSpectrum {
  int vertex = 0;
  std::vector<double> values;  // m_u(lambda_i), sums to 1
  int d_u = 0;                 // support size above threshold, minus one
};

LocalSpectrum local_spectrum(const Idempotents& idem, int u,
                             double support_threshold = 1e-10);
std::vector<LocalSpectrum> all_local_spectra(const Idempotents& idem,
                                             double support_threshold = 1e-10);

struct WalkMomentResiduals {
  double max_global = 0.0;  // trace form
  double max_local = 0.0;   // per-vertex form
};

// Compares exact closed-walk counts (A^l)_{uu} against spectral moment sums
// for l = 0..ell_max (default 2d).
WalkMomentResiduals walk_moment_check(const Graph& g, const Spectrum& spec,
                                      const std::vector<LocalSpectrum>& locals,
                                      int ell_max = -1);

struct PerronWeights {
  std::vector<double> alpha;  // strictly positive, ||alpha||^2 = n

  double norm_sq(const std::vector<int>& vertices) const {
    double s = 0.0;
    for (int u : vertices) s += alpha[u] * alpha[u];
    return s;
  }
};

PerronWeights perron_weights(const Graph& g, const Spectrum& spec,
                             const std::vector<double>& top_eigenvector);

// Bare symmetric eigensolver (cyclic Jacobi with accumulated rotations),
// eigenpairs sorted by decreasing eigenvalue.  Exposed for tests.
struct DenseEigen {
  std::vector<double> values;
  Matrix vectors;  // columns are eigenvectors
};
DenseEigen jacobi_eigensolve(Matrix a, int max_sweeps = 60);

// s_top(A) for the sequence's sum polynomial, evaluated through the
// three-term recurrence.  With the global spectral weights this is the
// polynomial sending the adjacency matrix of a regular graph to all-ones.
Matrix evaluate_sum_on_matrix(const OrthoSequence& seq, const Matrix& a);

}  // namespace dbr
