// Times the OpenMP kernels against their serial references and checks that
// both produce identical results.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "dbr/graph.hpp"
#include "dbr/matrix.hpp"
#include "dbr/oracle.hpp"

using dbr::Graph;
using dbr::Matrix;

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
      .count();
}

template <class F>
double timed(F&& f) {
  double t0 = now_ms();
  f();
  return now_ms() - t0;
}

void row(const char* name, int n, double serial_ms, double parallel_ms, bool ok) {
  std::printf("%-28s n=%-6d serial %9.1f ms   parallel %9.1f ms   speedup %.2fx   %s\n",
              name, n, serial_ms, parallel_ms, serial_ms / parallel_ms,
              ok ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) omp_set_num_threads(std::atoi(argv[1]));
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    Graph g = dbr::generate("hypercube", {12});
    std::vector<std::vector<int>> a, b;
    double ts = timed([&] { a = dbr::distance_count_table_serial(g); });
    double tp = timed([&] { b = dbr::distance_count_table(g); });
    row("distance count table", g.vertex_count(), ts, tp, a == b);
  }

  {
    Graph g = dbr::generate("hypercube", {11});
    dbr::DistanceBiregularResult a, b;
    double ts = timed([&] { a = dbr::is_distance_biregular_serial(g); });
    double tp = timed([&] { b = dbr::is_distance_biregular(g); });
    bool ok = a.biregular == b.biregular && a.side1 == b.side1 && a.side2 == b.side2;
    row("biregularity scan", g.vertex_count(), ts, tp, ok);
  }

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  {
    const int n = 768;
    Matrix v(n);
    for (double& x : v.a) x = unit(rng);
    Matrix a, b;
    double ts = timed([&] { a = dbr::projector_from_columns_serial(v, 0, 64); });
    double tp = timed([&] { b = dbr::projector_from_columns(v, 0, 64); });
    row("projector assembly", n, ts, tp, dbr::max_abs_diff(a, b) == 0.0);
  }

  {
    const int n = 640;
    Matrix x(n), y(n);
    for (double& v : x.a) v = unit(rng);
    for (double& v : y.a) v = unit(rng);
    Matrix a, b;
    double ts = timed([&] { dbr::matmul_serial(x, y, a); });
    double tp = timed([&] { dbr::matmul(x, y, b); });
    row("dense matmul", n, ts, tp, dbr::max_abs_diff(a, b) == 0.0);
  }

  return 0;
}
