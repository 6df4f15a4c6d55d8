#include "dbr/oracle.hpp"

#include <array>
#include <cmath>

namespace dbr {

namespace {

// Array-only scan; the per-vertex table is left to the public entry point so
// the whole-graph recognizers stay light on memory.
struct LevelScan {
  bool constant = false;
  IntersectionArray array;
};

LevelScan scan_levels(const Graph& g, int u) {
  auto profile = distance_profile(g, u);
  const int ecc = profile.eccentricity();

  LevelScan scan;
  scan.array.ecc = ecc;
  scan.array.b.assign(ecc, -1);
  scan.array.c.assign(ecc, -1);
  scan.array.a.assign(ecc + 1, -1);
  scan.constant = true;

  for (int v = 0; v < g.vertex_count(); ++v) {
    int i = profile.dist[v];
    long long cv = 0, av = 0, bv = 0;
    for (int w : g.neighbors(v)) {
      int dw = profile.dist[w];
      if (dw == i - 1) ++cv;
      else if (dw == i) ++av;
      else ++bv;
    }
    if (i >= 1) {
      if (scan.array.c[i - 1] < 0) scan.array.c[i - 1] = cv;
      else if (scan.array.c[i - 1] != cv) scan.constant = false;
    }
    if (scan.array.a[i] < 0) scan.array.a[i] = av;
    else if (scan.array.a[i] != av) scan.constant = false;
    if (i < ecc) {
      if (scan.array.b[i] < 0) scan.array.b[i] = bv;
      else if (scan.array.b[i] != bv) scan.constant = false;
    }
  }
  return scan;
}

}  // namespace

IntersectionScan intersection_numbers_around(const Graph& g, int u) {
  auto profile = distance_profile(g, u);
  const int n = g.vertex_count();

  IntersectionScan scan;
  auto levels = scan_levels(g, u);
  scan.constant = levels.constant;
  scan.array = std::move(levels.array);
  scan.table.resize(n);
  for (int v = 0; v < n; ++v) {
    int i = profile.dist[v];
    long long cv = 0, av = 0, bv = 0;
    for (int w : g.neighbors(v)) {
      int dw = profile.dist[w];
      if (dw == i - 1) ++cv;
      else if (dw == i) ++av;
      else ++bv;
    }
    scan.table[v] = {cv, av, bv};
  }
  return scan;
}

PseudoNumbers pseudo_intersection_numbers(const Graph& g, int u,
                                          const std::vector<double>& alpha,
                                          double tol) {
  auto profile = distance_profile(g, u);
  const int ecc = profile.eccentricity();
  const int n = g.vertex_count();

  PseudoNumbers out;
  out.table.resize(n);
  const double unset = -1.0;
  out.b.assign(ecc, unset);
  out.c.assign(ecc, unset);
  out.a.assign(ecc + 1, unset);
  out.constant = true;

  auto match = [&](double& slot, double value) {
    if (slot == unset) slot = value;
    else if (std::fabs(slot - value) > tol) out.constant = false;
  };

  for (int v = 0; v < n; ++v) {
    int i = profile.dist[v];
    double cv = 0, av = 0, bv = 0;
    for (int w : g.neighbors(v)) {
      int dw = profile.dist[w];
      if (dw == i - 1) cv += alpha[w];
      else if (dw == i) av += alpha[w];
      else bv += alpha[w];
    }
    cv /= alpha[v];
    av /= alpha[v];
    bv /= alpha[v];
    out.table[v] = {cv, av, bv};

    if (i >= 1) match(out.c[i - 1], cv);
    match(out.a[i], av);
    if (i < ecc) match(out.b[i], bv);
    else if (bv != 0.0) out.constant = false;
  }
  return out;
}

DistanceRegularResult is_distance_regular(const Graph& g) {
  const int n = g.vertex_count();
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "oracle needs a connected graph");
  std::vector<LevelScan> scans(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (int u = 0; u < n; ++u) scans[u] = scan_levels(g, u);

  DistanceRegularResult res;
  for (int u = 0; u < n; ++u) {
    if (!scans[u].constant) return res;
    if (u > 0 && !(scans[u].array == scans[0].array)) return res;
  }
  res.regular = true;
  res.array = scans[0].array;
  return res;
}

namespace {

DistanceBiregularResult biregular_from_scans(const Graph& g,
                                             const std::vector<LevelScan>& scans) {
  DistanceBiregularResult res;
  Bipartition bip;
  try {
    bip = bipartition(g);
  } catch (const NotBipartiteError&) {
    return res;
  }
  for (int u = 0; u < g.vertex_count(); ++u)
    if (!scans[u].constant) return res;
  for (int u : bip.side1)
    if (!(scans[u].array == scans[bip.side1.front()].array)) return res;
  for (int v : bip.side2)
    if (!(scans[v].array == scans[bip.side2.front()].array)) return res;
  res.biregular = true;
  res.side1 = scans[bip.side1.front()].array;
  res.side2 = scans[bip.side2.front()].array;
  return res;
}

}  // namespace

DistanceBiregularResult is_distance_biregular(const Graph& g) {
  const int n = g.vertex_count();
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "oracle needs a connected graph");
  std::vector<LevelScan> scans(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (int u = 0; u < n; ++u) scans[u] = scan_levels(g, u);
  return biregular_from_scans(g, scans);
}

DistanceBiregularResult is_distance_biregular_serial(const Graph& g) {
  const int n = g.vertex_count();
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "oracle needs a connected graph");
  std::vector<LevelScan> scans(n);
  for (int u = 0; u < n; ++u) scans[u] = scan_levels(g, u);
  return biregular_from_scans(g, scans);
}

}  // namespace dbr
