#include <doctest.h>

#include <cmath>

#include "dbr/oracle.hpp"
#include "dbr/spectra.hpp"
#include "helpers.hpp"

using namespace dbr;

TEST_CASE("intersection numbers around a vertex") {
  Graph c6 = generate("cycle", {6});
  for (int u = 0; u < 6; ++u) {
    auto scan = intersection_numbers_around(c6, u);
    CHECK(scan.constant);
    CHECK(scan.array.ecc == 3);
    CHECK(scan.array.c == std::vector<long long>{1, 1, 2});
    CHECK(scan.array.b == std::vector<long long>{2, 1, 1});
    CHECK(scan.array.a == std::vector<long long>{0, 0, 0, 0});
  }

  Graph p3 = generate("path", {3});
  auto leaf = intersection_numbers_around(p3, 0);
  CHECK(leaf.constant);
  CHECK(leaf.array.ecc == 2);
  CHECK(leaf.array.b == std::vector<long long>{1, 1});
  CHECK(leaf.array.c == std::vector<long long>{1, 1});

  // star with a pendant hung on one leaf: the center sees an uneven level 1
  Graph lopsided = build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 4}}, 5);
  auto center = intersection_numbers_around(lopsided, 0);
  CHECK(!center.constant);
}

TEST_CASE("pseudo numbers reduce to plain counts for constant weights") {
  Graph pet = generate("petersen", {});
  std::vector<double> ones(pet.vertex_count(), 1.0);
  for (int u = 0; u < pet.vertex_count(); ++u) {
    auto plain = intersection_numbers_around(pet, u);
    auto pseudo = pseudo_intersection_numbers(pet, u, ones);
    CHECK(pseudo.constant == plain.constant);
    for (int v = 0; v < pet.vertex_count(); ++v)
      for (int k = 0; k < 3; ++k)
        CHECK(pseudo.table[v][k] ==
              doctest::Approx(static_cast<double>(plain.table[v][k])));
  }
}

TEST_CASE("pseudo numbers of the 3-path use the eigenvector weights") {
  Graph p3 = generate("path", {3});
  auto dec = eigendecompose(p3);
  auto pw = perron_weights(p3, dec.spectrum, dec.top_eigenvector);
  auto pseudo = pseudo_intersection_numbers(p3, 0, pw.alpha);
  CHECK(pseudo.constant);
  // c*_1 at the center is alpha_leaf / alpha_center = 1/sqrt(2)
  CHECK(pseudo.c[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("no same-level neighbors in bipartite graphs") {
  for (const auto& [name, g] : test_helpers::classification_corpus()) {
    INFO(name);
    auto dec = eigendecompose(g);
    auto pw = perron_weights(g, dec.spectrum, dec.top_eigenvector);
    for (int u = 0; u < g.vertex_count(); ++u) {
      auto pseudo = pseudo_intersection_numbers(g, u, pw.alpha);
      for (int v = 0; v < g.vertex_count(); ++v)
        CHECK(pseudo.table[v][1] == 0.0);
    }
  }
}

TEST_CASE("distance-regular recognition") {
  auto rp = is_distance_regular(generate("petersen", {}));
  CHECK(rp.regular);
  CHECK(rp.array.b == std::vector<long long>{3, 2});
  CHECK(rp.array.c == std::vector<long long>{1, 1});
  CHECK(rp.array.a == std::vector<long long>{0, 0, 2});

  CHECK(is_distance_regular(generate("cycle", {6})).regular);
  CHECK(!is_distance_regular(generate("path", {4})).regular);
}

TEST_CASE("distance-biregular recognition") {
  auto sp = is_distance_biregular(subdivide(generate("petersen", {})));
  CHECK(sp.biregular);
  CHECK(sp.side1.ecc == 6);
  CHECK(sp.side2.ecc == 5);

  auto k23 = is_distance_biregular(generate("complete_bipartite", {2, 3}));
  CHECK(k23.biregular);
  CHECK(k23.side1.ecc == 2);
  CHECK(k23.side2.ecc == 2);

  // subdividing a single edge of K_{2,3} breaks it
  Graph k23g = generate("complete_bipartite", {2, 3});
  std::vector<Edge> edges;
  for (auto e : k23g.edges())
    if (e != Edge{0, 2}) edges.push_back(e);
  edges.emplace_back(0, 5);
  edges.emplace_back(2, 5);
  Graph broken = build_graph(edges, 6);
  CHECK(broken.connected());
  CHECK(!is_distance_biregular(broken).biregular);

  CHECK(!is_distance_biregular(generate("petersen", {})).biregular);
}

TEST_CASE("bipartite distance-regular graphs are biregular with equal arrays") {
  for (const char* name : {"cycle", "hypercube"}) {
    Graph g = name[0] == 'c' ? generate("cycle", {6}) : generate("hypercube", {3});
    auto dr = is_distance_regular(g);
    REQUIRE(dr.regular);
    auto dbr_res = is_distance_biregular(g);
    CHECK(dbr_res.biregular);
    CHECK(dbr_res.side1 == dbr_res.side2);
    CHECK(dbr_res.side1 == dr.array);
  }
}

TEST_CASE("parallel biregularity scan equals the serial reference") {
  for (const auto& [name, g] : test_helpers::classification_corpus()) {
    INFO(name);
    auto par = is_distance_biregular(g);
    auto ser = is_distance_biregular_serial(g);
    CHECK(par.biregular == ser.biregular);
    CHECK(par.side1 == ser.side1);
    CHECK(par.side2 == ser.side2);
  }
}
