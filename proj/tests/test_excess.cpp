#include <doctest.h>

#include <cmath>

#include "dbr/excess.hpp"
#include "dbr/oracle.hpp"
#include "helpers.hpp"

using namespace dbr;

namespace {

struct Pipeline {
  Bipartition bip;
  Decomposition dec;
  std::vector<LocalSpectrum> locals;
  PerronWeights pw;
};

Pipeline run_pipeline(const Graph& g) {
  Pipeline p;
  p.bip = bipartition(g);
  p.dec = eigendecompose(g);
  p.locals = all_local_spectra(p.dec.idempotents);
  p.pw = perron_weights(g, p.dec.spectrum, p.dec.top_eigenvector);
  return p;
}

}  // namespace

TEST_CASE("weight families of the named small graphs") {
  Graph p3 = generate("path", {3});
  auto pp = run_pipeline(p3);
  auto wf = build_weight_family(pp.dec.spectrum, pp.locals, pp.bip);
  CHECK(wf.tag == CaseTag::IV);
  CHECK(!wf.sides_swapped);
  CHECK(wf.side1.weights[0] == doctest::Approx(0.25));
  CHECK(wf.side1.weights[1] == doctest::Approx(0.5));
  CHECK(wf.side1.weights[2] == doctest::Approx(0.25));
  CHECK(wf.side2.weights[0] == doctest::Approx(0.5));
  CHECK(wf.side2.weights[1] == 0.0);  // cleared exactly
  CHECK(wf.side2.weights[2] == doctest::Approx(0.5));
  CHECK(wf.route_difference < 1e-8);

  Graph k23 = generate("complete_bipartite", {2, 3});
  auto pk = run_pipeline(k23);
  auto wk = build_weight_family(pk.dec.spectrum, pk.locals, pk.bip);
  CHECK(wk.tag == CaseTag::III);
  // zero multiplicity from the biadjacency rank, exactly
  int rank = test_helpers::biadjacency_rank(k23, pk.bip);
  CHECK(pk.dec.spectrum.zero_multiplicity() == k23.vertex_count() - 2 * rank);
  CHECK(pk.dec.spectrum.zero_multiplicity() == 3);

  Graph c6 = generate("cycle", {6});
  auto pc = run_pipeline(c6);
  auto wc = build_weight_family(pc.dec.spectrum, pc.locals, pc.bip);
  CHECK(wc.tag == CaseTag::I);
  for (int i = 0; i <= pc.dec.spectrum.d(); ++i) {
    CHECK(wc.side1.weights[i] == doctest::Approx(wc.global.weights[i]));
    CHECK(wc.side2.weights[i] == doctest::Approx(wc.global.weights[i]));
  }
}

TEST_CASE("case tags across the corpus") {
  for (const auto& [name, g] : test_helpers::classification_corpus()) {
    INFO(name);
    auto p = run_pipeline(g);
    auto wf = build_weight_family(p.dec.spectrum, p.locals, p.bip);
    int d = p.dec.spectrum.d();
    int m0 = p.dec.spectrum.zero_multiplicity();
    if (p.bip.n1 == p.bip.n2) CHECK(wf.tag == CaseTag::I);
    else if (d % 2 == 0 && m0 == p.bip.n1 - p.bip.n2) CHECK(wf.tag == CaseTag::IV);
    else CHECK(wf.tag == CaseTag::III);
    // zero multiplicity vs the exact biadjacency rank
    int rank = test_helpers::biadjacency_rank(g, p.bip);
    CHECK(m0 == g.vertex_count() - 2 * rank);
    // weight vectors are normalized
    for (const WeightedMesh* mesh : {&wf.global, &wf.side1, &wf.side2}) {
      double sum = 0.0;
      for (double w : mesh->weights) sum += w;
      CHECK(sum == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("zero-deficient side is relabeled to side 2 when needed") {
  Graph p3 = generate("path", {3});
  auto p = run_pipeline(p3);
  // hand the builder a flipped labeling: center as side 1, leaves as side 2
  Bipartition flipped = p.bip;
  std::swap(flipped.side1, flipped.side2);
  std::swap(flipped.n1, flipped.n2);
  std::swap(flipped.D1, flipped.D2);
  std::swap(flipped.delta1, flipped.delta2);
  for (int& s : flipped.side_of) s = 1 - s;

  auto wf = build_weight_family(p.dec.spectrum, p.locals, flipped);
  CHECK(wf.tag == CaseTag::IV);
  CHECK(wf.sides_swapped);
  CHECK(wf.n1 == 2);
  CHECK(wf.n2 == 1);
  auto straight = build_weight_family(p.dec.spectrum, p.locals, p.bip);
  for (int i = 0; i < 3; ++i) {
    CHECK(wf.side1.weights[i] == doctest::Approx(straight.side1.weights[i]));
    CHECK(wf.side2.weights[i] == doctest::Approx(straight.side2.weights[i]));
  }
}

TEST_CASE("corrupted local multiplicities are rejected") {
  Graph c6 = generate("cycle", {6});
  auto p = run_pipeline(c6);
  p.locals[2].values[1] += 1e-3;
  CHECK_THROWS_AS(build_weight_family(p.dec.spectrum, p.locals, p.bip), Error);
}

TEST_CASE("spectral targets of the named graphs") {
  Graph c6 = generate("cycle", {6});
  auto pc = run_pipeline(c6);
  auto tc = predistance_targets(build_weight_family(pc.dec.spectrum, pc.locals, pc.bip));
  CHECK(tc.p_d == doctest::Approx(1.0));
  CHECK(tc.scaling_residual < 1e-9);

  Graph p3 = generate("path", {3});
  auto pp = run_pipeline(p3);
  auto tp = predistance_targets(build_weight_family(pp.dec.spectrum, pp.locals, pp.bip));
  CHECK(tp.p1_d == doctest::Approx(1.0));
  CHECK(tp.p2_dm1_star == doctest::Approx(1.0));

  Graph sp = subdivide(generate("petersen", {}));
  auto ps = run_pipeline(sp);
  auto wfs = build_weight_family(ps.dec.spectrum, ps.locals, ps.bip);
  auto ts = predistance_targets(wfs);
  CHECK(std::fabs(ts.p1_d - 2.0) < 1e-9);
  CHECK(std::fabs(ts.p2_dm1_star - 4.0) < 1e-9);
  // constructive route vs closed form on the full-support side-1 mesh
  CHECK(std::fabs(top_value_closed_form(wfs.side1) - ts.p1_d) < 1e-9);
}

TEST_CASE("odd-diameter side targets are scaled copies of the global ones") {
  for (const auto& [name, g] : test_helpers::classification_corpus()) {
    auto p = run_pipeline(g);
    if (p.dec.spectrum.d() % 2 == 0) continue;
    INFO(name);
    auto wf = build_weight_family(p.dec.spectrum, p.locals, p.bip);
    auto t = predistance_targets(wf);
    CHECK(t.scaling_residual < 1e-8);
  }
}

TEST_CASE("explicit formulae in the zero-deficient case") {
  Graph p3 = generate("path", {3});
  auto pp = run_pipeline(p3);
  auto e3 = explicit_formula_targets(pp.dec.spectrum, 2, 1);
  CHECK(e3.p1_d_display_n2 == doctest::Approx(0.5));
  CHECK(e3.p1_d_display_n1 == doctest::Approx(1.0));
  CHECK(e3.p1_d_closed_form == doctest::Approx(1.0));
  CHECK(e3.p2_dm1_display_reduced == doctest::Approx(1.0));
  CHECK(e3.p2_dm1_closed_form == doctest::Approx(1.0));

  Graph sp = subdivide(generate("petersen", {}));
  auto ps = run_pipeline(sp);
  auto es = explicit_formula_targets(ps.dec.spectrum, 15, 10);
  CHECK(es.p1_d_display_n2 == doctest::Approx(4.0 / 3));
  CHECK(es.p1_d_display_n1 == doctest::Approx(2.0));
  CHECK(es.p1_d_closed_form == doctest::Approx(2.0));
  CHECK(es.p2_dm1_display_reduced == doctest::Approx(4.0));
  CHECK(es.p2_dm1_display_full == doctest::Approx(1.6));
  CHECK(es.p2_dm1_closed_form == doctest::Approx(4.0));

  // wrong configurations are refused
  Graph c6 = generate("cycle", {6});
  auto pc = run_pipeline(c6);
  CHECK_THROWS_AS(explicit_formula_targets(pc.dec.spectrum, 3, 3), Error);
  Graph k23 = generate("complete_bipartite", {2, 3});
  auto pk = run_pipeline(k23);
  CHECK_THROWS_AS(explicit_formula_targets(pk.dec.spectrum, 3, 2), Error);
}

TEST_CASE("local inequality: degree zero is always tight") {
  for (const auto& [name, g] : test_helpers::classification_corpus()) {
    INFO(name);
    auto p = run_pipeline(g);
    for (int u = 0; u < g.vertex_count(); ++u) {
      auto ex = local_excess_inequality(g, u, p.dec.spectrum, p.locals[u], p.pw, 0);
      CHECK(ex.lhs == doctest::Approx(1.0));
      CHECK(ex.rhs == doctest::Approx(1.0));
      CHECK(ex.equality);
    }
  }
}

TEST_CASE("local inequality on the 6-cycle is tight at the penultimate degree") {
  Graph c6 = generate("cycle", {6});
  auto p = run_pipeline(c6);
  for (int u = 0; u < 6; ++u) {
    auto ex = local_excess_inequality(c6, u, p.dec.spectrum, p.locals[u], p.pw, 2);
    CHECK(ex.equality);
    CHECK(ex.lhs == doctest::Approx(std::sqrt(5.0)));
  }
}

TEST_CASE("local inequality separates the 5-path's vertices") {
  Graph p5 = generate("path", {5});
  auto p = run_pipeline(p5);

  // end vertex: singleton shells, tight at every admissible degree
  CHECK(p.locals[0].d_u == 4);
  auto end = local_excess_inequality(p5, 0, p.dec.spectrum, p.locals[0], p.pw, 3);
  CHECK(end.lhs == doctest::Approx(std::sqrt(11.0)));
  CHECK(end.rhs == doctest::Approx(std::sqrt(11.0)));
  CHECK(end.equality);

  // second vertex: level sizes differ, strictly slack at d_u - 1
  CHECK(p.locals[1].d_u == 3);
  auto second = local_excess_inequality(p5, 1, p.dec.spectrum, p.locals[1], p.pw, 2);
  CHECK(second.lhs == doctest::Approx(std::sqrt(3.5)));
  CHECK(second.rhs == doctest::Approx(std::sqrt(11.0 / 3)));
  CHECK(!second.equality);
  CHECK(second.rhs - second.lhs > 1e-3);

  CHECK_THROWS_AS(
      local_excess_inequality(p5, 1, p.dec.spectrum, p.locals[1], p.pw, 4),
      Error);
}

TEST_CASE("local inequality direction and tightness at the full degree") {
  for (const auto& [name, g] : test_helpers::classification_corpus()) {
    INFO(name);
    auto p = run_pipeline(g);
    auto sweep = local_excess_sweep(g, p.dec.spectrum, p.locals, p.pw);
    for (int u = 0; u < g.vertex_count(); ++u) {
      for (int j = 0; j <= p.locals[u].d_u; ++j) {
        CHECK(sweep[u][j].lhs <= sweep[u][j].rhs + 1e-8);
      }
      // at j = d_u the ball covers everything and both sides coincide
      CHECK(sweep[u][p.locals[u].d_u].equality);
    }
  }
}

TEST_CASE("tightness at d_u - 1 matches the combinatorial certificate") {
  std::vector<Graph> graphs{generate("path", {5}),
                            build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 4}}, 5),
                            generate("cycle", {6}),
                            generate("complete_bipartite", {2, 3})};
  for (const Graph& g : graphs) {
    auto p = run_pipeline(g);
    for (int u = 0; u < g.vertex_count(); ++u) {
      int du = p.locals[u].d_u;
      if (du < 1) continue;
      auto ex = local_excess_inequality(g, u, p.dec.spectrum, p.locals[u], p.pw,
                                        du - 1);
      auto pseudo = pseudo_intersection_numbers(g, u, p.pw.alpha);
      bool certified =
          pseudo.constant && distance_profile(g, u).eccentricity() == du;
      CHECK(ex.equality == certified);
    }
  }
}

TEST_CASE("sweep entries match the single-vertex operation") {
  Graph g = generate("complete_bipartite", {3, 4});
  auto p = run_pipeline(g);
  auto sweep = local_excess_sweep(g, p.dec.spectrum, p.locals, p.pw);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int j = 0; j <= p.locals[u].d_u; ++j) {
      auto ex = local_excess_inequality(g, u, p.dec.spectrum, p.locals[u], p.pw, j);
      CHECK(sweep[u][j].lhs == ex.lhs);
      CHECK(sweep[u][j].rhs == ex.rhs);
    }
}

TEST_CASE("full verdicts on the named graphs") {
  auto c6 = analyze(generate("cycle", {6}));
  CHECK(c6.verdict.tag == CaseTag::I);
  CHECK(c6.verdict.distance_biregular_spectral);

  auto k23 = analyze(generate("complete_bipartite", {2, 3}));
  CHECK(k23.verdict.tag == CaseTag::III);
  CHECK(k23.verdict.distance_biregular_spectral);
  REQUIRE(k23.verdict.combined.has_value());
  CHECK(k23.verdict.combined->gap < 1e-6);

  auto p3 = analyze(generate("path", {3}));
  CHECK(p3.verdict.tag == CaseTag::IV);
  CHECK(p3.verdict.distance_biregular_spectral);
  REQUIRE(p3.verdict.case_c_literal.has_value());
  CHECK(p3.verdict.case_c_literal->gap == doctest::Approx(1.0));
  CHECK(p3.verdict.case_c_rescaled->gap < 1e-9);

  auto sp_graph = subdivide(generate("petersen", {}));
  auto sp = analyze(sp_graph);
  CHECK(sp.verdict.tag == CaseTag::IV);
  CHECK(sp.verdict.distance_biregular_spectral);
  CHECK(sp.verdict.case_c_literal->gap == doctest::Approx(2.0));
  CHECK(sp.verdict.case_c_rescaled->gap < 1e-9);
  REQUIRE(sp.explicit_targets.has_value());

  // decision variant selection
  AnalysisOptions paper_opts;
  paper_opts.variant = CaseCVariant::Paper;
  CHECK(!analyze(sp_graph, paper_opts).verdict.distance_biregular_spectral);

  // deleting one edge keeps it connected but breaks biregularity
  Graph damaged = test_helpers::without_edge(sp_graph, sp_graph.edges().front());
  REQUIRE(damaged.connected());
  auto dv = analyze(damaged);
  CHECK(!dv.verdict.distance_biregular_spectral);
  CHECK(dv.verdict.max_gap > 1e-3);
  CHECK(!is_distance_biregular(damaged).biregular);
}

TEST_CASE("analyze rejects bad inputs") {
  CHECK_THROWS_AS(analyze(generate("petersen", {})), NotBipartiteError);
  CHECK_THROWS_AS(analyze(build_graph({{0, 1}, {2, 3}}, 4)), Error);
}

TEST_CASE("spectral target dominates the average on the corpus") {
  for (const auto& [name, g] : test_helpers::classification_corpus()) {
    INFO(name);
    auto an = analyze(g);
    int d = an.spectrum.d();
    switch (an.verdict.tag) {
      case CaseTag::I:
      case CaseTag::II:
        CHECK(an.targets.p_d >= an.averages.global_at(d) - 1e-8);
        break;
      case CaseTag::III:
        CHECK(an.targets.p1_d >= an.averages.side1_at(d) - 1e-8);
        CHECK(an.targets.p2_d >= an.averages.side2_at(d) - 1e-8);
        break;
      case CaseTag::IV:
        break;
    }
  }
}

TEST_CASE("verdicts agree with the combinatorial check on the corpus") {
  for (const auto& [name, g] : test_helpers::classification_corpus()) {
    INFO(name);
    auto an = analyze(g);
    auto oracle = is_distance_biregular(g);
    CHECK(an.verdict.distance_biregular_spectral == oracle.biregular);
  }
}
