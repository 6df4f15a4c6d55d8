#include "dbr/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace dbr {

namespace {

using nlohmann::ordered_json;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

ordered_json condition_json(const Condition& c) {
  return {{"name", c.name},
          {"average", c.average},
          {"target", c.target},
          {"gap", c.gap},
          {"pass", c.pass}};
}

ordered_json array_json(const IntersectionArray& a) {
  return {{"ecc", a.ecc}, {"b", a.b}, {"c", a.c}, {"a", a.a}};
}

}  // namespace

Report make_report(const std::string& source, const Graph& g,
                   const AnalysisOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.source = source;
  r.n = g.vertex_count();
  r.m_edges = g.edge_count();
  r.tol_eig = opts.tol_eig;
  r.tol_eq = opts.tol_eq;
  r.analysis = analyze(g, opts);
  r.oracle = is_distance_biregular(g);
  r.agreement =
      r.analysis.verdict.distance_biregular_spectral == r.oracle.biregular;
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

nlohmann::ordered_json report_to_json(const Report& r) {
  const Analysis& an = r.analysis;
  ordered_json j;
  j["input"] = {{"source", r.source},
                {"n", r.n},
                {"m_edges", r.m_edges},
                {"n1", an.bip.n1},
                {"n2", an.bip.n2},
                {"D1", an.bip.D1},
                {"D2", an.bip.D2},
                {"delta1", an.bip.delta1 ? ordered_json(*an.bip.delta1)
                                         : ordered_json(nullptr)},
                {"delta2", an.bip.delta2 ? ordered_json(*an.bip.delta2)
                                         : ordered_json(nullptr)}};
  j["spectrum"] = {{"distinct", an.spectrum.distinct},
                   {"multiplicities", an.spectrum.multiplicity},
                   {"d", an.spectrum.d()},
                   {"m_zero", an.spectrum.zero_multiplicity()}};
  j["case"] = case_tag_name(an.weights.tag);
  j["sides_swapped_for_weights"] = an.weights.sides_swapped;

  ordered_json targets;
  auto put = [&](const char* key, double v) {
    if (!std::isnan(v)) targets[key] = v;
  };
  put("p_d", an.targets.p_d);
  put("p1_d", an.targets.p1_d);
  put("p2_d", an.targets.p2_d);
  put("p2_dm1_star", an.targets.p2_dm1_star);
  put("scaling_residual", an.targets.scaling_residual);
  j["targets"] = targets;

  const int d = an.spectrum.d();
  ordered_json averages;
  averages["k_d"] = an.averages.global_at(d);
  averages["k1_d"] = an.weights.sides_swapped ? an.averages.side2_at(d)
                                              : an.averages.side1_at(d);
  averages["k2_d"] = an.weights.sides_swapped ? an.averages.side1_at(d)
                                              : an.averages.side2_at(d);
  averages["k2_dm1"] = an.weights.sides_swapped ? an.averages.side1_at(d - 1)
                                                : an.averages.side2_at(d - 1);
  j["averages"] = averages;

  ordered_json conds = ordered_json::array();
  for (const Condition& c : an.verdict.conditions) conds.push_back(condition_json(c));
  j["conditions"] = conds;
  if (an.verdict.combined) j["combined_condition"] = condition_json(*an.verdict.combined);
  if (an.verdict.case_c_literal) {
    j["case_c"] = {{"literal", condition_json(*an.verdict.case_c_literal)},
                   {"rescaled", condition_json(*an.verdict.case_c_rescaled)}};
  }
  if (an.explicit_targets) {
    const auto& e = *an.explicit_targets;
    j["explicit_formulae"] = {
        {"p1_d_display_n2", e.p1_d_display_n2},
        {"p1_d_display_n1", e.p1_d_display_n1},
        {"p1_d_closed_form", e.p1_d_closed_form},
        {"p1_d_display_vs_closed_form",
         std::fabs(e.p1_d_display_n2 - e.p1_d_closed_form)},
        {"p2_dm1_display_reduced", e.p2_dm1_display_reduced},
        {"p2_dm1_display_full", e.p2_dm1_display_full},
        {"p2_dm1_closed_form", e.p2_dm1_closed_form},
        {"p2_dm1_display_vs_closed_form",
         std::fabs(e.p2_dm1_display_reduced - e.p2_dm1_closed_form)}};
  }
  j["verdict"] = {
      {"distance_biregular_spectral", an.verdict.distance_biregular_spectral},
      {"max_gap", an.verdict.max_gap}};
  j["oracle"] = {{"distance_biregular", r.oracle.biregular}};
  if (r.oracle.biregular) {
    j["oracle"]["side1_array"] = array_json(r.oracle.side1);
    j["oracle"]["side2_array"] = array_json(r.oracle.side2);
  }
  j["agreement"] = r.agreement;
  j["tolerances"] = {{"eig", r.tol_eig}, {"eq", r.tol_eq}};
  j["timing_ms"] = r.elapsed_ms;
  return j;
}

void print_report_text(std::ostream& os, const Report& r) {
  const Analysis& an = r.analysis;
  os << "graph: " << r.source << "  (n=" << r.n << ", m=" << r.m_edges << ")\n";
  os << "sides: n1=" << an.bip.n1 << " n2=" << an.bip.n2 << "  D1=" << an.bip.D1
     << " D2=" << an.bip.D2;
  if (an.bip.delta1 && an.bip.delta2)
    os << "  degrees " << *an.bip.delta1 << "/" << *an.bip.delta2;
  os << "\n";
  os << "spectrum:";
  for (int i = 0; i <= an.spectrum.d(); ++i)
    os << " " << fmt(an.spectrum.distinct[i]) << "^" << an.spectrum.multiplicity[i];
  os << "\ncase: " << case_tag_name(an.weights.tag);
  if (an.weights.sides_swapped) os << "  (sides relabeled for the weight family)";
  os << "\nconditions:\n";
  for (const Condition& c : an.verdict.conditions)
    os << "  " << c.name << ": average=" << fmt(c.average)
       << " target=" << fmt(c.target) << " gap=" << fmt(c.gap)
       << (c.pass ? "  pass" : "  FAIL") << "\n";
  if (an.verdict.combined) {
    const Condition& c = *an.verdict.combined;
    os << "  [report] " << c.name << ": lhs=" << fmt(c.average)
       << " rhs=" << fmt(c.target) << " gap=" << fmt(c.gap) << "\n";
  }
  if (an.verdict.case_c_literal) {
    os << "  [report] literal variant gap=" << fmt(an.verdict.case_c_literal->gap)
       << (an.verdict.case_c_literal->pass ? " (pass)" : " (fail)")
       << ", rescaled variant gap=" << fmt(an.verdict.case_c_rescaled->gap)
       << (an.verdict.case_c_rescaled->pass ? " (pass)" : " (fail)") << "\n";
  }
  os << "verdict: "
     << (an.verdict.distance_biregular_spectral ? "distance-biregular"
                                                : "not distance-biregular")
     << " (spectral)   oracle: "
     << (r.oracle.biregular ? "distance-biregular" : "not distance-biregular")
     << "   agreement: " << (r.agreement ? "yes" : "NO") << "\n";
  os << "tolerances: eig=" << fmt_short(r.tol_eig) << " eq=" << fmt_short(r.tol_eq)
     << "   time: " << fmt_short(r.elapsed_ms) << " ms\n";
}

}  // namespace dbr
