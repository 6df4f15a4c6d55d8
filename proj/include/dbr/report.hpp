#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dbr/excess.hpp"
#include "dbr/oracle.hpp"

namespace dbr {

// One analyzed graph: identity, spectral pipeline output, combinatorial
// oracle output, and whether the two verdicts agree.
struct Report {
  std::string source;
  int n = 0;
  long long m_edges = 0;
  Analysis analysis;
  DistanceBiregularResult oracle;
  bool agreement = false;
  double tol_eig = 1e-8;
  double tol_eq = 1e-6;
  double elapsed_ms = 0.0;
};

Report make_report(const std::string& source, const Graph& g,
                   const AnalysisOptions& opts = {});

nlohmann::ordered_json report_to_json(const Report& r);
void print_report_text(std::ostream& os, const Report& r);

}  // namespace dbr
