#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colgen.hpp"
#include "graph.hpp"

namespace modcg {

struct TraceRow {
  int iter = 0;
  std::string mode;  // "peel" or "exact"
  int columns_added = 0;
  double master_objective = 0.0;
  double elapsed_s = 0.0;
};

// Flat, serializable view of one solver run. Clusters carry the labels the
// vertices had in the input text, not internal ids.
struct RunReport {
  std::string instance_name;
  int n = 0;
  long long m = 0;

  double epsilon = 1e-6;
  std::vector<double> p_grid;
  std::vector<double> q_grid;
  double time_limit_s = 1800.0;
  bool seedless = true;  // the solver has no random state, stated explicitly

  double dual_objective = 0.0;
  std::string status;         // "dual-optimal" or "time-limit"
  std::string primal_status;  // "integral", "fractional", "fractional-unresolved"
  std::optional<double> modularity_density;  // absent iff unresolved
  std::vector<std::vector<std::string>> clusters;
  bool certificate = false;

  std::vector<TraceRow> trace;

  long long total_columns = 0;
  int exact_calls = 0;
  double wall_s = 0.0;
  long long duplicate_columns_dropped = 0;
};

RunReport make_report(const Graph& g, const std::string& instance_name,
                      const ColGenConfig& cfg, const ColGenReport& rep,
                      double wall_s);

std::string report_to_json(const RunReport& r, int indent = 2);

// Parses and validates; throws argument_error on a malformed document or a
// broken invariant (e.g. a resolved run without its objective value).
RunReport report_from_json(const std::string& text);

}  // namespace modcg
