#include "report.hpp"

#include <string>

#include "errors.hpp"
#include "json.hpp"

namespace modcg {

namespace {

using nlohmann::json;

std::string mode_name(PricingMode m) {
  return m == PricingMode::Peel ? "peel" : "exact";
}

std::string status_name(ColGenStatus s) {
  return s == ColGenStatus::DualOptimal ? "dual-optimal" : "time-limit";
}

std::string primal_name(PrimalStatus s) {
  switch (s) {
    case PrimalStatus::Integral: return "integral";
    case PrimalStatus::Fractional: return "fractional";
    default: return "fractional-unresolved";
  }
}

}  // namespace

RunReport make_report(const Graph& g, const std::string& instance_name,
                      const ColGenConfig& cfg, const ColGenReport& rep,
                      double wall_s) {
  RunReport out;
  out.instance_name = instance_name;
  out.n = g.vertex_count();
  out.m = g.edge_count();

  out.epsilon = cfg.epsilon;
  out.p_grid = cfg.peel.p_grid;
  out.q_grid = cfg.peel.q_grid;
  out.time_limit_s = cfg.time_limit_s;

  out.dual_objective = rep.dual_objective;
  out.status = status_name(rep.status);
  out.primal_status = primal_name(rep.primal_status);
  out.modularity_density = rep.modularity_density;
  out.certificate = rep.certificate;
  if (rep.partition) {
    for (const VertexSet& c : rep.partition->clusters()) {
      std::vector<std::string> labels;
      labels.reserve(c.size());
      for (int v : c) labels.push_back(g.label(v));
      out.clusters.push_back(std::move(labels));
    }
  }

  for (const IterationRecord& it : rep.iterations) {
    TraceRow row;
    row.iter = it.iteration;
    row.mode = mode_name(it.mode);
    row.columns_added = it.columns_added;
    row.master_objective = it.master_objective;
    row.elapsed_s = it.elapsed_s;
    out.trace.push_back(std::move(row));
  }

  out.total_columns = rep.total_columns;
  out.exact_calls = rep.exact_calls;
  out.wall_s = wall_s;
  out.duplicate_columns_dropped = rep.duplicates_dropped;
  return out;
}

std::string report_to_json(const RunReport& r, int indent) {
  json result = {{"dual_objective", r.dual_objective},
                 {"status", r.status},
                 {"primal_status", r.primal_status},
                 {"clusters", r.clusters},
                 {"certificate", r.certificate}};
  if (r.modularity_density) result["modularity_density"] = *r.modularity_density;

  json trace = json::array();
  for (const TraceRow& row : r.trace)
    trace.push_back({{"iter", row.iter},
                     {"mode", row.mode},
                     {"columns_added", row.columns_added},
                     {"master_objective", row.master_objective},
                     {"elapsed_s", row.elapsed_s}});

  json doc = {
      {"instance", {{"name", r.instance_name}, {"n", r.n}, {"m", r.m}}},
      {"config",
       {{"epsilon", r.epsilon},
        {"p_grid", r.p_grid},
        {"q_grid", r.q_grid},
        {"time_limit_s", r.time_limit_s},
        {"seedless", r.seedless}}},
      {"result", result},
      {"trace", trace},
      {"totals",
       {{"columns", r.total_columns},
        {"exact_calls", r.exact_calls},
        {"wall_s", r.wall_s},
        {"duplicate_columns_dropped", r.duplicate_columns_dropped}}}};
  return doc.dump(indent);
}

RunReport report_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw argument_error(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    RunReport r;
    const json& inst = doc.at("instance");
    r.instance_name = inst.at("name").get<std::string>();
    r.n = inst.at("n").get<int>();
    r.m = inst.at("m").get<long long>();

    const json& cfg = doc.at("config");
    r.epsilon = cfg.at("epsilon").get<double>();
    r.p_grid = cfg.at("p_grid").get<std::vector<double>>();
    r.q_grid = cfg.at("q_grid").get<std::vector<double>>();
    r.time_limit_s = cfg.at("time_limit_s").get<double>();
    r.seedless = cfg.at("seedless").get<bool>();

    const json& res = doc.at("result");
    r.dual_objective = res.at("dual_objective").get<double>();
    r.status = res.at("status").get<std::string>();
    r.primal_status = res.at("primal_status").get<std::string>();
    if (res.contains("modularity_density"))
      r.modularity_density = res.at("modularity_density").get<double>();
    r.clusters = res.at("clusters").get<std::vector<std::vector<std::string>>>();
    r.certificate = res.at("certificate").get<bool>();

    for (const json& jrow : doc.at("trace")) {
      TraceRow row;
      row.iter = jrow.at("iter").get<int>();
      row.mode = jrow.at("mode").get<std::string>();
      row.columns_added = jrow.at("columns_added").get<int>();
      row.master_objective = jrow.at("master_objective").get<double>();
      row.elapsed_s = jrow.at("elapsed_s").get<double>();
      r.trace.push_back(std::move(row));
    }

    const json& tot = doc.at("totals");
    r.total_columns = tot.at("columns").get<long long>();
    r.exact_calls = tot.at("exact_calls").get<int>();
    r.wall_s = tot.at("wall_s").get<double>();
    r.duplicate_columns_dropped =
        tot.at("duplicate_columns_dropped").get<long long>();

    if (r.status != "dual-optimal" && r.status != "time-limit")
      throw argument_error("unknown report status: " + r.status);
    if (r.primal_status != "integral" && r.primal_status != "fractional" &&
        r.primal_status != "fractional-unresolved")
      throw argument_error("unknown primal status: " + r.primal_status);
    bool unresolved = r.primal_status == "fractional-unresolved";
    if (r.modularity_density.has_value() == unresolved)
      throw argument_error(
          "objective value must be present exactly when the run is resolved");
    for (const TraceRow& row : r.trace)
      if (row.mode != "peel" && row.mode != "exact")
        throw argument_error("unknown pricing mode: " + row.mode);
    return r;
  } catch (const json::exception& e) {
    throw argument_error(std::string("report is missing fields: ") + e.what());
  }
}

}  // namespace modcg
