#include "modcg/modcg.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ap_exact.hpp"
#include "colgen.hpp"
#include "errors.hpp"
#include "gadgets.hpp"
#include "graph.hpp"
#include "json.hpp"
#include "objectives.hpp"
#include "oracles.hpp"
#include "peeling.hpp"
#include "report.hpp"

using nlohmann::json;

struct modcg_graph {
  modcg::Graph g;
};

namespace {

thread_local std::string t_last_error = "no error";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

modcg_status fail(modcg_status st, const std::string& msg) {
  t_last_error = msg;
  return st;
}

template <typename Fn>
modcg_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const modcg::argument_error& e) {
    return fail(MODCG_ERROR_ARGUMENT, e.what());
  } catch (const modcg::parse_error& e) {
    return fail(MODCG_ERROR_PARSE, e.what());
  } catch (const modcg::too_large_error& e) {
    return fail(MODCG_ERROR_TOO_LARGE, e.what());
  } catch (const modcg::limit_error& e) {
    return fail(MODCG_ERROR_LIMIT, e.what());
  } catch (const json::exception& e) {
    return fail(MODCG_ERROR_ARGUMENT, std::string("bad options: ") + e.what());
  } catch (const std::exception& e) {
    return fail(MODCG_ERROR_INTERNAL, e.what());
  }
}

json parse_options(const char* options_json,
                   const std::vector<std::string>& allowed) {
  json j = json::object();
  if (options_json && *options_json) {
    try {
      j = json::parse(options_json);
    } catch (const json::exception& e) {
      throw modcg::argument_error(std::string("options are not valid JSON: ") +
                                  e.what());
    }
  }
  if (!j.is_object())
    throw modcg::argument_error("options must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw modcg::argument_error("unknown option: " + key);
  return j;
}

modcg::DualSolution lambda_from(const json& j, int n) {
  if (!j.contains("lambda"))
    throw modcg::argument_error("option 'lambda' is required");
  modcg::DualSolution duals;
  duals.lambda = j.at("lambda").get<std::vector<double>>();
  if (static_cast<int>(duals.lambda.size()) != n)
    throw modcg::argument_error("'lambda' must list one value per vertex");
  return duals;
}

json labels_of(const modcg::Graph& g, const modcg::VertexSet& s) {
  json arr = json::array();
  for (int v : s) arr.push_back(g.label(v));
  return arr;
}

void require_out(void* p) {
  if (!p) throw modcg::argument_error("output pointer is null");
}

const modcg::Graph& graph_of(const modcg_graph* g) {
  if (!g) throw modcg::argument_error("graph handle is null");
  return g->g;
}

}  // namespace

extern "C" {

const char* modcg_version(void) { return "0.1.0"; }

const char* modcg_last_error(void) { return t_last_error.c_str(); }

void modcg_string_free(char* s) { std::free(s); }

modcg_status modcg_graph_parse(const char* text, int one_indexed,
                               modcg_graph** out) {
  return guarded([&]() {
    require_out(out);
    if (!text) throw modcg::argument_error("input text is null");
    auto* h = new modcg_graph{modcg::parse_edge_list(text, one_indexed != 0)};
    *out = h;
    return MODCG_OK;
  });
}

modcg_status modcg_graph_read_file(const char* path, int one_indexed,
                                   modcg_graph** out) {
  return guarded([&]() {
    require_out(out);
    if (!path) throw modcg::argument_error("path is null");
    std::ifstream in(path, std::ios::binary);
    if (!in)
      return fail(MODCG_ERROR_IO,
                  std::string("cannot open file: ") + path);
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad())
      return fail(MODCG_ERROR_IO, std::string("cannot read file: ") + path);
    auto* h =
        new modcg_graph{modcg::parse_edge_list(text.str(), one_indexed != 0)};
    *out = h;
    return MODCG_OK;
  });
}

void modcg_graph_free(modcg_graph* g) { delete g; }

int modcg_graph_vertex_count(const modcg_graph* g) {
  return g ? g->g.vertex_count() : 0;
}

long long modcg_graph_edge_count(const modcg_graph* g) {
  return g ? g->g.edge_count() : 0;
}

const char* modcg_graph_vertex_label(const modcg_graph* g, int v) {
  if (!g || v < 0 || v >= g->g.vertex_count()) return nullptr;
  return g->g.label(v).c_str();
}

modcg_status modcg_graph_edge_list(const modcg_graph* g, char** out) {
  return guarded([&]() {
    require_out(out);
    *out = dup_string(modcg::write_edge_list(graph_of(g)));
    return MODCG_OK;
  });
}

modcg_status modcg_solve(const modcg_graph* g, const char* options_json,
                         char** report_json) {
  return guarded([&]() {
    require_out(report_json);
    const modcg::Graph& graph = graph_of(g);
    json j = parse_options(
        options_json,
        {"name", "epsilon", "p_grid", "q_grid", "time_limit_s",
         "max_iterations", "column_cap", "skip_k1", "early_exit_exact"});

    modcg::ColGenConfig cfg;
    std::string name = j.value("name", std::string());
    cfg.epsilon = j.value("epsilon", cfg.epsilon);
    if (j.contains("p_grid"))
      cfg.peel.p_grid = j.at("p_grid").get<std::vector<double>>();
    if (j.contains("q_grid"))
      cfg.peel.q_grid = j.at("q_grid").get<std::vector<double>>();
    cfg.time_limit_s = j.value("time_limit_s", cfg.time_limit_s);
    cfg.max_iterations = j.value("max_iterations", cfg.max_iterations);
    cfg.column_cap = j.value("column_cap", cfg.column_cap);
    cfg.skip_k1 = j.value("skip_k1", cfg.skip_k1);
    cfg.early_exit_exact = j.value("early_exit_exact", cfg.early_exit_exact);

    auto t0 = std::chrono::steady_clock::now();
    modcg::ColGenReport rep = modcg::run_colgen(graph, cfg);
    double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    modcg::RunReport rr = modcg::make_report(graph, name, cfg, rep, wall);
    *report_json = dup_string(modcg::report_to_json(rr));
    return MODCG_OK;
  });
}

modcg_status modcg_peel(const modcg_graph* g, const char* options_json,
                        char** out_json) {
  return guarded([&]() {
    require_out(out_json);
    const modcg::Graph& graph = graph_of(g);
    json j =
        parse_options(options_json, {"lambda", "epsilon", "p_grid", "q_grid"});
    modcg::DualSolution duals = lambda_from(j, graph.vertex_count());

    modcg::PeelConfig pc;
    pc.epsilon = j.value("epsilon", pc.epsilon);
    if (j.contains("p_grid"))
      pc.p_grid = j.at("p_grid").get<std::vector<double>>();
    if (j.contains("q_grid"))
      pc.q_grid = j.at("q_grid").get<std::vector<double>>();

    std::vector<modcg::VertexSet> sets = modcg::peel_pricing(graph, duals, pc);
    std::vector<double> viol(sets.size());
    std::vector<size_t> order(sets.size());
    for (size_t i = 0; i < sets.size(); ++i)
      viol[i] = modcg::pricing_objective(graph, sets[i], duals);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return viol[a] > viol[b]; });

    json out = {{"sets", json::array()}, {"violations", json::array()}};
    for (size_t i : order) {
      out["sets"].push_back(labels_of(graph, sets[i]));
      out["violations"].push_back(viol[i]);
    }
    *out_json = dup_string(out.dump(2));
    return MODCG_OK;
  });
}

modcg_status modcg_enumerate_pricing(const modcg_graph* g,
                                     const char* options_json,
                                     char** out_json) {
  return guarded([&]() {
    require_out(out_json);
    const modcg::Graph& graph = graph_of(g);
    json j = parse_options(options_json, {"lambda"});
    modcg::DualSolution duals = lambda_from(j, graph.vertex_count());
    auto [value, set] = modcg::enumerate_pricing(graph, duals);
    json out = {{"pricing_objective", -value},  // violation sense: c(S) - sum
                {"set", labels_of(graph, set)}};
    *out_json = dup_string(out.dump(2));
    return MODCG_OK;
  });
}

modcg_status modcg_oracle(const modcg_graph* g, const char* options_json,
                          char** out_json) {
  return guarded([&]() {
    require_out(out_json);
    const modcg::Graph& graph = graph_of(g);
    json j = parse_options(options_json, {"mode", "min_clusters", "lambda"});
    std::string mode = j.value("mode", std::string());
    json out;
    if (mode == "partition") {
      int min_clusters = j.value("min_clusters", 1);
      auto [value, part] = modcg::brute_force_partition_opt(graph, min_clusters);
      out["value"] = value;
      out["clusters"] = json::array();
      for (const modcg::VertexSet& c : part.clusters())
        out["clusters"].push_back(labels_of(graph, c));
    } else if (mode == "maxcut") {
      auto [value, side] = modcg::brute_force_max_cut(graph);
      std::vector<int> other;
      for (int v = 0; v < graph.vertex_count(); ++v)
        if (!side.contains(v)) other.push_back(v);
      out["value"] = value;
      out["sides"] = {labels_of(graph, side),
                      labels_of(graph, modcg::VertexSet(other))};
    } else if (mode == "densest") {
      auto [value, set] = modcg::brute_force_densest(graph);
      out["value"] = value;
      out["set"] = labels_of(graph, set);
    } else if (mode == "pricing") {
      modcg::DualSolution duals = lambda_from(j, graph.vertex_count());
      auto [value, set] = modcg::brute_force_pricing(graph, duals);
      out["value"] = value;  // covering sense: sum(lambda) - c(S)
      out["set"] = labels_of(graph, set);
    } else {
      throw modcg::argument_error(
          "mode must be one of partition, maxcut, densest, pricing");
    }
    *out_json = dup_string(out.dump(2));
    return MODCG_OK;
  });
}

modcg_status modcg_gadget(const modcg_graph* g, const char* options_json,
                          char** edge_list_out, char** metadata_json) {
  return guarded([&]() {
    require_out(edge_list_out);
    require_out(metadata_json);
    const modcg::Graph& graph = graph_of(g);
    json j = parse_options(options_json, {"kind", "k", "m_override"});
    std::string kind = j.value("kind", std::string());
    if (!j.contains("k"))
      throw modcg::argument_error("option 'k' is required");
    int k = j.at("k").get<int>();

    if (kind == "md") {
      std::optional<long long> m_override;
      if (j.contains("m_override"))
        m_override = j.at("m_override").get<long long>();
      modcg::MdGadget gadget = modcg::build_md_gadget(graph, k, m_override);
      json meta = {
          {"kind", "md"},
          {"source_vertices", graph.vertex_count()},
          {"target_cut", gadget.target_cut},
          {"block_size", gadget.m_size},
          {"vertices", gadget.complement_g_star.vertex_count()},
          {"regularity", gadget.complement_g_star.vertex_count() -
                             static_cast<int>(gadget.m_size)},
          {"r_star", gadget.r_star},
          {"r_star_num", gadget.r_star_num},
          {"r_star_den", gadget.r_star_den},
          {"certifying", gadget.certifying}};
      *edge_list_out = dup_string(modcg::write_edge_list(gadget.complement_g_star));
      *metadata_json = dup_string(meta.dump(2));
    } else if (kind == "ap") {
      if (j.contains("m_override"))
        throw modcg::argument_error("m_override applies only to kind 'md'");
      modcg::ApGadget gadget = modcg::build_ap_gadget(graph, k);
      json meta = {{"kind", "ap"},
                   {"vertices", graph.vertex_count()},
                   {"clique_size", gadget.clique_size},
                   {"lambda", gadget.lambda.lambda},
                   {"regularity", graph.vertex_count() - 4},
                   {"r_star", gadget.r_star},
                   {"certifying", true}};
      *edge_list_out = dup_string(modcg::write_edge_list(gadget.graph));
      *metadata_json = dup_string(meta.dump(2));
    } else {
      throw modcg::argument_error("kind must be 'md' or 'ap'");
    }
    return MODCG_OK;
  });
}

}  // extern "C"
