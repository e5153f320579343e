// Command-line front end. Everything goes through the shared C API; this
// translation unit never touches the solver's C++ internals.
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "modcg/modcg.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolve = 2;

struct GraphHandle {
  modcg_graph* g = nullptr;
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  ~GraphHandle() { modcg_graph_free(g); }
};

struct OutString {
  char* s = nullptr;
  OutString() = default;
  OutString(const OutString&) = delete;
  ~OutString() { modcg_string_free(s); }
};

int exit_code_for(modcg_status st) {
  switch (st) {
    case MODCG_OK:
      return kExitOk;
    case MODCG_ERROR_LIMIT:
    case MODCG_ERROR_INTERNAL:
      return kExitSolve;
    default:
      return kExitUsage;  // bad flags, unreadable or malformed input
  }
}

int complain(modcg_status st) {
  std::cerr << "error: " << modcg_last_error() << "\n";
  return exit_code_for(st);
}

std::vector<double> parse_csv(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    double v = std::stod(item, &used);
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
      ++used;
    if (used != item.size())
      throw CLI::ValidationError("expected a comma-separated list of numbers");
    out.push_back(v);
  }
  if (out.empty())
    throw CLI::ValidationError("expected a comma-separated list of numbers");
  return out;
}

int load_graph(const std::string& path, bool one_indexed, GraphHandle& h) {
  modcg_status st = modcg_graph_read_file(path.c_str(), one_indexed ? 1 : 0, &h.g);
  if (st != MODCG_OK) return complain(st);
  return kExitOk;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

std::string base_name(const std::string& path) {
  size_t slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

// Shared by `solve` and `bench`: run one instance, return the parsed report
// or an error message.
struct SolveOutcome {
  modcg_status status = MODCG_OK;
  json report;
  std::string error;
};

SolveOutcome run_solve(const modcg_graph* g, const json& options) {
  SolveOutcome out;
  OutString rep;
  out.status = modcg_solve(g, options.dump().c_str(), &rep.s);
  if (out.status != MODCG_OK) {
    out.error = modcg_last_error();
    return out;
  }
  out.report = json::parse(std::string(rep.s));
  return out;
}

int cmd_solve(const std::string& input, bool one_indexed, const json& options,
              const std::string& out_path) {
  GraphHandle h;
  if (int rc = load_graph(input, one_indexed, h); rc != kExitOk) return rc;
  SolveOutcome outcome = run_solve(h.g, options);
  if (outcome.status != MODCG_OK) {
    std::cerr << "error: " << outcome.error << "\n";
    return exit_code_for(outcome.status);
  }
  std::string text = outcome.report.dump(2);
  if (!out_path.empty()) {
    if (!write_file(out_path, text + "\n")) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    const json& res = outcome.report["result"];
    std::cout << outcome.report["instance"]["name"].get<std::string>() << ": "
              << res["status"].get<std::string>() << ", "
              << res["primal_status"].get<std::string>()
              << ", dual bound " << res["dual_objective"].get<double>()
              << " -> " << out_path << "\n";
  } else {
    std::cout << text << "\n";
  }
  // a run that produced no clustering at all is a failed solve
  if (outcome.report["result"]["primal_status"] == "fractional-unresolved")
    return kExitSolve;
  return kExitOk;
}

// Manifest rows name files relative to the manifest itself, so a manifest
// can live next to its data and be run from anywhere.
std::string resolve_against(const std::string& manifest_path,
                            const std::string& path) {
  if (path.empty() || path[0] == '/') return path;
  size_t slash = manifest_path.find_last_of('/');
  if (slash == std::string::npos) return path;
  return manifest_path.substr(0, slash + 1) + path;
}

int cmd_bench(const std::string& manifest_path, const json& options) {
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open manifest " << manifest_path << "\n";
    return kExitUsage;
  }
  json manifest;
  try {
    in >> manifest;
  } catch (const json::exception& e) {
    std::cerr << "error: manifest is not valid JSON: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!manifest.is_array()) {
    std::cerr << "error: manifest must be a JSON array of rows\n";
    return kExitUsage;
  }

  int failures = 0;
  std::printf("%-12s %-6s %12s %12s %10s %8s\n", "instance", "state",
              "objective", "expected", "|diff|", "wall_s");
  for (const json& row : manifest) {
    std::string path, name;
    double expected = 0.0, tolerance = 0.0;
    bool required = true;
    try {
      path = row.at("path").get<std::string>();
      expected = row.at("expected_D").get<double>();
      tolerance = row.at("tolerance").get<double>();
      name = row.value("name", base_name(path));
      required = row.value("required", true);
    } catch (const json::exception& e) {
      std::cerr << "error: bad manifest row: " << e.what() << "\n";
      return kExitUsage;
    }

    path = resolve_against(manifest_path, path);
    GraphHandle h;
    if (modcg_graph_read_file(path.c_str(), 0, &h.g) != MODCG_OK) {
      std::printf("%-12s %-6s %12s %12.4f %10s %8s  (%s)\n", name.c_str(),
                  "SKIP", "-", expected, "-", "-",
                  required ? "missing required file" : "file not present");
      if (required) ++failures;
      continue;
    }
    json row_options = options;
    row_options["name"] = name;
    SolveOutcome outcome = run_solve(h.g, row_options);
    if (outcome.status != MODCG_OK ||
        !outcome.report["result"].contains("modularity_density")) {
      std::printf("%-12s %-6s %12s %12.4f %10s %8s  (%s)\n", name.c_str(),
                  "FAIL", "-", expected, "-", "-",
                  outcome.status != MODCG_OK ? outcome.error.c_str()
                                             : "no objective value");
      ++failures;
      continue;
    }
    double got = outcome.report["result"]["modularity_density"].get<double>();
    double wall = outcome.report["totals"]["wall_s"].get<double>();
    double diff = std::abs(got - expected);
    bool pass = diff <= tolerance;
    std::printf("%-12s %-6s %12.6f %12.6f %10.2e %8.2f\n", name.c_str(),
                pass ? "PASS" : "FAIL", got, expected, diff, wall);
    if (!pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d row(s) failed\n", failures);
    return kExitSolve;
  }
  std::printf("all rows passed\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Column-generation solver for modularity density clustering"};
  app.require_subcommand(1);

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "Cluster a graph and emit a JSON report");
  std::string solve_input, solve_out, solve_format = "edgelist", solve_name;
  std::string solve_pgrid, solve_qgrid;
  bool solve_one_indexed = false;
  double solve_epsilon = 1e-6, solve_time_limit = 1800.0;
  solve->add_option("--input", solve_input, "edge-list file")->required();
  solve->add_option("--format", solve_format, "input format (edgelist)");
  solve->add_flag("--one-indexed", solve_one_indexed,
                  "vertex tokens are integers starting at 1");
  solve->add_option("--epsilon", solve_epsilon, "pricing violation threshold");
  solve->add_option("--p-grid", solve_pgrid, "peeling grid, comma-separated");
  solve->add_option("--q-grid", solve_qgrid, "blend grid, comma-separated");
  solve->add_option("--time-limit", solve_time_limit, "wall budget, seconds");
  solve->add_option("--out", solve_out, "write the report here instead of stdout");
  solve->add_option("--name", solve_name, "instance name for the report");

  // ---- peel ----
  auto* peel = app.add_subcommand(
      "peel", "One peeling pass against supplied multipliers");
  std::string peel_input, peel_lambda, peel_pgrid, peel_qgrid;
  bool peel_one_indexed = false;
  double peel_epsilon = 1e-6;
  peel->add_option("--input", peel_input, "edge-list file")->required();
  peel->add_option("--lambda", peel_lambda, "comma-separated multipliers")
      ->required();
  peel->add_flag("--one-indexed", peel_one_indexed, "1-based integer labels");
  peel->add_option("--epsilon", peel_epsilon, "violation threshold");
  peel->add_option("--p-grid", peel_pgrid, "peeling grid, comma-separated");
  peel->add_option("--q-grid", peel_qgrid, "blend grid, comma-separated");

  // ---- ap-oracle ----
  auto* apo = app.add_subcommand(
      "ap-oracle", "Exhaustive pricing reference (subset sweep)");
  std::string apo_input, apo_lambda;
  bool apo_one_indexed = false;
  apo->add_option("--input", apo_input, "edge-list file")->required();
  apo->add_option("--lambda", apo_lambda, "comma-separated multipliers")
      ->required();
  apo->add_flag("--one-indexed", apo_one_indexed, "1-based integer labels");

  // ---- oracle ----
  auto* oracle = app.add_subcommand("oracle", "Brute-force references");
  std::string oracle_input, oracle_mode, oracle_lambda;
  bool oracle_one_indexed = false;
  int oracle_min_clusters = 1;
  oracle->add_option("--input", oracle_input, "edge-list file")->required();
  oracle->add_option("--mode", oracle_mode,
                     "partition | maxcut | densest | pricing")
      ->required();
  oracle->add_option("--min-clusters", oracle_min_clusters,
                     "partition mode: minimum cluster count");
  oracle->add_option("--lambda", oracle_lambda,
                     "pricing mode: comma-separated multipliers");
  oracle->add_flag("--one-indexed", oracle_one_indexed, "1-based integer labels");

  // ---- gadget ----
  auto* gadget = app.add_subcommand(
      "gadget", "Hardness-instance generators (cut blow-up, clique pricing)");
  std::string gadget_input, gadget_kind, gadget_out;
  bool gadget_one_indexed = false;
  int gadget_k = 0;
  long long gadget_m_override = 0;
  gadget->add_option("--input", gadget_input, "source edge-list file")->required();
  gadget->add_option("--kind", gadget_kind, "md | ap")->required();
  gadget->add_option("--k", gadget_k, "target cut value (md) or clique size (ap)")
      ->required();
  gadget->add_option("--m-override", gadget_m_override,
                     "md only: shrink the block size (marks non-certifying)");
  gadget->add_option("--out", gadget_out,
                     "write the instance edge list here; metadata to stdout");
  gadget->add_flag("--one-indexed", gadget_one_indexed, "1-based integer labels");

  // ---- bench ----
  auto* bench = app.add_subcommand(
      "bench", "Run a manifest of instances against expected objectives");
  std::string bench_manifest, bench_pgrid, bench_qgrid;
  double bench_epsilon = 1e-6, bench_time_limit = 1800.0;
  bench->add_option("--manifest", bench_manifest, "JSON manifest file")
      ->required();
  bench->add_option("--epsilon", bench_epsilon, "pricing violation threshold");
  bench->add_option("--time-limit", bench_time_limit,
                    "per-instance wall budget, seconds");
  bench->add_option("--p-grid", bench_pgrid, "peeling grid, comma-separated");
  bench->add_option("--q-grid", bench_qgrid, "blend grid, comma-separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints the message or the requested help text
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      if (solve_format != "edgelist") {
        std::cerr << "error: unsupported format: " << solve_format << "\n";
        return kExitUsage;
      }
      json options = {{"epsilon", solve_epsilon},
                      {"time_limit_s", solve_time_limit}};
      options["name"] =
          solve_name.empty() ? base_name(solve_input) : solve_name;
      if (!solve_pgrid.empty()) options["p_grid"] = parse_csv(solve_pgrid);
      if (!solve_qgrid.empty()) options["q_grid"] = parse_csv(solve_qgrid);
      return cmd_solve(solve_input, solve_one_indexed, options, solve_out);
    }

    if (peel->parsed()) {
      GraphHandle h;
      if (int rc = load_graph(peel_input, peel_one_indexed, h); rc != kExitOk)
        return rc;
      json options = {{"lambda", parse_csv(peel_lambda)},
                      {"epsilon", peel_epsilon}};
      if (!peel_pgrid.empty()) options["p_grid"] = parse_csv(peel_pgrid);
      if (!peel_qgrid.empty()) options["q_grid"] = parse_csv(peel_qgrid);
      OutString out;
      modcg_status st = modcg_peel(h.g, options.dump().c_str(), &out.s);
      if (st != MODCG_OK) return complain(st);
      std::cout << out.s << "\n";
      return kExitOk;
    }

    if (apo->parsed()) {
      GraphHandle h;
      if (int rc = load_graph(apo_input, apo_one_indexed, h); rc != kExitOk)
        return rc;
      json options = {{"lambda", parse_csv(apo_lambda)}};
      OutString out;
      modcg_status st =
          modcg_enumerate_pricing(h.g, options.dump().c_str(), &out.s);
      if (st != MODCG_OK) return complain(st);
      std::cout << out.s << "\n";
      return kExitOk;
    }

    if (oracle->parsed()) {
      GraphHandle h;
      if (int rc = load_graph(oracle_input, oracle_one_indexed, h);
          rc != kExitOk)
        return rc;
      json options = {{"mode", oracle_mode}};
      if (oracle->count("--min-clusters"))
        options["min_clusters"] = oracle_min_clusters;
      if (!oracle_lambda.empty())
        options["lambda"] = parse_csv(oracle_lambda);
      OutString out;
      modcg_status st = modcg_oracle(h.g, options.dump().c_str(), &out.s);
      if (st != MODCG_OK) return complain(st);
      std::cout << out.s << "\n";
      return kExitOk;
    }

    if (gadget->parsed()) {
      GraphHandle h;
      if (int rc = load_graph(gadget_input, gadget_one_indexed, h);
          rc != kExitOk)
        return rc;
      json options = {{"kind", gadget_kind}, {"k", gadget_k}};
      if (gadget->count("--m-override"))
        options["m_override"] = gadget_m_override;
      OutString edges, meta;
      modcg_status st =
          modcg_gadget(h.g, options.dump().c_str(), &edges.s, &meta.s);
      if (st != MODCG_OK) return complain(st);
      if (!gadget_out.empty()) {
        if (!write_file(gadget_out, edges.s)) {
          std::cerr << "error: cannot write " << gadget_out << "\n";
          return kExitUsage;
        }
        std::cout << meta.s << "\n";
      } else {
        json combined = json::parse(std::string(meta.s));
        json doc = {{"metadata", combined},
                    {"edge_list", std::string(edges.s)}};
        std::cout << doc.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (bench->parsed()) {
      json options = {{"epsilon", bench_epsilon},
                      {"time_limit_s", bench_time_limit}};
      if (!bench_pgrid.empty()) options["p_grid"] = parse_csv(bench_pgrid);
      if (!bench_qgrid.empty()) options["q_grid"] = parse_csv(bench_qgrid);
      return cmd_bench(bench_manifest, options);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
