#include "colgen.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>

#include "ap_exact.hpp"
#include "errors.hpp"

namespace modcg {

namespace {
using Clock = std::chrono::steady_clock;
constexpr long kPartitionSearchBudget = 20'000'000;
}  // namespace

std::pair<PrimalStatus, std::optional<Partition>> recover_primal(
    const LpSolution& sol, const std::vector<Column>& columns, int n) {
  if (sol.primal.size() != columns.size())
    throw argument_error("solution and column pool sizes differ");
  std::vector<const VertexSet*> chosen;
  for (size_t j = 0; j < columns.size(); ++j) {
    double z = sol.primal[j];
    if (std::abs(z - std::round(z)) > 1e-6)
      return {PrimalStatus::Fractional, std::nullopt};
    if (z > 0.5) chosen.push_back(&columns[j].set);
  }
  std::vector<VertexSet> clusters;
  clusters.reserve(chosen.size());
  for (const VertexSet* s : chosen) clusters.push_back(*s);
  try {
    return {PrimalStatus::Integral, Partition(n, std::move(clusters))};
  } catch (const argument_error&) {
    throw internal_error(
        "near-integral master solution does not form a partition");
  }
}

Partition integer_restricted_master(const std::vector<Column>& columns, int n) {
  if (n < 1) throw argument_error("partition search needs at least one vertex");
  // Columns containing each vertex, and the per-vertex ratio bound
  // max c(S)/|S| used to bound every completion of a partial cover.
  std::vector<std::vector<int>> holding(n);
  std::vector<double> ratio_bound(n,
                                  -std::numeric_limits<double>::infinity());
  for (size_t j = 0; j < columns.size(); ++j) {
    const Column& c = columns[j];
    if (c.set.empty() || c.set.members().back() >= n)
      throw argument_error("column out of range for the partition search");
    double r = c.contribution / c.set.size();
    for (int v : c.set.members()) {
      holding[v].push_back(static_cast<int>(j));
      ratio_bound[v] = std::max(ratio_bound[v], r);
    }
  }
  for (int v = 0; v < n; ++v)
    if (holding[v].empty())
      throw argument_error("a vertex is not covered by any column");

  // Start from the all-singletons partition, which must exist in any pool
  // the generation loop produces; otherwise fall back to any greedy cover
  // found first by the search (the incumbent below stays empty until then).
  std::vector<int> incumbent_cols;
  double incumbent = -std::numeric_limits<double>::infinity();
  {
    std::vector<int> singles(n, -1);
    double total = 0.0;
    bool have_all = true;
    for (size_t j = 0; j < columns.size() && have_all; ++j)
      if (columns[j].set.size() == 1)
        singles[columns[j].set.members()[0]] = static_cast<int>(j);
    for (int v = 0; v < n; ++v)
      if (singles[v] < 0) have_all = false;
    if (have_all) {
      for (int v = 0; v < n; ++v) total += columns[singles[v]].contribution;
      incumbent = total;
      incumbent_cols.assign(singles.begin(), singles.end());
    }
  }

  std::vector<char> covered(n, 0);
  std::vector<int> stack_cols;
  double suffix_bound = 0.0;
  for (int v = 0; v < n; ++v) suffix_bound += ratio_bound[v];
  long budget = kPartitionSearchBudget;

  // DFS on the lowest uncovered vertex.
  auto dfs = [&](auto&& self, int from, double value, double bound) -> void {
    if (--budget <= 0) throw limit_error("partition search budget exhausted");
    int v = from;
    while (v < n && covered[v]) ++v;
    if (v == n) {
      if (value > incumbent) {
        incumbent = value;
        incumbent_cols = stack_cols;
      }
      return;
    }
    if (value + bound <= incumbent + 1e-12) return;
    for (int j : holding[v]) {
      const VertexSet& s = columns[j].set;
      bool clash = false;
      for (int u : s.members())
        if (covered[u]) {
          clash = true;
          break;
        }
      if (clash) continue;
      double removed = 0.0;
      for (int u : s.members()) {
        covered[u] = 1;
        removed += ratio_bound[u];
      }
      stack_cols.push_back(j);
      self(self, v + 1, value + columns[j].contribution, bound - removed);
      stack_cols.pop_back();
      for (int u : s.members()) covered[u] = 0;
    }
  };
  dfs(dfs, 0, 0.0, suffix_bound);

  if (incumbent_cols.empty())
    throw internal_error("partition search found no cover");
  std::vector<VertexSet> clusters;
  for (int j : incumbent_cols) clusters.push_back(columns[j].set);
  return Partition(n, std::move(clusters));
}

ColGenReport run_colgen(const Graph& g, const ColGenConfig& cfg) {
  int n = g.vertex_count();
  if (n < 1) throw argument_error("generation needs at least one vertex");
  if (!(cfg.epsilon > 0.0)) throw argument_error("epsilon must be positive");
  if (!(cfg.time_limit_s > 0.0))
    throw argument_error("time limit must be positive");
  if (cfg.max_iterations < 0 || cfg.column_cap < 0)
    throw argument_error("limits cannot be negative");

  Clock::time_point t0 = Clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  };

  ColGenReport rep;
  RestrictedMaster master(n);
  std::set<std::vector<int>> known;
  auto add_set = [&](const VertexSet& s) -> bool {
    if (!known.insert(s.members()).second) {
      ++rep.duplicates_dropped;
      return false;
    }
    master.add_column(make_column(g, s));
    return true;
  };
  for (int v = 0; v < n; ++v) add_set(VertexSet({v}));
  for (const VertexSet& s : cfg.warm_columns) add_set(s);

  std::optional<LpSolution> sol;
  double prev_obj = -std::numeric_limits<double>::infinity();
  int iter = 0;
  bool done = false;
  while (!done) {
    ++iter;
    LpSolution cur = master.solve();
    if (cur.status == LpStatus::IterationLimit)
      throw limit_error("master solve hit its iteration cap");
    if (cur.objective < prev_obj - 1e-7)
      throw internal_error("master objective regressed after adding columns");
    prev_obj = cur.objective;
    sol = std::move(cur);

    if (cfg.max_iterations > 0 && iter > cfg.max_iterations) {
      rep.status = ColGenStatus::TimeLimit;
      break;
    }
    if (elapsed() >= cfg.time_limit_s) {
      rep.status = ColGenStatus::TimeLimit;
      break;
    }

    PricingMode mode = PricingMode::Peel;
    PeelConfig pc = cfg.peel;
    pc.epsilon = cfg.epsilon;
    std::vector<VertexSet> found = peel_pricing(g, sol->duals, pc, &known);

    if (found.empty()) {
      mode = PricingMode::Exact;
      ++rep.exact_calls;
      ApConfig ac;
      ac.epsilon = cfg.epsilon;
      ac.skip_k1 = cfg.skip_k1;
      ac.early_exit = cfg.early_exit_exact;
      double remaining = cfg.time_limit_s - elapsed();
      if (remaining <= 0.0) {
        rep.status = ColGenStatus::TimeLimit;
        break;
      }
      ac.time_limit_s = remaining;
      PricingResult pr = exact_pricing(g, sol->duals, ac);
      if (pr.collected.empty()) {
        if (pr.certifying) {
          rep.status = ColGenStatus::DualOptimal;
          rep.certificate = true;
        } else {
          rep.status = ColGenStatus::TimeLimit;
        }
        rep.iterations.push_back({iter, mode, 0, sol->objective, elapsed(),
                                  sol->duals});
        break;
      }
      found = std::move(pr.collected);
    }

    int added = 0;
    for (const VertexSet& s : found) {
      if (cfg.column_cap > 0 && added >= cfg.column_cap) break;
      double viol = pricing_objective(g, s, sol->duals);
      // Both pricers guarantee strict violation; the absolute slack only
      // absorbs the difference between their incremental accumulation and
      // this from-scratch evaluation.
      if (viol <= cfg.epsilon - 1e-12)
        throw internal_error("pricing returned a non-violated set");
      if (add_set(s)) {
        ++added;
        rep.audit.push_back({s, iter, viol});
      }
    }
    rep.iterations.push_back(
        {iter, mode, added, sol->objective, elapsed(), sol->duals});

    if (added == 0) {
      // Everything the exact sweep found was already in the pool: that can
      // only happen when epsilon is tighter than the master's own pricing
      // tolerance. No new column exists, so the loop is done; the sweep was
      // not empty, so no certificate is claimed.
      rep.status = ColGenStatus::DualOptimal;
      rep.certificate = false;
      break;
    }
  }

  rep.dual_objective = sol->objective;
  rep.duals = sol->duals;
  rep.total_columns = static_cast<long>(master.columns().size());

  auto [pstatus, part] = recover_primal(*sol, master.columns(), n);
  if (pstatus == PrimalStatus::Integral) {
    rep.primal_status = PrimalStatus::Integral;
    rep.partition = std::move(part);
    rep.modularity_density = modularity_density(g, *rep.partition);
    // The integral master primal and the dual objective coincide by strong
    // duality, independent of whether the duals were certified.
    if (std::abs(*rep.modularity_density - rep.dual_objective) > 1e-6)
      throw internal_error("integral partition value drifts from the master");
  } else {
    try {
      Partition fallback = integer_restricted_master(master.columns(), n);
      rep.primal_status = PrimalStatus::Fractional;
      rep.modularity_density = modularity_density(g, fallback);
      rep.partition = std::move(fallback);
    } catch (const limit_error&) {
      rep.primal_status = PrimalStatus::FractionalUnresolved;
    }
  }
  return rep;
}

}  // namespace modcg
