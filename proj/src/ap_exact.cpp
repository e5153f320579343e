#include "ap_exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <set>

#include "errors.hpp"
#include "simplex.hpp"

namespace modcg {

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Exact objective of a concrete set: sum(lambda_S) - c(S).
double set_value(const Graph& g, const DualSolution& lam, const VertexSet& s) {
  return -pricing_objective(g, s, lam);
}

// Branch and bound over the size-k 0-1 relaxation. One LP instance is built
// per size and warm-started across nodes through bound fixing.
struct SizeSearch {
  const Graph& g;
  const DualSolution& lam;
  const ApConfig& cfg;
  int n, k;
  std::vector<std::pair<int, int>> edges;
  std::vector<double> ycost;
  double xcost;
  DenseSimplex lp;

  std::vector<signed char> fix;  // -1 free, else the forced value
  int fixed0 = 0, fixed1 = 0;
  double incumbent = kInf;
  bool have_best = false;
  VertexSet best;
  std::vector<VertexSet> collected;
  std::set<std::vector<int>> keys;
  long nodes = 0;
  Clock::time_point deadline;
  bool has_deadline = false;
  bool aborted = false;

  SizeSearch(const Graph& graph, const DualSolution& duals, int size,
             const ApConfig& config)
      : g(graph),
        lam(duals),
        cfg(config),
        n(graph.vertex_count()),
        k(size),
        edges(graph.edges()),
        xcost(-4.0 / size),
        lp(ObjectiveSense::Minimize,
           1 + 2 * static_cast<int>(graph.edges().size())) {
    fix.assign(n, -1);
    lp.set_row(0, RowSense::Equal, static_cast<double>(k));
    std::vector<std::vector<std::pair<int, double>>> ycol(n);
    for (int v = 0; v < n; ++v) {
      ycost.push_back(lam.lambda[v] + g.degree(v) / static_cast<double>(k));
      ycol[v].emplace_back(0, 1.0);
    }
    for (size_t e = 0; e < edges.size(); ++e) {
      int r1 = 1 + 2 * static_cast<int>(e);
      int r2 = r1 + 1;
      lp.set_row(r1, RowSense::LessEqual, 0.0);
      lp.set_row(r2, RowSense::LessEqual, 0.0);
      ycol[edges[e].first].emplace_back(r1, -1.0);
      ycol[edges[e].second].emplace_back(r2, -1.0);
    }
    for (int v = 0; v < n; ++v) lp.add_variable(ycost[v], 0.0, 1.0, ycol[v]);
    for (size_t e = 0; e < edges.size(); ++e) {
      int r1 = 1 + 2 * static_cast<int>(e);
      lp.add_variable(xcost, 0.0, 1.0, {{r1, 1.0}, {r1 + 1, 1.0}});
    }
    if (std::isfinite(cfg.time_limit_s)) {
      has_deadline = true;
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(
                                        std::max(0.0, cfg.time_limit_s)));
    }
  }

  void consider(const VertexSet& s) {
    double val = set_value(g, lam, s);
    if (!have_best || val < incumbent) {
      incumbent = val;
      best = s;
      have_best = true;
    }
    if (val < -cfg.epsilon && keys.insert(s.members()).second)
      collected.push_back(s);
  }

  // Lagrangian lower bound from the relaxation duals with the inequality
  // multipliers clamped to their valid sign, so the bound holds even when
  // the LP solve carries round-off.
  double safe_bound() {
    std::vector<double> mu = lp.row_duals();
    for (size_t r = 1; r < mu.size(); ++r) mu[r] = std::min(mu[r], 0.0);
    std::vector<double> rc(ycost);
    for (int v = 0; v < n; ++v) rc[v] -= mu[0];
    double bound = mu[0] * k;
    for (size_t e = 0; e < edges.size(); ++e) {
      double m1 = mu[1 + 2 * e], m2 = mu[2 + 2 * e];
      rc[edges[e].first] += m1;
      rc[edges[e].second] += m2;
      bound += std::min(0.0, xcost - m1 - m2);  // x_e ranges over [0,1]
    }
    for (int v = 0; v < n; ++v) {
      if (fix[v] < 0)
        bound += std::min(0.0, rc[v]);
      else
        bound += rc[v] * fix[v];
    }
    return bound;
  }

  void leaf(bool free_to_one) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (fix[v] == 1 || (free_to_one && fix[v] < 0)) members.push_back(v);
    consider(VertexSet(members));
  }

  void dfs() {
    if (aborted) return;
    if (has_deadline && Clock::now() > deadline) {
      aborted = true;
      return;
    }
    ++nodes;
    int free = n - fixed0 - fixed1;
    if (fixed1 > k || fixed1 + free < k) return;
    if (fixed1 == k) {
      leaf(false);
      return;
    }
    if (fixed1 + free == k) {
      leaf(true);
      return;
    }

    LpStatus st = lp.solve();
    if (st != LpStatus::Optimal)
      throw internal_error("size-restricted relaxation failed to solve");
    double bound = safe_bound();
    if (cfg.node_hook) {
      std::vector<int> f0, f1;
      for (int v = 0; v < n; ++v) {
        if (fix[v] == 0) f0.push_back(v);
        if (fix[v] == 1) f1.push_back(v);
      }
      cfg.node_hook(k, f0, f1, bound);
    }
    if (have_best && bound >= incumbent - 1e-12) return;

    // Integrality check over the free vertex variables; pick the most
    // fractional one to branch on (lowest id wins ties).
    int branch = -1;
    double branch_dist = kInf;
    bool integral = true;
    for (int v = 0; v < n; ++v) {
      if (fix[v] >= 0) continue;
      double val = lp.primal_value(v);
      if (std::min(std::abs(val), std::abs(1.0 - val)) > 1e-9)
        integral = false;
      double dist = std::abs(val - 0.5);
      if (dist < branch_dist) {
        branch_dist = dist;
        branch = v;
      }
    }

    if (integral) {
      std::vector<int> members;
      for (int v = 0; v < n; ++v)
        if (fix[v] == 1 || (fix[v] < 0 && lp.primal_value(v) >= 0.5))
          members.push_back(v);
      if (static_cast<int>(members.size()) != k)
        throw internal_error("integral relaxation lost the size constraint");
      // The negative edge coefficient must have pulled every x to its cap.
      for (size_t e = 0; e < edges.size(); ++e) {
        double cap = std::min(lp.primal_value(edges[e].first),
                              lp.primal_value(edges[e].second));
        if (std::abs(lp.primal_value(n + static_cast<int>(e)) - cap) > 1e-6)
          throw internal_error("edge variable below its membership cap");
      }
      consider(VertexSet(members));
      return;
    }

    int first = lp.primal_value(branch) >= 0.5 ? 1 : 0;
    for (int pass = 0; pass < 2 && !aborted; ++pass) {
      int dir = pass == 0 ? first : 1 - first;
      fix[branch] = static_cast<signed char>(dir);
      (dir == 1 ? fixed1 : fixed0) += 1;
      lp.set_bounds(branch, dir, dir);
      dfs();
      (dir == 1 ? fixed1 : fixed0) -= 1;
      fix[branch] = -1;
      lp.set_bounds(branch, 0.0, 1.0);
    }
  }
};

}  // namespace

ApkResult solve_apk(const Graph& g, const DualSolution& lam, int k,
                    const ApConfig& cfg) {
  int n = g.vertex_count();
  check_duals(g, lam);
  if (n < 1) throw argument_error("pricing needs at least one vertex");
  if (k < 1 || k > n) throw argument_error("subproblem size out of range");

  ApkResult out;
  if (k == 1) {
    // Closed form: x vanishes, so the objective is lambda_v + deg(v).
    double bestv = kInf;
    int arg = -1;
    for (int v = 0; v < n; ++v) {
      double val = lam.lambda[v] + g.degree(v);
      if (val < bestv) {
        bestv = val;
        arg = v;
      }
      if (val < -cfg.epsilon) out.collected.push_back(VertexSet({v}));
    }
    out.optimum = bestv;
    out.best_set = VertexSet({arg});
    return out;
  }
  if (k == n) {
    VertexSet all = VertexSet::full(n);
    out.optimum = set_value(g, lam, all);
    out.best_set = all;
    if (out.optimum < -cfg.epsilon) out.collected.push_back(all);
    return out;
  }

  SizeSearch search(g, lam, k, cfg);
  for (const VertexSet& s : cfg.seeds)
    if (s.size() == k) search.consider(s);
  // Deterministic cheap incumbent: the k vertices with the smallest
  // individual objective coefficients.
  {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return search.ycost[a] < search.ycost[b];
    });
    order.resize(k);
    search.consider(VertexSet(order));
  }
  search.dfs();

  out.optimum = search.incumbent;
  out.best_set = search.best;
  out.collected = std::move(search.collected);
  out.solved_to_optimality = !search.aborted;
  out.nodes = search.nodes;
  return out;
}

PricingResult exact_pricing(const Graph& g, const DualSolution& lam,
                            const ApConfig& cfg) {
  int n = g.vertex_count();
  check_duals(g, lam);
  if (n < 1) throw argument_error("pricing needs at least one vertex");

  PricingResult out;
  Clock::time_point deadline;
  bool has_deadline = std::isfinite(cfg.time_limit_s);
  if (has_deadline)
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(
                                      std::max(0.0, cfg.time_limit_s)));

  int k0 = cfg.skip_k1 ? 2 : 1;
  if (k0 > n) k0 = n;  // a one-vertex graph still runs its only size
  bool all_solved = true;
  bool swept_all = true;
  bool have_best = false;
  std::set<std::vector<int>> keys;
  for (int k = k0; k <= n; ++k) {
    ApConfig kcfg = cfg;
    if (has_deadline) {
      double rem = std::chrono::duration<double>(deadline - Clock::now()).count();
      if (rem <= 0.0) {
        all_solved = false;
        swept_all = false;
        break;
      }
      kcfg.time_limit_s = rem / (n - k + 1);
    }
    ApkResult r = solve_apk(g, lam, k, kcfg);
    out.nodes += r.nodes;
    out.per_k_optima.emplace_back(k, r.optimum);
    if (!r.solved_to_optimality) all_solved = false;
    for (VertexSet& s : r.collected)
      if (keys.insert(s.members()).second) out.collected.push_back(std::move(s));
    if (!have_best || r.optimum < out.best_value) {
      out.best_value = r.optimum;
      out.best_set = r.best_set;
      have_best = true;
    }
    if (cfg.early_exit && !out.collected.empty() && k < n) {
      swept_all = false;
      break;
    }
  }
  out.certifying = all_solved && swept_all;
  return out;
}

std::pair<double, VertexSet> enumerate_pricing(const Graph& g,
                                               const DualSolution& lam) {
  int n = g.vertex_count();
  check_duals(g, lam);
  if (n < 1) throw argument_error("pricing needs at least one vertex");
  if (n > 25) throw too_large_error("subset sweep is limited to 25 vertices");

  std::vector<char> in(n, 0);
  long inside = 0, degsum = 0;
  double lamsum = 0.0;
  int size = 0;
  double bestv = kInf;
  std::vector<int> best;
  unsigned long total = 1ul << n;
  for (unsigned long i = 1; i < total; ++i) {
    int v = std::countr_zero(i);  // bit flipped between consecutive codes
    int cnt = 0;
    for (int u : g.neighbors(v))
      if (in[u]) ++cnt;
    if (!in[v]) {
      in[v] = 1;
      ++size;
      inside += cnt;
      degsum += g.degree(v);
      lamsum += lam.lambda[v];
    } else {
      in[v] = 0;
      --size;
      inside -= cnt;
      degsum -= g.degree(v);
      lamsum -= lam.lambda[v];
    }
    double val = lamsum - (4.0 * inside - degsum) / size;
    if (val < bestv) {
      bestv = val;
      best.clear();
      for (int u = 0; u < n; ++u)
        if (in[u]) best.push_back(u);
    }
  }
  return {bestv, VertexSet(best)};
}

}  // namespace modcg
