#include "peeling.hpp"

#include <algorithm>

#include "errors.hpp"

namespace modcg {

VertexSet peel_densest(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) throw argument_error("graph must have at least one vertex");

  std::vector<int> inside_degree(n);
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v) inside_degree[v] = g.degree(v);

  // Peel to a single vertex, remembering the removal order.
  std::vector<int> removal_order;
  removal_order.reserve(n);
  long long edges_left = g.edge_count();
  int size_left = n;

  // Track the best suffix set: compare e1/s1 vs e2/s2 exactly via cross
  // multiplication; ties keep the larger (earlier) set.
  long long best_edges = edges_left;
  int best_size = size_left;
  int best_removed = 0;

  while (size_left > 1) {
    int victim = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (victim == -1 || inside_degree[v] < inside_degree[victim]))
        victim = v;
    alive[victim] = 0;
    removal_order.push_back(victim);
    edges_left -= inside_degree[victim];
    --size_left;
    for (int u : g.neighbors(victim))
      if (alive[u]) --inside_degree[u];
    if (edges_left * best_size > best_edges * size_left) {
      best_edges = edges_left;
      best_size = size_left;
      best_removed = static_cast<int>(removal_order.size());
    }
  }

  std::vector<char> removed(n, 0);
  for (int i = 0; i < best_removed; ++i) removed[removal_order[i]] = 1;
  std::vector<int> members;
  members.reserve(best_size);
  for (int v = 0; v < n; ++v)
    if (!removed[v]) members.push_back(v);
  return VertexSet(std::move(members));
}

namespace {

void check_grid(const std::vector<double>& grid, const char* name) {
  if (grid.empty())
    throw argument_error(std::string(name) + " grid must be nonempty");
  for (double x : grid)
    if (x < 0.0 || x > 1.0)
      throw argument_error(std::string(name) + " grid entries must lie in [0, 1]");
}

}  // namespace

std::vector<VertexSet> peel_pricing(const Graph& g, const DualSolution& duals,
                                    const PeelConfig& cfg,
                                    const std::set<std::vector<int>>* exclude,
                                    PeelStats* stats) {
  int n = g.vertex_count();
  if (n < 1) throw argument_error("graph must have at least one vertex");
  check_duals(g, duals);
  check_grid(cfg.p_grid, "p");
  check_grid(cfg.q_grid, "q");
  if (cfg.epsilon <= 0.0) throw argument_error("epsilon must be positive");

  std::set<std::vector<int>> found;

  std::vector<int> inside_degree(n);
  std::vector<char> alive(n);

  for (double p : cfg.p_grid) {
    for (double q : cfg.q_grid) {
      if (stats) ++stats->passes;
      // Reset to the full vertex set.
      std::fill(alive.begin(), alive.end(), 1);
      long long edges_in = g.edge_count();
      long long degree_total = 0;
      double lambda_sum = 0.0;
      for (int v = 0; v < n; ++v) {
        inside_degree[v] = g.degree(v);
        degree_total += g.degree(v);
        lambda_sum += duals.lambda[v];
      }

      std::vector<int> members(n);
      for (int v = 0; v < n; ++v) members[v] = v;

      for (int size = n; size >= 2; --size) {
        // Pricing objective of the current set, numerators kept integral.
        double score = static_cast<double>(4 * edges_in - degree_total) / size -
                       lambda_sum;
        if (score > cfg.epsilon) {
          std::vector<int> key(members.begin(), members.end());
          if (!exclude || !exclude->count(key)) found.insert(std::move(key));
        }
        // Drop the vertex with the smallest blended removal score.
        int victim = -1;
        double victim_score = 0.0;
        for (int v : members) {
          int outside = g.degree(v) - inside_degree[v];
          double s = contribution_blend(inside_degree[v], outside, size,
                                        duals.lambda[v], p, q);
          if (stats) ++stats->removal_score_evals;
          if (victim == -1 || s < victim_score) {
            victim = v;
            victim_score = s;
          }
        }
        alive[victim] = 0;
        edges_in -= inside_degree[victim];
        degree_total -= g.degree(victim);
        lambda_sum -= duals.lambda[victim];
        for (int u : g.neighbors(victim))
          if (alive[u]) --inside_degree[u];
        members.erase(std::find(members.begin(), members.end(), victim));
      }
    }
  }

  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (const auto& key : found) out.emplace_back(std::vector<int>(key));
  return out;
}

}  // namespace modcg
