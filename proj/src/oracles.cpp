#include "oracles.hpp"

#include <cstdint>

#include "errors.hpp"

namespace modcg {

namespace {

std::vector<VertexSet> clusters_from_assignment(const std::vector<int>& rgs,
                                                int num_clusters) {
  std::vector<std::vector<int>> buckets(num_clusters);
  for (int v = 0; v < static_cast<int>(rgs.size()); ++v)
    buckets[rgs[v]].push_back(v);
  std::vector<VertexSet> clusters;
  clusters.reserve(num_clusters);
  for (auto& b : buckets) clusters.emplace_back(std::move(b));
  return clusters;
}

VertexSet set_from_mask(uint32_t mask, int n) {
  std::vector<int> members;
  for (int v = 0; v < n; ++v)
    if (mask & (1u << v)) members.push_back(v);
  return VertexSet(std::move(members));
}

}  // namespace

std::pair<double, Partition> brute_force_partition_opt(const Graph& g,
                                                       int min_clusters) {
  int n = g.vertex_count();
  if (n > 12) throw too_large_error("partition enumeration supports n <= 12");
  if (n < 1) throw argument_error("graph must have at least one vertex");
  if (min_clusters < 1 || min_clusters > n)
    throw argument_error("min_clusters must lie in [1, n]");

  // Restricted-growth strings: rgs[0] = 0, rgs[v] <= 1 + max(rgs[0..v-1]).
  std::vector<int> rgs(n, 0);
  bool have_best = false;
  double best_value = 0.0;
  int best_clusters = 0;
  std::vector<int> best_rgs;

  while (true) {
    int num_clusters = 0;
    for (int v = 0; v < n; ++v) num_clusters = std::max(num_clusters, rgs[v] + 1);
    if (num_clusters >= min_clusters) {
      Partition p(n, clusters_from_assignment(rgs, num_clusters));
      double value = modularity_density(g, p);
      bool better = !have_best || value > best_value + 1e-12;
      if (!better && have_best && value > best_value - 1e-12) {
        // Tie: fewer clusters first, then smaller restricted-growth string.
        better = num_clusters < best_clusters ||
                 (num_clusters == best_clusters && rgs < best_rgs);
      }
      if (better) {
        have_best = true;
        best_value = value;
        best_clusters = num_clusters;
        best_rgs = rgs;
      }
    }
    // Next restricted-growth string.
    int v = n - 1;
    for (; v > 0; --v) {
      int prefix_max = 0;
      for (int u = 0; u < v; ++u) prefix_max = std::max(prefix_max, rgs[u]);
      if (rgs[v] <= prefix_max) break;
    }
    if (v == 0) break;
    ++rgs[v];
    for (int u = v + 1; u < n; ++u) rgs[u] = 0;
  }

  if (!have_best)
    throw argument_error("no partition satisfies the cluster minimum");
  int num_clusters = 0;
  for (int v = 0; v < n; ++v) num_clusters = std::max(num_clusters, best_rgs[v] + 1);
  return {best_value, Partition(n, clusters_from_assignment(best_rgs, num_clusters))};
}

std::pair<long long, VertexSet> brute_force_max_cut(const Graph& g) {
  int n = g.vertex_count();
  if (n > 24) throw too_large_error("max-cut enumeration supports n <= 24");
  if (n < 2) throw argument_error("max cut needs at least two vertices");

  auto edges = g.edges();
  long long best = -1;
  uint32_t best_mask = 0;
  // Vertex n-1 stays on the far side, halving the enumeration.
  for (uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    long long value = 0;
    for (auto [u, v] : edges) {
      bool su = mask & (1u << u);
      bool sv = mask & (1u << v);
      if (su != sv) ++value;
    }
    if (value > best) {
      best = value;
      best_mask = mask;
    }
  }
  return {best, set_from_mask(best_mask, n)};
}

std::pair<double, VertexSet> brute_force_densest(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20) throw too_large_error("densest-subset enumeration supports n <= 20");
  if (n < 1) throw argument_error("graph must have at least one vertex");

  // Compare densities exactly: e1/s1 > e2/s2  <=>  e1*s2 > e2*s1.
  long long best_edges = -1;
  int best_size = 1;
  VertexSet best_set;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    VertexSet s = set_from_mask(mask, n);
    long long inside = induced_edge_count(g, s);
    long long lhs = inside * best_size;
    long long rhs = best_edges * s.size();
    bool better = lhs > rhs;
    if (!better && lhs == rhs) {
      better = s.size() > best_set.size() ||
               (s.size() == best_set.size() && s.members() < best_set.members());
    }
    if (better || best_edges < 0) {
      best_edges = inside;
      best_size = s.size();
      best_set = std::move(s);
    }
  }
  return {static_cast<double>(best_edges) / best_size, best_set};
}

std::pair<double, VertexSet> brute_force_pricing(const Graph& g,
                                                 const DualSolution& duals) {
  int n = g.vertex_count();
  if (n > 20) throw too_large_error("pricing enumeration supports n <= 20");
  if (n < 1) throw argument_error("graph must have at least one vertex");
  check_duals(g, duals);

  double best = 0.0;
  VertexSet best_set;
  bool have = false;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    VertexSet s = set_from_mask(mask, n);
    double value = -pricing_objective(g, s, duals);
    if (!have || value < best) {
      have = true;
      best = value;
      best_set = std::move(s);
    }
  }
  return {best, best_set};
}

}  // namespace modcg
