#include "objectives.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "errors.hpp"

namespace modcg {

Partition::Partition(int n, std::vector<VertexSet> clusters)
    : n_(n), clusters_(std::move(clusters)) {
  if (n < 0) throw argument_error("vertex count must be nonnegative");
  cluster_of_.assign(n, -1);
  for (size_t c = 0; c < clusters_.size(); ++c) {
    if (clusters_[c].empty()) throw argument_error("empty cluster in partition");
    for (int v : clusters_[c]) {
      if (v >= n) throw argument_error("cluster vertex out of range");
      if (cluster_of_[v] != -1)
        throw argument_error("clusters overlap at vertex " + std::to_string(v));
      cluster_of_[v] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < n; ++v)
    if (cluster_of_[v] == -1)
      throw argument_error("vertex " + std::to_string(v) +
                           " not covered by any cluster");
  std::sort(clusters_.begin(), clusters_.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.members().front() < b.members().front();
            });
  for (size_t c = 0; c < clusters_.size(); ++c)
    for (int v : clusters_[c]) cluster_of_[v] = static_cast<int>(c);
}

int Partition::cluster_of(int v) const {
  if (v < 0 || v >= n_) throw argument_error("vertex id out of range");
  return cluster_of_[v];
}

double cluster_contribution(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw argument_error("cluster must be nonempty");
  long long inside = induced_edge_count(g, s);
  long long degree_sum = 0;
  for (int v : s) degree_sum += g.degree(v);
  double value =
      static_cast<double>(4 * inside - degree_sum) / static_cast<double>(s.size());
  // Same number via the cut-based form; the two must agree to rounding.
  assert(std::abs(value - static_cast<double>(2 * inside - cut_size(g, s)) /
                              static_cast<double>(s.size())) < 1e-12);
  return value;
}

double modularity_density(const Graph& g, const Partition& p) {
  if (p.vertex_count() != g.vertex_count())
    throw argument_error("partition does not match graph size");
  double total = 0.0;
  for (const auto& cluster : p.clusters())
    total += cluster_contribution(g, cluster);
  return total;
}

void check_duals(const Graph& g, const DualSolution& duals) {
  if (static_cast<int>(duals.lambda.size()) != g.vertex_count())
    throw argument_error("dual vector size does not match vertex count");
}

double pricing_objective(const Graph& g, const VertexSet& s,
                         const DualSolution& duals) {
  check_duals(g, duals);
  double lambda_sum = 0.0;
  for (int v : s) lambda_sum += duals.lambda[v];
  return cluster_contribution(g, s) - lambda_sum;
}

double blended_objective(const Graph& g, const VertexSet& s,
                         const DualSolution& duals, double p) {
  if (p < 0.0 || p > 1.0) throw argument_error("p must lie in [0, 1]");
  check_duals(g, duals);
  double lambda_sum = 0.0;
  for (int v : s) lambda_sum += duals.lambda[v];
  return p * cluster_contribution(g, s) + (1.0 - p) * (-lambda_sum);
}

double contribution_blend(int inside, int outside, int size, double lambda_v,
                          double p, double q) {
  double sum_form = p * (inside - outside) - (1.0 - p) * size * lambda_v;
  double diff_form =
      p * (3.0 * inside - outside) - (1.0 - p) * (size - 1) * lambda_v;
  return q * sum_form + (1.0 - q) * diff_form;
}

double contribution(const Graph& g, const VertexSet& s,
                    const DualSolution& duals, int v, double p, double q) {
  if (p < 0.0 || p > 1.0 || q < 0.0 || q > 1.0)
    throw argument_error("p and q must lie in [0, 1]");
  check_duals(g, duals);
  if (!s.contains(v)) throw argument_error("vertex not in the set");
  int inside = 0;
  for (int u : g.neighbors(v))
    if (s.contains(u)) ++inside;
  int outside = g.degree(v) - inside;
  return contribution_blend(inside, outside, s.size(), duals.lambda[v], p, q);
}

}  // namespace modcg
