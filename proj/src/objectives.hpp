#pragma once

#include <vector>

#include "graph.hpp"

namespace modcg {

// One dual price per vertex.
struct DualSolution {
  std::vector<double> lambda;
};

// Disjoint nonempty clusters covering 0..n-1 exactly.
class Partition {
 public:
  Partition(int n, std::vector<VertexSet> clusters);

  int vertex_count() const { return n_; }
  const std::vector<VertexSet>& clusters() const { return clusters_; }
  int cluster_of(int v) const;
  int cluster_count() const { return static_cast<int>(clusters_.size()); }

  bool operator==(const Partition& o) const { return clusters_ == o.clusters_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> clusters_;  // sorted by smallest member
  std::vector<int> cluster_of_;
};

// Per-cluster score: (2*inside - cut) / |S|, computed as
// (4*inside - total_degree) / |S| so the only division happens last.
// S must be nonempty.
double cluster_contribution(const Graph& g, const VertexSet& s);

// Sum of cluster contributions over a whole partition.
double modularity_density(const Graph& g, const Partition& p);

// Reduced-cost style score of a candidate cluster against dual prices:
// cluster_contribution(S) - sum of lambda over S. Positive means the prices
// underpay the set.
double pricing_objective(const Graph& g, const VertexSet& s,
                         const DualSolution& duals);

// Convex blend: p * cluster_contribution(S) + (1-p) * (-sum lambda over S).
// p must lie in [0, 1].
double blended_objective(const Graph& g, const VertexSet& s,
                         const DualSolution& duals, double p);

// Per-vertex removal scores used to steer peeling. inside = edges from v into
// S, outside = deg(v) - inside, size = |S|.
//   sum-form:  p*(inside - outside) - (1-p) * size * lambda_v
//   diff-form: p*(3*inside - outside) - (1-p) * (size-1) * lambda_v
// The q-blend weighs sum-form by q and diff-form by 1-q.
double contribution_blend(int inside, int outside, int size, double lambda_v,
                          double p, double q);

// contribution_blend evaluated from scratch for vertex v of S (v must be
// in S, p and q in [0, 1]).
double contribution(const Graph& g, const VertexSet& s,
                    const DualSolution& duals, int v, double p, double q);

// Throws argument_error unless duals cover exactly n vertices.
void check_duals(const Graph& g, const DualSolution& duals);

}  // namespace modcg
