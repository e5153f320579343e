#pragma once

#include <utility>
#include <vector>

#include "graph.hpp"
#include "objectives.hpp"

namespace modcg {

// Exhaustive reference implementations. Deliberately simple and slow; every
// routine refuses instances beyond its hard size guard instead of degrading.

// Best partition by total cluster contribution over all set partitions of
// 0..n-1 (restricted-growth enumeration). min_clusters >= 1 restricts the
// search to partitions with at least that many clusters. Ties break toward
// fewer clusters, then the lexicographically smallest restricted-growth
// string. Guard: n <= 12.
std::pair<double, Partition> brute_force_partition_opt(const Graph& g,
                                                       int min_clusters = 1);

// Maximum cut value and one side achieving it over all proper bipartitions.
// Guard: n <= 24. Requires n >= 2.
std::pair<long long, VertexSet> brute_force_max_cut(const Graph& g);

// Densest subset by |E(S)| / |S| over all nonempty subsets. Ties break toward
// larger sets, then lexicographically smaller member lists. Guard: n <= 20.
std::pair<double, VertexSet> brute_force_densest(const Graph& g);

// Minimum of  sum_{v in S} lambda_v - cluster_contribution(S)  over all
// nonempty subsets, with the minimizing set. Ties keep the first subset in
// ascending-bitmask order. Guard: n <= 20.
std::pair<double, VertexSet> brute_force_pricing(const Graph& g,
                                                 const DualSolution& duals);

}  // namespace modcg
