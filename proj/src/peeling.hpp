#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "graph.hpp"
#include "objectives.hpp"

namespace modcg {

// Knobs for the pricing peel. Both grids must be nonempty with entries in
// [0, 1]; epsilon must be positive.
struct PeelConfig {
  std::vector<double> p_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<double> q_grid = {0.0, 0.5, 1.0};
  double epsilon = 1e-6;
};

// Work counters, mainly for scaling tests.
struct PeelStats {
  uint64_t passes = 0;
  uint64_t removal_score_evals = 0;  // per-vertex scores computed across all steps
};

// Min-degree peeling for a densest subset (by |E(S)| / |S|): repeatedly drop
// a minimum-degree vertex (lowest id on ties) and return the best suffix set.
// Density ties prefer the larger set. Guarantees at least half the optimal
// density. Graph must be nonempty.
VertexSet peel_densest(const Graph& g);

// One peeling pass per (p, q) grid point, each steered by the blended
// per-vertex removal scores at that grid point: start from all vertices,
// repeatedly drop the vertex with the smallest score (lowest id on ties), and
// record every intermediate set of size >= 2 whose pricing objective exceeds
// epsilon. Singletons are never recorded. Results are deduplicated across
// passes, filtered against `exclude` when given, and returned in ascending
// member-list order.
std::vector<VertexSet> peel_pricing(const Graph& g, const DualSolution& duals,
                                    const PeelConfig& cfg = {},
                                    const std::set<std::vector<int>>* exclude = nullptr,
                                    PeelStats* stats = nullptr);

}  // namespace modcg
