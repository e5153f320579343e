#pragma once

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "objectives.hpp"

namespace modcg {

struct ApConfig {
  double epsilon = 1e-6;  // violation threshold for collecting sets
  double time_limit_s = std::numeric_limits<double>::infinity();
  // Skip size 1: sound whenever every singleton is already priced by the
  // duals (the partition rows guarantee that inside the generation loop).
  bool skip_k1 = true;
  // Stop the size loop as soon as one size produced violated sets. Off by
  // default: the full sweep is what makes an empty result a certificate.
  bool early_exit = false;
  // Optional warm incumbents; entries whose size matches the current
  // subproblem seed its incumbent and are collected when violated.
  std::vector<VertexSet> seeds;
  // Test instrumentation: called for every node whose relaxation was solved,
  // with the branching state and the safe lower bound used for pruning.
  std::function<void(int k, const std::vector<int>& fixed_zero,
                     const std::vector<int>& fixed_one, double bound)>
      node_hook;
};

// Outcome of one fixed-size subproblem.
struct ApkResult {
  double optimum = 0.0;  // min over |S| = k of sum(lambda_S) - c(S)
  VertexSet best_set;
  std::vector<VertexSet> collected;  // integer solutions seen with value < -eps
  bool solved_to_optimality = true;  // false when the time budget ran out
  long nodes = 0;
};

// Outcome of the full sweep over sizes.
struct PricingResult {
  double best_value = 0.0;
  VertexSet best_set;
  std::vector<VertexSet> collected;
  std::vector<std::pair<int, double>> per_k_optima;
  // True when every size ran to proven optimality, so an empty `collected`
  // certifies that no set prices below -epsilon (size 1 exempted when
  // skipped, see ApConfig::skip_k1).
  bool certifying = false;
  long nodes = 0;
};

// Minimizes sum_{v in S} lambda_v - c(S) over sets of size exactly k via
// branch and bound on the 0-1 linear formulation: variables y_v (vertex
// membership) and x_e (edge inclusion), objective
//   sum (lambda_v + deg(v)/k) y_v - (4/k) sum x_e,
// subject to sum y = k and x_e <= y_u, x_e <= y_v. Node relaxations are
// solved by the bounded simplex; pruning uses a Lagrangian bound derived
// from the relaxation duals, which stays valid regardless of LP round-off.
ApkResult solve_apk(const Graph& g, const DualSolution& lam, int k,
                    const ApConfig& cfg = {});

// Runs solve_apk for every size (ascending, evenly splitting the remaining
// time budget) and merges the results.
PricingResult exact_pricing(const Graph& g, const DualSolution& lam,
                            const ApConfig& cfg = {});

// Exhaustive reference: exact minimum of sum(lambda_S) - c(S) over all
// nonempty S, by Gray-code subset sweep. Guarded to n <= 25.
std::pair<double, VertexSet> enumerate_pricing(const Graph& g,
                                               const DualSolution& lam);

}  // namespace modcg
