#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "objectives.hpp"
#include "peeling.hpp"
#include "restricted_master.hpp"

namespace modcg {

struct ColGenConfig {
  PeelConfig peel;        // its epsilon is overridden by the field below
  double epsilon = 1e-6;  // violation threshold shared by both pricers
  double time_limit_s = 1800.0;
  long max_iterations = 0;  // pricing rounds; 0 = unlimited
  int column_cap = 0;       // max columns accepted per round; 0 = unlimited
  bool skip_k1 = true;
  bool early_exit_exact = false;
  std::vector<VertexSet> warm_columns;  // extra starting columns, none by default
};

enum class ColGenStatus { DualOptimal, TimeLimit };
enum class PrimalStatus { Integral, Fractional, FractionalUnresolved };
enum class PricingMode { Peel, Exact };

struct IterationRecord {
  int iteration = 0;
  PricingMode mode = PricingMode::Peel;
  int columns_added = 0;
  double master_objective = 0.0;  // value of the solve that produced the duals
  double elapsed_s = 0.0;
  DualSolution duals;  // the multipliers the round priced against
};

// One appended column, kept for post-hoc verification: the violation is
// g(S) = c(S) - sum(lambda_S) measured against the duals of that round.
struct AuditEntry {
  VertexSet set;
  int iteration = 0;
  double violation = 0.0;
};

struct ColGenReport {
  double dual_objective = 0.0;
  DualSolution duals;
  ColGenStatus status = ColGenStatus::DualOptimal;
  PrimalStatus primal_status = PrimalStatus::Integral;
  std::optional<Partition> partition;
  std::optional<double> modularity_density;
  std::vector<IterationRecord> iterations;
  long total_columns = 0;
  // True when a full exact sweep came back empty: the duals are feasible for
  // every vertex subset within epsilon, so the dual objective is proven.
  bool certificate = false;
  long duplicates_dropped = 0;
  int exact_calls = 0;
  std::vector<AuditEntry> audit;
};

// The generation loop: solve the master, peel for violated sets, fall back
// to the exact sweep when peeling is empty, stop when the sweep certifies or
// a limit is hit; then read the partition off the final master solution.
ColGenReport run_colgen(const Graph& g, const ColGenConfig& cfg = {});

// Classifies the final master solution: every z within 1e-6 of {0,1} turns
// the near-one columns into a verified partition; anything else is
// fractional with no partition. Near-integral z that fails the disjoint
// cover check throws internal_error (it signals an LP tolerance breach).
std::pair<PrimalStatus, std::optional<Partition>> recover_primal(
    const LpSolution& sol, const std::vector<Column>& columns, int n);

// Fallback for fractional terminals: best partition of V using only the
// generated columns, by depth-first search over the lowest uncovered vertex
// with a per-vertex ratio bound. Feasible by construction (singletons are
// always present); throws limit_error if the search budget is exhausted.
Partition integer_restricted_master(const std::vector<Column>& columns, int n);

}  // namespace modcg
