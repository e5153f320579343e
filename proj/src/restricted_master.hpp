#pragma once

#include <set>
#include <vector>

#include "graph.hpp"
#include "objectives.hpp"
#include "simplex.hpp"

namespace modcg {

// One generated cluster candidate: the vertex set S together with its cached
// score c(S).
struct Column {
  VertexSet set;
  double contribution = 0.0;
};

// Builds a column with the score computed from the graph.
Column make_column(const Graph& g, VertexSet set);

struct LpSolution {
  double objective = 0.0;
  std::vector<double> primal;  // z per column, in column order
  DualSolution duals;
  std::vector<int> basis;  // column indices forming the final basis
  LpStatus status = LpStatus::Optimal;
};

// The set-partitioning LP over the columns generated so far:
//   maximize sum c(S) z_S  s.t.  sum_{S : v in S} z_S = 1 per vertex, z >= 0.
// Row duals are the lambda vector the pricing problems work against.
//
// The first solve requires every singleton column to be present (they form
// the identity starting basis); later solves warm-start from the previous
// basis, so appending columns and re-solving is cheap.
class RestrictedMaster {
 public:
  explicit RestrictedMaster(int n);

  // False (and no-op) when an identical set was already added.
  bool add_column(Column col);

  int n() const { return n_; }
  const std::vector<Column>& columns() const { return columns_; }

  // Solves to optimality and cross-checks the result: row feasibility,
  // strong duality, complementary slackness, and that the duals price every
  // supplied column to within 1e-8. Violations throw internal_error. An
  // iteration-limited solve is returned as-is with its status (the checks
  // are skipped; the solution is not usable).
  LpSolution solve(const SimplexOptions& opts = {});

 private:
  int n_;
  DenseSimplex lp_;
  std::vector<Column> columns_;
  std::set<std::vector<int>> keys_;
  bool basis_seeded_ = false;
};

// One-shot convenience used by tests and by partition recovery: columns must
// include all n singletons.
LpSolution solve_restricted_master(int n, const std::vector<Column>& columns);

}  // namespace modcg
