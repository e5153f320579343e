#pragma once

#include <vector>

namespace modcg {

enum class ObjectiveSense { Maximize, Minimize };
enum class RowSense { LessEqual, Equal, GreaterEqual };
enum class LpStatus { Optimal, Infeasible, IterationLimit, Unbounded };

struct SimplexOptions {
  double pivot_tol = 1e-9;    // reduced-cost eligibility threshold
  double feas_tol = 1e-8;     // bound/row violation tolerance
  int refactor_interval = 100;  // pivots between basis rebuilds
  int bland_streak = 50;      // degenerate pivots before Bland's rule kicks in
  long max_iterations = 0;    // 0 = automatic cap from problem size
};

// Dense revised simplex over bounded variables.
//
// The problem is held in computational form: rows a_i.x {<=,=,>=} b_i with a
// slack appended per row, variables boxed by [lower, upper]. Warm starts are
// implicit: the basis survives add_variable and set_bounds, and solve()
// repairs primal feasibility in a composite phase 1 when bound edits broke
// it. The basis inverse is kept explicitly and rebuilt every
// refactor_interval pivots (or on drift), so numerics stay honest on the
// problem sizes this library works at (hundreds of rows).
class DenseSimplex {
 public:
  DenseSimplex(ObjectiveSense sense, int num_rows);

  void set_row(int row, RowSense sense, double rhs);

  // column holds (row, coefficient) pairs; rows may repeat (summed). Returns
  // the variable id. At least one bound must be finite.
  int add_variable(double cost, double lower, double upper,
                   const std::vector<std::pair<int, double>>& column);

  void set_bounds(int var, double lower, double upper);
  void set_cost(int var, double cost);

  int num_rows() const { return rows_; }
  int num_variables() const { return static_cast<int>(cols_.size()); }

  LpStatus solve(const SimplexOptions& opts = {});

  // Valid after solve() returns Optimal.
  double objective_value() const;
  double primal_value(int var) const;
  std::vector<double> primal_values() const;
  // One multiplier per row, in the caller's objective sense: for a maximize
  // problem y = c_B B^-1 directly; for minimize the sign is flipped back.
  std::vector<double> row_duals() const;
  long iterations_used() const { return iterations_; }

  // Basic variable per row: >= 0 structural id, -1-row for that row's slack.
  std::vector<int> basic_variables() const { return basis_; }
  // Install a starting basis of structural variables (one per row, in row
  // order). Must be nonsingular; primal feasibility is not required.
  void set_initial_basis(const std::vector<int>& vars);

 private:
  enum class State : unsigned char { Basic, AtLower, AtUpper };

  // Variable addressing: code >= 0 is a structural variable, code < 0 is the
  // slack of row (-1 - code).
  struct VarRef {
    double cost;
    double lower, upper;
    State state;
    double value;  // meaningful when nonbasic
  };

  int rows_;
  bool maximize_;
  std::vector<RowSense> row_sense_;
  std::vector<double> rhs_;
  std::vector<std::vector<std::pair<int, double>>> cols_;  // structural columns
  std::vector<VarRef> svars_;   // structural variable state
  std::vector<VarRef> slacks_;  // one per row
  std::vector<int> basis_;      // var code per row; empty = no valid basis
  std::vector<double> binv_;    // rows_ x rows_, row-major
  std::vector<double> xb_;      // values of basic variables
  bool basis_valid_ = false;
  bool xb_dirty_ = true;
  long iterations_ = 0;
  double objective_ = 0.0;
  std::vector<double> duals_;

  VarRef& ref(int code);
  const VarRef& ref(int code) const;
  void column_times(int code, std::vector<double>& out) const;  // out = B^-1 a
  void default_slack_basis();
  void refactorize();  // rebuild binv_ and xb_ from basis_; throws on singular
  void recompute_xb();
  double nonbasic_value(const VarRef& v) const;
  int ordinal(int code) const;  // total order for Bland's rule
};

}  // namespace modcg
