#include "restricted_master.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace modcg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCheckTol = 1e-8;
}  // namespace

Column make_column(const Graph& g, VertexSet set) {
  Column col;
  col.contribution = cluster_contribution(g, set);
  col.set = std::move(set);
  return col;
}

RestrictedMaster::RestrictedMaster(int n)
    : n_(n), lp_(ObjectiveSense::Maximize, n) {
  if (n < 1) throw argument_error("restricted master needs at least one vertex");
  for (int v = 0; v < n_; ++v) lp_.set_row(v, RowSense::Equal, 1.0);
}

bool RestrictedMaster::add_column(Column col) {
  if (col.set.empty()) throw argument_error("empty column set");
  if (col.set.members().back() >= n_)
    throw argument_error("column vertex out of range");
  if (!keys_.insert(col.set.members()).second) return false;
  std::vector<std::pair<int, double>> entries;
  entries.reserve(col.set.size());
  for (int v : col.set.members()) entries.emplace_back(v, 1.0);
  lp_.add_variable(col.contribution, 0.0, kInf, entries);
  columns_.push_back(std::move(col));
  return true;
}

LpSolution RestrictedMaster::solve(const SimplexOptions& opts) {
  if (!basis_seeded_) {
    // The singletons form an identity basis, so no feasibility phase is ever
    // needed; their presence is the caller's obligation.
    std::vector<int> seed(n_, -1);
    for (size_t j = 0; j < columns_.size(); ++j) {
      const VertexSet& s = columns_[j].set;
      if (s.size() == 1) seed[s.members()[0]] = static_cast<int>(j);
    }
    for (int v = 0; v < n_; ++v)
      if (seed[v] < 0)
        throw argument_error("restricted master requires all singleton columns");
    lp_.set_initial_basis(seed);
    basis_seeded_ = true;
  }

  LpSolution out;
  out.status = lp_.solve(opts);
  if (out.status == LpStatus::IterationLimit) return out;
  if (out.status != LpStatus::Optimal)
    throw internal_error("restricted master cannot be infeasible or unbounded");

  out.objective = lp_.objective_value();
  out.primal = lp_.primal_values();
  out.duals.lambda = lp_.row_duals();
  for (int code : lp_.basic_variables()) {
    if (code < 0)
      throw internal_error("slack variable in an optimal partition basis");
    out.basis.push_back(code);
  }

  // Row feasibility: each vertex covered exactly once in the LP sense.
  std::vector<double> cover(n_, 0.0);
  for (size_t j = 0; j < columns_.size(); ++j)
    for (int v : columns_[j].set.members()) cover[v] += out.primal[j];
  for (int v = 0; v < n_; ++v)
    if (std::abs(cover[v] - 1.0) > kCheckTol)
      throw internal_error("restricted master row infeasibility past tolerance");

  // Strong duality: primal objective equals the dual objective sum(lambda).
  double dual_obj = 0.0;
  for (double l : out.duals.lambda) dual_obj += l;
  if (std::abs(out.objective - dual_obj) > kCheckTol)
    throw internal_error("restricted master duality gap past tolerance");

  // Dual feasibility over every supplied column, and complementary
  // slackness for the active ones.
  for (size_t j = 0; j < columns_.size(); ++j) {
    double priced = 0.0;
    for (int v : columns_[j].set.members()) priced += out.duals.lambda[v];
    double reduced = columns_[j].contribution - priced;
    if (reduced > kCheckTol)
      throw internal_error("duals fail to price a supplied column");
    if (std::abs(out.primal[j] * reduced) > kCheckTol)
      throw internal_error("complementary slackness violated");
  }
  return out;
}

LpSolution solve_restricted_master(int n, const std::vector<Column>& columns) {
  RestrictedMaster master(n);
  for (const Column& c : columns) master.add_column(c);
  return master.solve();
}

}  // namespace modcg
