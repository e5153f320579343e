#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace modcg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDropTol = 1e-11;   // direction entries treated as zero
constexpr double kDegenStep = 1e-12;  // steps this small count as degenerate
}  // namespace

DenseSimplex::DenseSimplex(ObjectiveSense sense, int num_rows)
    : rows_(num_rows), maximize_(sense == ObjectiveSense::Maximize) {
  if (num_rows < 1) throw argument_error("simplex needs at least one row");
  row_sense_.assign(rows_, RowSense::Equal);
  rhs_.assign(rows_, 0.0);
  slacks_.assign(rows_, VarRef{0.0, 0.0, 0.0, State::AtLower, 0.0});
  binv_.assign(static_cast<size_t>(rows_) * rows_, 0.0);
  xb_.assign(rows_, 0.0);
}

void DenseSimplex::set_row(int row, RowSense sense, double rhs) {
  if (row < 0 || row >= rows_) throw argument_error("row index out of range");
  row_sense_[row] = sense;
  rhs_[row] = rhs;
  VarRef& s = slacks_[row];
  switch (sense) {
    case RowSense::LessEqual:
      s.lower = 0.0;
      s.upper = kInf;
      break;
    case RowSense::Equal:
      s.lower = 0.0;
      s.upper = 0.0;
      break;
    case RowSense::GreaterEqual:
      s.lower = -kInf;
      s.upper = 0.0;
      break;
  }
  if (s.state != State::Basic) {
    s.state = std::isfinite(s.lower) ? State::AtLower : State::AtUpper;
    s.value = s.state == State::AtLower ? s.lower : s.upper;
  }
  xb_dirty_ = true;
}

int DenseSimplex::add_variable(double cost, double lower, double upper,
                               const std::vector<std::pair<int, double>>& column) {
  if (lower > upper) throw argument_error("variable bounds are crossed");
  if (!std::isfinite(lower) && !std::isfinite(upper))
    throw argument_error("free variables are not supported");
  std::vector<std::pair<int, double>> col;
  col.reserve(column.size());
  for (auto [row, coef] : column) {
    if (row < 0 || row >= rows_) throw argument_error("column row out of range");
    if (coef != 0.0) col.emplace_back(row, coef);
  }
  std::sort(col.begin(), col.end());
  // Sum duplicates.
  size_t w = 0;
  for (size_t i = 0; i < col.size(); ++i) {
    if (w > 0 && col[w - 1].first == col[i].first)
      col[w - 1].second += col[i].second;
    else
      col[w++] = col[i];
  }
  col.resize(w);

  VarRef v;
  v.cost = cost;
  v.lower = lower;
  v.upper = upper;
  v.state = std::isfinite(lower) ? State::AtLower : State::AtUpper;
  v.value = v.state == State::AtLower ? lower : upper;
  svars_.push_back(v);
  cols_.push_back(std::move(col));
  if (v.value != 0.0) xb_dirty_ = true;
  return static_cast<int>(svars_.size()) - 1;
}

void DenseSimplex::set_bounds(int var, double lower, double upper) {
  if (var < 0 || var >= num_variables()) throw argument_error("bad variable id");
  if (lower > upper) throw argument_error("variable bounds are crossed");
  if (!std::isfinite(lower) && !std::isfinite(upper))
    throw argument_error("free variables are not supported");
  VarRef& v = svars_[var];
  v.lower = lower;
  v.upper = upper;
  if (v.state != State::Basic) {
    // Park the variable at the nearest usable bound.
    double old = v.value;
    bool low_ok = std::isfinite(lower);
    bool up_ok = std::isfinite(upper);
    if (low_ok && (!up_ok || std::abs(old - lower) <= std::abs(old - upper))) {
      v.state = State::AtLower;
      v.value = lower;
    } else {
      v.state = State::AtUpper;
      v.value = upper;
    }
    xb_dirty_ = true;
  }
}

void DenseSimplex::set_cost(int var, double cost) {
  if (var < 0 || var >= num_variables()) throw argument_error("bad variable id");
  svars_[var].cost = cost;
}

DenseSimplex::VarRef& DenseSimplex::ref(int code) {
  return code >= 0 ? svars_[code] : slacks_[-1 - code];
}
const DenseSimplex::VarRef& DenseSimplex::ref(int code) const {
  return code >= 0 ? svars_[code] : slacks_[-1 - code];
}

int DenseSimplex::ordinal(int code) const {
  return code >= 0 ? code : num_variables() + (-1 - code);
}

void DenseSimplex::column_times(int code, std::vector<double>& out) const {
  out.assign(rows_, 0.0);
  if (code >= 0) {
    for (auto [row, coef] : cols_[code])
      for (int i = 0; i < rows_; ++i)
        out[i] += binv_[static_cast<size_t>(i) * rows_ + row] * coef;
  } else {
    int row = -1 - code;
    for (int i = 0; i < rows_; ++i)
      out[i] = binv_[static_cast<size_t>(i) * rows_ + row];
  }
}

void DenseSimplex::default_slack_basis() {
  basis_.assign(rows_, 0);
  for (int v = 0; v < num_variables(); ++v)
    if (svars_[v].state == State::Basic) {
      svars_[v].state = std::isfinite(svars_[v].lower) ? State::AtLower : State::AtUpper;
      svars_[v].value =
          svars_[v].state == State::AtLower ? svars_[v].lower : svars_[v].upper;
    }
  for (int r = 0; r < rows_; ++r) {
    basis_[r] = -1 - r;
    slacks_[r].state = State::Basic;
  }
  basis_valid_ = true;
  refactorize();
}

void DenseSimplex::set_initial_basis(const std::vector<int>& vars) {
  if (static_cast<int>(vars.size()) != rows_)
    throw argument_error("initial basis must have one variable per row");
  for (int v : vars)
    if (v < 0 || v >= num_variables())
      throw argument_error("initial basis references a bad variable id");
  for (auto& s : slacks_)
    if (s.state == State::Basic) {
      s.state = std::isfinite(s.lower) ? State::AtLower : State::AtUpper;
      s.value = s.state == State::AtLower ? s.lower : s.upper;
    }
  for (auto& v : svars_)
    if (v.state == State::Basic) {
      v.state = std::isfinite(v.lower) ? State::AtLower : State::AtUpper;
      v.value = v.state == State::AtLower ? v.lower : v.upper;
    }
  basis_ = vars;
  for (int v : vars) svars_[v].state = State::Basic;
  basis_valid_ = true;
  refactorize();  // throws if singular
}

void DenseSimplex::refactorize() {
  // Dense Gauss-Jordan inversion of the basis matrix.
  int m = rows_;
  std::vector<double> work(static_cast<size_t>(m) * 2 * m, 0.0);
  auto at = [&](int i, int j) -> double& { return work[static_cast<size_t>(i) * 2 * m + j]; };
  for (int pos = 0; pos < m; ++pos) {
    int code = basis_[pos];
    if (code >= 0) {
      for (auto [row, coef] : cols_[code]) at(row, pos) = coef;
    } else {
      at(-1 - code, pos) = 1.0;
    }
  }
  for (int i = 0; i < m; ++i) at(i, m + i) = 1.0;

  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int i = col + 1; i < m; ++i)
      if (std::abs(at(i, col)) > std::abs(at(pivot, col))) pivot = i;
    if (std::abs(at(pivot, col)) < 1e-12)
      throw internal_error("singular basis in simplex refactorization");
    if (pivot != col)
      for (int j = 0; j < 2 * m; ++j) std::swap(at(pivot, j), at(col, j));
    double inv = 1.0 / at(col, col);
    for (int j = 0; j < 2 * m; ++j) at(col, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == col) continue;
      double factor = at(i, col);
      if (factor == 0.0) continue;
      for (int j = 0; j < 2 * m; ++j) at(i, j) -= factor * at(col, j);
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      binv_[static_cast<size_t>(i) * m + j] = at(i, m + j);
  recompute_xb();
}

void DenseSimplex::recompute_xb() {
  std::vector<double> rhs = rhs_;
  for (int v = 0; v < num_variables(); ++v) {
    const VarRef& s = svars_[v];
    if (s.state == State::Basic || s.value == 0.0) continue;
    for (auto [row, coef] : cols_[v]) rhs[row] -= coef * s.value;
  }
  for (int r = 0; r < rows_; ++r) {
    const VarRef& s = slacks_[r];
    if (s.state == State::Basic || s.value == 0.0) continue;
    rhs[r] -= s.value;
  }
  for (int i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (int j = 0; j < rows_; ++j)
      acc += binv_[static_cast<size_t>(i) * rows_ + j] * rhs[j];
    xb_[i] = acc;
  }
  xb_dirty_ = false;
}

double DenseSimplex::nonbasic_value(const VarRef& v) const {
  return v.state == State::AtLower ? v.lower : v.upper;
}

LpStatus DenseSimplex::solve(const SimplexOptions& opts) {
  if (!basis_valid_ || static_cast<int>(basis_.size()) != rows_)
    default_slack_basis();
  else if (xb_dirty_)
    recompute_xb();

  long cap = opts.max_iterations > 0
                 ? opts.max_iterations
                 : std::max<long>(20000, 200L * (rows_ + num_variables()));
  int degenerate_streak = 0;
  int pivots_since_refactor = 0;
  int phase1_stalls = 0;
  iterations_ = 0;

  std::vector<double> cb(rows_), y(rows_), w(rows_);

  while (iterations_ < cap) {
    ++iterations_;

    // Phase detection: any basic variable outside its bounds?
    bool phase1 = false;
    for (int i = 0; i < rows_; ++i) {
      const VarRef& v = ref(basis_[i]);
      if (xb_[i] < v.lower - opts.feas_tol || xb_[i] > v.upper + opts.feas_tol) {
        phase1 = true;
        break;
      }
    }

    // Basic cost vector: real costs in phase 2, infeasibility gradient in
    // phase 1 (maximizing minus the total violation).
    for (int i = 0; i < rows_; ++i) {
      const VarRef& v = ref(basis_[i]);
      if (phase1) {
        if (xb_[i] < v.lower - opts.feas_tol)
          cb[i] = 1.0;
        else if (xb_[i] > v.upper + opts.feas_tol)
          cb[i] = -1.0;
        else
          cb[i] = 0.0;
      } else {
        cb[i] = basis_[i] >= 0 ? (maximize_ ? v.cost : -v.cost) : 0.0;
      }
    }
    for (int j = 0; j < rows_; ++j) {
      double acc = 0.0;
      for (int i = 0; i < rows_; ++i)
        acc += cb[i] * binv_[static_cast<size_t>(i) * rows_ + j];
      y[j] = acc;
    }

    // Price nonbasic variables.
    bool bland = degenerate_streak >= opts.bland_streak;
    int entering = 0;
    bool have_entering = false;
    double best_score = 0.0;
    auto consider = [&](int code) {
      const VarRef& v = ref(code);
      if (v.state == State::Basic) return;
      if (v.upper - v.lower <= 1e-14) return;  // fixed, cannot move
      double dot = 0.0;
      if (code >= 0) {
        for (auto [row, coef] : cols_[code]) dot += y[row] * coef;
      } else {
        dot = y[-1 - code];
      }
      double cost = phase1 ? 0.0 : (code >= 0 ? (maximize_ ? v.cost : -v.cost) : 0.0);
      double d = cost - dot;
      bool eligible = (v.state == State::AtLower && d > opts.pivot_tol) ||
                      (v.state == State::AtUpper && d < -opts.pivot_tol);
      if (!eligible) return;
      if (bland) {
        if (!have_entering || ordinal(code) < ordinal(entering)) {
          entering = code;
          have_entering = true;
        }
      } else if (!have_entering || std::abs(d) > best_score) {
        entering = code;
        best_score = std::abs(d);
        have_entering = true;
      }
    };
    for (int v = 0; v < num_variables(); ++v) consider(v);
    for (int r = 0; r < rows_; ++r) consider(-1 - r);

    if (!phase1) phase1_stalls = 0;

    if (!have_entering) {
      if (phase1) {
        // No improving direction left. Refresh the factorization once in
        // case the stall is numerical, then declare infeasibility if a real
        // violation survives.
        if (phase1_stalls == 0) {
          ++phase1_stalls;
          refactorize();
          pivots_since_refactor = 0;
          continue;
        }
        for (int i = 0; i < rows_; ++i) {
          const VarRef& v = ref(basis_[i]);
          if (xb_[i] < v.lower - opts.feas_tol ||
              xb_[i] > v.upper + opts.feas_tol)
            return LpStatus::Infeasible;
        }
        continue;  // violations were noise; re-enter as phase 2
      }
      // Optimal: refresh numerics, then double-check feasibility.
      refactorize();
      bool clean = true;
      for (int i = 0; i < rows_; ++i) {
        const VarRef& v = ref(basis_[i]);
        if (xb_[i] < v.lower - opts.feas_tol || xb_[i] > v.upper + opts.feas_tol)
          clean = false;
      }
      if (!clean) continue;  // drift uncovered by the refresh; keep iterating

      duals_.assign(rows_, 0.0);
      for (int i = 0; i < rows_; ++i)
        cb[i] = basis_[i] >= 0
                    ? (maximize_ ? ref(basis_[i]).cost : -ref(basis_[i]).cost)
                    : 0.0;
      for (int j = 0; j < rows_; ++j) {
        double acc = 0.0;
        for (int i = 0; i < rows_; ++i)
          acc += cb[i] * binv_[static_cast<size_t>(i) * rows_ + j];
        duals_[j] = maximize_ ? acc : -acc;
      }
      // Publish primal values and the objective.
      for (int i = 0; i < rows_; ++i)
        if (basis_[i] >= 0) svars_[basis_[i]].value = xb_[i];
      objective_ = 0.0;
      for (int v = 0; v < num_variables(); ++v) {
        double x = svars_[v].state == State::Basic ? svars_[v].value
                                                   : nonbasic_value(svars_[v]);
        objective_ += svars_[v].cost * x;
      }
      return LpStatus::Optimal;
    }

    phase1_stalls = 0;

    // Direction through the basis for the entering column.
    column_times(entering, w);
    const VarRef& evar = ref(entering);
    double sign = evar.state == State::AtLower ? 1.0 : -1.0;

    // Ratio test. rate_i = d x_Bi / d t where t >= 0 is the entering step.
    double best_t = kInf;
    int leave_pos = -1;
    bool leave_at_upper = false;
    double leave_abs_w = 0.0;
    for (int i = 0; i < rows_; ++i) {
      if (std::abs(w[i]) <= kDropTol) continue;
      double rate = -sign * w[i];
      const VarRef& v = ref(basis_[i]);
      double xi = xb_[i];
      bool below = xi < v.lower - opts.feas_tol;
      bool above = xi > v.upper + opts.feas_tol;
      double limit = kInf;
      bool hits_upper = false;
      if (below) {
        // Violating from below: blocks only when rising to its lower bound.
        if (rate > 0.0) {
          limit = (v.lower - xi) / rate;
          hits_upper = false;
        }
      } else if (above) {
        if (rate < 0.0) {
          limit = (v.upper - xi) / rate;
          hits_upper = true;
        }
      } else if (rate > 0.0) {
        if (std::isfinite(v.upper)) {
          limit = (v.upper - xi) / rate;
          hits_upper = true;
        }
      } else {
        if (std::isfinite(v.lower)) {
          limit = (v.lower - xi) / rate;
          hits_upper = false;
        }
      }
      if (!std::isfinite(limit)) continue;
      limit = std::max(0.0, limit);
      bool better = limit < best_t - 1e-12;
      if (!better && limit < best_t + 1e-12 && leave_pos >= 0) {
        // Tie: prefer the numerically larger pivot; under Bland's rule the
        // lowest ordinal wins instead.
        better = bland ? ordinal(basis_[i]) < ordinal(basis_[leave_pos])
                       : std::abs(w[i]) > leave_abs_w;
      }
      if (better) {
        best_t = limit;
        leave_pos = i;
        leave_at_upper = hits_upper;
        leave_abs_w = std::abs(w[i]);
      }
    }

    double flip_range = evar.upper - evar.lower;  // may be +inf
    double t = std::min(best_t, flip_range);
    if (!std::isfinite(t)) {
      if (phase1)
        throw internal_error("unbounded infeasibility repair in simplex");
      return LpStatus::Unbounded;
    }

    degenerate_streak = t <= kDegenStep ? degenerate_streak + 1 : 0;

    // Move the basics along the direction.
    for (int i = 0; i < rows_; ++i) {
      if (std::abs(w[i]) <= kDropTol) continue;
      xb_[i] += -sign * w[i] * t;
    }

    if (flip_range <= best_t) {
      // Bound flip: the entering variable crosses to its other bound.
      VarRef& v = ref(entering);
      v.state = v.state == State::AtLower ? State::AtUpper : State::AtLower;
      v.value = nonbasic_value(v);
      continue;
    }

    // Pivot: entering becomes basic at its new value, the blocker leaves.
    double enter_value = nonbasic_value(evar) + sign * t;
    VarRef& leaving = ref(basis_[leave_pos]);
    leaving.state = leave_at_upper ? State::AtUpper : State::AtLower;
    leaving.value = leave_at_upper ? leaving.upper : leaving.lower;

    VarRef& enter_ref = ref(entering);
    enter_ref.state = State::Basic;
    basis_[leave_pos] = entering;
    xb_[leave_pos] = enter_value;

    // Eta update of the basis inverse.
    double pivot = w[leave_pos];
    if (std::abs(pivot) < kDropTol)
      throw internal_error("vanishing pivot in simplex eta update");
    double* prow = &binv_[static_cast<size_t>(leave_pos) * rows_];
    for (int j = 0; j < rows_; ++j) prow[j] /= pivot;
    for (int i = 0; i < rows_; ++i) {
      if (i == leave_pos || std::abs(w[i]) <= kDropTol) continue;
      double factor = w[i];
      double* row = &binv_[static_cast<size_t>(i) * rows_];
      for (int j = 0; j < rows_; ++j) row[j] -= factor * prow[j];
    }

    if (++pivots_since_refactor >= opts.refactor_interval) {
      refactorize();
      pivots_since_refactor = 0;
    }
  }
  return LpStatus::IterationLimit;
}

double DenseSimplex::objective_value() const { return objective_; }

double DenseSimplex::primal_value(int var) const {
  if (var < 0 || var >= num_variables()) throw argument_error("bad variable id");
  const VarRef& v = svars_[var];
  return v.state == State::Basic ? v.value : nonbasic_value(v);
}

std::vector<double> DenseSimplex::primal_values() const {
  std::vector<double> out(num_variables());
  for (int v = 0; v < num_variables(); ++v) out[v] = primal_value(v);
  return out;
}

std::vector<double> DenseSimplex::row_duals() const { return duals_; }

}  // namespace modcg
