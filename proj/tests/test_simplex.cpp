#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "errors.hpp"
#include "simplex.hpp"

using namespace modcg;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense description of a small LP whose structural variables all have finite
// boxes. Used by the enumeration oracle below.
struct BoxLp {
  bool maximize = true;
  int rows = 0;
  int nvars = 0;
  std::vector<std::vector<double>> a;  // rows x nvars
  std::vector<RowSense> sense;
  std::vector<double> b;
  std::vector<double> cost, lo, hi;  // per structural variable
};

void slack_bounds(RowSense s, double& lo, double& hi) {
  switch (s) {
    case RowSense::LessEqual: lo = 0.0; hi = kInf; break;
    case RowSense::Equal: lo = 0.0; hi = 0.0; break;
    case RowSense::GreaterEqual: lo = -kInf; hi = 0.0; break;
  }
}

// Solve B x = rhs by Gaussian elimination; false if B is singular.
bool dense_solve(std::vector<std::vector<double>> B, std::vector<double> rhs,
                 std::vector<double>& out) {
  int m = static_cast<int>(rhs.size());
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int i = col + 1; i < m; ++i)
      if (std::abs(B[i][col]) > std::abs(B[piv][col])) piv = i;
    if (std::abs(B[piv][col]) < 1e-9) return false;
    std::swap(B[piv], B[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int i = col + 1; i < m; ++i) {
      double f = B[i][col] / B[col][col];
      if (f == 0.0) continue;
      for (int j = col; j < m; ++j) B[i][j] -= f * B[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  out.assign(m, 0.0);
  for (int i = m - 1; i >= 0; --i) {
    double acc = rhs[i];
    for (int j = i + 1; j < m; ++j) acc -= B[i][j] * out[j];
    out[i] = acc / B[i][i];
  }
  return true;
}

// Exhaustive optimum over every basic solution of [A | I] with nonbasic
// variables parked at finite bounds. The structural boxes make the feasible
// region a polytope, so the optimum (when the region is nonempty) is attained
// at one of these points. Returns nullopt when no feasible basic point
// exists, i.e. the LP is infeasible.
std::optional<double> enumerate_box_optimum(const BoxLp& lp) {
  int m = lp.rows, n = lp.nvars, total = n + m;
  auto column = [&](int var) {
    std::vector<double> col(m, 0.0);
    if (var < n)
      for (int i = 0; i < m; ++i) col[i] = lp.a[i][var];
    else
      col[var - n] = 1.0;
    return col;
  };
  auto bounds_of = [&](int var, double& lo, double& hi) {
    if (var < n) {
      lo = lp.lo[var];
      hi = lp.hi[var];
    } else {
      slack_bounds(lp.sense[var - n], lo, hi);
    }
  };

  std::optional<double> best;
  std::vector<int> pick(m);
  for (int i = 0; i < m; ++i) pick[i] = i;
  while (true) {
    // Basis matrix for the current combination.
    std::vector<std::vector<double>> B(m, std::vector<double>(m));
    for (int j = 0; j < m; ++j) {
      auto col = column(pick[j]);
      for (int i = 0; i < m; ++i) B[i][j] = col[i];
    }
    std::vector<bool> basic(total, false);
    for (int v : pick) basic[v] = true;

    // Nonbasic structurals with lo < hi get two parking choices; everything
    // else (fixed structurals, slacks) has exactly one finite bound to use.
    std::vector<int> two_sided;
    for (int v = 0; v < n; ++v)
      if (!basic[v] && lp.lo[v] < lp.hi[v]) two_sided.push_back(v);

    std::vector<double> probe;
    bool singular_checked = false, singular = false;
    for (unsigned mask = 0; mask < (1u << two_sided.size()); ++mask) {
      std::vector<double> value(total, 0.0);
      for (int v = 0; v < total; ++v) {
        if (basic[v]) continue;
        double lo, hi;
        bounds_of(v, lo, hi);
        value[v] = std::isfinite(lo) ? lo : hi;
      }
      for (size_t t = 0; t < two_sided.size(); ++t)
        if (mask & (1u << t)) value[two_sided[t]] = lp.hi[two_sided[t]];

      std::vector<double> rhs = lp.b;
      for (int v = 0; v < total; ++v) {
        if (basic[v] || value[v] == 0.0) continue;
        auto col = column(v);
        for (int i = 0; i < m; ++i) rhs[i] -= col[i] * value[v];
      }
      if (!singular_checked) {
        singular = !dense_solve(B, rhs, probe);
        singular_checked = true;
        if (singular) break;
      } else if (!dense_solve(B, rhs, probe)) {
        break;
      }
      bool feasible = true;
      for (int j = 0; j < m && feasible; ++j) {
        double lo, hi;
        bounds_of(pick[j], lo, hi);
        if (probe[j] < lo - 1e-7 || probe[j] > hi + 1e-7) feasible = false;
      }
      if (!feasible) continue;
      for (int j = 0; j < m; ++j) value[pick[j]] = probe[j];
      double obj = 0.0;
      for (int v = 0; v < n; ++v) obj += lp.cost[v] * value[v];
      if (!best || (lp.maximize ? obj > *best : obj < *best)) best = obj;
    }

    // Next m-combination of {0..total-1}.
    int k = m - 1;
    while (k >= 0 && pick[k] == total - m + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

DenseSimplex build(const BoxLp& lp) {
  DenseSimplex s(lp.maximize ? ObjectiveSense::Maximize : ObjectiveSense::Minimize,
                 lp.rows);
  for (int i = 0; i < lp.rows; ++i) s.set_row(i, lp.sense[i], lp.b[i]);
  for (int v = 0; v < lp.nvars; ++v) {
    std::vector<std::pair<int, double>> col;
    for (int i = 0; i < lp.rows; ++i)
      if (lp.a[i][v] != 0.0) col.emplace_back(i, lp.a[i][v]);
    s.add_variable(lp.cost[v], lp.lo[v], lp.hi[v], col);
  }
  return s;
}

// Lagrangian bound from row duals: for a maximize problem
//   L(y) = y.b + sum_j sup_{x_j in [l_j, u_j]} (c_j - y.a_j) x_j
// is an upper bound on the optimum for ANY y, with equality at optimal basis
// duals; minimize mirrors with inf. Slacks participate with cost zero.
// Returns nullopt when the bound is +inf (maximize) / -inf (minimize),
// allowing a small tolerance on the dual signs.
std::optional<double> lagrangian_bound(const BoxLp& lp,
                                       const std::vector<double>& y) {
  double bound = 0.0;
  for (int i = 0; i < lp.rows; ++i) bound += y[i] * lp.b[i];
  auto term = [&](double rc, double lo, double hi) -> std::optional<double> {
    double flip = lp.maximize ? 1.0 : -1.0;  // reduce to a sup computation
    double r = rc * flip;
    double best;
    if (std::isfinite(lo) && std::isfinite(hi)) {
      best = std::max(r * lo, r * hi);
    } else if (r > 1e-6) {
      if (!std::isfinite(hi)) return std::nullopt;
      best = r * hi;
    } else if (r < -1e-6) {
      if (!std::isfinite(lo)) return std::nullopt;
      best = r * lo;
    } else {
      best = 0.0;  // negligible reduced cost against an infinite bound
    }
    return best * flip;
  };
  for (int v = 0; v < lp.nvars; ++v) {
    double dot = 0.0;
    for (int i = 0; i < lp.rows; ++i) dot += y[i] * lp.a[i][v];
    auto t = term(lp.cost[v] - dot, lp.lo[v], lp.hi[v]);
    if (!t) return std::nullopt;
    bound += *t;
  }
  for (int i = 0; i < lp.rows; ++i) {
    double lo, hi;
    slack_bounds(lp.sense[i], lo, hi);
    auto t = term(0.0 - y[i], lo, hi);
    if (!t) return std::nullopt;
    bound += *t;
  }
  return bound;
}

void check_primal_feasible(const BoxLp& lp, const std::vector<double>& x) {
  for (int v = 0; v < lp.nvars; ++v) {
    CHECK(x[v] >= lp.lo[v] - 1e-7);
    CHECK(x[v] <= lp.hi[v] + 1e-7);
  }
  for (int i = 0; i < lp.rows; ++i) {
    double act = 0.0;
    for (int v = 0; v < lp.nvars; ++v) act += lp.a[i][v] * x[v];
    switch (lp.sense[i]) {
      case RowSense::LessEqual: CHECK(act <= lp.b[i] + 1e-6); break;
      case RowSense::Equal: CHECK(act == doctest::Approx(lp.b[i]).epsilon(1e-6)); break;
      case RowSense::GreaterEqual: CHECK(act >= lp.b[i] - 1e-6); break;
    }
  }
}

}  // namespace

TEST_CASE("two variable maximize reaches the known vertex with exact duals") {
  DenseSimplex s(ObjectiveSense::Maximize, 2);
  s.set_row(0, RowSense::LessEqual, 4.0);
  s.set_row(1, RowSense::LessEqual, 6.0);
  int x = s.add_variable(3.0, 0.0, kInf, {{0, 1.0}, {1, 1.0}});
  int y = s.add_variable(2.0, 0.0, kInf, {{0, 1.0}, {1, 3.0}});
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.objective_value() == doctest::Approx(12.0));
  CHECK(s.primal_value(x) == doctest::Approx(4.0));
  CHECK(s.primal_value(y) == doctest::Approx(0.0));
  auto duals = s.row_duals();
  REQUIRE(duals.size() == 2);
  CHECK(duals[0] == doctest::Approx(3.0));
  CHECK(duals[1] == doctest::Approx(0.0));
}

TEST_CASE("minimize over >= rows goes through infeasibility repair") {
  DenseSimplex s(ObjectiveSense::Minimize, 2);
  s.set_row(0, RowSense::GreaterEqual, 3.0);
  s.set_row(1, RowSense::GreaterEqual, 3.0);
  int x = s.add_variable(1.0, 0.0, kInf, {{0, 1.0}, {1, 2.0}});
  int y = s.add_variable(1.0, 0.0, kInf, {{0, 2.0}, {1, 1.0}});
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.objective_value() == doctest::Approx(2.0));
  CHECK(s.primal_value(x) == doctest::Approx(1.0));
  CHECK(s.primal_value(y) == doctest::Approx(1.0));
  auto duals = s.row_duals();
  CHECK(duals[0] == doctest::Approx(1.0 / 3.0));
  CHECK(duals[1] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("bound flips park a variable at its upper bound") {
  DenseSimplex s(ObjectiveSense::Maximize, 1);
  s.set_row(0, RowSense::LessEqual, 2.5);
  int x = s.add_variable(1.0, 0.0, 1.0, {{0, 1.0}});
  int y = s.add_variable(1.0, 0.0, 2.0, {{0, 1.0}});
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.objective_value() == doctest::Approx(2.5));
  CHECK(s.primal_value(x) == doctest::Approx(1.0));
  CHECK(s.primal_value(y) == doctest::Approx(1.5));

  // Flip the profit sign on x: it must come back off its upper bound.
  s.set_cost(x, -1.0);
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.objective_value() == doctest::Approx(2.0));
  CHECK(s.primal_value(x) == doctest::Approx(0.0));
  CHECK(s.primal_value(y) == doctest::Approx(2.0));
}

TEST_CASE("equality rows force a phase one start from the slack basis") {
  DenseSimplex s(ObjectiveSense::Maximize, 1);
  s.set_row(0, RowSense::Equal, 2.0);
  int x = s.add_variable(1.0, 0.0, 5.0, {{0, 1.0}});
  int y = s.add_variable(0.0, 0.0, 5.0, {{0, 1.0}});
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.objective_value() == doctest::Approx(2.0));
  CHECK(s.primal_value(x) == doctest::Approx(2.0));
  CHECK(s.primal_value(y) == doctest::Approx(0.0));
  CHECK(s.row_duals()[0] == doctest::Approx(1.0));
}

TEST_CASE("infeasible box against an equality row is reported") {
  DenseSimplex s(ObjectiveSense::Maximize, 1);
  s.set_row(0, RowSense::Equal, 5.0);
  s.add_variable(1.0, 0.0, 1.0, {{0, 1.0}});
  s.add_variable(1.0, 0.0, 1.0, {{0, 1.0}});
  CHECK(s.solve() == LpStatus::Infeasible);
}

TEST_CASE("unbounded ray is detected") {
  DenseSimplex s(ObjectiveSense::Maximize, 1);
  s.set_row(0, RowSense::LessEqual, 1.0);
  s.add_variable(1.0, 0.0, kInf, {{0, 1.0}});   // x
  s.add_variable(0.0, 0.0, kInf, {{0, -1.0}});  // y: x - y <= 1, push both up
  CHECK(s.solve() == LpStatus::Unbounded);
}

TEST_CASE("duplicate rows and redundant constraints stay solvable") {
  DenseSimplex s(ObjectiveSense::Maximize, 3);
  for (int i = 0; i < 3; ++i) s.set_row(i, RowSense::LessEqual, 1.0);
  std::vector<std::pair<int, double>> all = {{0, 1.0}, {1, 1.0}, {2, 1.0}};
  int x = s.add_variable(1.0, 0.0, 1.0, all);
  int y = s.add_variable(1.0, 0.0, 1.0, all);
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.objective_value() == doctest::Approx(1.0));
  CHECK(s.primal_value(x) + s.primal_value(y) == doctest::Approx(1.0));
}

TEST_CASE("classic degenerate cycling instance terminates at its optimum") {
  // Beale's cycling example. The optimum 1/20 is certified below by the
  // Lagrangian bound matching the primal objective.
  BoxLp lp;
  lp.maximize = true;
  lp.rows = 3;
  lp.nvars = 4;
  lp.a = {{0.25, -60.0, -1.0 / 25.0, 9.0},
          {0.5, -90.0, -1.0 / 50.0, 3.0},
          {0.0, 0.0, 1.0, 0.0}};
  lp.sense = {RowSense::LessEqual, RowSense::LessEqual, RowSense::LessEqual};
  lp.b = {0.0, 0.0, 1.0};
  lp.cost = {0.75, -150.0, 1.0 / 50.0, -6.0};
  lp.lo = {0.0, 0.0, 0.0, 0.0};
  lp.hi = {kInf, kInf, kInf, kInf};
  DenseSimplex s = build(lp);
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.objective_value() == doctest::Approx(0.05));
  auto bound = lagrangian_bound(lp, s.row_duals());
  REQUIRE(bound.has_value());
  CHECK(*bound == doctest::Approx(0.05));
  check_primal_feasible(lp, s.primal_values());
}

TEST_CASE("identity starting basis solves a covering master in few pivots") {
  DenseSimplex s(ObjectiveSense::Maximize, 3);
  for (int i = 0; i < 3; ++i) s.set_row(i, RowSense::Equal, 1.0);
  std::vector<double> costs = {2.0, 3.0, 1.0};
  std::vector<int> singles;
  for (int i = 0; i < 3; ++i)
    singles.push_back(s.add_variable(costs[i], 0.0, kInf, {{i, 1.0}}));
  s.set_initial_basis(singles);
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.iterations_used() <= 5);
  CHECK(s.objective_value() == doctest::Approx(6.0));
  auto duals = s.row_duals();
  for (int i = 0; i < 3; ++i) CHECK(duals[i] == doctest::Approx(costs[i]));

  // Warm continuation after adding a strictly better combined column.
  int pair01 = s.add_variable(6.0, 0.0, kInf, {{0, 1.0}, {1, 1.0}});
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.iterations_used() <= 10);
  CHECK(s.objective_value() == doctest::Approx(7.0));
  CHECK(s.primal_value(pair01) == doctest::Approx(1.0));
  CHECK(s.primal_value(singles[2]) == doctest::Approx(1.0));
}

TEST_CASE("warm restart after fixing a variable by bounds") {
  DenseSimplex s(ObjectiveSense::Maximize, 1);
  s.set_row(0, RowSense::LessEqual, 3.0);
  int x = s.add_variable(2.0, 0.0, 2.0, {{0, 1.0}});
  int y = s.add_variable(1.0, 0.0, 3.0, {{0, 1.0}});
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.objective_value() == doctest::Approx(5.0));

  s.set_bounds(x, 0.0, 0.0);  // branch: x forced out
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.objective_value() == doctest::Approx(3.0));
  CHECK(s.primal_value(x) == doctest::Approx(0.0));
  CHECK(s.primal_value(y) == doctest::Approx(3.0));

  s.set_bounds(x, 2.0, 2.0);  // branch: x forced in
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.objective_value() == doctest::Approx(5.0));
  CHECK(s.primal_value(x) == doctest::Approx(2.0));
  CHECK(s.primal_value(y) == doctest::Approx(1.0));
}

TEST_CASE("iteration cap reports a limit and the solve can continue") {
  DenseSimplex s(ObjectiveSense::Minimize, 2);
  s.set_row(0, RowSense::GreaterEqual, 3.0);
  s.set_row(1, RowSense::GreaterEqual, 3.0);
  s.add_variable(1.0, 0.0, kInf, {{0, 1.0}, {1, 2.0}});
  s.add_variable(1.0, 0.0, kInf, {{0, 2.0}, {1, 1.0}});
  SimplexOptions tight;
  tight.max_iterations = 1;
  CHECK(s.solve(tight) == LpStatus::IterationLimit);
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.objective_value() == doctest::Approx(2.0));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(DenseSimplex(ObjectiveSense::Maximize, 0), argument_error);
  DenseSimplex s(ObjectiveSense::Maximize, 2);
  CHECK_THROWS_AS(s.set_row(2, RowSense::Equal, 0.0), argument_error);
  CHECK_THROWS_AS(s.add_variable(0.0, 1.0, 0.0, {}), argument_error);
  CHECK_THROWS_AS(s.add_variable(0.0, -kInf, kInf, {}), argument_error);
  CHECK_THROWS_AS(s.add_variable(0.0, 0.0, 1.0, {{5, 1.0}}), argument_error);
  int v = s.add_variable(0.0, 0.0, 1.0, {{0, 1.0}});
  CHECK_THROWS_AS(s.set_bounds(v, 2.0, 1.0), argument_error);
  CHECK_THROWS_AS(s.set_cost(7, 1.0), argument_error);
  CHECK_THROWS_AS(s.set_initial_basis({v}), argument_error);  // wrong size
  CHECK_THROWS_AS(s.set_initial_basis({v, 9}), argument_error);
}

TEST_CASE("a repeated-row column is summed into one coefficient") {
  DenseSimplex s(ObjectiveSense::Maximize, 1);
  s.set_row(0, RowSense::LessEqual, 4.0);
  int x = s.add_variable(1.0, 0.0, kInf, {{0, 1.0}, {0, 1.0}});  // acts as 2x
  REQUIRE(s.solve() == LpStatus::Optimal);
  CHECK(s.primal_value(x) == doctest::Approx(2.0));
  CHECK(s.objective_value() == doctest::Approx(2.0));
}

TEST_CASE("random boxed instances match the exhaustive vertex oracle") {
  std::mt19937 rng(20240817u);
  auto ri = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  int optimal_seen = 0, infeasible_seen = 0;
  for (int trial = 0; trial < 80; ++trial) {
    BoxLp lp;
    lp.maximize = ri(0, 1) == 1;
    lp.rows = ri(2, 4);
    lp.nvars = ri(2, 6);
    lp.a.assign(lp.rows, std::vector<double>(lp.nvars, 0.0));
    for (auto& row : lp.a)
      for (double& c : row)
        if (ri(0, 99) < 65) c = ri(-3, 3);
    for (int i = 0; i < lp.rows; ++i) {
      int kind = ri(0, 2);
      lp.sense.push_back(kind == 0 ? RowSense::LessEqual
                         : kind == 1 ? RowSense::Equal
                                     : RowSense::GreaterEqual);
      lp.b.push_back(ri(-4, 8));
    }
    for (int v = 0; v < lp.nvars; ++v) {
      lp.cost.push_back(ri(-5, 5));
      int lo = ri(-2, 0), hi = ri(0, 3);
      lp.lo.push_back(lo);
      lp.hi.push_back(std::max(lo, hi));
    }

    auto expect = enumerate_box_optimum(lp);
    DenseSimplex s = build(lp);
    LpStatus status = s.solve();
    INFO("trial ", trial);
    if (!expect) {
      CHECK(status == LpStatus::Infeasible);
      ++infeasible_seen;
      continue;
    }
    REQUIRE(status == LpStatus::Optimal);
    ++optimal_seen;
    CHECK(std::abs(s.objective_value() - *expect) <= 1e-6);

    auto x = s.primal_values();
    check_primal_feasible(lp, x);
    double recomputed = 0.0;
    for (int v = 0; v < lp.nvars; ++v) recomputed += lp.cost[v] * x[v];
    CHECK(std::abs(recomputed - s.objective_value()) <= 1e-9);

    auto bound = lagrangian_bound(lp, s.row_duals());
    REQUIRE(bound.has_value());
    if (lp.maximize)
      CHECK(*bound >= s.objective_value() - 1e-6);
    else
      CHECK(*bound <= s.objective_value() + 1e-6);
    CHECK(std::abs(*bound - s.objective_value()) <= 1e-6);
  }
  // The generator must exercise both outcomes.
  CHECK(optimal_seen >= 20);
  CHECK(infeasible_seen >= 5);
}
