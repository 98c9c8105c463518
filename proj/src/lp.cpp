// Copyright 2026 The convexcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "convexcomp/lp.hpp"

#include <algorithm>

#include "convexcomp/errors.hpp"

namespace convexcomp {

namespace {

// Standard form for the two-phase simplex:
//   minimize over z >= 0 with rows  A z = b, b >= 0.
// Columns are laid out as [structural | slack | artificial]. Free variables
// are split into a (+) and a (-) column; rows are sign-normalized.
struct Standard {
  std::size_t m = 0;
  std::size_t n_struct = 0;
  std::size_t n_slack = 0;
  std::size_t n_eq = 0;
  std::vector<std::pair<std::size_t, int>> col_var;  // structural column -> (var, sign)
  std::vector<int> row_sign;                         // per-row normalization sigma_i
  std::vector<RVec> a;                               // m rows, n_struct+n_slack+m cols
  RVec b;                                            // >= 0
};

std::size_t total_cols(const Standard& s) { return s.n_struct + s.n_slack + s.m; }

void check_problem(const LpProblem& p) {
  if (!p.objective.empty() && p.objective.size() != p.num_vars)
    throw DimensionMismatch("lp: objective dimension does not match num_vars");
  for (const auto& [a, b] : p.eq_constraints)
    if (a.size() != p.num_vars) throw DimensionMismatch("lp: equality row dimension mismatch");
  for (const auto& [a, b] : p.ineq_constraints)
    if (a.size() != p.num_vars) throw DimensionMismatch("lp: inequality row dimension mismatch");
  for (std::size_t j : p.nonneg_vars)
    if (j >= p.num_vars) throw DimensionMismatch("lp: nonneg index out of range");
}

Standard standardize(const LpProblem& p) {
  Standard s;
  s.n_eq = p.eq_constraints.size();
  s.m = p.eq_constraints.size() + p.ineq_constraints.size();
  for (std::size_t v = 0; v < p.num_vars; ++v) {
    s.col_var.emplace_back(v, +1);
    if (!p.nonneg_vars.count(v)) s.col_var.emplace_back(v, -1);
  }
  s.n_struct = s.col_var.size();
  s.n_slack = p.ineq_constraints.size();
  s.row_sign.assign(s.m, +1);
  s.a.assign(s.m, RVec(total_cols(s), Rat(0)));
  s.b.assign(s.m, Rat(0));

  for (std::size_t i = 0; i < s.m; ++i) {
    const bool is_eq = i < s.n_eq;
    const auto& [row, rhs] =
        is_eq ? p.eq_constraints[i] : p.ineq_constraints[i - s.n_eq];
    const int sigma = rhs < 0 ? -1 : +1;
    s.row_sign[i] = sigma;
    for (std::size_t j = 0; j < s.n_struct; ++j) {
      const auto& [v, sgn] = s.col_var[j];
      s.a[i][j] = Rat(sigma * sgn) * row[v];
    }
    if (!is_eq) s.a[i][s.n_struct + (i - s.n_eq)] = sigma;
    s.a[i][s.n_struct + s.n_slack + i] = 1;  // artificial
    s.b[i] = Rat(sigma) * rhs;
  }
  return s;
}

struct Tableau {
  std::vector<RVec> t;              // m rows, cols+1 entries (last = rhs)
  std::vector<std::size_t> basis;   // m entries
  std::size_t cols = 0;
};

void pivot(Tableau& tb, std::size_t row, std::size_t col) {
  RVec& pr = tb.t[row];
  const Rat inv = Rat(1) / pr[col];
  for (Rat& e : pr) e *= inv;
  for (std::size_t i = 0; i < tb.t.size(); ++i) {
    if (i == row) continue;
    const Rat f = tb.t[i][col];
    if (f == 0) continue;
    for (std::size_t j = 0; j <= tb.cols; ++j) tb.t[i][j] -= f * pr[j];
  }
  tb.basis[row] = col;
}

enum class StepResult { Optimal, Unbounded };

// Bland's rule: entering column is the smallest eligible index; the leaving
// row breaks ratio ties by the smallest basic-variable index. Terminates
// without cycling and is deterministic for identical input.
StepResult simplex_min(Tableau& tb, const RVec& cost, const std::vector<char>& allowed,
                       std::size_t* unbounded_col) {
  const std::size_t m = tb.t.size();
  for (;;) {
    std::size_t enter = tb.cols;
    for (std::size_t j = 0; j < tb.cols; ++j) {
      if (!allowed[j]) continue;
      Rat cbar = cost[j];
      for (std::size_t i = 0; i < m; ++i) {
        if (cost[tb.basis[i]] != 0) cbar -= cost[tb.basis[i]] * tb.t[i][j];
      }
      if (cbar < 0) {
        enter = j;
        break;
      }
    }
    if (enter == tb.cols) return StepResult::Optimal;

    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tb.t[i][enter] <= 0) continue;
      const Rat ratio = tb.t[i][tb.cols] / tb.t[i][enter];
      if (leave == m || ratio < best || (ratio == best && tb.basis[i] < tb.basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) {
      if (unbounded_col) *unbounded_col = enter;
      return StepResult::Unbounded;
    }
    pivot(tb, leave, enter);
  }
}

RVec structural_to_x(const Standard& s, const RVec& z, std::size_t num_vars) {
  RVec x(num_vars, Rat(0));
  for (std::size_t j = 0; j < s.n_struct; ++j) {
    const auto& [v, sgn] = s.col_var[j];
    if (z[j] != 0) x[v] += Rat(sgn) * z[j];
  }
  return x;
}

Rat objective_value(const LpProblem& p, const RVec& x) {
  if (p.objective.empty()) return Rat(0);
  return dot(p.objective, x);
}

}  // namespace

LpOutcome lp_solve(const LpProblem& p) {
  check_problem(p);
  const Standard s = standardize(p);
  const std::size_t ncols = total_cols(s);
  const std::size_t art0 = s.n_struct + s.n_slack;

  Tableau tb;
  tb.cols = ncols;
  tb.t.assign(s.m, RVec(ncols + 1, Rat(0)));
  tb.basis.resize(s.m);
  for (std::size_t i = 0; i < s.m; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) tb.t[i][j] = s.a[i][j];
    tb.t[i][ncols] = s.b[i];
    tb.basis[i] = art0 + i;
  }

  // Phase 1: minimize the artificial sum.
  RVec cost1(ncols, Rat(0));
  for (std::size_t k = 0; k < s.m; ++k) cost1[art0 + k] = 1;
  std::vector<char> all_cols(ncols, 1);
  simplex_min(tb, cost1, all_cols, nullptr);  // bounded below by 0, never unbounded

  Rat phase1_value(0);
  for (std::size_t i = 0; i < s.m; ++i) {
    if (tb.basis[i] >= art0) phase1_value += tb.t[i][ncols];
  }

  LpOutcome out = LpOptimal{};
  if (phase1_value > 0) {
    // Infeasible. Dual multipliers from the final basis: (A_B)^T y = c_B.
    RMat bt(s.m, s.m);
    RVec cb(s.m);
    for (std::size_t k = 0; k < s.m; ++k) {
      for (std::size_t i = 0; i < s.m; ++i) bt.at(k, i) = s.a[i][tb.basis[k]];
      cb[k] = cost1[tb.basis[k]];
    }
    const auto y = solve_linear(bt, cb);
    if (!y) throw InternalError("lp: singular basis while extracting Farkas multipliers");
    RVec farkas(s.m);
    for (std::size_t i = 0; i < s.m; ++i) farkas[i] = -Rat(s.row_sign[i]) * (*y)[i];
    out = LpInfeasible{std::move(farkas)};
  } else {
    // Feasible: pivot artificials out wherever the row still has support.
    for (std::size_t i = 0; i < s.m; ++i) {
      if (tb.basis[i] < art0) continue;
      for (std::size_t j = 0; j < art0; ++j) {
        if (tb.t[i][j] != 0) {
          pivot(tb, i, j);  // rhs is 0 here, feasibility is unaffected
          break;
        }
      }
      // A row with no support over real columns is redundant; its artificial
      // stays basic at zero and can never pivot again.
    }

    RVec cost2(ncols, Rat(0));
    if (!p.objective.empty()) {
      for (std::size_t j = 0; j < s.n_struct; ++j) {
        const auto& [v, sgn] = s.col_var[j];
        cost2[j] = -Rat(sgn) * p.objective[v];
      }
    }
    std::vector<char> real_cols(ncols, 0);
    for (std::size_t j = 0; j < art0; ++j) real_cols[j] = 1;

    std::size_t grow_col = 0;
    if (simplex_min(tb, cost2, real_cols, &grow_col) == StepResult::Unbounded) {
      RVec z(ncols, Rat(0));
      z[grow_col] = 1;
      for (std::size_t i = 0; i < s.m; ++i) z[tb.basis[i]] = -tb.t[i][grow_col];
      out = LpUnbounded{structural_to_x(s, z, p.num_vars)};
    } else {
      RVec z(ncols, Rat(0));
      for (std::size_t i = 0; i < s.m; ++i) z[tb.basis[i]] = tb.t[i][ncols];
      RVec x = structural_to_x(s, z, p.num_vars);
      Rat value = objective_value(p, x);
      out = LpOptimal{std::move(x), std::move(value)};
    }
  }

  if (!verify_outcome(p, out)) throw InternalError("lp: outcome failed certificate verification");
  return out;
}

LpOutcome feasibility(std::size_t num_vars, const std::vector<std::pair<RVec, Rat>>& eqs,
                      const std::vector<std::pair<RVec, Rat>>& ineqs,
                      const std::set<std::size_t>& nonneg) {
  LpProblem p;
  p.num_vars = num_vars;
  p.eq_constraints = eqs;
  p.ineq_constraints = ineqs;
  p.nonneg_vars = nonneg;
  return lp_solve(p);
}

bool verify_outcome(const LpProblem& p, const LpOutcome& o) {
  if (const auto* opt = std::get_if<LpOptimal>(&o)) {
    if (opt->x.size() != p.num_vars) return false;
    for (const auto& [a, b] : p.eq_constraints)
      if (dot(a, opt->x) != b) return false;
    for (const auto& [a, b] : p.ineq_constraints)
      if (dot(a, opt->x) > b) return false;
    for (std::size_t j : p.nonneg_vars)
      if (opt->x[j] < 0) return false;
    Rat v(0);
    if (!p.objective.empty()) v = dot(p.objective, opt->x);
    return v == opt->value;
  }
  if (const auto* inf = std::get_if<LpInfeasible>(&o)) {
    const std::size_t ne = p.eq_constraints.size();
    const std::size_t ni = p.ineq_constraints.size();
    if (inf->farkas.size() != ne + ni) return false;
    for (std::size_t i = 0; i < ni; ++i)
      if (inf->farkas[ne + i] < 0) return false;
    // The nonnegative combination <combo, x> <= beta must contradict the sign
    // constraints: combo >= 0 on nonneg variables, = 0 on free ones, beta < 0.
    RVec combo(p.num_vars, Rat(0));
    Rat beta(0);
    for (std::size_t i = 0; i < ne; ++i) {
      const auto& [a, b] = p.eq_constraints[i];
      for (std::size_t j = 0; j < p.num_vars; ++j) combo[j] += inf->farkas[i] * a[j];
      beta += inf->farkas[i] * b;
    }
    for (std::size_t i = 0; i < ni; ++i) {
      const auto& [a, b] = p.ineq_constraints[i];
      for (std::size_t j = 0; j < p.num_vars; ++j) combo[j] += inf->farkas[ne + i] * a[j];
      beta += inf->farkas[ne + i] * b;
    }
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      if (p.nonneg_vars.count(j)) {
        if (combo[j] < 0) return false;
      } else if (combo[j] != 0) {
        return false;
      }
    }
    return beta < 0;
  }
  const auto& ray = std::get<LpUnbounded>(o).ray;
  if (ray.size() != p.num_vars) return false;
  for (const auto& [a, b] : p.eq_constraints)
    if (dot(a, ray) != 0) return false;
  for (const auto& [a, b] : p.ineq_constraints)
    if (dot(a, ray) > 0) return false;
  for (std::size_t j : p.nonneg_vars)
    if (ray[j] < 0) return false;
  return !p.objective.empty() && dot(p.objective, ray) > 0;
}

}  // namespace convexcomp
