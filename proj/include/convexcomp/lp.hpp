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

#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "convexcomp/linalg.hpp"

namespace convexcomp {

/// maximize <objective, x>
///   s.t. <a, x>  = b  for (a, b) in eq_constraints
///        <a, x> <= b  for (a, b) in ineq_constraints
///        x[j]   >= 0  for j in nonneg_vars (all other variables free)
struct LpProblem {
  std::size_t num_vars = 0;
  RVec objective;  // empty means the zero objective
  std::vector<std::pair<RVec, Rat>> eq_constraints;
  std::vector<std::pair<RVec, Rat>> ineq_constraints;
  std::set<std::size_t> nonneg_vars;
};

struct LpOptimal {
  RVec x;
  Rat value;
};

/// Infeasibility certificate: multipliers on the rows, equality multipliers
/// first then inequality multipliers, laid out in constraint order. The
/// inequality part is nonnegative and the combination <sum_i y_i a_i, x> <= sum_i y_i b_i
/// contradicts x's sign constraints (see verify_outcome).
struct LpInfeasible {
  RVec farkas;
};

/// Feasible direction with positive objective growth.
struct LpUnbounded {
  RVec ray;
};

using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

/// Exact two-phase simplex with Bland's rule: guaranteed termination and a
/// deterministic outcome for identical input. Every returned certificate has
/// already passed verify_outcome; a failure there throws InternalError.
LpOutcome lp_solve(const LpProblem& p);

/// Phase-1 only: lp_solve with the zero objective.
LpOutcome feasibility(std::size_t num_vars, const std::vector<std::pair<RVec, Rat>>& eqs,
                      const std::vector<std::pair<RVec, Rat>>& ineqs,
                      const std::set<std::size_t>& nonneg);

/// Independent certificate check by exact substitution; shares no code with
/// the solver. Optimal: x satisfies every constraint and value = <c, x>.
/// Infeasible: the Farkas combination proves 0 <= negative. Unbounded: the ray
/// preserves feasibility and grows the objective.
bool verify_outcome(const LpProblem& p, const LpOutcome& o);

/// H-representation: <a, x> >= b inequalities plus equalities.
struct HRep {
  std::size_t dim = 0;
  std::vector<std::pair<RVec, Rat>> equalities;
  std::vector<std::pair<RVec, Rat>> inequalities;
};

/// Exact vertex list of a bounded polyhedron via the double-description
/// method, deduplicated and sorted lexicographically by coordinate strings.
/// Boundedness is pre-checked by maximizing/minimizing every coordinate;
/// throws UnboundedPolyhedronError otherwise. An empty polyhedron yields {}.
std::vector<RVec> vertex_enumerate(const HRep& h);

}  // namespace convexcomp
