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

// Test-only oracles, deliberately independent of the code paths they check:
// vertex enumeration by exhaustive basis enumeration (vs. double
// description) and facet enumeration of small hulls (vs. the H-to-V
// direction).

#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "convexcomp/linalg.hpp"
#include "convexcomp/lp.hpp"

namespace convexcomp::oracles {

inline void all_subsets(std::size_t m, std::size_t k,
                        const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > m) return;
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  for (;;) {
    fn(subset);
    std::size_t t = k;
    while (t > 0 && subset[t - 1] == m - k + (t - 1)) --t;
    if (t == 0) break;
    ++subset[t - 1];
    for (std::size_t j = t; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

/// Exhaustive vertex enumeration: a vertex is the unique solution of the
/// equalities plus some tight inequality subset, feasible for everything
/// else. Enumerates all inequality subsets of the complementary size.
inline std::vector<RVec> brute_force_vertices(const HRep& h) {
  std::vector<RVec> eq_rows;
  RVec eq_rhs;
  for (const auto& [a, b] : h.equalities) {
    eq_rows.push_back(a);
    eq_rhs.push_back(b);
  }
  const std::size_t e = span_dim(eq_rows);
  const std::size_t k = h.dim - e;

  std::vector<RVec> found;
  std::set<std::string> seen;
  auto try_subset = [&](const std::vector<std::size_t>& subset) {
    std::vector<RVec> rows = eq_rows;
    RVec rhs = eq_rhs;
    for (std::size_t idx : subset) {
      rows.push_back(h.inequalities[idx].first);
      rhs.push_back(h.inequalities[idx].second);
    }
    if (span_dim(rows) != h.dim) return;
    const auto x = solve_linear(RMat::from_rows(rows, h.dim), rhs);
    if (!x) return;
    for (const auto& [a, b] : h.inequalities)
      if (dot(a, *x) < b) return;
    for (const auto& [a, b] : h.equalities)
      if (dot(a, *x) != b) return;
    if (seen.insert(vec_to_string(*x)).second) found.push_back(*x);
  };
  all_subsets(h.inequalities.size(), k, try_subset);
  std::sort(found.begin(), found.end(), lex_string_less);
  return found;
}

/// Extreme points of a finite point set: p is extreme iff it is not in the
/// hull of the others (exact LP feasibility).
inline std::vector<RVec> extreme_points(const std::vector<RVec>& points) {
  std::vector<RVec> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<RVec> others;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i && points[j] != points[i]) others.push_back(points[j]);
    if (others.empty()) {
      out.push_back(points[i]);
      continue;
    }
    const std::size_t d = points[i].size();
    const std::size_t m = others.size();
    std::vector<std::pair<RVec, Rat>> eqs;
    for (std::size_t r = 0; r < d; ++r) {
      RVec row(m);
      for (std::size_t c = 0; c < m; ++c) row[c] = others[c][r];
      eqs.emplace_back(std::move(row), points[i][r]);
    }
    eqs.emplace_back(RVec(m, Rat(1)), Rat(1));
    std::set<std::size_t> nonneg;
    for (std::size_t c = 0; c < m; ++c) nonneg.insert(c);
    if (std::holds_alternative<LpInfeasible>(feasibility(m, eqs, {}, nonneg)))
      out.push_back(points[i]);
  }
  std::sort(out.begin(), out.end(), lex_string_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Facet enumeration for small full-dimensional hulls (dim 2 or 3): every
/// d-subset of points spanning an affine hyperplane with all points on one
/// side contributes a facet inequality <a, x> >= b.
inline HRep hull_to_hrep(const std::vector<RVec>& points, std::size_t dim) {
  HRep h;
  h.dim = dim;
  std::set<std::string> seen;
  all_subsets(points.size(), dim, [&](const std::vector<std::size_t>& subset) {
    // Hyperplane <a, x> = b through the subset: (a, -b) annihilates (p, 1).
    std::vector<RVec> rows;
    for (std::size_t idx : subset) {
      RVec r = points[idx];
      r.push_back(Rat(1));
      rows.push_back(std::move(r));
    }
    const auto ns = nullspace(RMat::from_rows(rows, dim + 1));
    if (ns.size() != 1) return;
    RVec a(ns[0].begin(), ns[0].end() - 1);
    Rat b = -ns[0].back();
    if (is_zero(a)) return;
    bool any_above = false, any_below = false;
    for (const RVec& p : points) {
      const Rat v = dot(a, p);
      if (v > b) any_above = true;
      if (v < b) any_below = true;
    }
    if (any_above && any_below) return;
    if (any_below) {
      a = vscale(Rat(-1), a);
      b = -b;
    }
    RVec key = a;
    key.push_back(b);
    key = canonical_ray(key);
    if (!seen.insert(vec_to_string(key)).second) return;
    RVec af(key.begin(), key.end() - 1);
    h.inequalities.emplace_back(std::move(af), key.back());
  });
  return h;
}

}  // namespace convexcomp::oracles
