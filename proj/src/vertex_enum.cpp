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

#include <algorithm>
#include <set>
#include <string>

#include "convexcomp/errors.hpp"
#include "convexcomp/lp.hpp"

namespace convexcomp {

namespace {

// Boundedness pre-check: every coordinate must attain a finite maximum and
// minimum. Returns false when the polyhedron is empty.
bool check_bounded_nonempty(const HRep& h) {
  LpProblem base;
  base.num_vars = h.dim;
  base.eq_constraints = h.equalities;
  for (const auto& [a, b] : h.inequalities) {
    base.ineq_constraints.emplace_back(vscale(Rat(-1), a), -b);  // <a,x> >= b  ->  <-a,x> <= -b
  }
  for (std::size_t i = 0; i < h.dim; ++i) {
    for (int sign : {+1, -1}) {
      LpProblem p = base;
      p.objective = zero_vec(h.dim);
      p.objective[i] = sign;
      const LpOutcome out = lp_solve(p);
      if (std::holds_alternative<LpInfeasible>(out)) return false;
      if (std::holds_alternative<LpUnbounded>(out))
        throw UnboundedPolyhedronError("vertex_enumerate: coordinate " + std::to_string(i) +
                                       " is unbounded");
    }
  }
  return true;
}

}  // namespace

std::vector<RVec> vertex_enumerate(const HRep& h) {
  if (h.dim == 0) throw DomainError("vertex_enumerate: dimension must be >= 1");
  for (const auto& [a, b] : h.equalities)
    if (a.size() != h.dim) throw DimensionMismatch("vertex_enumerate: equality row dimension");
  for (const auto& [a, b] : h.inequalities)
    if (a.size() != h.dim) throw DimensionMismatch("vertex_enumerate: inequality row dimension");

  if (!check_bounded_nonempty(h)) return {};

  // Homogenize: x in P  <->  the ray through (x, 1). Row (a, -b) encodes
  // <a,x> >= b*t; equalities contribute both signs; the final row keeps t >= 0.
  const std::size_t d = h.dim + 1;
  std::vector<RVec> rows;
  for (const auto& [a, b] : h.equalities) {
    RVec r = a;
    r.push_back(-b);
    rows.push_back(r);
    rows.push_back(vscale(Rat(-1), r));
  }
  for (const auto& [a, b] : h.inequalities) {
    RVec r = a;
    r.push_back(-b);
    rows.push_back(std::move(r));
  }
  rows.push_back(unit_vec(d, d - 1));

  // Initial simplicial cone from the first d linearly independent rows; its
  // extreme rays are the columns of the inverse row matrix. A bounded
  // nonempty polyhedron always yields a pointed homogenized cone, so d
  // independent rows exist.
  std::vector<std::size_t> init_idx;
  std::vector<RVec> init_rows;
  for (std::size_t k = 0; k < rows.size() && init_rows.size() < d; ++k) {
    init_rows.push_back(rows[k]);
    if (span_dim(init_rows) == init_rows.size()) {
      init_idx.push_back(k);
    } else {
      init_rows.pop_back();
    }
  }
  if (init_rows.size() < d)
    throw InternalError("vertex_enumerate: homogenized cone is not pointed");

  const RMat init_mat = RMat::from_rows(init_rows, d);
  std::vector<RVec> rays;
  std::vector<RVec> processed = init_rows;
  for (std::size_t j = 0; j < d; ++j) {
    const auto col = solve_linear(init_mat, unit_vec(d, j));
    if (!col) throw InternalError("vertex_enumerate: singular initial row basis");
    rays.push_back(canonical_ray(*col));
  }

  auto tight_rows = [&](const RVec& ray) {
    std::vector<std::size_t> t;
    for (std::size_t k = 0; k < processed.size(); ++k)
      if (dot(processed[k], ray) == 0) t.push_back(k);
    return t;
  };

  // Insert the remaining rows in order (Fukuda-Prodon step with the
  // rank-based adjacency test on common tight rows).
  std::set<std::size_t> skip(init_idx.begin(), init_idx.end());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (skip.count(k)) continue;
    const RVec& c = rows[k];
    if (is_zero(c)) continue;

    std::vector<Rat> vals(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      vals[r] = dot(c, rays[r]);
      if (vals[r] > 0) pos.push_back(r);
      if (vals[r] < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      processed.push_back(c);
      continue;
    }

    std::vector<std::vector<std::size_t>> tights(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) tights[r] = tight_rows(rays[r]);

    std::vector<RVec> next;
    std::set<std::string> seen;
    auto push_ray = [&](const RVec& r) {
      RVec cr = canonical_ray(r);
      std::string key = vec_to_string(cr);
      if (seen.insert(std::move(key)).second) next.push_back(std::move(cr));
    };
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (vals[r] >= 0) push_ray(rays[r]);
    }
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        std::vector<std::size_t> common;
        std::set_intersection(tights[p].begin(), tights[p].end(), tights[n].begin(),
                              tights[n].end(), std::back_inserter(common));
        std::vector<RVec> common_rows;
        common_rows.reserve(common.size());
        for (std::size_t idx : common) common_rows.push_back(processed[idx]);
        if (span_dim(common_rows) != d - 2) continue;  // not adjacent
        push_ray(vsub(vscale(vals[p], rays[n]), vscale(vals[n], rays[p])));
      }
    }
    rays = std::move(next);
    processed.push_back(c);
  }

  // Dehomogenize. Bounded polytopes admit no recession directions.
  std::vector<RVec> vertices;
  std::set<std::string> seen;
  for (const RVec& r : rays) {
    const Rat& t = r[d - 1];
    if (t == 0)
      throw InternalError("vertex_enumerate: recession ray found for a bounded polyhedron");
    RVec v(h.dim);
    for (std::size_t j = 0; j < h.dim; ++j) v[j] = r[j] / t;
    if (seen.insert(vec_to_string(v)).second) vertices.push_back(std::move(v));
  }
  std::sort(vertices.begin(), vertices.end(), lex_string_less);
  return vertices;
}

}  // namespace convexcomp
