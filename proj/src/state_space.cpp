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

#include "convexcomp/state_space.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "convexcomp/errors.hpp"
#include "convexcomp/lp.hpp"

namespace convexcomp {

namespace {

void validate_common(const std::string& label, const std::vector<RVec>& generators,
                     const RVec& unit_effect) {
  if (unit_effect.empty()) throw DomainError(label + ": ambient dimension must be >= 1");
  if (generators.empty()) throw DomainError(label + ": generator list is empty");
  const std::size_t d = unit_effect.size();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != d)
      throw DimensionMismatch(label + ": generator " + std::to_string(i) + " has dimension " +
                              std::to_string(generators[i].size()) + ", ambient is " +
                              std::to_string(d));
  }
  if (is_zero(unit_effect)) throw NormalizationError(label + ": unit effect is zero");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Rat v = dot(unit_effect, generators[i]);
    if (v != 1)
      throw NormalizationError(label + ": generator " + std::to_string(i) +
                               " evaluates to " + rat_to_string(v) + " on the unit effect");
  }
}

// Is p in the convex hull of the given points? Exact LP feasibility over the
// hull weights.
bool in_hull(const std::vector<RVec>& points, const RVec& p) {
  if (points.empty()) return false;
  const std::size_t d = p.size();
  const std::size_t m = points.size();
  std::vector<std::pair<RVec, Rat>> eqs;
  for (std::size_t j = 0; j < d; ++j) {
    RVec row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = points[i][j];
    eqs.emplace_back(std::move(row), p[j]);
  }
  eqs.emplace_back(RVec(m, Rat(1)), Rat(1));
  std::set<std::size_t> nonneg;
  for (std::size_t i = 0; i < m; ++i) nonneg.insert(i);
  const LpOutcome out = feasibility(m, eqs, {}, nonneg);
  return std::holds_alternative<LpOptimal>(out);
}

}  // namespace

StateSpace::StateSpace(std::string label, std::vector<RVec> generators, RVec unit_effect) {
  validate_common(label, generators, unit_effect);
  if (span_dim(generators) != unit_effect.size())
    throw DegenerateSpanError(label + ": generators span a " +
                              std::to_string(span_dim(generators)) +
                              "-dimensional subspace of the " +
                              std::to_string(unit_effect.size()) + "-dimensional ambient space");
  label_ = std::move(label);
  generators_ = std::move(generators);
  unit_effect_ = std::move(unit_effect);
}

StateSpace StateSpace::unchecked_span(std::string label, std::vector<RVec> generators,
                                      RVec unit_effect) {
  validate_common(label, generators, unit_effect);
  StateSpace s;
  s.label_ = std::move(label);
  s.generators_ = std::move(generators);
  s.unit_effect_ = std::move(unit_effect);
  return s;
}

StateSpace make_state_space(std::string label, std::vector<RVec> generators, RVec unit_effect) {
  return StateSpace(std::move(label), std::move(generators), std::move(unit_effect));
}

StateSpace classical_simplex(std::size_t n) {
  if (n == 0) throw DomainError("classical_simplex: n must be >= 1");
  std::vector<RVec> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(unit_vec(n, i));
  return StateSpace("simplex(" + std::to_string(n) + ")", std::move(gens), RVec(n, Rat(1)));
}

StateSpace gbit_square() {
  std::vector<RVec> gens = {
      {Rat(1), Rat(1), Rat(1)},
      {Rat(1), Rat(-1), Rat(1)},
      {Rat(-1), Rat(1), Rat(1)},
      {Rat(-1), Rat(-1), Rat(1)},
  };
  return StateSpace("gbit", std::move(gens), {Rat(0), Rat(0), Rat(1)});
}

bool membership(const StateSpace& s, const RVec& p) {
  if (p.size() != s.ambient_dim())
    throw DimensionMismatch(s.label() + ": membership probe has dimension " +
                            std::to_string(p.size()) + ", ambient is " +
                            std::to_string(s.ambient_dim()));
  return in_hull(s.generators(), p);
}

StateSpace remove_redundant_generators(const StateSpace& s) {
  std::vector<RVec> kept = s.generators();
  std::size_t i = 0;
  while (i < kept.size() && kept.size() > 1) {
    std::vector<RVec> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (in_hull(others, kept[i])) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  // The hull is unchanged, so normalization still holds; the span check is
  // skipped because a juxtaposition realization is allowed through here.
  return StateSpace::unchecked_span(s.label(), std::move(kept), s.unit_effect());
}

std::vector<Functional> effect_cone_rays(const StateSpace& s) {
  const std::size_t d = s.ambient_dim();
  const std::size_t m = s.generators().size();
  const std::size_t k = d - 1;
  if (span_dim(s.generators()) != d)
    throw DomainError(s.label() + ": effect_cone_rays requires a spanning generator set");

  std::vector<Functional> rays;
  std::set<std::string> seen;
  auto consider = [&](const RVec& dir) {
    for (const RVec& g : s.generators())
      if (dot(dir, g) < 0) return;
    const RVec canon = canonical_ray(dir);
    if (is_zero(canon)) return;
    if (seen.insert(vec_to_string(canon)).second) rays.push_back({s.label(), canon});
  };

  // Every extreme ray annihilates d-1 linearly independent generators, so it
  // shows up as the 1-dimensional nullspace of some (d-1)-subset.
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  for (;;) {
    std::vector<RVec> rows;
    rows.reserve(k);
    for (std::size_t idx : subset) rows.push_back(s.generators()[idx]);
    const auto ns = nullspace(RMat::from_rows(rows, d));
    if (ns.size() == 1) {
      consider(ns[0]);
      consider(vscale(Rat(-1), ns[0]));
    }
    // next combination in lexicographic order
    std::size_t t = k;
    while (t > 0 && subset[t - 1] == m - k + (t - 1)) --t;
    if (t == 0) break;
    ++subset[t - 1];
    for (std::size_t j = t; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }

  std::sort(rays.begin(), rays.end(),
            [](const Functional& a, const Functional& b) { return lex_string_less(a.coords, b.coords); });
  return rays;
}

}  // namespace convexcomp
