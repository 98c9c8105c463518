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

#include "convexcomp/separability.hpp"

#include <string>

#include "convexcomp/composition.hpp"
#include "convexcomp/errors.hpp"
#include "convexcomp/lp.hpp"

namespace convexcomp {

namespace {

std::vector<std::size_t> generator_counts(const std::vector<StateSpace>& parties) {
  std::vector<std::size_t> counts;
  counts.reserve(parties.size());
  for (const StateSpace& p : parties) counts.push_back(p.generators().size());
  return counts;
}

RVec parties_unit(const std::vector<StateSpace>& parties) {
  std::vector<RVec> units;
  units.reserve(parties.size());
  for (const StateSpace& p : parties) units.push_back(p.unit_effect());
  return kron_all(units);
}

std::size_t tensor_dim(const std::vector<StateSpace>& parties) {
  std::size_t dim = 1;
  for (const StateSpace& p : parties) dim *= p.ambient_dim();
  return dim;
}

std::string tensor_label(const std::vector<StateSpace>& parties) {
  std::string label = parties[0].label();
  for (std::size_t j = 1; j < parties.size(); ++j) label += "*" + parties[j].label();
  return label;
}

void check_state(const std::vector<StateSpace>& parties, const RVec& state) {
  if (parties.empty()) throw DomainError("is_separable: party list is empty");
  if (state.size() != tensor_dim(parties))
    throw DimensionMismatch("is_separable: state has dimension " + std::to_string(state.size()) +
                            ", tensor ambient is " + std::to_string(tensor_dim(parties)));
  if (dot(parties_unit(parties), state) != 1)
    throw NormalizationError("is_separable: state does not normalize to 1 on the product unit");
}

// Exact partial contraction: apply every party's unit effect except party j,
// leaving that party's marginal.
RVec marginal(const std::vector<StateSpace>& parties, const RVec& state, std::size_t pj) {
  std::vector<std::size_t> dims;
  for (const StateSpace& p : parties) dims.push_back(p.ambient_dim());
  RVec out(dims[pj], Rat(0));
  for (const auto& tuple : index_tuples(dims)) {
    Rat coeff(1);
    for (std::size_t j = 0; j < parties.size(); ++j) {
      if (j == pj) continue;
      coeff *= parties[j].unit_effect()[tuple[j]];
      if (coeff == 0) break;
    }
    if (coeff == 0) continue;
    out[tuple[pj]] += coeff * state[flat_index(tuple, dims)];
  }
  return out;
}

// A product of member states decomposes as itself: detect it via marginals.
std::optional<Separable> try_product_fast_path(const std::vector<StateSpace>& parties,
                                               const RVec& state) {
  std::vector<RVec> factors;
  factors.reserve(parties.size());
  for (std::size_t j = 0; j < parties.size(); ++j) {
    RVec mj = marginal(parties, state, j);
    if (!membership(parties[j], mj)) return std::nullopt;
    factors.push_back(std::move(mj));
  }
  if (kron_all(factors) != state) return std::nullopt;
  Separable s;
  s.terms.push_back({Rat(1), std::move(factors)});
  return s;
}

void verify_separable(const std::vector<StateSpace>& parties, const RVec& state,
                      const Separable& s) {
  Rat total(0);
  RVec sum(state.size(), Rat(0));
  for (const SeparableTerm& term : s.terms) {
    if (term.weight <= 0) throw InternalError("separability: nonpositive weight in decomposition");
    total += term.weight;
    if (term.factors.size() != parties.size())
      throw InternalError("separability: term arity mismatch");
    for (std::size_t j = 0; j < parties.size(); ++j) {
      if (!membership(parties[j], term.factors[j]))
        throw InternalError("separability: decomposition factor is not a party state");
    }
    sum = vadd(sum, vscale(term.weight, kron_all(term.factors)));
  }
  if (total != 1) throw InternalError("separability: weights do not sum to 1");
  if (sum != state) throw InternalError("separability: decomposition does not reproduce the state");
}

}  // namespace

SeparabilityVerdict is_separable(const std::vector<StateSpace>& parties, const RVec& state) {
  check_state(parties, state);

  if (auto fast = try_product_fast_path(parties, state)) {
    verify_separable(parties, state, *fast);
    return *fast;
  }

  // Weights over all tuples of party generator indices. Any separable state
  // has such a decomposition (refine each factor into party extreme points),
  // and a basic feasible solution meets the Caratheodory bound.
  const std::vector<std::size_t> counts = generator_counts(parties);
  const auto tuples = index_tuples(counts);
  const std::size_t nvars = tuples.size();
  const std::size_t dim = state.size();

  std::vector<RVec> columns;
  columns.reserve(nvars);
  for (const auto& tuple : tuples) {
    std::vector<RVec> factors;
    factors.reserve(parties.size());
    for (std::size_t j = 0; j < parties.size(); ++j)
      factors.push_back(parties[j].generators()[tuple[j]]);
    columns.push_back(kron_all(factors));
  }

  std::vector<std::pair<RVec, Rat>> eqs;
  eqs.reserve(dim + 1);
  for (std::size_t r = 0; r < dim; ++r) {
    RVec row(nvars);
    for (std::size_t t = 0; t < nvars; ++t) row[t] = columns[t][r];
    eqs.emplace_back(std::move(row), state[r]);
  }
  eqs.emplace_back(RVec(nvars, Rat(1)), Rat(1));

  std::set<std::size_t> nonneg;
  for (std::size_t t = 0; t < nvars; ++t) nonneg.insert(t);

  const LpOutcome out = feasibility(nvars, eqs, {}, nonneg);

  if (const auto* opt = std::get_if<LpOptimal>(&out)) {
    Separable s;
    for (std::size_t t = 0; t < nvars; ++t) {
      if (opt->x[t] == 0) continue;
      std::vector<RVec> factors;
      for (std::size_t j = 0; j < parties.size(); ++j)
        factors.push_back(parties[j].generators()[tuples[t][j]]);
      s.terms.push_back({opt->x[t], std::move(factors)});
    }
    verify_separable(parties, state, s);
    return s;
  }

  const auto& farkas = std::get<LpInfeasible>(out).farkas;
  // Multipliers: dim rows matching the state, then the normalization row.
  // w = y_head + gamma * (product unit) is >= 0 on every product generator
  // and < 0 on the state; rescale so the margin is exactly -1.
  RVec w(dim);
  const Rat& gamma = farkas[dim];
  const RVec unit = parties_unit(parties);
  for (std::size_t r = 0; r < dim; ++r) w[r] = farkas[r] + gamma * unit[r];
  const Rat margin_raw = dot(w, state);
  if (margin_raw >= 0)
    throw InternalError("separability: Farkas witness is not negative on the state");
  w = vscale(Rat(-1) / margin_raw, w);

  Entangled e{{tensor_label(parties), std::move(w)}, Rat(-1)};
  if (!verify_witness(parties, e.witness, state))
    throw InternalError("separability: extracted witness failed verification");
  return e;
}

bool verify_witness(const std::vector<StateSpace>& parties, const Functional& witness,
                    const RVec& state) {
  if (parties.empty()) throw DomainError("verify_witness: party list is empty");
  const std::size_t dim = tensor_dim(parties);
  if (witness.coords.size() != dim || state.size() != dim)
    throw DimensionMismatch("verify_witness: dimension mismatch with the tensor ambient");

  const std::vector<std::size_t> counts = generator_counts(parties);
  for (const auto& tuple : index_tuples(counts)) {
    std::vector<RVec> factors;
    factors.reserve(parties.size());
    for (std::size_t j = 0; j < parties.size(); ++j)
      factors.push_back(parties[j].generators()[tuple[j]]);
    if (dot(witness.coords, kron_all(factors)) < 0) return false;
  }
  return dot(witness.coords, state) < 0;
}

bool separable_hull_equals(const std::vector<StateSpace>& parties,
                           const std::vector<RVec>& candidate_vertices) {
  for (const RVec& v : candidate_vertices) {
    if (std::holds_alternative<Entangled>(is_separable(parties, v))) return false;
  }
  return true;
}

}  // namespace convexcomp
