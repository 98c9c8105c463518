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

#include "convexcomp/composition.hpp"

#include <string>

#include "convexcomp/errors.hpp"

namespace convexcomp {

namespace {

void require_parties(const std::vector<StateSpace>& parties) {
  if (parties.empty()) throw DomainError("composite: party list is empty");
}

std::string joined_label(const std::vector<StateSpace>& parties, const char* sep) {
  std::string label = parties[0].label();
  for (std::size_t j = 1; j < parties.size(); ++j) label += sep + parties[j].label();
  return label;
}

void require_tensor_mode(const Composite& c, const char* op) {
  if (c.mode == CompositeMode::Juxtaposition)
    throw DomainError(std::string(op) + ": composite must be a tensor mode");
}

std::vector<std::size_t> party_dims(const Composite& c) {
  std::vector<std::size_t> dims;
  dims.reserve(c.parties.size());
  for (const StateSpace& p : c.parties) dims.push_back(p.ambient_dim());
  return dims;
}

void check_factor_dims(const Composite& c, const std::vector<Functional>& factors,
                       const char* op) {
  if (factors.size() != c.parties.size())
    throw DimensionMismatch(std::string(op) + ": expected " + std::to_string(c.parties.size()) +
                            " factors, got " + std::to_string(factors.size()));
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (factors[j].coords.size() != c.parties[j].ambient_dim())
      throw DimensionMismatch(std::string(op) + ": factor " + std::to_string(j) +
                              " has dimension " + std::to_string(factors[j].coords.size()) +
                              ", party ambient is " +
                              std::to_string(c.parties[j].ambient_dim()));
  }
}

void check_state_tuple(const Composite& c, const std::vector<RVec>& states, const char* op) {
  if (states.size() != c.parties.size())
    throw DimensionMismatch(std::string(op) + ": expected " + std::to_string(c.parties.size()) +
                            " states, got " + std::to_string(states.size()));
  for (std::size_t j = 0; j < states.size(); ++j) {
    if (!membership(c.parties[j], states[j]))
      throw MembershipError(std::string(op) + ": entry " + std::to_string(j) +
                            " is not a state of party '" + c.parties[j].label() + "'");
  }
}

}  // namespace

std::size_t flat_index(const std::vector<std::size_t>& tuple,
                       const std::vector<std::size_t>& dims) {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) idx = idx * dims[j] + tuple[j];
  return idx;
}

std::vector<std::vector<std::size_t>> index_tuples(const std::vector<std::size_t>& dims) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  std::vector<std::vector<std::size_t>> tuples;
  tuples.reserve(total);
  std::vector<std::size_t> cur(dims.size(), 0);
  for (std::size_t t = 0; t < total; ++t) {
    tuples.push_back(cur);
    for (std::size_t j = dims.size(); j-- > 0;) {
      if (++cur[j] < dims[j]) break;
      cur[j] = 0;
    }
  }
  return tuples;
}

Composite juxtapose(std::vector<StateSpace> parties) {
  require_parties(parties);
  const std::size_t n = parties.size();
  std::size_t dim = 0;
  for (const StateSpace& p : parties) dim += p.ambient_dim();

  // Generators: block concatenations of party generator tuples; the embedded
  // tuple keeps each party state in its own block. The unit is the 1/n-scaled
  // concatenation of party units so embedded tuples normalize to 1.
  std::vector<std::size_t> counts;
  for (const StateSpace& p : parties) counts.push_back(p.generators().size());
  std::vector<RVec> gens;
  for (const auto& tuple : index_tuples(counts)) {
    RVec g;
    g.reserve(dim);
    for (std::size_t j = 0; j < n; ++j) {
      const RVec& pg = parties[j].generators()[tuple[j]];
      g.insert(g.end(), pg.begin(), pg.end());
    }
    gens.push_back(std::move(g));
  }
  RVec unit;
  unit.reserve(dim);
  const Rat inv_n = Rat(1) / Rat(Int(n));
  for (const StateSpace& p : parties) {
    for (const Rat& e : p.unit_effect()) unit.push_back(inv_n * e);
  }

  Composite c;
  c.mode = CompositeMode::Juxtaposition;
  // The direct sum is not linearly spanned by tuples of normalized states, so
  // the realization skips the spanning check.
  c.realization =
      StateSpace::unchecked_span(joined_label(parties, "|"), std::move(gens), std::move(unit));
  c.parties = std::move(parties);
  return c;
}

Composite min_tensor(std::vector<StateSpace> parties) {
  require_parties(parties);
  std::vector<std::size_t> counts;
  for (const StateSpace& p : parties) counts.push_back(p.generators().size());
  std::vector<RVec> gens;
  for (const auto& tuple : index_tuples(counts)) {
    std::vector<RVec> factors;
    factors.reserve(parties.size());
    for (std::size_t j = 0; j < parties.size(); ++j)
      factors.push_back(parties[j].generators()[tuple[j]]);
    gens.push_back(kron_all(factors));
  }
  std::vector<RVec> units;
  for (const StateSpace& p : parties) units.push_back(p.unit_effect());

  Composite c;
  c.mode = CompositeMode::MinTensor;
  c.realization = StateSpace(joined_label(parties, "*"), std::move(gens), kron_all(units));
  c.parties = std::move(parties);
  return c;
}

Composite max_tensor(std::vector<StateSpace> parties) {
  require_parties(parties);
  std::vector<RVec> units;
  for (const StateSpace& p : parties) units.push_back(p.unit_effect());
  std::size_t dim = 1;
  for (const StateSpace& p : parties) dim *= p.ambient_dim();

  std::vector<std::vector<Functional>> rays;
  std::vector<std::size_t> counts;
  for (const StateSpace& p : parties) {
    rays.push_back(effect_cone_rays(p));
    counts.push_back(rays.back().size());
  }

  HRep h;
  h.dim = dim;
  h.equalities.emplace_back(kron_all(units), Rat(1));
  for (const auto& tuple : index_tuples(counts)) {
    std::vector<RVec> factors;
    factors.reserve(parties.size());
    for (std::size_t j = 0; j < parties.size(); ++j)
      factors.push_back(rays[j][tuple[j]].coords);
    h.inequalities.emplace_back(kron_all(factors), Rat(0));
  }

  Composite c;
  c.mode = CompositeMode::MaxTensor;
  c.hrep = std::move(h);
  c.parties = std::move(parties);
  return c;
}

Composite with_vertex_realization(Composite c) {
  if (c.mode != CompositeMode::MaxTensor || c.realization) return c;
  const std::vector<RVec> vertices = vertex_enumerate(*c.hrep);
  std::vector<RVec> units;
  for (const StateSpace& p : c.parties) units.push_back(p.unit_effect());
  c.realization =
      StateSpace(joined_label(c.parties, "*"), vertices, kron_all(units));
  return c;
}

std::size_t composite_ambient_dim(const Composite& c) {
  if (c.mode == CompositeMode::Juxtaposition) {
    std::size_t dim = 0;
    for (const StateSpace& p : c.parties) dim += p.ambient_dim();
    return dim;
  }
  std::size_t dim = 1;
  for (const StateSpace& p : c.parties) dim *= p.ambient_dim();
  return dim;
}

RVec composite_unit(const Composite& c) {
  if (c.mode == CompositeMode::Juxtaposition) return c.realization->unit_effect();
  std::vector<RVec> units;
  for (const StateSpace& p : c.parties) units.push_back(p.unit_effect());
  return kron_all(units);
}

RVec product_embed(const Composite& c, const std::vector<RVec>& states) {
  require_tensor_mode(c, "product_embed");
  check_state_tuple(c, states, "product_embed");
  return kron_all(states);
}

RVec juxt_embed(const Composite& c, const std::vector<RVec>& states) {
  if (c.mode != CompositeMode::Juxtaposition)
    throw DomainError("juxt_embed: composite must be a juxtaposition");
  check_state_tuple(c, states, "juxt_embed");
  RVec out;
  out.reserve(composite_ambient_dim(c));
  for (const RVec& s : states) out.insert(out.end(), s.begin(), s.end());
  return out;
}

Functional juxt_functional(const Composite& c, const std::vector<Functional>& factors) {
  if (c.mode != CompositeMode::Juxtaposition)
    throw DomainError("juxt_functional: composite must be a juxtaposition");
  check_factor_dims(c, factors, "juxt_functional");
  RVec coords;
  coords.reserve(composite_ambient_dim(c));
  for (const Functional& f : factors) coords.insert(coords.end(), f.coords.begin(), f.coords.end());
  return {c.realization->label(), std::move(coords)};
}

SimpleFunctional simple_functional(const Composite& c, const std::vector<Functional>& factors) {
  require_tensor_mode(c, "simple_functional");
  check_factor_dims(c, factors, "simple_functional");
  std::vector<RVec> coords;
  coords.reserve(factors.size());
  for (const Functional& f : factors) coords.push_back(f.coords);
  return {factors, {joined_label(c.parties, "*"), kron_all(coords)}};
}

std::size_t simple_span_dim(const Composite& c) {
  require_tensor_mode(c, "simple_span_dim");
  std::vector<std::vector<Functional>> bases;
  std::vector<std::size_t> dims = party_dims(c);
  for (const StateSpace& p : c.parties) bases.push_back(dual_basis(p));
  std::vector<RVec> rows;
  for (const auto& tuple : index_tuples(dims)) {
    std::vector<RVec> factors;
    for (std::size_t j = 0; j < dims.size(); ++j) factors.push_back(bases[j][tuple[j]].coords);
    rows.push_back(kron_all(factors));
  }
  return span_dim(rows);
}

RMat universal_factorization(const Composite& c, const std::vector<RVec>& phi,
                             const std::vector<std::vector<Functional>>& probes) {
  require_tensor_mode(c, "universal_factorization");
  const std::vector<std::size_t> dims = party_dims(c);
  const std::size_t total = composite_ambient_dim(c);
  if (phi.size() != total)
    throw DimensionMismatch("universal_factorization: phi must assign one target vector per "
                            "dual-basis tuple (" +
                            std::to_string(total) + ")");
  const std::size_t target_dim = phi.empty() ? 0 : phi[0].size();
  if (target_dim == 0)
    throw DomainError("universal_factorization: target space must have dimension >= 1");
  for (const RVec& v : phi)
    if (v.size() != target_dim)
      throw DimensionMismatch("universal_factorization: ragged phi target vectors");

  // The simple elements built from dual-basis tuples must form a basis; their
  // span is the whole tensor dual when the parties are valid.
  if (simple_span_dim(c) != total)
    throw RankDeficiencyError("universal_factorization: simple basis elements are dependent");

  // In the dual-basis coordinates a basis simple element is a standard basis
  // vector, so the unique extension has phi's vectors as its columns.
  RMat factor(target_dim, total);
  for (std::size_t t = 0; t < total; ++t)
    for (std::size_t r = 0; r < target_dim; ++r) factor.at(r, t) = phi[t][r];

  // Cross-check every probe: the matrix applied to the realized simple
  // coordinates must match the multilinear extension computed tuple by tuple.
  for (const auto& probe : probes) {
    const SimpleFunctional sf = simple_functional(c, probe);
    RVec via_matrix(target_dim, Rat(0));
    for (std::size_t t = 0; t < total; ++t) {
      const Rat& w = sf.realized.coords[t];
      if (w == 0) continue;
      for (std::size_t r = 0; r < target_dim; ++r) via_matrix[r] += w * factor.at(r, t);
    }
    RVec via_extension(target_dim, Rat(0));
    for (const auto& tuple : index_tuples(dims)) {
      Rat coeff(1);
      for (std::size_t j = 0; j < dims.size(); ++j) coeff *= probe[j].coords[tuple[j]];
      if (coeff == 0) continue;
      const RVec& target = phi[flat_index(tuple, dims)];
      for (std::size_t r = 0; r < target_dim; ++r) via_extension[r] += coeff * target[r];
    }
    if (via_matrix != via_extension)
      throw InternalError("universal_factorization: probe disagrees with the multilinear "
                          "extension");
  }
  return factor;
}

}  // namespace convexcomp
