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
#include <string>
#include <vector>

#include "convexcomp/functional.hpp"
#include "convexcomp/linalg.hpp"

namespace convexcomp {

/// A single party's convex state space: the convex hull of finitely many
/// generator points in Q^d, together with the unit (normalization) effect u
/// with <u, g> = 1 on every generator. Immutable after construction.
///
/// Validated invariants: every generator normalizes to 1, the generators
/// linearly span the ambient space (so the generated vector space is the
/// ambient space and the dual is the full ambient dual), and u != 0.
class StateSpace {
 public:
  /// Validating constructor. Throws DimensionMismatch, NormalizationError,
  /// DegenerateSpanError, or DomainError (empty generator list).
  StateSpace(std::string label, std::vector<RVec> generators, RVec unit_effect);

  /// Skips the spanning check only. A juxtaposition's realization legitimately
  /// fails to span its direct-sum ambient space; everything else validates.
  static StateSpace unchecked_span(std::string label, std::vector<RVec> generators,
                                   RVec unit_effect);

  const std::string& label() const { return label_; }
  std::size_t ambient_dim() const { return unit_effect_.size(); }
  const std::vector<RVec>& generators() const { return generators_; }
  const RVec& unit_effect() const { return unit_effect_; }

 private:
  StateSpace() = default;

  std::string label_;
  std::vector<RVec> generators_;
  RVec unit_effect_;
};

/// Validated construction (same contract as the StateSpace constructor).
StateSpace make_state_space(std::string label, std::vector<RVec> generators, RVec unit_effect);

/// The n-outcome classical space: standard basis generators, all-ones unit.
/// Throws DomainError on n = 0.
StateSpace classical_simplex(std::size_t n);

/// The square bit: generators (±1, ±1, 1) in Q^3 with unit effect (0, 0, 1).
/// The minimal non-classical party; its composites admit entangled states.
StateSpace gbit_square();

/// True iff p lies in the convex hull of the generators, decided by exact LP
/// feasibility over hull weights. Throws DimensionMismatch.
bool membership(const StateSpace& s, const RVec& p);

/// Same hull with exactly the extreme points as generators. A generator is
/// kept iff it is not in the hull of the others (one LP per generator).
StateSpace remove_redundant_generators(const StateSpace& s);

/// Extreme rays of the nonnegativity cone {f : <f, g> >= 0 for all generators},
/// scaled to coprime integer coordinates. Computed by enumerating (d-1)-subsets
/// of generators and solving for their common annihilator direction.
std::vector<Functional> effect_cone_rays(const StateSpace& s);

}  // namespace convexcomp
