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

#include <variant>
#include <vector>

#include "convexcomp/functional.hpp"
#include "convexcomp/linalg.hpp"
#include "convexcomp/state_space.hpp"

namespace convexcomp {

/// One term of a convex decomposition into product states.
struct SeparableTerm {
  Rat weight;                // > 0, weights sum to 1
  std::vector<RVec> factors; // one state per party
};

/// Explicit decomposition: sum of weight * kron(factors) equals the state.
/// The term count obeys the Caratheodory bound (product of dims, plus one).
struct Separable {
  std::vector<SeparableTerm> terms;
};

/// Witness: nonnegative on every product of party generators, strictly
/// negative on the state. Scaled so margin = evaluate(witness, state) = -1.
struct Entangled {
  Functional witness;
  Rat margin;
};

using SeparabilityVerdict = std::variant<Separable, Entangled>;

/// Decide whether a normalized composite state is a convex combination of
/// product states (exact LP over products of party generators). Both verdict
/// kinds are re-verified before being returned; a verification failure throws
/// InternalError. Throws NormalizationError / DimensionMismatch on bad input.
SeparabilityVerdict is_separable(const std::vector<StateSpace>& parties, const RVec& state);

/// Soundness check for an Entangled verdict, independent of the LP path:
/// true iff the witness is >= 0 on every product of party generators and
/// < 0 on the state.
bool verify_witness(const std::vector<StateSpace>& parties, const Functional& witness,
                    const RVec& state);

/// True iff every candidate is separable (certifies min = max for classical
/// parties when fed the maximal composite's vertices).
bool separable_hull_equals(const std::vector<StateSpace>& parties,
                           const std::vector<RVec>& candidate_vertices);

}  // namespace convexcomp
