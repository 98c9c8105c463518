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
#include <optional>
#include <vector>

#include "convexcomp/functional.hpp"
#include "convexcomp/linalg.hpp"
#include "convexcomp/lp.hpp"
#include "convexcomp/state_space.hpp"

namespace convexcomp {

enum class CompositeMode { Juxtaposition, MinTensor, MaxTensor };

/// A combination of party state spaces.
///
/// Juxtaposition lives in the direct sum (ambient dim = sum of party dims) and
/// holds tuples of party states; its dual tuples act additively, so it does
/// not compose the parties. The tensor modes live in the tensor ambient
/// (dim = product of party dims): MinTensor is the convex hull of embedded
/// product states (exactly the separable states); MaxTensor is the largest
/// candidate on which every product of party effect-cone rays stays
/// nonnegative, kept as an H-representation with the V-representation filled
/// by vertex enumeration on demand.
struct Composite {
  CompositeMode mode = CompositeMode::MinTensor;
  std::vector<StateSpace> parties;
  std::optional<StateSpace> realization;  // juxt/min: always; max: after enumeration
  std::optional<HRep> hrep;               // max only
};

/// Product of a functional tuple, one factor per party: evaluates to the
/// product of the factor values on every embedded product state.
struct SimpleFunctional {
  std::vector<Functional> factors;
  Functional realized;  // kron of the factor coordinates
};

Composite juxtapose(std::vector<StateSpace> parties);
Composite min_tensor(std::vector<StateSpace> parties);
Composite max_tensor(std::vector<StateSpace> parties);

/// For MaxTensor, runs vertex enumeration and fills `realization`; the other
/// modes are returned unchanged. Pure function.
Composite with_vertex_realization(Composite c);

std::size_t composite_ambient_dim(const Composite& c);

/// Unit effect of the composite: kron of party units (tensor modes) or the
/// 1/n-scaled concatenation (juxtaposition).
RVec composite_unit(const Composite& c);

/// Embed a tuple of party states as a product state (tensor modes): the kron
/// fold, injective on state tuples. Throws MembershipError if some entry is
/// not a state of its party.
RVec product_embed(const Composite& c, const std::vector<RVec>& states);

/// Embed a tuple of party states into a juxtaposition by block concatenation.
RVec juxt_embed(const Composite& c, const std::vector<RVec>& states);

/// The direct-sum dual tuple (f_1 || ... || f_n): on an embedded tuple it
/// evaluates to the SUM of the factor values, and it vanishes on all embedded
/// tuples only when every factor is zero.
Functional juxt_functional(const Composite& c, const std::vector<Functional>& factors);

/// The interdependent product functional: on an embedded product state it
/// evaluates to the PRODUCT of the factor values, so one zero factor makes it
/// vanish everywhere.
SimpleFunctional simple_functional(const Composite& c, const std::vector<Functional>& factors);

/// Dimension of the span of all products of party dual-basis tuples. Equals
/// the product of the party dimensions: the span of simple elements is the
/// whole tensor-product dual.
std::size_t simple_span_dim(const Composite& c);

/// Unique linear map on the span of simple elements agreeing with the
/// multilinear map `phi` on dual-basis tuples; phi is given as one target
/// vector per flattened tuple index. The returned matrix maps realized simple
/// coordinates to the target space. Every probe tuple is checked against the
/// multilinear extension of phi; a mismatch throws InternalError. Throws
/// RankDeficiencyError if the simple basis is linearly dependent.
RMat universal_factorization(const Composite& c, const std::vector<RVec>& phi,
                             const std::vector<std::vector<Functional>>& probes);

/// Flattened index of a tuple of per-party indices (left factor on the slow
/// index, matching kron).
std::size_t flat_index(const std::vector<std::size_t>& tuple,
                       const std::vector<std::size_t>& dims);

/// All index tuples over the given per-party ranges, in flat-index order.
std::vector<std::vector<std::size_t>> index_tuples(const std::vector<std::size_t>& dims);

}  // namespace convexcomp
