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

#include <string>
#include <vector>

#include "convexcomp/linalg.hpp"

namespace convexcomp {

class StateSpace;

/// A linear functional on the ambient space of the party or composite named
/// by `space`, acting by the exact inner product.
struct Functional {
  std::string space;
  RVec coords;
};

/// Exact pairing <f.coords, p>. Throws DimensionMismatch.
Rat evaluate(const Functional& f, const RVec& p);

/// The d coordinate functionals of the ambient dual. Valid as a basis of the
/// full dual because the space's generators span the ambient space.
std::vector<Functional> dual_basis(const StateSpace& s);

/// True iff f is nonnegative on every generator (equivalently, on the whole
/// convex hull).
bool is_nonneg_on(const StateSpace& s, const Functional& f);

}  // namespace convexcomp
