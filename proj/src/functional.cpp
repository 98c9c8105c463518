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

#include "convexcomp/functional.hpp"

#include "convexcomp/errors.hpp"
#include "convexcomp/state_space.hpp"

namespace convexcomp {

Rat evaluate(const Functional& f, const RVec& p) {
  if (f.coords.size() != p.size())
    throw DimensionMismatch("evaluate: functional on '" + f.space + "' has dimension " +
                            std::to_string(f.coords.size()) + ", point has " +
                            std::to_string(p.size()));
  return dot(f.coords, p);
}

std::vector<Functional> dual_basis(const StateSpace& s) {
  std::vector<Functional> basis;
  basis.reserve(s.ambient_dim());
  for (std::size_t i = 0; i < s.ambient_dim(); ++i)
    basis.push_back({s.label(), unit_vec(s.ambient_dim(), i)});
  return basis;
}

bool is_nonneg_on(const StateSpace& s, const Functional& f) {
  if (f.coords.size() != s.ambient_dim())
    throw DimensionMismatch("is_nonneg_on: dimension mismatch for '" + s.label() + "'");
  for (const RVec& g : s.generators())
    if (dot(f.coords, g) < 0) return false;
  return true;
}

}  // namespace convexcomp
