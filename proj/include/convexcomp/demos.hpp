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

#include <cstdint>
#include <string>
#include <vector>

#include "convexcomp/state_space.hpp"

namespace convexcomp {

/// End-to-end scenario output: one PASS/FAIL line per check. Identical seeds
/// give byte-identical transcripts.
struct DemoResult {
  std::string transcript;
  bool ok = true;
};

/// Classical composites have no entangled states: the maximal composite of
/// two simplices has exactly the product vertices, all separable.
DemoResult demo_classical(std::uint64_t seed);

/// The square-bit composite admits entangled states: 24 maximal vertices,
/// 16 separable, 8 entangled with independently verified witnesses.
DemoResult demo_gbit(std::uint64_t seed);

/// The span of simple elements is the full tensor dual and every multilinear
/// map factors uniquely through it.
DemoResult demo_universal(std::uint64_t seed);

/// The factorization checks behind demo_universal, for arbitrary parties:
/// seeded random multilinear maps into targets of the given dimensions
/// (cycled across maps), each verified on seeded random probe tuples.
DemoResult universal_check(const std::vector<StateSpace>& parties,
                           const std::vector<std::size_t>& target_dims, std::size_t n_maps,
                           std::size_t n_probes, std::uint64_t seed);

}  // namespace convexcomp
