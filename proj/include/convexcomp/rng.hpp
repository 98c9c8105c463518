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
#include <random>

#include "convexcomp/linalg.hpp"
#include "convexcomp/state_space.hpp"

namespace convexcomp {

/// Deterministic sampler for rational test data. Uses the fully specified
/// mt19937_64 stream with plain modulo mapping, so identical seeds give
/// identical values on every platform (std::uniform_int_distribution would
/// not).
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

  /// Rational with numerator in [-num_range, num_range], denominator in [1, den_range].
  Rat rational(std::uint64_t num_range, std::uint64_t den_range) {
    const auto num = static_cast<long long>(eng_() % (2 * num_range + 1)) -
                     static_cast<long long>(num_range);
    const auto den = static_cast<long long>(1 + eng_() % den_range);
    return make_rat(num, den);
  }

  RVec vector(std::size_t dim, std::uint64_t num_range = 5, std::uint64_t den_range = 4) {
    RVec v(dim);
    for (auto& e : v) e = rational(num_range, den_range);
    return v;
  }

  /// Nonnegative weights summing to exactly 1.
  RVec convex_weights(std::size_t m) {
    RVec w(m);
    Rat total(0);
    for (auto& e : w) {
      e = make_rat(static_cast<long long>(eng_() % 8), 1 + static_cast<long long>(eng_() % 4));
      total += e;
    }
    if (total == 0) {
      w[index(m)] = 1;
      return w;
    }
    for (auto& e : w) e /= total;
    return w;
  }

  /// Random state: exact convex combination of the space's generators.
  RVec state(const StateSpace& s) {
    const RVec w = convex_weights(s.generators().size());
    RVec p = zero_vec(s.ambient_dim());
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0) p = vadd(p, vscale(w[i], s.generators()[i]));
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace convexcomp
