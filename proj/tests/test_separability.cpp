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

#include <algorithm>

#include "convexcomp/composition.hpp"
#include "convexcomp/errors.hpp"
#include "convexcomp/io.hpp"
#include "convexcomp/rng.hpp"
#include "convexcomp/separability.hpp"
#include "doctest.h"

#include <nlohmann/json.hpp>

using namespace convexcomp;

namespace {

RVec reconstruct(const Separable& s) {
  RVec sum;
  Rat total(0);
  for (const SeparableTerm& t : s.terms) {
    const RVec prod = kron_all(t.factors);
    if (sum.empty()) sum = zero_vec(prod.size());
    sum = vadd(sum, vscale(t.weight, prod));
    total += t.weight;
  }
  REQUIRE(total == 1);
  return sum;
}

// Random separable state: seeded convex mixture of product generators.
RVec random_separable(RatSampler& s, const std::vector<StateSpace>& parties) {
  const Composite c = min_tensor(parties);
  const auto& gens = c.realization->generators();
  const RVec w = s.convex_weights(gens.size());
  RVec state = zero_vec(gens[0].size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (w[i] != 0) state = vadd(state, vscale(w[i], gens[i]));
  return state;
}

}  // namespace

TEST_CASE("product states decompose with a single term") {
  const std::vector<StateSpace> parties{gbit_square(), gbit_square()};
  const Composite c = min_tensor(parties);
  const RVec state = product_embed(c, {{make_rat(1, 2), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(1)}});
  const auto verdict = is_separable(parties, state);
  const auto& sep = std::get<Separable>(verdict);
  REQUIRE(sep.terms.size() == 1);
  CHECK(sep.terms[0].weight == 1);
  CHECK(reconstruct(sep) == state);
}

TEST_CASE("explicit two-term mixture on bit x bit") {
  const std::vector<StateSpace> parties{classical_simplex(2), classical_simplex(2)};
  // 1/2 kron(g1,g1) + 1/2 kron(g2,g2)
  const RVec state{make_rat(1, 2), Rat(0), Rat(0), make_rat(1, 2)};
  const auto sep = std::get<Separable>(is_separable(parties, state));
  REQUIRE(sep.terms.size() == 2);
  CHECK(sep.terms[0].weight == make_rat(1, 2));
  CHECK(sep.terms[1].weight == make_rat(1, 2));
  CHECK(sep.terms[0].factors == std::vector<RVec>{{Rat(1), Rat(0)}, {Rat(1), Rat(0)}});
  CHECK(sep.terms[1].factors == std::vector<RVec>{{Rat(0), Rat(1)}, {Rat(0), Rat(1)}});
  CHECK(reconstruct(sep) == state);
}

TEST_CASE("entangled max-tensor vertices carry verified witnesses") {
  const std::vector<StateSpace> parties{gbit_square(), gbit_square()};
  const Composite min = min_tensor(parties);
  const Composite max = with_vertex_realization(max_tensor(parties));
  const auto& products = min.realization->generators();

  std::size_t separable_count = 0;
  std::size_t entangled_count = 0;
  for (const RVec& v : max.realization->generators()) {
    const auto verdict = is_separable(parties, v);
    if (const auto* sep = std::get_if<Separable>(&verdict)) {
      ++separable_count;
      CHECK(reconstruct(*sep) == v);
      // the Caratheodory bound on the term count
      CHECK(sep->terms.size() <= 10);
      // a separable max vertex must itself be a product generator
      CHECK(std::find(products.begin(), products.end(), v) != products.end());
    } else {
      ++entangled_count;
      const auto& ent = std::get<Entangled>(verdict);
      CHECK(ent.margin == -1);
      CHECK(evaluate(ent.witness, v) == -1);
      CHECK(verify_witness(parties, ent.witness, v));
    }
  }
  CHECK(separable_count == 16);
  CHECK(entangled_count == 8);
}

TEST_CASE("verify_witness rejects non-witnesses") {
  const std::vector<StateSpace> parties{gbit_square(), gbit_square()};
  const Composite c = min_tensor(parties);
  const RVec state = c.realization->generators()[0];
  // the composite unit evaluates to 1 > 0 everywhere
  CHECK_FALSE(verify_witness(parties, {"gbit*gbit", composite_unit(c)}, state));
  // the zero functional is nowhere strictly negative
  CHECK_FALSE(verify_witness(parties, {"gbit*gbit", zero_vec(9)}, state));
  CHECK_THROWS_AS(verify_witness(parties, {"w", zero_vec(4)}, state), DimensionMismatch);
}

TEST_CASE("separable_hull_equals certifies the classical cases") {
  const std::vector<StateSpace> bits{classical_simplex(2), classical_simplex(2)};
  const Composite bb = with_vertex_realization(max_tensor(bits));
  CHECK(separable_hull_equals(bits, bb.realization->generators()));

  const std::vector<StateSpace> gbits{gbit_square(), gbit_square()};
  const Composite gg = with_vertex_realization(max_tensor(gbits));
  CHECK_FALSE(separable_hull_equals(gbits, gg.realization->generators()));

  const std::vector<StateSpace> single{gbit_square()};
  const Composite sg = with_vertex_realization(max_tensor(single));
  CHECK(separable_hull_equals(single, sg.realization->generators()));
}

TEST_CASE("the separable set is convex") {
  RatSampler s(71);
  const std::vector<StateSpace> parties{gbit_square(), gbit_square()};
  for (int i = 0; i < 25; ++i) {
    const RVec a = random_separable(s, parties);
    const RVec b = random_separable(s, parties);
    const RVec mid = vscale(make_rat(1, 2), vadd(a, b));
    CHECK(std::holds_alternative<Separable>(is_separable(parties, mid)));
  }
}

TEST_CASE("verdicts are deterministic including decompositions and witnesses") {
  const std::vector<StateSpace> parties{gbit_square(), gbit_square()};
  const Composite max = with_vertex_realization(max_tensor(parties));
  for (const RVec& v : max.realization->generators()) {
    const Json a = verdict_to_json(is_separable(parties, v));
    const Json b = verdict_to_json(is_separable(parties, v));
    CHECK(dump_canonical(a) == dump_canonical(b));
  }
}

TEST_CASE("bad inputs are rejected") {
  const std::vector<StateSpace> parties{classical_simplex(2), classical_simplex(2)};
  CHECK_THROWS_AS(is_separable(parties, zero_vec(4)), NormalizationError);
  CHECK_THROWS_AS(is_separable(parties, zero_vec(3)), DimensionMismatch);
}
