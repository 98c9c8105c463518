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

#include "convexcomp/demos.hpp"

#include <algorithm>
#include <set>

#include "convexcomp/composition.hpp"
#include "convexcomp/errors.hpp"
#include "convexcomp/rng.hpp"
#include "convexcomp/separability.hpp"

namespace convexcomp {

namespace {

void line(DemoResult& r, const std::string& check, bool pass, const std::string& detail = "") {
  r.transcript += check + ": " + (pass ? "PASS" : "FAIL");
  if (!detail.empty()) r.transcript += " (" + detail + ")";
  r.transcript += "\n";
  r.ok = r.ok && pass;
}

std::vector<RVec> sorted_copy(std::vector<RVec> vs) {
  std::sort(vs.begin(), vs.end(), lex_string_less);
  return vs;
}

void classical_pair(DemoResult& r, std::size_t n1, std::size_t n2) {
  std::vector<StateSpace> parties{classical_simplex(n1), classical_simplex(n2)};
  const Composite min = min_tensor(parties);
  const Composite max = with_vertex_realization(max_tensor(parties));
  const std::vector<RVec>& vertices = max.realization->generators();
  const std::string label = min.realization->label();

  const bool same_set = sorted_copy(min.realization->generators()) == vertices;
  const bool all_separable = separable_hull_equals(parties, vertices);
  line(r, label + ": min=max", same_set && all_separable,
       std::to_string(vertices.size()) + " vertices, all separable");
}

}  // namespace

DemoResult demo_classical(std::uint64_t seed) {
  DemoResult r;
  r.transcript = "demo classical (seed " + std::to_string(seed) + ")\n";
  classical_pair(r, 2, 2);
  classical_pair(r, 2, 3);
  return r;
}

DemoResult demo_gbit(std::uint64_t seed) {
  DemoResult r;
  r.transcript = "demo gbit (seed " + std::to_string(seed) + ")\n";
  std::vector<StateSpace> parties{gbit_square(), gbit_square()};
  const Composite min = min_tensor(parties);
  const Composite max = with_vertex_realization(max_tensor(parties));
  const std::vector<RVec>& vertices = max.realization->generators();

  std::vector<RVec> separable_vertices;
  std::size_t entangled_count = 0;
  bool witnesses_ok = true;
  for (const RVec& v : vertices) {
    const SeparabilityVerdict verdict = is_separable(parties, v);
    if (std::holds_alternative<Separable>(verdict)) {
      separable_vertices.push_back(v);
    } else {
      ++entangled_count;
      witnesses_ok =
          witnesses_ok && verify_witness(parties, std::get<Entangled>(verdict).witness, v);
    }
  }
  const bool counts_ok = vertices.size() == 24 && separable_vertices.size() == 16 &&
                         entangled_count == 8 &&
                         separable_vertices == sorted_copy(min.realization->generators());
  line(r, "gbit*gbit: max vertices split", counts_ok,
       std::to_string(vertices.size()) + " vertices, " +
           std::to_string(separable_vertices.size()) + " separable, " +
           std::to_string(entangled_count) + " entangled");
  line(r, "gbit*gbit: all witnesses verified independently", witnesses_ok);

  const StateSpace cleaned = remove_redundant_generators(*min.realization);
  line(r, "gbit*gbit: min generators all extreme", cleaned.generators().size() == 16,
       std::to_string(cleaned.generators().size()) + " of 16 survive");
  return r;
}

DemoResult universal_check(const std::vector<StateSpace>& parties,
                           const std::vector<std::size_t>& target_dims, std::size_t n_maps,
                           std::size_t n_probes, std::uint64_t seed) {
  DemoResult r;
  const Composite c = min_tensor(parties);
  std::size_t expected = 1;
  std::string dims_label;
  for (std::size_t j = 0; j < parties.size(); ++j) {
    expected *= parties[j].ambient_dim();
    if (j) dims_label += "*";
    dims_label += std::to_string(parties[j].ambient_dim());
  }
  const std::size_t w = simple_span_dim(c);
  line(r, "dim W = " + std::to_string(w) + " = " + dims_label, w == expected);

  RatSampler sampler(seed);
  bool maps_ok = true;
  for (std::size_t m = 0; m < n_maps && maps_ok; ++m) {
    const std::size_t k = target_dims[m % target_dims.size()];
    std::vector<RVec> phi;
    phi.reserve(expected);
    for (std::size_t t = 0; t < expected; ++t) phi.push_back(sampler.vector(k));
    std::vector<std::vector<Functional>> probes;
    for (std::size_t q = 0; q < n_probes; ++q) {
      std::vector<Functional> probe;
      for (const StateSpace& p : parties)
        probe.push_back({p.label(), sampler.vector(p.ambient_dim())});
      probes.push_back(std::move(probe));
    }
    try {
      universal_factorization(c, phi, probes);
    } catch (const Error&) {
      maps_ok = false;
    }
  }
  line(r,
       "factorization through W on " + std::to_string(n_maps) + " random multilinear maps x " +
           std::to_string(n_probes) + " probes",
       maps_ok);
  return r;
}

DemoResult demo_universal(std::uint64_t seed) {
  DemoResult r;
  r.transcript = "demo universal (seed " + std::to_string(seed) + ")\n";
  const DemoResult inner =
      universal_check({gbit_square(), gbit_square()}, {1, 2, 5}, 20, 20, seed);
  r.transcript += inner.transcript;
  r.ok = inner.ok;
  return r;
}

}  // namespace convexcomp
