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

#include <filesystem>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <string>

#include "convexcomp/composition.hpp"
#include "convexcomp/errors.hpp"
#include "convexcomp/io.hpp"
#include "convexcomp/separability.hpp"
#include "doctest.h"

using namespace convexcomp;

namespace {

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("state-space JSON round-trips byte for byte") {
  const StateSpace g = gbit_square();
  const std::string text = dump_canonical(state_space_to_json(g));
  const StateSpace parsed = state_space_from_json(Json::parse(text), "mem");
  CHECK(parsed.label() == g.label());
  CHECK(parsed.generators() == g.generators());
  CHECK(parsed.unit_effect() == g.unit_effect());
  CHECK(dump_canonical(state_space_to_json(parsed)) == text);
}

TEST_CASE("functional and verdict JSON round-trip") {
  const Functional f{"gbit", {make_rat(-1, 2), Rat(0), Rat(3)}};
  const std::string ftext = dump_canonical(functional_to_json(f));
  const Functional fparsed = functional_from_json(Json::parse(ftext), "mem");
  CHECK(fparsed.space == f.space);
  CHECK(fparsed.coords == f.coords);
  CHECK(dump_canonical(functional_to_json(fparsed)) == ftext);

  const std::vector<StateSpace> parties{gbit_square(), gbit_square()};
  const Composite max = with_vertex_realization(max_tensor(parties));
  for (const RVec& v : max.realization->generators()) {
    const SeparabilityVerdict verdict = is_separable(parties, v);
    const std::string text = dump_canonical(verdict_to_json(verdict));
    const SeparabilityVerdict parsed = verdict_from_json(Json::parse(text), "mem");
    CHECK(dump_canonical(verdict_to_json(parsed)) == text);
  }
}

TEST_CASE("composite JSON round-trips, vertices included when enumerated") {
  const std::vector<StateSpace> parties{classical_simplex(2), gbit_square()};
  for (const Composite& c :
       {min_tensor(parties), juxtapose(parties), with_vertex_realization(max_tensor(parties)),
        max_tensor(parties)}) {
    const std::string text = dump_canonical(composite_to_json(c));
    const Composite parsed = composite_from_json(Json::parse(text), "mem", ".");
    CHECK(dump_canonical(composite_to_json(parsed)) == text);
  }
}

TEST_CASE("hrep JSON round-trips") {
  const Composite max = max_tensor({gbit_square(), classical_simplex(2)});
  const std::string text = dump_canonical(hrep_to_json(*max.hrep));
  const HRep parsed = hrep_from_json(Json::parse(text), "mem");
  CHECK(dump_canonical(hrep_to_json(parsed)) == text);
  CHECK(parsed.dim == max.hrep->dim);
  CHECK(parsed.inequalities.size() == max.hrep->inequalities.size());
}

TEST_CASE("parse errors name the offending field") {
  const std::string bad_rat = message_of([] {
    state_space_from_json(Json::parse(R"({"label":"x","ambient_dim":2,
      "generators":[["1","0"],["0","1/0"]],"unit_effect":["1","1"]})"),
                          "f.json");
  });
  CHECK(bad_rat.find("generators[1][1]") != std::string::npos);
  CHECK(bad_rat.find("1/0") != std::string::npos);

  const std::string missing = message_of(
      [] { state_space_from_json(Json::parse(R"({"label":"x"})"), "f.json"); });
  CHECK(missing.find("ambient_dim") != std::string::npos);

  const std::string bad_dim = message_of([] {
    state_space_from_json(Json::parse(R"({"label":"x","ambient_dim":3,
      "generators":[["1","0"]],"unit_effect":["1","1","1"]})"),
                          "f.json");
  });
  CHECK(bad_dim.find("generators[0]") != std::string::npos);

  CHECK_THROWS_AS(verdict_from_json(Json::parse(R"({"verdict":"maybe"})"), "v"), ParseError);
  CHECK_THROWS_AS(
      composite_from_json(Json::parse(R"({"mode":"avg","parties":[]})"), "c", "."), ParseError);
}

TEST_CASE("file I/O and party file references") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "convexcomp_io_test";
  fs::create_directories(dir);

  write_file(dir / "bit.json", dump_canonical(state_space_to_json(classical_simplex(2))));
  const StateSpace bit = load_state_space(dir / "bit.json");
  CHECK(bit.ambient_dim() == 2);

  Json cj;
  cj["mode"] = "min";
  cj["parties"] = Json::array({"bit.json", "bit.json"});
  write_file(dir / "composite.json", dump_canonical(cj));
  const Composite c = composite_from_json(load_json(dir / "composite.json"), "composite.json", dir);
  CHECK(c.realization->generators().size() == 4);

  CHECK_THROWS_AS(load_state_space(dir / "missing.json"), ParseError);
  write_file(dir / "garbage.json", "{not json");
  CHECK_THROWS_AS(load_json(dir / "garbage.json"), ParseError);
  fs::remove_all(dir);
}
