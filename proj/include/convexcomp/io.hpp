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

#include <filesystem>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "convexcomp/composition.hpp"
#include "convexcomp/functional.hpp"
#include "convexcomp/lp.hpp"
#include "convexcomp/separability.hpp"
#include "convexcomp/state_space.hpp"

namespace convexcomp {

using Json = nlohmann::json;

// All rationals serialize as canonical "p/q" strings ("p" when q = 1), so
// writing is bit-exact and parse/dump round-trips files byte for byte.
// Parse errors carry the offending field path in the message.

Json state_space_to_json(const StateSpace& s);
StateSpace state_space_from_json(const Json& j, const std::string& context);

Json functional_to_json(const Functional& f);
Functional functional_from_json(const Json& j, const std::string& context);

Json hrep_to_json(const HRep& h);
HRep hrep_from_json(const Json& j, const std::string& context);

/// Composite files carry {"mode", "parties"}; parties may be inline
/// state-space objects or file-reference strings (resolved against
/// `base_dir`). Compose output additionally inlines the realization /
/// H-representation / vertex list.
Json composite_to_json(const Composite& c);
Composite composite_from_json(const Json& j, const std::string& context,
                              const std::filesystem::path& base_dir);

Json verdict_to_json(const SeparabilityVerdict& v);
SeparabilityVerdict verdict_from_json(const Json& j, const std::string& context);

/// Canonical serialization: 2-space indent, sorted keys, trailing newline.
std::string dump_canonical(const Json& j);

Json load_json(const std::filesystem::path& path);
StateSpace load_state_space(const std::filesystem::path& path);
Functional load_functional(const std::filesystem::path& path);
RVec load_state_vector(const std::filesystem::path& path);

/// State vectors (separability queries) serialize as {"state": ["p/q", ...]}.
Json state_vector_to_json(const RVec& v);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace convexcomp
