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

#include "convexcomp/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "convexcomp/errors.hpp"

namespace convexcomp {

namespace {

std::string at(const std::string& context, const std::string& field) {
  return context.empty() ? field : context + ": " + field;
}

const Json& require_key(const Json& j, const std::string& key, const std::string& context) {
  if (!j.is_object()) throw ParseError(at(context, "expected an object"));
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(context, "missing field '" + key + "'"));
  return *it;
}

std::string require_string(const Json& j, const std::string& field) {
  if (!j.is_string()) throw ParseError(field + ": expected a string");
  return j.get<std::string>();
}

std::size_t require_uint(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned()) throw ParseError(field + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

Rat rat_from_json(const Json& j, const std::string& field) {
  if (!j.is_string()) throw ParseError(field + ": expected a rational string \"p/q\"");
  return parse_rat(j.get<std::string>(), field);
}

RVec vec_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array of rational strings");
  RVec v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(rat_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

Json vec_to_json(const RVec& v) {
  Json arr = Json::array();
  for (const Rat& e : v) arr.push_back(rat_to_string(e));
  return arr;
}

std::pair<RVec, Rat> constraint_from_json(const Json& j, const std::string& field) {
  return {vec_from_json(require_key(j, "a", field), field + ".a"),
          rat_from_json(require_key(j, "b", field), field + ".b")};
}

Json constraint_to_json(const std::pair<RVec, Rat>& c) {
  return Json{{"a", vec_to_json(c.first)}, {"b", rat_to_string(c.second)}};
}

}  // namespace

Json state_space_to_json(const StateSpace& s) {
  Json gens = Json::array();
  for (const RVec& g : s.generators()) gens.push_back(vec_to_json(g));
  return Json{{"label", s.label()},
              {"ambient_dim", s.ambient_dim()},
              {"generators", gens},
              {"unit_effect", vec_to_json(s.unit_effect())}};
}

StateSpace state_space_from_json(const Json& j, const std::string& context) {
  const std::string label = require_string(require_key(j, "label", context), at(context, "label"));
  const std::size_t dim =
      require_uint(require_key(j, "ambient_dim", context), at(context, "ambient_dim"));
  const Json& jg = require_key(j, "generators", context);
  if (!jg.is_array() || jg.empty())
    throw ParseError(at(context, "generators: expected a nonempty array"));
  std::vector<RVec> gens;
  for (std::size_t i = 0; i < jg.size(); ++i) {
    RVec g = vec_from_json(jg[i], at(context, "generators[" + std::to_string(i) + "]"));
    if (g.size() != dim)
      throw ParseError(at(context, "generators[" + std::to_string(i) + "]: dimension " +
                                       std::to_string(g.size()) + " does not match ambient_dim " +
                                       std::to_string(dim)));
    gens.push_back(std::move(g));
  }
  RVec unit = vec_from_json(require_key(j, "unit_effect", context), at(context, "unit_effect"));
  if (unit.size() != dim)
    throw ParseError(at(context, "unit_effect: dimension does not match ambient_dim"));
  return StateSpace(label, std::move(gens), std::move(unit));
}

Json functional_to_json(const Functional& f) {
  return Json{{"space", f.space}, {"coords", vec_to_json(f.coords)}};
}

Functional functional_from_json(const Json& j, const std::string& context) {
  return {require_string(require_key(j, "space", context), at(context, "space")),
          vec_from_json(require_key(j, "coords", context), at(context, "coords"))};
}

Json hrep_to_json(const HRep& h) {
  Json eqs = Json::array();
  for (const auto& c : h.equalities) eqs.push_back(constraint_to_json(c));
  Json ineqs = Json::array();
  for (const auto& c : h.inequalities) ineqs.push_back(constraint_to_json(c));
  return Json{{"dim", h.dim}, {"equalities", eqs}, {"inequalities", ineqs}};
}

HRep hrep_from_json(const Json& j, const std::string& context) {
  HRep h;
  h.dim = require_uint(require_key(j, "dim", context), at(context, "dim"));
  const Json& jeq = require_key(j, "equalities", context);
  const Json& jin = require_key(j, "inequalities", context);
  if (!jeq.is_array() || !jin.is_array())
    throw ParseError(at(context, "equalities/inequalities: expected arrays"));
  for (std::size_t i = 0; i < jeq.size(); ++i)
    h.equalities.push_back(
        constraint_from_json(jeq[i], at(context, "equalities[" + std::to_string(i) + "]")));
  for (std::size_t i = 0; i < jin.size(); ++i)
    h.inequalities.push_back(
        constraint_from_json(jin[i], at(context, "inequalities[" + std::to_string(i) + "]")));
  return h;
}

Json composite_to_json(const Composite& c) {
  Json parties = Json::array();
  for (const StateSpace& p : c.parties) parties.push_back(state_space_to_json(p));
  Json j{{"mode", c.mode == CompositeMode::Juxtaposition ? "juxtapose"
                  : c.mode == CompositeMode::MinTensor   ? "min"
                                                         : "max"},
         {"parties", parties}};
  if (c.mode == CompositeMode::MaxTensor) {
    j["hrep"] = hrep_to_json(*c.hrep);
    if (c.realization) {
      Json verts = Json::array();
      for (const RVec& v : c.realization->generators()) verts.push_back(vec_to_json(v));
      j["vertices"] = verts;
    }
  } else {
    j["realization"] = state_space_to_json(*c.realization);
  }
  return j;
}

Composite composite_from_json(const Json& j, const std::string& context,
                              const std::filesystem::path& base_dir) {
  const std::string mode = require_string(require_key(j, "mode", context), at(context, "mode"));
  const Json& jp = require_key(j, "parties", context);
  if (!jp.is_array() || jp.empty())
    throw ParseError(at(context, "parties: expected a nonempty array"));
  std::vector<StateSpace> parties;
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string field = at(context, "parties[" + std::to_string(i) + "]");
    if (jp[i].is_string()) {
      parties.push_back(load_state_space(base_dir / jp[i].get<std::string>()));
    } else {
      parties.push_back(state_space_from_json(jp[i], field));
    }
  }
  Composite c;
  if (mode == "juxtapose") {
    c = juxtapose(std::move(parties));
  } else if (mode == "min") {
    c = min_tensor(std::move(parties));
  } else if (mode == "max") {
    c = max_tensor(std::move(parties));
    if (j.contains("vertices")) c = with_vertex_realization(std::move(c));
  } else {
    throw ParseError(at(context, "mode: expected \"juxtapose\", \"min\" or \"max\""));
  }
  return c;
}

Json verdict_to_json(const SeparabilityVerdict& v) {
  if (const auto* s = std::get_if<Separable>(&v)) {
    Json terms = Json::array();
    for (const SeparableTerm& t : s->terms) {
      Json factors = Json::array();
      for (const RVec& f : t.factors) factors.push_back(vec_to_json(f));
      terms.push_back(Json{{"p", rat_to_string(t.weight)}, {"factors", factors}});
    }
    return Json{{"verdict", "separable"}, {"terms", terms}};
  }
  const auto& e = std::get<Entangled>(v);
  return Json{{"verdict", "entangled"},
              {"witness", functional_to_json(e.witness)},
              {"margin", rat_to_string(e.margin)}};
}

SeparabilityVerdict verdict_from_json(const Json& j, const std::string& context) {
  const std::string verdict =
      require_string(require_key(j, "verdict", context), at(context, "verdict"));
  if (verdict == "separable") {
    const Json& jt = require_key(j, "terms", context);
    if (!jt.is_array()) throw ParseError(at(context, "terms: expected an array"));
    Separable s;
    for (std::size_t i = 0; i < jt.size(); ++i) {
      const std::string field = at(context, "terms[" + std::to_string(i) + "]");
      SeparableTerm term;
      term.weight = rat_from_json(require_key(jt[i], "p", field), field + ".p");
      const Json& jf = require_key(jt[i], "factors", field);
      if (!jf.is_array()) throw ParseError(field + ".factors: expected an array");
      for (std::size_t k = 0; k < jf.size(); ++k)
        term.factors.push_back(
            vec_from_json(jf[k], field + ".factors[" + std::to_string(k) + "]"));
      s.terms.push_back(std::move(term));
    }
    return s;
  }
  if (verdict == "entangled") {
    return Entangled{
        functional_from_json(require_key(j, "witness", context), at(context, "witness")),
        rat_from_json(require_key(j, "margin", context), at(context, "margin"))};
  }
  throw ParseError(at(context, "verdict: expected \"separable\" or \"entangled\""));
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

StateSpace load_state_space(const std::filesystem::path& path) {
  return state_space_from_json(load_json(path), path.string());
}

Functional load_functional(const std::filesystem::path& path) {
  return functional_from_json(load_json(path), path.string());
}

Json state_vector_to_json(const RVec& v) { return Json{{"state", vec_to_json(v)}}; }

RVec load_state_vector(const std::filesystem::path& path) {
  const Json j = load_json(path);
  return vec_from_json(require_key(j, "state", path.string()), path.string() + ": state");
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path.string() + ": cannot open for writing");
  out << contents;
  if (!out) throw Error(path.string() + ": write failed");
}

}  // namespace convexcomp
