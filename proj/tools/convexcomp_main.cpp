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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "convexcomp/composition.hpp"
#include "convexcomp/demos.hpp"
#include "convexcomp/errors.hpp"
#include "convexcomp/io.hpp"
#include "convexcomp/separability.hpp"
#include "convexcomp/state_space.hpp"

namespace {

using namespace convexcomp;

// Exit codes: 0 success/separable, 1 entangled or failed check,
//             2 input error, 3 internal invariant breach.
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::vector<StateSpace> load_parties(const std::vector<std::string>& files) {
  std::vector<StateSpace> parties;
  parties.reserve(files.size());
  for (const auto& f : files) parties.push_back(load_state_space(f));
  return parties;
}

int run_info(const std::string& file) {
  const StateSpace s = load_state_space(file);
  const StateSpace cleaned = remove_redundant_generators(s);
  const auto rays = effect_cone_rays(s);
  std::cout << s.label() << ": dim " << s.ambient_dim() << ", " << s.generators().size()
            << " generators, " << cleaned.generators().size() << " extreme, " << rays.size()
            << " effect rays\n";
  return 0;
}

int run_compose(const std::vector<std::string>& party_files, const std::string& mode,
                const std::string& out_file, bool enumerate_vertices) {
  std::vector<StateSpace> parties = load_parties(party_files);
  Composite c;
  if (mode == "min") {
    c = min_tensor(std::move(parties));
  } else if (mode == "max") {
    c = max_tensor(std::move(parties));
    if (enumerate_vertices) c = with_vertex_realization(std::move(c));
  } else if (mode == "juxtapose") {
    c = juxtapose(std::move(parties));
  } else {
    throw ParseError("--mode: expected min, max or juxtapose");
  }
  write_file(out_file, dump_canonical(composite_to_json(c)));

  std::cout << "wrote " << mode << " composite, dim " << composite_ambient_dim(c);
  if (c.mode == CompositeMode::MaxTensor) {
    std::cout << ", " << c.hrep->inequalities.size() << " inequalities";
    if (c.realization) std::cout << ", " << c.realization->generators().size() << " vertices";
  } else {
    std::cout << ", " << c.realization->generators().size() << " generators";
  }
  std::cout << ": " << out_file << "\n";
  return 0;
}

int run_separability(const std::vector<std::string>& party_files, const std::string& state_file,
                     const std::string& out_file) {
  const std::vector<StateSpace> parties = load_parties(party_files);
  const RVec state = load_state_vector(state_file);
  const SeparabilityVerdict verdict = is_separable(parties, state);

  // Re-verify with the independent checker before printing anything.
  if (const auto* e = std::get_if<Entangled>(&verdict)) {
    if (!verify_witness(parties, e->witness, state))
      throw InternalError("separability: witness failed independent verification");
  }
  const std::string text = dump_canonical(verdict_to_json(verdict));
  std::cout << text;
  if (!out_file.empty()) write_file(out_file, text);
  return std::holds_alternative<Separable>(verdict) ? 0 : kExitVerdict;
}

int run_witness_verify(const std::vector<std::string>& party_files,
                       const std::string& witness_file, const std::string& state_file) {
  const std::vector<StateSpace> parties = load_parties(party_files);
  const Functional witness = load_functional(witness_file);
  const RVec state = load_state_vector(state_file);
  const bool valid = verify_witness(parties, witness, state);
  std::cout << (valid ? "witness valid: nonnegative on all product generators, negative on state"
                      : "witness invalid")
            << "\n";
  return valid ? 0 : kExitVerdict;
}

int run_verify_universal(const std::vector<std::string>& party_files,
                         const std::vector<std::size_t>& target_dims, std::size_t maps,
                         std::size_t probes, std::uint64_t seed) {
  const std::vector<StateSpace> parties = load_parties(party_files);
  const DemoResult r = universal_check(parties, target_dims, maps, probes, seed);
  std::cout << r.transcript;
  return r.ok ? 0 : kExitVerdict;
}

int run_demo(const std::string& name, std::uint64_t seed) {
  DemoResult r;
  if (name == "classical") {
    r = demo_classical(seed);
  } else if (name == "gbit") {
    r = demo_gbit(seed);
  } else if (name == "universal") {
    r = demo_universal(seed);
  } else {
    throw ParseError("demo: expected classical, gbit or universal");
  }
  std::cout << r.transcript;
  return r.ok ? 0 : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact convex state spaces, tensor composites, and separability certificates"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "summarize a state-space file");
  std::string info_file;
  info->add_option("space", info_file, "state-space JSON file")->required();

  auto* compose = app.add_subcommand("compose", "combine party spaces into a composite");
  std::vector<std::string> compose_parties;
  std::string compose_mode = "min";
  std::string compose_out;
  bool compose_enum = false;
  compose->add_option("parties", compose_parties, "party state-space files")->required();
  compose->add_option("--mode", compose_mode, "min | max | juxtapose")->required();
  compose->add_option("--out", compose_out, "output composite file")->required();
  compose->add_flag("--enumerate-vertices", compose_enum,
                    "also enumerate the vertices of a max composite");

  auto* separability = app.add_subcommand("separability", "decide separability of a state");
  std::vector<std::string> sep_parties;
  std::string sep_state;
  std::string sep_out;
  separability->add_option("parties", sep_parties, "party state-space files")->required();
  separability->add_option("--state", sep_state, "state JSON file {\"state\": [...]}")
      ->required();
  separability->add_option("--out", sep_out, "also write the verdict to this file");

  auto* witness = app.add_subcommand("witness-verify", "re-check an entanglement witness");
  std::vector<std::string> wit_parties;
  std::string wit_witness;
  std::string wit_state;
  witness->add_option("parties", wit_parties, "party state-space files")->required();
  witness->add_option("--witness", wit_witness, "witness functional JSON file")->required();
  witness->add_option("--state", wit_state, "state JSON file")->required();

  auto* universal = app.add_subcommand("verify-universal",
                                       "check the universal factorization on random maps");
  std::vector<std::string> uni_parties;
  std::vector<std::size_t> uni_dims{1, 2, 5};
  std::size_t uni_maps = 20;
  std::size_t uni_probes = 20;
  std::uint64_t uni_seed = 0;
  universal->add_option("parties", uni_parties, "party state-space files")->required();
  universal->add_option("--target-dims", uni_dims, "target space dimensions to cycle");
  universal->add_option("--maps", uni_maps, "number of random multilinear maps");
  universal->add_option("--probes", uni_probes, "probe tuples per map");
  universal->add_option("--seed", uni_seed, "random seed");

  auto* demo = app.add_subcommand("demo", "run a built-in end-to-end scenario");
  std::string demo_name;
  std::uint64_t demo_seed = 0;
  demo->add_option("name", demo_name, "classical | gbit | universal")->required();
  demo->add_option("--seed", demo_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (app.got_subcommand(info)) return run_info(info_file);
    if (app.got_subcommand(compose))
      return run_compose(compose_parties, compose_mode, compose_out, compose_enum);
    if (app.got_subcommand(separability)) return run_separability(sep_parties, sep_state, sep_out);
    if (app.got_subcommand(witness)) return run_witness_verify(wit_parties, wit_witness, wit_state);
    if (app.got_subcommand(universal))
      return run_verify_universal(uni_parties, uni_dims, uni_maps, uni_probes, uni_seed);
    if (app.got_subcommand(demo)) return run_demo(demo_name, demo_seed);
  } catch (const UnboundedPolyhedronError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const RankDeficiencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
