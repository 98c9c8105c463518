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

#include "convexcomp/rational.hpp"

#include <cctype>

#include "convexcomp/errors.hpp"

namespace convexcomp {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void parse_fail(std::string_view text, std::string_view field) {
  std::string msg = "invalid rational '" + std::string(text) + "'";
  if (!field.empty()) msg = std::string(field) + ": " + msg;
  throw ParseError(msg);
}

}  // namespace

Rat make_rat(long long num, long long den) { return make_rat(Int(num), Int(den)); }

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rat(num, den);  // the mpz-pair constructor canonicalizes
}

Int rat_num(const Rat& r) { return numerator(r); }
Int rat_den(const Rat& r) { return denominator(r); }

std::string rat_to_string(const Rat& r) {
  Int d = denominator(r);
  std::string s = numerator(r).str();
  if (d != 1) s += "/" + d.str();
  return s;
}

Rat parse_rat(std::string_view text, std::string_view field) {
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  if (!is_integer_literal(num_part)) parse_fail(text, field);
  Int num{std::string(num_part)};
  Int den(1);
  if (slash != std::string_view::npos) {
    std::string_view den_part = text.substr(slash + 1);
    if (!is_integer_literal(den_part)) parse_fail(text, field);
    den = Int{std::string(den_part)};
    if (den == 0) parse_fail(text, field);
  }
  return make_rat(num, den);
}

}  // namespace convexcomp
