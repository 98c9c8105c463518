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

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace convexcomp {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always kept canonical: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. All arithmetic is exact.
using Rat = boost::multiprecision::mpq_rational;

/// Build a canonical rational from an integer pair. Throws DomainError on den == 0.
/// Do not call the mpq_rational(int, int) constructor directly: it treats a
/// negative denominator as unsigned.
Rat make_rat(long long num, long long den = 1);

/// Canonical rational from big-integer parts. Throws DomainError on den == 0.
Rat make_rat(const Int& num, const Int& den);

Int rat_num(const Rat& r);
Int rat_den(const Rat& r);

/// Serialize as "p/q", or "p" when q = 1. Bit-exact format used by all file I/O.
std::string rat_to_string(const Rat& r);

/// Parse the "p/q" / "p" format. Throws ParseError (message includes `field`
/// when given) on syntax errors or a zero denominator.
Rat parse_rat(std::string_view text, std::string_view field = {});

}  // namespace convexcomp
