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

#include <boost/multiprecision/gmp.hpp>

#include "convexcomp/errors.hpp"
#include "convexcomp/linalg.hpp"
#include "convexcomp/rational.hpp"
#include "convexcomp/rng.hpp"
#include "doctest.h"

using namespace convexcomp;

namespace {

bool is_canonical(const Rat& r) {
  const Int n = rat_num(r);
  const Int d = rat_den(r);
  return d > 0 && gcd(abs(n), d) == 1;
}

RMat random_matrix(RatSampler& s, std::size_t rows, std::size_t cols) {
  RMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = s.rational(4, 3);
  return m;
}

}  // namespace

TEST_CASE("rational string format round-trips") {
  CHECK(rat_to_string(make_rat(-3, 7)) == "-3/7");
  CHECK(rat_to_string(make_rat(5)) == "5");
  CHECK(rat_to_string(make_rat(0, 9)) == "0");
  CHECK(rat_to_string(make_rat(2, 4)) == "1/2");
  CHECK(rat_to_string(make_rat(1, -2)) == "-1/2");  // sign moves to the numerator
  CHECK(parse_rat("-3/7") == make_rat(-3, 7));
  CHECK(parse_rat("42") == make_rat(42));
  CHECK(parse_rat("6/-4") == make_rat(-3, 2));
  CHECK(parse_rat("0/5") == Rat(0));
}

TEST_CASE("rational parse rejects malformed input") {
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("abc"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/"), ParseError);
  CHECK_THROWS_AS(parse_rat("/2"), ParseError);
  CHECK_THROWS_AS(parse_rat("1//2"), ParseError);
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat("+3"), ParseError);
  CHECK_THROWS_AS(make_rat(1, 0), DomainError);
  // the field name ends up in the message
  try {
    parse_rat("1/0", "generators[0][1]");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("generators[0][1]") != std::string::npos);
  }
}

TEST_CASE("arithmetic keeps canonical form and ring laws hold") {
  RatSampler s(11);
  for (int i = 0; i < 200; ++i) {
    const Rat a = s.rational(20, 15);
    const Rat b = s.rational(20, 15);
    const Rat c = s.rational(20, 15);
    CHECK(is_canonical(a + b));
    CHECK(is_canonical(a - b));
    CHECK(is_canonical(a * b));
    if (b != 0) CHECK(is_canonical(a / b));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == 0);
  }
}

TEST_CASE("kron follows the left-factor-slow convention") {
  const RVec e1{Rat(1), Rat(0)};
  const RVec e2{Rat(0), Rat(1)};
  CHECK(kron(e1, e2) == RVec{Rat(0), Rat(1), Rat(0), Rat(0)});
  const RVec v{make_rat(2, 3), Rat(5)};
  CHECK(kron(v, RVec{Rat(1)}) == v);
  CHECK(kron(RVec{make_rat(1, 2), make_rat(1, 2)}, RVec{make_rat(1, 3), make_rat(2, 3)}) ==
        RVec{make_rat(1, 6), make_rat(1, 3), make_rat(1, 6), make_rat(1, 3)});
  // n-fold products fold left
  const RVec a{Rat(1), Rat(2)};
  const RVec b{Rat(3), Rat(4)};
  const RVec c{Rat(5), Rat(6)};
  CHECK(kron_all({a, b, c}) == kron(kron(a, b), c));
}

TEST_CASE("kron is bilinear") {
  RatSampler s(12);
  for (int i = 0; i < 50; ++i) {
    const Rat alpha = s.rational(5, 4);
    const Rat beta = s.rational(5, 4);
    const RVec u = s.vector(3);
    const RVec v = s.vector(3);
    const RVec w = s.vector(2);
    CHECK(kron(vadd(vscale(alpha, u), vscale(beta, v)), w) ==
          vadd(vscale(alpha, kron(u, w)), vscale(beta, kron(v, w))));
  }
}

TEST_CASE("rank on hand cases") {
  CHECK(rank(RMat::identity(3)) == 3);
  CHECK(rank(RMat(2, 4)) == 0);
  CHECK(span_dim({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}, {Rat(0), Rat(1)}}) == 2);
  CHECK(span_dim({{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}}) == 2);
  CHECK(span_dim({}) == 0);
  // the four square-bit generators span Q^3
  CHECK(span_dim({{Rat(1), Rat(1), Rat(1)},
                  {Rat(1), Rat(-1), Rat(1)},
                  {Rat(-1), Rat(1), Rat(1)},
                  {Rat(-1), Rat(-1), Rat(1)}}) == 3);
}

TEST_CASE("rank agrees with transpose and with the Gauss-Jordan path") {
  RatSampler s(13);
  for (int i = 0; i < 60; ++i) {
    const std::size_t r = 1 + s.index(4);
    const std::size_t c = 1 + s.index(4);
    const RMat m = random_matrix(s, r, c);
    CHECK(rank(m) == rank(m.transposed()));
    RMat copy = m;
    CHECK(rank(m) == rref_inplace(copy).size());
  }
}

TEST_CASE("solve_linear on hand cases") {
  const RVec b{make_rat(1, 3), Rat(7)};
  CHECK(solve_linear(RMat::identity(2), b) == b);

  CHECK(!solve_linear(RMat(2, 2), RVec{Rat(1), Rat(0)}).has_value());

  RMat diag(2, 2);
  diag.at(0, 0) = 2;
  diag.at(1, 1) = 4;
  CHECK(solve_linear(diag, RVec{Rat(1), Rat(1)}) == RVec{make_rat(1, 2), make_rat(1, 4)});

  CHECK_THROWS_AS(solve_linear(RMat(2, 2), RVec{Rat(1)}), DimensionMismatch);
}

TEST_CASE("solve_linear solves exactly whenever a solution exists") {
  RatSampler s(14);
  for (int i = 0; i < 80; ++i) {
    const std::size_t r = 1 + s.index(4);
    const std::size_t c = 1 + s.index(4);
    const RMat m = random_matrix(s, r, c);
    const RVec x = s.vector(c);
    RVec b(r, Rat(0));
    for (std::size_t row = 0; row < r; ++row) b[row] = dot(m.row(row), x);
    const auto sol = solve_linear(m, b);
    REQUIRE(sol.has_value());
    for (std::size_t row = 0; row < r; ++row) CHECK(dot(m.row(row), *sol) == b[row]);
  }
}

TEST_CASE("nullspace vectors annihilate and match rank-nullity") {
  RatSampler s(15);
  for (int i = 0; i < 60; ++i) {
    const std::size_t r = 1 + s.index(4);
    const std::size_t c = 1 + s.index(4);
    const RMat m = random_matrix(s, r, c);
    const auto ns = nullspace(m);
    CHECK(ns.size() == c - rank(m));
    for (const RVec& v : ns) {
      for (std::size_t row = 0; row < r; ++row) CHECK(dot(m.row(row), v) == 0);
    }
  }
}

TEST_CASE("canonical_ray scales to coprime integers preserving direction") {
  CHECK(canonical_ray({make_rat(1, 2), Rat(0), make_rat(1, 2)}) == RVec{Rat(1), Rat(0), Rat(1)});
  CHECK(canonical_ray({make_rat(-2, 3), make_rat(4, 3)}) == RVec{Rat(-1), Rat(2)});
  CHECK(canonical_ray({Rat(0), Rat(0)}) == RVec{Rat(0), Rat(0)});
  CHECK(canonical_ray({Rat(6), Rat(-9)}) == RVec{Rat(2), Rat(-3)});
}
