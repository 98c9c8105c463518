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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convexcomp/rational.hpp"

namespace convexcomp {

/// Exact rational vector.
using RVec = std::vector<Rat>;

/// Dense row-major rational matrix.
struct RMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> entries;  // rows * cols, row-major

  RMat() = default;
  RMat(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Rat& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  RVec row(std::size_t r) const;

  static RMat identity(std::size_t n);
  /// Stacks the given vectors as rows. Throws DimensionMismatch on ragged input.
  static RMat from_rows(const std::vector<RVec>& rows_in, std::size_t cols);
  RMat transposed() const;
};

// Vector arithmetic. Dimension mismatches throw DimensionMismatch.
RVec vadd(const RVec& a, const RVec& b);
RVec vsub(const RVec& a, const RVec& b);
RVec vscale(const Rat& s, const RVec& v);
Rat dot(const RVec& a, const RVec& b);
bool is_zero(const RVec& v);
RVec zero_vec(std::size_t n);
RVec unit_vec(std::size_t n, std::size_t i);

/// Tensor (Kronecker) product with the left factor on the slow index:
/// result[i*d2 + j] = v[i]*w[j]. n-fold products fold left.
RVec kron(const RVec& v, const RVec& w);
RVec kron_all(const std::vector<RVec>& factors);

/// Exact rank over the rationals via fraction-free (Bareiss) elimination.
std::size_t rank(const RMat& m);

/// Dimension of the span of the given vectors; 0 for an empty list.
std::size_t span_dim(const std::vector<RVec>& vs);

/// Exact solution x of m*x = b, or nullopt when the system is inconsistent.
/// When the solution set is a proper affine subspace, free variables are fixed
/// to zero, so the result is deterministic.
std::optional<RVec> solve_linear(const RMat& m, const RVec& b);

/// Basis of the nullspace of m, via rational Gauss-Jordan. Deterministic:
/// one basis vector per free column, in column order.
std::vector<RVec> nullspace(const RMat& m);

/// Reduced row echelon form; returns the pivot columns. Independent of the
/// Bareiss path (used to cross-check ranks).
std::vector<std::size_t> rref_inplace(RMat& m);

/// Scale a direction vector to coprime integer entries, preserving
/// orientation. The zero vector is returned unchanged.
RVec canonical_ray(const RVec& v);

std::vector<std::string> vec_to_strings(const RVec& v);
std::string vec_to_string(const RVec& v);

/// Lexicographic order on the "p/q" string forms of the coordinates; the
/// order used for all serialized vertex lists.
bool lex_string_less(const RVec& a, const RVec& b);

}  // namespace convexcomp
