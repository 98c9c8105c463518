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

#include "convexcomp/linalg.hpp"

#include <algorithm>

#include "convexcomp/errors.hpp"

namespace convexcomp {

namespace {

void require_same_dim(const RVec& a, const RVec& b, const char* op) {
  if (a.size() != b.size())
    throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()));
}

// Integer matrix with per-row denominators cleared; row scaling by a positive
// factor preserves rank and solution sets.
std::vector<std::vector<Int>> clear_denominators(const RMat& m, const RVec* rhs) {
  std::vector<std::vector<Int>> out(m.rows);
  const std::size_t n = m.cols + (rhs ? 1 : 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    Int l(1);
    for (std::size_t j = 0; j < m.cols; ++j) l = lcm(l, rat_den(m.at(i, j)));
    if (rhs) l = lcm(l, rat_den((*rhs)[i]));
    out[i].resize(n);
    for (std::size_t j = 0; j < m.cols; ++j) {
      const Rat& e = m.at(i, j);
      out[i][j] = rat_num(e) * (l / rat_den(e));
    }
    if (rhs) {
      const Rat& e = (*rhs)[i];
      out[i][m.cols] = rat_num(e) * (l / rat_den(e));
    }
  }
  return out;
}

struct BareissResult {
  std::vector<std::vector<Int>> m;       // echelon form
  std::vector<std::size_t> pivot_cols;   // one per pivot row, ascending
  std::size_t width = 0;
};

// Fraction-free elimination (Bareiss): all divisions are exact, keeping
// intermediate entries at determinant scale. `pivot_limit` restricts which
// columns may serve as pivots (the remaining columns are carried along, which
// is how the augmented right-hand side rides through solve_linear).
BareissResult bareiss(std::vector<std::vector<Int>> a, std::size_t pivot_limit) {
  BareissResult res;
  const std::size_t rows = a.size();
  res.width = rows ? a[0].size() : 0;
  Int prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < res.width; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.m = std::move(a);
  return res;
}

}  // namespace

RVec RMat::row(std::size_t r) const {
  RVec out(cols);
  for (std::size_t j = 0; j < cols; ++j) out[j] = at(r, j);
  return out;
}

RMat RMat::identity(std::size_t n) {
  RMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RMat RMat::from_rows(const std::vector<RVec>& rows_in, std::size_t cols) {
  RMat m(rows_in.size(), cols);
  for (std::size_t i = 0; i < rows_in.size(); ++i) {
    if (rows_in[i].size() != cols)
      throw DimensionMismatch("from_rows: row " + std::to_string(i) + " has dimension " +
                              std::to_string(rows_in[i].size()) + ", expected " +
                              std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows_in[i][j];
  }
  return m;
}

RMat RMat::transposed() const {
  RMat t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

RVec vadd(const RVec& a, const RVec& b) {
  require_same_dim(a, b, "vadd");
  RVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RVec vsub(const RVec& a, const RVec& b) {
  require_same_dim(a, b, "vsub");
  RVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RVec vscale(const Rat& s, const RVec& v) {
  RVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Rat dot(const RVec& a, const RVec& b) {
  require_same_dim(a, b, "dot");
  Rat acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero(const RVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RVec zero_vec(std::size_t n) { return RVec(n, Rat(0)); }

RVec unit_vec(std::size_t n, std::size_t i) {
  RVec v(n, Rat(0));
  v[i] = 1;
  return v;
}

RVec kron(const RVec& v, const RVec& w) {
  RVec out(v.size() * w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) out[i * w.size() + j] = v[i] * w[j];
  return out;
}

RVec kron_all(const std::vector<RVec>& factors) {
  RVec acc{Rat(1)};
  for (const RVec& f : factors) acc = kron(acc, f);
  return acc;
}

std::size_t rank(const RMat& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return bareiss(clear_denominators(m, nullptr), m.cols).pivot_cols.size();
}

std::size_t span_dim(const std::vector<RVec>& vs) {
  if (vs.empty()) return 0;
  return rank(RMat::from_rows(vs, vs[0].size()));
}

std::optional<RVec> solve_linear(const RMat& m, const RVec& b) {
  if (m.rows != b.size())
    throw DimensionMismatch("solve_linear: matrix has " + std::to_string(m.rows) +
                            " rows, rhs has dimension " + std::to_string(b.size()));
  BareissResult e = bareiss(clear_denominators(m, &b), m.cols);
  const std::size_t nr = e.pivot_cols.size();
  for (std::size_t i = nr; i < m.rows; ++i) {
    // A-part is fully eliminated below the pivots; a nonzero rhs is 0 = c.
    if (e.m[i][m.cols] != 0) return std::nullopt;
  }
  RVec x(m.cols, Rat(0));  // free variables fixed to zero
  for (std::size_t k = nr; k-- > 0;) {
    const std::size_t p = e.pivot_cols[k];
    Rat acc(e.m[k][m.cols]);
    for (std::size_t j = p + 1; j < m.cols; ++j) {
      if (e.m[k][j] != 0 && x[j] != 0) acc -= Rat(e.m[k][j]) * x[j];
    }
    x[p] = acc / Rat(e.m[k][p]);
  }
  return x;
}

std::vector<std::size_t> rref_inplace(RMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    const Rat inv = Rat(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rat f = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RVec> nullspace(const RMat& m) {
  RMat r = m;
  const std::vector<std::size_t> pivots = rref_inplace(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RVec> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    RVec v(m.cols, Rat(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

RVec canonical_ray(const RVec& v) {
  if (is_zero(v)) return v;
  Int l(1);
  for (const Rat& e : v) l = lcm(l, rat_den(e));
  Int g(0);
  std::vector<Int> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = rat_num(v[i]) * (l / rat_den(v[i]));
    g = gcd(g, ints[i]);
  }
  RVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
  return out;
}

std::vector<std::string> vec_to_strings(const RVec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rat& e : v) out.push_back(rat_to_string(e));
  return out;
}

std::string vec_to_string(const RVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

bool lex_string_less(const RVec& a, const RVec& b) {
  const auto sa = vec_to_strings(a);
  const auto sb = vec_to_strings(b);
  return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

}  // namespace convexcomp
