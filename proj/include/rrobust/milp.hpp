// Copyright 2026 The rrobust Authors
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

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrobust/graph.hpp"

// Mixed-integer linear models over the graph Laplacian. Four builders:
//
//   build_rmax_milp         exact r_max                (2n binaries + t)
//   build_sbarmin_milp      s_max(r) via the smallest s that fails  (5n bin)
//   build_lower_bound_milp  lower bound on r_max       (n binaries + t)
//   build_upper_bound_milp  upper bound on r_max       (n binaries + t)
//
// All coefficients are exact integers. Builders are pure; a MilpProblem is
// never mutated after construction.

namespace rrobust {

enum class Rel { LessEq, GreaterEq, Equal };

// One linear constraint: coef . x  (rel)  rhs, with a dense coefficient row
// over every declared column.
struct Row {
  std::vector<long long> coef;
  Rel rel = Rel::LessEq;
  long long rhs = 0;
};

struct VarBound {
  long long lower = 0;
  std::optional<long long> upper;  // empty = unbounded above
  bool integral = false;
};

// Minimization problem: min objective . x + objective_offset subject to the
// rows and per-column bounds. Continuous columns come first, binary columns
// after them; binary columns carry bounds [0,1] and the integrality flag.
struct MilpProblem {
  int num_continuous = 0;
  int num_binary = 0;
  std::vector<long long> objective;
  long long objective_offset = 0;
  std::vector<Row> rows;
  std::vector<VarBound> bounds;

  int num_cols() const { return num_continuous + num_binary; }
};

// Throws if the problem's internal sizes are inconsistent.
inline void validate(const MilpProblem& p) {
  const std::size_t cols = std::size_t(p.num_cols());
  if (p.num_continuous < 0 || p.num_binary < 0)
    throw std::invalid_argument("negative column count");
  if (p.objective.size() != cols)
    throw std::invalid_argument("objective length mismatch");
  if (p.bounds.size() != cols)
    throw std::invalid_argument("bounds length mismatch");
  for (const Row& row : p.rows)
    if (row.coef.size() != cols)
      throw std::invalid_argument("row length mismatch");
  for (int c = p.num_continuous; c < p.num_cols(); ++c) {
    const VarBound& b = p.bounds[std::size_t(c)];
    if (!b.integral || b.lower != 0 || !b.upper || *b.upper != 1)
      throw std::invalid_argument("binary column without [0,1] bounds");
  }
}

enum class ModelKind { RMax, SBarMin, LowerBound, UpperBound };

// Half-open run of columns [first, first + count).
struct ColumnSlice {
  int first = 0;
  int count = 0;
};

// Maps solver columns back to the model's named blocks. The slices (plus
// t_col when present) partition the full column range. The s-bar block is a
// logical integer in [1, n+1] stored in unary: s_bar = 1 + sum of its
// columns, with chain rows keeping the block an initial segment of ones.
struct ModelMeta {
  ModelKind kind = ModelKind::RMax;
  int n = 0;
  int r = 0;  // only meaningful for SBarMin
  std::optional<int> t_col;
  ColumnSlice sbar_unary;  // SBarMin only
  ColumnSlice b1, b2, y1, y2;

  // Decode a 0/1 column block into a vertex subset (bit k of the slice is
  // vertex k+1). Works for any element type comparable against 0.
  template <class Vec>
  VertexSubset subset_at(const Vec& point, const ColumnSlice& s) const {
    VertexSubset out{n, 0};
    for (int k = 0; k < s.count; ++k)
      if (point[std::size_t(s.first + k)] != 0) out.bits |= 1ull << k;
    return out;
  }

  template <class Vec>
  VertexSubset decode_b1(const Vec& point) const {
    return subset_at(point, b1);
  }
  template <class Vec>
  VertexSubset decode_b2(const Vec& point) const {
    return subset_at(point, b2);
  }

  // s_bar as the logical integer value (SBarMin models only).
  template <class Vec>
  long long decode_sbar(const Vec& point) const {
    long long v = 1;
    for (int k = 0; k < sbar_unary.count; ++k)
      if (point[std::size_t(sbar_unary.first + k)] != 0) ++v;
    return v;
  }

  std::string col_name(int col) const {
    auto member = [col](const ColumnSlice& s) {
      return s.count > 0 && col >= s.first && col < s.first + s.count;
    };
    auto pos = [col](const ColumnSlice& s) { return col - s.first + 1; };
    std::ostringstream out;
    if (t_col && *t_col == col) return "t";
    if (member(sbar_unary))
      out << "u_" << pos(sbar_unary);
    else if (member(b1))
      out << (b2.count > 0 ? "b1_" : "b_") << pos(b1);
    else if (member(b2))
      out << "b2_" << pos(b2);
    else if (member(y1))
      out << "y1_" << pos(y1);
    else if (member(y2))
      out << "y2_" << pos(y2);
    else
      out << "x_" << (col + 1);
    return out.str();
  }
};

namespace detail {

inline void require_nontrivial(const Laplacian& l) {
  if (l.n < 2)
    throw std::invalid_argument("model needs at least two vertices");
}

inline VarBound continuous_nonneg() { return {0, std::nullopt, false}; }
inline VarBound binary() { return {0, 1, true}; }

// Appends the pair of rows encoding  1 <= sum of slice <= upper.
inline void append_cardinality_rows(MilpProblem& p, const ColumnSlice& s,
                                    long long upper) {
  Row lo{std::vector<long long>(std::size_t(p.num_cols()), 0),
         Rel::GreaterEq, 1};
  Row hi{std::vector<long long>(std::size_t(p.num_cols()), 0), Rel::LessEq,
         upper};
  for (int k = 0; k < s.count; ++k) {
    lo.coef[std::size_t(s.first + k)] = 1;
    hi.coef[std::size_t(s.first + k)] = 1;
  }
  p.rows.push_back(std::move(lo));
  p.rows.push_back(std::move(hi));
}

}  // namespace detail

// Exact r_max model. Columns: [t | b1 (n) | b2 (n)]; minimize t subject to
//   L b1 <= t 1,  L b2 <= t 1          (2n rows)
//   b1_j + b2_j <= 1                   (n rows)
//   1 <= sum b1 <= n-1                 (2 rows)
//   1 <= sum b2 <= n-1                 (2 rows)
// The optimum equals the largest r the graph is r-robust for; an optimal
// point decodes to a disjoint pair witnessing that r+1 fails.
inline std::pair<MilpProblem, ModelMeta> build_rmax_milp(const Laplacian& l) {
  detail::require_nontrivial(l);
  const int n = l.n;
  MilpProblem p;
  p.num_continuous = 1;
  p.num_binary = 2 * n;
  const std::size_t cols = std::size_t(p.num_cols());
  p.objective.assign(cols, 0);
  p.objective[0] = 1;
  p.bounds.assign(cols, detail::binary());
  p.bounds[0] = detail::continuous_nonneg();

  ModelMeta meta;
  meta.kind = ModelKind::RMax;
  meta.n = n;
  meta.t_col = 0;
  meta.b1 = {1, n};
  meta.b2 = {1 + n, n};

  for (const ColumnSlice& block : {meta.b1, meta.b2}) {
    for (int i = 0; i < n; ++i) {
      Row row{std::vector<long long>(cols, 0), Rel::LessEq, 0};
      row.coef[0] = -1;
      for (int j = 0; j < n; ++j)
        row.coef[std::size_t(block.first + j)] = l.at(i, j);
      p.rows.push_back(std::move(row));
    }
  }
  for (int j = 0; j < n; ++j) {
    Row row{std::vector<long long>(cols, 0), Rel::LessEq, 1};
    row.coef[std::size_t(meta.b1.first + j)] = 1;
    row.coef[std::size_t(meta.b2.first + j)] = 1;
    p.rows.push_back(std::move(row));
  }
  detail::append_cardinality_rows(p, meta.b1, n - 1);
  detail::append_cardinality_rows(p, meta.b2, n - 1);
  return {std::move(p), meta};
}

// Model for the smallest s at which (r, s) fails, for fixed r >= 1. Columns:
// [u (n, unary s_bar) | b1 | b2 | y1 | y2]; minimize 1 + sum u subject to
//   u_{k+1} <= u_k                       (n-1 rows, unary ordering)
//   sum y1 <= sum b1 - 1                 (1 row)
//   sum y2 <= sum b2 - 1                 (1 row)
//   sum y1 + sum y2 <= sum u             (1 row; right side is s_bar - 1)
//   L b1 - M y1 <= (r-1) 1               (n rows)
//   L b2 - M y2 <= (r-1) 1               (n rows)
//   b1_j + b2_j <= 1                     (n rows)
//   1 <= sum b1 <= n-1                   (2 rows)
//   1 <= sum b2 <= n-1                   (2 rows)
// M is the constant n. A row's slack constant only needs to cover that
// vertex's in-degree, so `tighten_big_m` shrinks M to max(|N_j|, 1) per row;
// both variants have the same feasible (b1, b2) projections and optimum.
// Infeasibility of the whole model means no pair fails at any s <= n, i.e.
// s_max(r) = n.
inline std::pair<MilpProblem, ModelMeta> build_sbarmin_milp(
    const Laplacian& l, int r, bool tighten_big_m = false) {
  detail::require_nontrivial(l);
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  const int n = l.n;
  MilpProblem p;
  p.num_continuous = 0;
  p.num_binary = 5 * n;
  const std::size_t cols = std::size_t(p.num_cols());
  p.objective.assign(cols, 0);
  p.objective_offset = 1;  // s_bar = 1 + sum u
  p.bounds.assign(cols, detail::binary());

  ModelMeta meta;
  meta.kind = ModelKind::SBarMin;
  meta.n = n;
  meta.r = r;
  meta.sbar_unary = {0, n};
  meta.b1 = {n, n};
  meta.b2 = {2 * n, n};
  meta.y1 = {3 * n, n};
  meta.y2 = {4 * n, n};

  for (int k = 0; k < n; ++k) p.objective[std::size_t(k)] = 1;

  for (int k = 0; k + 1 < n; ++k) {
    Row row{std::vector<long long>(cols, 0), Rel::LessEq, 0};
    row.coef[std::size_t(k + 1)] = 1;
    row.coef[std::size_t(k)] = -1;
    p.rows.push_back(std::move(row));
  }
  {
    Row row{std::vector<long long>(cols, 0), Rel::LessEq, -1};
    for (int j = 0; j < n; ++j) {
      row.coef[std::size_t(meta.y1.first + j)] = 1;
      row.coef[std::size_t(meta.b1.first + j)] = -1;
    }
    p.rows.push_back(std::move(row));
  }
  {
    Row row{std::vector<long long>(cols, 0), Rel::LessEq, -1};
    for (int j = 0; j < n; ++j) {
      row.coef[std::size_t(meta.y2.first + j)] = 1;
      row.coef[std::size_t(meta.b2.first + j)] = -1;
    }
    p.rows.push_back(std::move(row));
  }
  {
    Row row{std::vector<long long>(cols, 0), Rel::LessEq, 0};
    for (int j = 0; j < n; ++j) {
      row.coef[std::size_t(meta.y1.first + j)] = 1;
      row.coef[std::size_t(meta.y2.first + j)] = 1;
      row.coef[std::size_t(meta.sbar_unary.first + j)] = -1;
    }
    p.rows.push_back(std::move(row));
  }
  auto big_m = [&](int i) -> long long {
    if (!tighten_big_m) return n;
    return std::max<long long>(l.at(i, i), 1);  // diagonal is the in-degree
  };
  for (int block = 0; block < 2; ++block) {
    const ColumnSlice& b = block == 0 ? meta.b1 : meta.b2;
    const ColumnSlice& y = block == 0 ? meta.y1 : meta.y2;
    for (int i = 0; i < n; ++i) {
      Row row{std::vector<long long>(cols, 0), Rel::LessEq, r - 1};
      for (int j = 0; j < n; ++j)
        row.coef[std::size_t(b.first + j)] = l.at(i, j);
      row.coef[std::size_t(y.first + i)] = -big_m(i);
      p.rows.push_back(std::move(row));
    }
  }
  for (int j = 0; j < n; ++j) {
    Row row{std::vector<long long>(cols, 0), Rel::LessEq, 1};
    row.coef[std::size_t(meta.b1.first + j)] = 1;
    row.coef[std::size_t(meta.b2.first + j)] = 1;
    p.rows.push_back(std::move(row));
  }
  detail::append_cardinality_rows(p, meta.b1, n - 1);
  detail::append_cardinality_rows(p, meta.b2, n - 1);
  return {std::move(p), meta};
}

// Lower bound on r_max. Columns: [t | b (n)]; minimize t subject to
//   L b <= t 1,  1 <= sum b <= floor(n/2).
// Restricting to one subset of at most half the vertices can only lower the
// optimum relative to the exact pair model.
inline std::pair<MilpProblem, ModelMeta> build_lower_bound_milp(
    const Laplacian& l) {
  detail::require_nontrivial(l);
  const int n = l.n;
  MilpProblem p;
  p.num_continuous = 1;
  p.num_binary = n;
  const std::size_t cols = std::size_t(p.num_cols());
  p.objective.assign(cols, 0);
  p.objective[0] = 1;
  p.bounds.assign(cols, detail::binary());
  p.bounds[0] = detail::continuous_nonneg();

  ModelMeta meta;
  meta.kind = ModelKind::LowerBound;
  meta.n = n;
  meta.t_col = 0;
  meta.b1 = {1, n};

  for (int i = 0; i < n; ++i) {
    Row row{std::vector<long long>(cols, 0), Rel::LessEq, 0};
    row.coef[0] = -1;
    for (int j = 0; j < n; ++j) row.coef[std::size_t(1 + j)] = l.at(i, j);
    p.rows.push_back(std::move(row));
  }
  detail::append_cardinality_rows(p, meta.b1, n / 2);
  return {std::move(p), meta};
}

// Upper bound on r_max. Columns: [t | b (n)]; minimize t subject to
//   -t 1 <= L b <= t 1,  1 <= sum b <= n-1.
// The objective is the infinity norm of L b over bipartitions, which by the
// bipartition norm identity dominates the exact optimum.
inline std::pair<MilpProblem, ModelMeta> build_upper_bound_milp(
    const Laplacian& l) {
  detail::require_nontrivial(l);
  const int n = l.n;
  MilpProblem p;
  p.num_continuous = 1;
  p.num_binary = n;
  const std::size_t cols = std::size_t(p.num_cols());
  p.objective.assign(cols, 0);
  p.objective[0] = 1;
  p.bounds.assign(cols, detail::binary());
  p.bounds[0] = detail::continuous_nonneg();

  ModelMeta meta;
  meta.kind = ModelKind::UpperBound;
  meta.n = n;
  meta.t_col = 0;
  meta.b1 = {1, n};

  for (int i = 0; i < n; ++i) {  // L b <= t 1
    Row row{std::vector<long long>(cols, 0), Rel::LessEq, 0};
    row.coef[0] = -1;
    for (int j = 0; j < n; ++j) row.coef[std::size_t(1 + j)] = l.at(i, j);
    p.rows.push_back(std::move(row));
  }
  for (int i = 0; i < n; ++i) {  // -L b <= t 1
    Row row{std::vector<long long>(cols, 0), Rel::LessEq, 0};
    row.coef[0] = -1;
    for (int j = 0; j < n; ++j) row.coef[std::size_t(1 + j)] = -l.at(i, j);
    p.rows.push_back(std::move(row));
  }
  detail::append_cardinality_rows(p, meta.b1, n - 1);
  return {std::move(p), meta};
}

// Plain-text rendering in LP format for eyeballing or feeding to an external
// solver. Integer coefficients are printed exactly, never in exponent
// notation. The constant objective offset, which LP format cannot express,
// is emitted as a comment.
inline std::string to_lp_text(const MilpProblem& p, const ModelMeta& meta) {
  std::ostringstream out;
  auto term = [&](std::ostream& os, long long c, int col, bool first) {
    if (first) {
      if (c == -1)
        os << "- ";
      else if (c != 1)
        os << c << " ";
    } else {
      os << (c < 0 ? " - " : " + ");
      long long a = c < 0 ? -c : c;
      if (a != 1) os << a << " ";
    }
    os << meta.col_name(col);
  };
  out << "\\ columns: " << p.num_continuous << " continuous, " << p.num_binary
      << " binary\n";
  if (p.objective_offset != 0)
    out << "\\ objective carries a constant offset of " << p.objective_offset
        << "\n";
  out << "Minimize\n obj:";
  bool first = true;
  for (int c = 0; c < p.num_cols(); ++c) {
    if (p.objective[std::size_t(c)] == 0) continue;
    if (first) out << " ";
    term(out, p.objective[std::size_t(c)], c, first);
    first = false;
  }
  if (first) out << " 0 " << meta.col_name(0);
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const Row& row = p.rows[i];
    out << " c" << (i + 1) << ":";
    first = true;
    for (int c = 0; c < p.num_cols(); ++c) {
      if (row.coef[std::size_t(c)] == 0) continue;
      if (first) out << " ";
      term(out, row.coef[std::size_t(c)], c, first);
      first = false;
    }
    if (first) out << " 0 " << meta.col_name(0);
    switch (row.rel) {
      case Rel::LessEq: out << " <= "; break;
      case Rel::GreaterEq: out << " >= "; break;
      case Rel::Equal: out << " = "; break;
    }
    out << row.rhs << "\n";
  }
  out << "Bounds\n";
  for (int c = 0; c < p.num_continuous; ++c) {
    const VarBound& b = p.bounds[std::size_t(c)];
    out << " " << meta.col_name(c) << " >= " << b.lower;
    if (b.upper) out << "\n " << meta.col_name(c) << " <= " << *b.upper;
    out << "\n";
  }
  if (p.num_binary > 0) {
    out << "Binaries\n";
    for (int c = p.num_continuous; c < p.num_cols(); ++c)
      out << " " << meta.col_name(c);
    out << "\n";
  }
  out << "End\n";
  return out.str();
}

}  // namespace rrobust
