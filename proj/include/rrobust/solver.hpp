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

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rrobust/milp.hpp"

// Branch-and-bound solver for the zero-one models built in milp.hpp. All
// arithmetic is exact rational (GMP), so bounds and optima carry no rounding
// error and the gap at completion is exactly zero.
//
// The LP relaxations are solved by a dense two-phase primal simplex in
// dictionary form. Binary upper bounds become explicit rows; variables fixed
// by branching are substituted out before the LP is formed. Pivoting is
// deterministic: largest-improvement pricing with lowest-index ties, falling
// back to Bland's rule after a run of degenerate pivots so cycling is
// impossible. The search itself is single-threaded and fully reproducible.

namespace rrobust {

struct SolveConfig {
  std::optional<double> time_limit;    // wall-clock seconds
  // Must lie in (0, 0.5). With exact arithmetic no point is ever
  // misclassified, so the tolerance only exists for interface stability.
  double integrality_tolerance = 1e-9;
  std::optional<long long> node_limit;
  bool deterministic = true;           // single-threaded; kept as intent
  unsigned long long rng_seed = 0;     // reserved; no randomized choices
};

enum class SolveStatus { Optimal, Infeasible, TimeLimit, NodeLimit, Aborted };

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<mpq_class> incumbent_value;
  std::optional<std::vector<mpq_class>> incumbent_point;
  // Proven lower bound on the minimum; equals the incumbent when Optimal.
  // Not meaningful when status is Infeasible.
  mpq_class best_bound = 0;
  long long nodes_explored = 0;
  double elapsed_seconds = 0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  mpq_class value = 0;           // includes the objective offset
  std::vector<mpq_class> point;  // full column vector when Optimal
};

using SolveObserver =
    std::function<void(const mpq_class& best_bound,
                       const std::optional<mpq_class>& incumbent_value)>;

namespace detail {

inline int sgn_q(const mpq_class& v) { return mpq_sgn(v.get_mpq_t()); }

// gmpxx provides no long long overloads; the model coefficients fit in a
// long on every platform this builds for (LP64).
inline mpq_class q_of(long long v) { return mpq_class(static_cast<long>(v)); }

inline int cmp_q(const mpq_class& a, long long b) {
  return mpq_cmp_si(a.get_mpq_t(), static_cast<long>(b), 1);
}

// ---------------------------------------------------------------------------
// Dense exact-rational primal simplex on
//     min c.x + c0  s.t.  A x <= b,  x >= 0
// in dictionary form. Rows arrive already folded to <= by the caller.
// ---------------------------------------------------------------------------

struct LeProblem {
  int n = 0;                              // structural columns
  std::vector<std::vector<mpq_class>> a;  // m rows of n coefficients
  std::vector<mpq_class> b;
  std::vector<mpq_class> c;
  mpq_class c0 = 0;
};

class Simplex {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Simplex(const LeProblem& p,
                   std::optional<Clock::time_point> deadline = std::nullopt)
      : p_(p), deadline_(deadline) {}

  // After run(): true when the deadline cut the solve short, in which case
  // the returned status must be ignored.
  bool timed_out() const { return timed_out_; }

  LpStatus run(mpq_class& value, std::vector<mpq_class>& x) {
    build_phase1();
    minimize();  // bounded below by zero, cannot report unbounded
    if (timed_out_) return LpStatus::Infeasible;
    if (sgn_q(obj_const_) != 0) return LpStatus::Infeasible;
    evict_artificials();
    install_phase2_objective();
    if (!minimize()) return LpStatus::Unbounded;
    if (timed_out_) return LpStatus::Infeasible;
    x.assign(std::size_t(p_.n), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < p_.n) x[std::size_t(basis_[i])] = rhs_[i];
    value = p_.c0;
    for (int j = 0; j < p_.n; ++j)
      if (sgn_q(p_.c[std::size_t(j)]) != 0)
        value += p_.c[std::size_t(j)] * x[std::size_t(j)];
    return LpStatus::Optimal;
  }

 private:
  // Variable ids: [0, n) structural, [n, n+m) slacks, [n+m, ...) artificials.
  // Dictionary row i states: value(basis_[i]) = rhs_[i] minus the sum over
  // nonbasic columns k of rows_[i][k] * value(nonbasic_[k]). All rhs_ stay
  // nonnegative, which is exactly primal feasibility.
  const LeProblem& p_;
  std::optional<Clock::time_point> deadline_;
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<mpq_class> rhs_;
  std::vector<int> basis_;
  std::vector<int> nonbasic_;
  std::vector<mpq_class> obj_;  // objective coefficient per nonbasic column
  mpq_class obj_const_ = 0;
  int first_artificial_ = 0;
  int degenerate_streak_ = 0;
  long long pivots_ = 0;
  bool bland_ = false;
  bool timed_out_ = false;

  void build_phase1() {
    const int m = int(p_.a.size());
    const int n = p_.n;
    first_artificial_ = n + m;
    rows_.assign(std::size_t(m), {});
    rhs_.assign(std::size_t(m), 0);
    basis_.assign(std::size_t(m), 0);
    nonbasic_.clear();
    for (int j = 0; j < n; ++j) nonbasic_.push_back(j);
    // Rows with a negative right side start infeasible: they are negated and
    // receive a basic artificial, while their slack joins the nonbasic set.
    for (int i = 0; i < m; ++i)
      if (sgn_q(p_.b[std::size_t(i)]) < 0) nonbasic_.push_back(n + i);
    const std::size_t width = nonbasic_.size();
    int next_artificial = first_artificial_;
    for (int i = 0; i < m; ++i) {
      auto& row = rows_[std::size_t(i)];
      row.assign(width, 0);
      const bool neg = sgn_q(p_.b[std::size_t(i)]) < 0;
      for (int k = 0; k < n; ++k) {
        const mpq_class& aik = p_.a[std::size_t(i)][std::size_t(k)];
        if (sgn_q(aik) == 0) continue;
        row[std::size_t(k)] = neg ? mpq_class(-aik) : aik;
      }
      if (neg) {
        // a.x + s = b flips to t = -b + a.x + s, so in dictionary form the
        // structural coefficients negate and the slack enters with -1.
        for (std::size_t k = std::size_t(n); k < width; ++k)
          if (nonbasic_[k] == n + i) row[k] = -1;
        rhs_[std::size_t(i)] = -p_.b[std::size_t(i)];
        basis_[std::size_t(i)] = next_artificial++;
      } else {
        rhs_[std::size_t(i)] = p_.b[std::size_t(i)];
        basis_[std::size_t(i)] = n + i;
      }
    }
    // Phase-1 objective: the sum of the artificials, expressed over the
    // nonbasic columns by substituting each artificial's defining row.
    obj_.assign(width, 0);
    obj_const_ = 0;
    for (int i = 0; i < m; ++i) {
      if (basis_[std::size_t(i)] < first_artificial_) continue;
      obj_const_ += rhs_[std::size_t(i)];
      for (std::size_t k = 0; k < width; ++k)
        if (sgn_q(rows_[std::size_t(i)][k]) != 0)
          obj_[k] -= rows_[std::size_t(i)][k];
    }
    degenerate_streak_ = 0;
    bland_ = false;
  }

  // Phase 1 ended at zero, so any artificial still basic sits at value zero.
  // Pivot each one out on any genuine column; a row offering none is a
  // redundant identity and is dropped.
  void evict_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      int col = -1;
      for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
        if (nonbasic_[k] >= first_artificial_) continue;
        if (sgn_q(rows_[i][k]) != 0) {
          col = int(k);
          break;
        }
      }
      if (col >= 0) {
        pivot(int(i), col);
        ++i;
        continue;
      }
      rows_.erase(rows_.begin() + long(i));
      rhs_.erase(rhs_.begin() + long(i));
      basis_.erase(basis_.begin() + long(i));
    }
    // Strip the artificial columns so later pricing never sees them.
    for (std::size_t k = nonbasic_.size(); k-- > 0;) {
      if (nonbasic_[k] < first_artificial_) continue;
      nonbasic_.erase(nonbasic_.begin() + long(k));
      for (auto& row : rows_) row.erase(row.begin() + long(k));
    }
  }

  // z = c0 + c.x with the basic columns substituted out.
  void install_phase2_objective() {
    obj_.assign(nonbasic_.size(), 0);
    obj_const_ = 0;
    for (std::size_t k = 0; k < nonbasic_.size(); ++k)
      if (nonbasic_[k] < p_.n) obj_[k] = p_.c[std::size_t(nonbasic_[k])];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] >= p_.n) continue;
      const mpq_class& cb = p_.c[std::size_t(basis_[i])];
      if (sgn_q(cb) == 0) continue;
      obj_const_ += cb * rhs_[i];
      for (std::size_t k = 0; k < nonbasic_.size(); ++k)
        if (sgn_q(rows_[i][k]) != 0) obj_[k] -= cb * rows_[i][k];
    }
    degenerate_streak_ = 0;
    bland_ = false;
  }

  // Pivots until no improving column remains. Returns false exactly when an
  // unbounded improving direction is found (possible in phase 2 only).
  bool minimize() {
    for (;;) {
      if (deadline_ && (pivots_ & 63) == 0 && Clock::now() > *deadline_) {
        timed_out_ = true;
        return true;
      }
      // Artificials are never priced back in: any point with the banned
      // columns at zero stays reachable, which is all phase 1 needs.
      int enter = -1;
      if (bland_) {
        int best_var = std::numeric_limits<int>::max();
        for (std::size_t k = 0; k < nonbasic_.size(); ++k)
          if (nonbasic_[k] < first_artificial_ && sgn_q(obj_[k]) < 0 &&
              nonbasic_[k] < best_var) {
            best_var = nonbasic_[k];
            enter = int(k);
          }
      } else {
        const mpq_class* best = nullptr;
        int best_var = std::numeric_limits<int>::max();
        for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
          if (nonbasic_[k] >= first_artificial_ || sgn_q(obj_[k]) >= 0)
            continue;
          if (!best || obj_[k] < *best ||
              (obj_[k] == *best && nonbasic_[k] < best_var)) {
            best = &obj_[k];
            best_var = nonbasic_[k];
            enter = int(k);
          }
        }
      }
      if (enter < 0) return true;  // optimal
      // Ratio test: tightest row with a positive entry; ties go to the
      // lowest basis variable id, which is what Bland's rule requires.
      int leave = -1;
      mpq_class best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn_q(rows_[i][std::size_t(enter)]) <= 0) continue;
        mpq_class ratio = rhs_[i] / rows_[i][std::size_t(enter)];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[std::size_t(leave)])) {
          best_ratio = std::move(ratio);
          leave = int(i);
        }
      }
      if (leave < 0) return false;  // unbounded direction
      const bool degenerate = sgn_q(rhs_[std::size_t(leave)]) == 0;
      pivot(leave, enter);
      ++pivots_;
      if (degenerate) {
        if (++degenerate_streak_ > 64) bland_ = true;
      } else {
        degenerate_streak_ = 0;
      }
    }
  }

  void pivot(int row, int col) {
    std::vector<mpq_class>& pr = rows_[std::size_t(row)];
    const mpq_class alpha = pr[std::size_t(col)];
    // Rewrite the pivot row as the definition of the entering variable:
    //   x_enter = rhs/alpha - sum (coef/alpha) x_other - (1/alpha) x_leave.
    for (auto& v : pr)
      if (sgn_q(v) != 0) v /= alpha;
    pr[std::size_t(col)] = 1 / alpha;
    rhs_[std::size_t(row)] /= alpha;
    std::swap(basis_[std::size_t(row)], nonbasic_[std::size_t(col)]);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (int(i) == row) continue;
      mpq_class f = rows_[i][std::size_t(col)];
      if (sgn_q(f) == 0) continue;
      rows_[i][std::size_t(col)] = 0;
      for (std::size_t k = 0; k < pr.size(); ++k)
        if (sgn_q(pr[k]) != 0) rows_[i][k] -= f * pr[k];
      rhs_[i] -= f * rhs_[std::size_t(row)];
    }
    mpq_class f = obj_[std::size_t(col)];
    if (sgn_q(f) != 0) {
      obj_[std::size_t(col)] = 0;
      for (std::size_t k = 0; k < pr.size(); ++k)
        if (sgn_q(pr[k]) != 0) obj_[k] -= f * pr[k];
      obj_const_ += f * rhs_[std::size_t(row)];
    }
  }
};

// ---------------------------------------------------------------------------
// Model-to-LP lowering under branching fixings.
// ---------------------------------------------------------------------------

// fix[k]: -1 free, 0/1 pinned; indexed over the binary columns only.
using Fixings = std::vector<signed char>;

// Folds the problem plus fixings into <=-only form over the free columns.
// Returns false when a fully substituted row turns contradictory.
inline bool lower_to_le(const MilpProblem& p, const Fixings& fix,
                        LeProblem& out, std::vector<int>& free_cols) {
  const int base = p.num_continuous;
  free_cols.clear();
  for (int c = 0; c < base; ++c) free_cols.push_back(c);
  for (int k = 0; k < p.num_binary; ++k)
    if (fix[std::size_t(k)] < 0) free_cols.push_back(base + k);
  std::vector<int> col_of(std::size_t(p.num_cols()), -1);
  for (std::size_t j = 0; j < free_cols.size(); ++j)
    col_of[std::size_t(free_cols[j])] = int(j);

  out.n = int(free_cols.size());
  out.a.clear();
  out.b.clear();
  out.c.assign(std::size_t(out.n), 0);
  out.c0 = q_of(p.objective_offset);
  for (int c = 0; c < p.num_cols(); ++c) {
    const long long w = p.objective[std::size_t(c)];
    if (w == 0) continue;
    const int j = col_of[std::size_t(c)];
    if (j >= 0)
      out.c[std::size_t(j)] = q_of(w);
    else
      out.c0 += q_of(w) * int(fix[std::size_t(c - base)]);
  }

  std::vector<mpq_class> coef;
  for (const Row& row : p.rows) {
    coef.assign(std::size_t(out.n), 0);
    mpq_class rhs = q_of(row.rhs);
    bool any = false;
    for (int c = 0; c < p.num_cols(); ++c) {
      const long long w = row.coef[std::size_t(c)];
      if (w == 0) continue;
      const int j = col_of[std::size_t(c)];
      if (j >= 0) {
        coef[std::size_t(j)] = q_of(w);
        any = true;
      } else {
        rhs -= q_of(w) * int(fix[std::size_t(c - base)]);
      }
    }
    if (!any) {  // fully substituted: verify and drop
      const int s = sgn_q(rhs);
      const bool ok = row.rel == Rel::LessEq      ? s >= 0
                      : row.rel == Rel::GreaterEq ? s <= 0
                                                  : s == 0;
      if (!ok) return false;
      continue;
    }
    switch (row.rel) {
      case Rel::LessEq:
        out.a.push_back(coef);
        out.b.push_back(rhs);
        break;
      case Rel::GreaterEq:
        for (auto& v : coef) v = -v;
        out.a.push_back(coef);
        out.b.push_back(-rhs);
        break;
      case Rel::Equal:
        out.a.push_back(coef);
        out.b.push_back(rhs);
        for (auto& v : coef) v = -v;
        out.a.push_back(std::move(coef));
        out.b.push_back(-rhs);
        break;
    }
  }
  // Upper bounds of the free binaries become explicit rows; the continuous
  // columns in this model family are nonnegative with no ceiling.
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    if (free_cols[j] < base) continue;
    coef.assign(std::size_t(out.n), 0);
    coef[j] = 1;
    out.a.push_back(coef);
    out.b.push_back(1);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exact candidate checking shared by the heuristic and incumbent updates.
// ---------------------------------------------------------------------------

inline bool exact_feasible(const MilpProblem& p,
                           const std::vector<mpq_class>& x) {
  for (const Row& row : p.rows) {
    mpq_class dot = 0;
    for (int c = 0; c < p.num_cols(); ++c)
      if (row.coef[std::size_t(c)] != 0)
        dot += q_of(row.coef[std::size_t(c)]) * x[std::size_t(c)];
    const int cmp = cmp_q(dot, row.rhs);
    if (row.rel == Rel::LessEq && cmp > 0) return false;
    if (row.rel == Rel::GreaterEq && cmp < 0) return false;
    if (row.rel == Rel::Equal && cmp != 0) return false;
  }
  for (int c = 0; c < p.num_cols(); ++c) {
    const VarBound& vb = p.bounds[std::size_t(c)];
    if (cmp_q(x[std::size_t(c)], vb.lower) < 0) return false;
    if (vb.upper && cmp_q(x[std::size_t(c)], *vb.upper) > 0) return false;
    if (vb.integral) {
      mpq_class v = x[std::size_t(c)];
      v.canonicalize();
      if (v.get_den() != 1) return false;
    }
  }
  return true;
}

inline mpq_class objective_of(const MilpProblem& p,
                              const std::vector<mpq_class>& x) {
  mpq_class v = q_of(p.objective_offset);
  for (int c = 0; c < p.num_cols(); ++c)
    if (p.objective[std::size_t(c)] != 0)
      v += q_of(p.objective[std::size_t(c)]) * x[std::size_t(c)];
  return v;
}

// Recognizes problems whose optimum over any all-integer binary assignment
// is itself an integer: each continuous column has a nonnegative objective
// weight and only ever appears with coefficient -1 in <= rows (so its
// cheapest feasible value is an integer row excess), and no row couples two
// continuous columns. Every model built in milp.hpp qualifies. This is what
// licenses pruning on ceil(bound) against an integral incumbent.
inline bool integral_optimum_family(const MilpProblem& p) {
  for (int c = 0; c < p.num_continuous; ++c)
    if (p.objective[std::size_t(c)] < 0) return false;
  for (const Row& row : p.rows) {
    int touched = 0;
    for (int c = 0; c < p.num_continuous; ++c) {
      const long long w = row.coef[std::size_t(c)];
      if (w == 0) continue;
      ++touched;
      if (row.rel != Rel::LessEq || w != -1) return false;
    }
    if (touched > 1) return false;
  }
  return true;
}

// Prune test: no point of the subtree can beat the incumbent. When the
// objective is integral over the subtree and the incumbent is an integer,
// ceil(bound) >= incumbent suffices, i.e. bound > incumbent - 1.
inline bool bound_cannot_improve(const mpq_class& bound,
                                 const mpq_class& incumbent,
                                 bool integral_objective) {
  if (bound >= incumbent) return true;
  if (!integral_objective) return false;
  mpq_class inc = incumbent;
  inc.canonicalize();
  if (inc.get_den() != 1) return false;
  return bound > incumbent - 1;
}

// Rounds the binary part of an LP point at 1/2, then re-derives each
// continuous column at its cheapest feasible value. Returns a fully checked
// candidate or nothing.
inline std::optional<std::vector<mpq_class>> round_and_repair(
    const MilpProblem& p, const std::vector<mpq_class>& lp_point) {
  std::vector<mpq_class> x(lp_point);
  for (int k = 0; k < p.num_binary; ++k) {
    mpq_class& v = x[std::size_t(p.num_continuous + k)];
    v = (2 * v >= 1) ? 1 : 0;
  }
  for (int c = 0; c < p.num_continuous; ++c) {
    mpq_class lo = q_of(p.bounds[std::size_t(c)].lower);
    std::optional<mpq_class> hi;
    if (p.bounds[std::size_t(c)].upper)
      hi = q_of(*p.bounds[std::size_t(c)].upper);
    for (const Row& row : p.rows) {
      const long long w = row.coef[std::size_t(c)];
      if (w == 0) continue;
      if (row.rel == Rel::Equal) return std::nullopt;
      mpq_class rest = 0;
      for (int d = 0; d < p.num_cols(); ++d) {
        if (d == c || row.coef[std::size_t(d)] == 0) continue;
        if (d < p.num_continuous) return std::nullopt;  // coupled columns
        rest += q_of(row.coef[std::size_t(d)]) * x[std::size_t(d)];
      }
      mpq_class limit = (q_of(row.rhs) - rest) / q_of(w);
      const bool is_ceiling = (row.rel == Rel::LessEq) == (w > 0);
      if (is_ceiling) {
        if (!hi || limit < *hi) hi = std::move(limit);
      } else if (limit > lo) {
        lo = std::move(limit);
      }
    }
    if (hi && lo > *hi) return std::nullopt;
    x[std::size_t(c)] = lo;
  }
  if (!exact_feasible(p, x)) return std::nullopt;
  return x;
}

// ---------------------------------------------------------------------------
// Interval propagation over the fixings (cheap node preprocessing).
// ---------------------------------------------------------------------------

// Tightens `fix` in place using row activity bounds; returns false on a
// proven empty node. A continuous column contributes [0, +inf) scaled by its
// sign, which simply disables the affected side of its rows.
inline bool propagate(const MilpProblem& p, Fixings& fix) {
  const int base = p.num_continuous;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Row& row : p.rows) {
      bool min_open = false, max_open = false;
      long long minact = 0, maxact = 0;
      for (int c = 0; c < base; ++c) {
        const long long w = row.coef[std::size_t(c)];
        if (w > 0) max_open = true;
        if (w < 0) min_open = true;
      }
      for (int k = 0; k < p.num_binary; ++k) {
        const long long w = row.coef[std::size_t(base + k)];
        if (w == 0) continue;
        if (fix[std::size_t(k)] >= 0) {
          minact += w * fix[std::size_t(k)];
          maxact += w * fix[std::size_t(k)];
        } else {
          minact += std::min(0ll, w);
          maxact += std::max(0ll, w);
        }
      }
      const bool le = row.rel != Rel::GreaterEq;
      const bool ge = row.rel != Rel::LessEq;
      if (le && !min_open && minact > row.rhs) return false;
      if (ge && !max_open && maxact < row.rhs) return false;
      for (int k = 0; k < p.num_binary; ++k) {
        if (fix[std::size_t(k)] >= 0) continue;
        const long long w = row.coef[std::size_t(base + k)];
        if (w == 0) continue;
        if (le && !min_open) {
          if (w > 0 && minact + w > row.rhs) {  // cannot afford value 1
            fix[std::size_t(k)] = 0;
            changed = true;
            continue;
          }
          if (w < 0 && minact - w > row.rhs) {  // cannot afford value 0
            fix[std::size_t(k)] = 1;
            changed = true;
            continue;
          }
        }
        if (ge && !max_open) {
          if (w > 0 && maxact - w < row.rhs) {
            fix[std::size_t(k)] = 1;
            changed = true;
            continue;
          }
          if (w < 0 && maxact + w < row.rhs) {
            fix[std::size_t(k)] = 0;
            changed = true;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace detail

// Solves the LP relaxation: integrality dropped, bounds and rows kept.
inline LpResult lp_relax(const MilpProblem& p) {
  validate(p);
  detail::LeProblem le;
  std::vector<int> free_cols;
  detail::Fixings fix(std::size_t(p.num_binary), -1);
  LpResult out;
  if (!detail::lower_to_le(p, fix, le, free_cols)) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  detail::Simplex simplex(le);
  std::vector<mpq_class> x;
  out.status = simplex.run(out.value, x);
  if (out.status == LpStatus::Optimal) {
    out.point.assign(std::size_t(p.num_cols()), 0);
    for (std::size_t j = 0; j < free_cols.size(); ++j)
      out.point[std::size_t(free_cols[j])] = x[j];
  } else {
    out.value = 0;
  }
  return out;
}

// Branch-and-bound search with an observer for anytime consumption. The
// observer fires on every improvement of the proven bound or the incumbent;
// the bound sequence is nondecreasing and the incumbent sequence
// nonincreasing. An exception thrown by the observer aborts the search with
// status Aborted, keeping whatever was proven so far.
inline SolveResult solve_anytime(const MilpProblem& p, const SolveConfig& cfg,
                                 const SolveObserver& observer) {
  validate(p);
  if (!(cfg.integrality_tolerance > 0 && cfg.integrality_tolerance < 0.5))
    throw std::invalid_argument("integrality tolerance outside (0, 0.5)");

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (cfg.time_limit)
    deadline = start + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(*cfg.time_limit));
  auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  struct Node {
    mpq_class bound;  // inherited lower bound for the subtree
    long long seq = 0;
    detail::Fixings fix;
  };
  struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
      const int c = mpq_cmp(a.bound.get_mpq_t(), b.bound.get_mpq_t());
      if (c != 0) return c < 0;
      return a.seq < b.seq;
    }
  };

  SolveResult res;
  bool aborted = false;
  const bool integral_objective = detail::integral_optimum_family(p);

  std::optional<mpq_class> reported_bound;
  std::optional<mpq_class> reported_incumbent;
  auto notify = [&](const mpq_class& bound) {
    const bool bound_moved = !reported_bound || bound > *reported_bound;
    const bool incumbent_moved =
        res.incumbent_value &&
        (!reported_incumbent || *res.incumbent_value < *reported_incumbent);
    if (!bound_moved && !incumbent_moved) return;
    if (bound_moved) reported_bound = bound;
    if (incumbent_moved) reported_incumbent = res.incumbent_value;
    if (!observer) return;
    try {
      observer(*reported_bound, res.incumbent_value);
    } catch (...) {
      aborted = true;
    }
  };

  auto accept_candidate = [&](const std::vector<mpq_class>& x) {
    mpq_class v = detail::objective_of(p, x);
    if (res.incumbent_value && v >= *res.incumbent_value) return;
    res.incumbent_value = std::move(v);
    res.incumbent_point = x;
  };

  std::multiset<Node, NodeOrder> pool;
  long long next_seq = 0;
  {
    Node root;
    root.bound = detail::q_of(p.objective_offset);  // root LP sharpens this
    root.seq = next_seq++;
    root.fix.assign(std::size_t(p.num_binary), -1);
    pool.insert(std::move(root));
  }
  std::optional<Node> current;
  // The proven global bound is the least bound among open nodes; once the
  // tree empties it snaps to the incumbent. mpq has no infinity, so the
  // empty case is an empty optional.
  auto open_bound = [&](const Node* in_hand) -> std::optional<mpq_class> {
    std::optional<mpq_class> b;
    if (!pool.empty()) b = pool.begin()->bound;
    if (in_hand && (!b || in_hand->bound < *b)) b = in_hand->bound;
    return b;
  };
  // Reports the tightest current knowledge after a node was closed or
  // branched; falls back to the incumbent once nothing remains open.
  auto notify_progress = [&] {
    if (auto b = open_bound(current ? &*current : nullptr))
      notify(*b);
    else if (res.incumbent_value)
      notify(*res.incumbent_value);
  };

  while (!aborted) {
    if (deadline && Clock::now() > *deadline) {
      res.status = SolveStatus::TimeLimit;
      break;
    }
    if (cfg.node_limit && res.nodes_explored >= *cfg.node_limit) {
      res.status = SolveStatus::NodeLimit;
      break;
    }
    if (!current) {
      if (pool.empty()) {
        res.status = res.incumbent_value ? SolveStatus::Optimal
                                         : SolveStatus::Infeasible;
        break;
      }
      auto handle = pool.extract(pool.begin());
      current = std::move(handle.value());
    }
    Node node = std::move(*current);
    current.reset();
    ++res.nodes_explored;

    // Inherited-bound pruning before any work on the node.
    if (res.incumbent_value &&
        detail::bound_cannot_improve(node.bound, *res.incumbent_value,
                                     integral_objective)) {
      notify_progress();
      continue;
    }
    if (!detail::propagate(p, node.fix)) {
      notify_progress();
      continue;
    }

    detail::LeProblem le;
    std::vector<int> free_cols;
    if (!detail::lower_to_le(p, node.fix, le, free_cols)) {
      notify_progress();
      continue;
    }
    detail::Simplex simplex(le, deadline);
    mpq_class lp_value;
    std::vector<mpq_class> lp_x;
    const LpStatus lp = simplex.run(lp_value, lp_x);
    if (simplex.timed_out()) {
      res.status = SolveStatus::TimeLimit;
      current = std::move(node);  // still open; keeps the bound honest
      break;
    }
    if (lp == LpStatus::Infeasible) {
      notify_progress();
      continue;
    }
    if (lp == LpStatus::Unbounded)
      throw std::runtime_error("relaxation unbounded below");
    node.bound = lp_value;

    if (res.incumbent_value &&
        detail::bound_cannot_improve(node.bound, *res.incumbent_value,
                                     integral_objective)) {
      notify_progress();
      continue;
    }

    // Full point in original column space.
    std::vector<mpq_class> point(std::size_t(p.num_cols()), 0);
    for (int k = 0; k < p.num_binary; ++k)
      if (node.fix[std::size_t(k)] >= 0)
        point[std::size_t(p.num_continuous + k)] =
            int(node.fix[std::size_t(k)]);
    for (std::size_t j = 0; j < free_cols.size(); ++j)
      point[std::size_t(free_cols[j])] = lp_x[j];

    // Cheap incumbent attempt at every node.
    if (auto cand = detail::round_and_repair(p, point))
      accept_candidate(*cand);

    // Most fractional binary, ties to the lowest index. No candidate means
    // the relaxation solved this subtree exactly.
    int branch_col = -1;
    mpq_class best_dist;
    for (int k = 0; k < p.num_binary; ++k) {
      const mpq_class& v = point[std::size_t(p.num_continuous + k)];
      if (v == 0 || v == 1) continue;
      mpq_class dist = abs(v - mpq_class(1, 2));
      if (branch_col < 0 || dist < best_dist) {
        best_dist = std::move(dist);
        branch_col = k;
      }
    }
    if (branch_col < 0) {
      if (detail::exact_feasible(p, point)) accept_candidate(point);
      notify_progress();
      continue;
    }

    // Children inherit the sharpened bound. Dive toward the rounded side
    // first and park the sibling in the best-bound pool.
    const bool up_first =
        2 * point[std::size_t(p.num_continuous + branch_col)] >= 1;
    Node down{node.bound, 0, node.fix};
    down.fix[std::size_t(branch_col)] = 0;
    Node up{node.bound, 0, std::move(node.fix)};
    up.fix[std::size_t(branch_col)] = 1;
    Node& dive = up_first ? up : down;
    Node& rest = up_first ? down : up;
    dive.seq = next_seq++;
    rest.seq = next_seq++;
    current = std::move(dive);
    pool.insert(std::move(rest));
    notify_progress();
  }

  if (aborted) res.status = SolveStatus::Aborted;
  if (res.status == SolveStatus::Optimal) {
    res.best_bound = *res.incumbent_value;
    notify(res.best_bound);
  } else if (auto b = open_bound(current ? &*current : nullptr)) {
    res.best_bound = *b;
  } else if (reported_bound) {
    res.best_bound = *reported_bound;
  }
  res.elapsed_seconds = elapsed();
  return res;
}

inline SolveResult solve(const MilpProblem& p, const SolveConfig& cfg = {}) {
  return solve_anytime(p, cfg, SolveObserver());
}

}  // namespace rrobust
