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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rrobust/graph.hpp"
#include "rrobust/milp.hpp"
#include "rrobust/solver.hpp"

// High-level robustness determination on top of the model builders and the
// branch-and-bound solver. This layer owns the small-n and r = 0 conventions
// (the model builders themselves require n >= 2), re-verifies every
// certificate with exact integer arithmetic before reporting it, and turns
// incomplete solves into honest value brackets instead of point estimates.
// Stages that require exact inputs refuse to run on a bracket.

namespace rrobust {

// Closed integer interval proven to contain a quantity; collapsed (and
// flagged exact) when the solver finished.
struct ValueRange {
  long long lower = 0;
  long long upper = 0;
  bool exact = false;
};

// Condensed per-solve accounting for reports.
struct StageSummary {
  std::string name;
  SolveStatus status = SolveStatus::Optimal;
  std::optional<long long> optimum;    // present iff status == Optimal
  long long bound_floor = 0;           // ceil(best bound); 0 when Infeasible
  std::optional<long long> incumbent;  // best integer-feasible value found
  long long nodes = 0;
  double elapsed_seconds = 0;
};

// A disjoint pair witnessing an optimum, re-checked against the graph.
struct PartitionCertificate {
  VertexSubset s1;
  VertexSubset s2;
};

struct RmaxReport {
  ValueRange r;
  std::optional<PartitionCertificate> certificate;
  StageSummary stage;
};

struct SmaxReport {
  ValueRange s;
  bool convention = false;        // settled without a solve (r = 0 or n = 1)
  bool infeasible_model = false;  // separation model infeasible => s = n
  std::optional<PartitionCertificate> certificate;
  std::optional<StageSummary> stage;
};

struct RsReport {
  ValueRange r;
  std::optional<ValueRange> s;  // absent when r stayed a bracket
  bool shortcut_min_degree = false;  // dense in-degree rule settled s
  bool convention_r0 = false;        // (0, n) by convention
  std::optional<PartitionCertificate> r_certificate;
  std::optional<PartitionCertificate> s_certificate;
  std::vector<StageSummary> stages;
};

struct FmaxReport {
  std::optional<long long> value;  // absent when any stage stayed inexact
  std::vector<StageSummary> stages;
};

struct BoundsReport {
  ValueRange lower;  // value of the one-subset floor model
  ValueRange upper;  // value of the norm ceiling model
  std::optional<VertexSubset> lower_certificate;
  std::optional<VertexSubset> upper_certificate;
  StageSummary lower_stage;
  StageSummary upper_stage;
};

namespace detail {

inline long long q_to_ll(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_den() != 1)
    throw std::logic_error("expected an integer solver value");
  return c.get_num().get_si();
}

inline long long q_ceil(const mpq_class& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(),
             q.get_den().get_mpz_t());
  return out.get_si();
}

inline StageSummary summarize(std::string name, const SolveResult& res) {
  StageSummary s;
  s.name = std::move(name);
  s.status = res.status;
  if (res.status == SolveStatus::Optimal)
    s.optimum = q_to_ll(*res.incumbent_value);
  if (res.status != SolveStatus::Infeasible)
    s.bound_floor = q_ceil(res.best_bound);
  if (res.incumbent_value) s.incumbent = q_to_ll(*res.incumbent_value);
  s.nodes = res.nodes_explored;
  s.elapsed_seconds = res.elapsed_seconds;
  return s;
}

inline StageSummary convention_stage(std::string name, long long value) {
  StageSummary s;
  s.name = std::move(name);
  s.status = SolveStatus::Optimal;
  s.optimum = value;
  s.bound_floor = value;
  s.incumbent = value;
  return s;
}

// Decodes and replays an r_max-style witness: nonempty, disjoint, and its
// larger side reachability equals the reported objective value.
inline PartitionCertificate verified_pair_certificate(
    const Digraph& d, const ModelMeta& meta,
    const std::vector<mpq_class>& point, long long claimed) {
  PartitionCertificate cert{meta.decode_b1(point), meta.decode_b2(point)};
  if (cert.s1.empty() || cert.s2.empty() ||
      (cert.s1.bits & cert.s2.bits) != 0)
    throw std::logic_error("witness pair is not a disjoint nonempty pair");
  const int replay =
      std::max(reachability(d, cert.s1), reachability(d, cert.s2));
  if (replay != claimed)
    throw std::logic_error("witness reachability does not match the value");
  return cert;
}

// Decodes and replays a separation witness: neither side may be fully
// r-reachable, and the recomputed cost 1 + |X1| + |X2| must equal the
// claimed objective when it is optimal (it can only improve on an
// unproven incumbent).
inline PartitionCertificate verified_separation_certificate(
    const Digraph& d, const ModelMeta& meta,
    const std::vector<mpq_class>& point, long long claimed, bool optimal) {
  PartitionCertificate cert{meta.decode_b1(point), meta.decode_b2(point)};
  if (cert.s1.empty() || cert.s2.empty() ||
      (cert.s1.bits & cert.s2.bits) != 0)
    throw std::logic_error("witness pair is not a disjoint nonempty pair");
  const VertexSubset x1 = r_reachable_set(d, cert.s1, meta.r);
  const VertexSubset x2 = r_reachable_set(d, cert.s2, meta.r);
  if (x1.size() == cert.s1.size() || x2.size() == cert.s2.size())
    throw std::logic_error("witness pair has a fully reachable side");
  const long long replay = 1ll + x1.size() + x2.size();
  if (optimal ? replay != claimed : replay > claimed)
    throw std::logic_error("witness cost does not match the value");
  return cert;
}

// Replays a single-subset bound witness: the reported t must equal the
// relevant norm of the Laplacian image of the subset's indicator (the
// positive part for the floor model, the full infinity norm for the
// ceiling model).
inline VertexSubset verified_subset_certificate(
    const Laplacian& l, const ModelMeta& meta,
    const std::vector<mpq_class>& point, long long claimed, bool two_sided) {
  const VertexSubset s = meta.decode_b1(point);
  if (s.empty() || s.size() >= l.n)
    throw std::logic_error("witness subset is empty or everything");
  long long norm = 0;
  for (int i = 0; i < l.n; ++i) {
    long long dot = 0;
    for (int j = 0; j < l.n; ++j)
      if (s.contains(j + 1)) dot += l.at(i, j);
    norm = std::max(norm, two_sided && dot < 0 ? -dot : dot);
  }
  if (norm != claimed)
    throw std::logic_error("witness norm does not match the value");
  return s;
}

}  // namespace detail

// Largest r the graph is r-robust for. Exact when the solver completes; a
// time or node limit degrades the result to a proven bracket, flagged via
// exact = false. The certificate pair always replays to the reported
// incumbent through plain reachability.
inline RmaxReport r_max(const Digraph& d, const SolveConfig& cfg = {}) {
  RmaxReport rep;
  if (d.n() == 1) {  // the trivial graph is 1-robust by convention
    rep.r = {1, 1, true};
    rep.stage = detail::convention_stage("rmax", 1);
    return rep;
  }
  auto [p, meta] = build_rmax_milp(laplacian(d));
  const SolveResult res = solve(p, cfg);
  rep.stage = detail::summarize("rmax", res);
  if (res.status == SolveStatus::Infeasible)
    throw std::logic_error("partition model cannot be infeasible");
  if (res.status == SolveStatus::Optimal) {
    const long long v = *rep.stage.optimum;
    rep.r = {v, v, true};
  } else {
    const long long cap = (d.n() + 1) / 2;
    const long long lo = std::max(0ll, rep.stage.bound_floor);
    const long long hi = rep.stage.incumbent ? *rep.stage.incumbent : cap;
    rep.r = {std::min(lo, hi), hi, false};
  }
  if (res.incumbent_point)
    rep.certificate = detail::verified_pair_certificate(
        d, meta, *res.incumbent_point, *rep.stage.incumbent);
  return rep;
}

// Largest s the graph is (r, s)-robust for. r = 0 and n = 1 settle to n
// without a solve; an infeasible separation model means no pair can defeat
// (r, n), i.e. s = n.
inline SmaxReport s_max(const Digraph& d, int r, const SolveConfig& cfg = {}) {
  const int n = d.n();
  if (r < 0 || r > (n + 1) / 2)
    throw std::invalid_argument("r outside [0, ceil(n/2)]");
  SmaxReport rep;
  if (r == 0 || n == 1) {
    rep.s = {n, n, true};
    rep.convention = true;
    return rep;
  }
  auto [p, meta] = build_sbarmin_milp(laplacian(d), r);
  const SolveResult res = solve(p, cfg);
  rep.stage = detail::summarize("smax r=" + std::to_string(r), res);
  if (res.status == SolveStatus::Infeasible) {
    rep.s = {n, n, true};
    rep.infeasible_model = true;
    return rep;
  }
  if (res.status == SolveStatus::Optimal) {
    const long long v = *rep.stage->optimum - 1;  // s_max = sbar_min - 1
    rep.s = {v, v, true};
  } else {
    // The tree is unfinished: infeasibility (s = n) is still possible, so
    // only an incumbent can cap the value from above.
    const long long lo = std::max(0ll, rep.stage->bound_floor - 1);
    const long long hi = rep.stage->incumbent ? *rep.stage->incumbent - 1 : n;
    rep.s = {std::min(lo, hi), hi, false};
  }
  if (res.incumbent_point)
    rep.certificate = detail::verified_separation_certificate(
        d, meta, *res.incumbent_point, *rep.stage->incumbent,
        res.status == SolveStatus::Optimal);
  return rep;
}

// The lexicographically maximal robustness pair (r*, s*): r* = r_max and
// s* = s_max(r*). A dense-enough minimum in-degree settles s* = n without
// touching the separation model; when r_max stays a bracket the s stage
// refuses to run on inexact input.
inline RsReport rs_robustness(const Digraph& d, const SolveConfig& cfg = {}) {
  RsReport rep;
  RmaxReport rm = r_max(d, cfg);
  rep.r = rm.r;
  rep.r_certificate = std::move(rm.certificate);
  rep.stages.push_back(std::move(rm.stage));
  if (!rep.r.exact) return rep;

  const int n = d.n();
  const long long r = rep.r.lower;
  if (r == 0) {
    rep.s = ValueRange{n, n, true};
    rep.convention_r0 = true;
    return rep;
  }
  if (min_in_degree(d) >= n / 2 + r - 1) {
    rep.s = ValueRange{n, n, true};
    rep.shortcut_min_degree = true;
    return rep;
  }
  SmaxReport sm = s_max(d, int(r), cfg);
  rep.s = sm.s;
  rep.s_certificate = std::move(sm.certificate);
  if (sm.stage) rep.stages.push_back(std::move(*sm.stage));
  return rep;
}

// Largest F with the graph (F+1, F+1)-robust: walk r down from r_max until
// s_max(r) >= r. Every stage must be exact; otherwise the report carries no
// value and the caller sees which stage stalled.
inline FmaxReport f_max(const Digraph& d, const SolveConfig& cfg = {}) {
  FmaxReport rep;
  RmaxReport rm = r_max(d, cfg);
  rep.stages.push_back(std::move(rm.stage));
  if (!rm.r.exact) return rep;
  for (long long r = rm.r.lower; r > 0; --r) {
    SmaxReport sm = s_max(d, int(r), cfg);
    if (sm.stage) rep.stages.push_back(std::move(*sm.stage));
    if (!sm.s.exact) return rep;
    if (sm.s.lower >= r) {
      rep.value = r - 1;
      return rep;
    }
  }
  rep.value = 0;
  return rep;
}

// Cheap two-sided estimate of r_max from the single-subset models:
// lower.value <= r_max <= upper.value whenever both stages are exact, and
// the outer ends of the brackets still sandwich r_max when they are not.
inline BoundsReport r_max_bounds(const Digraph& d,
                                 const SolveConfig& cfg = {}) {
  BoundsReport rep;
  if (d.n() == 1) {
    rep.lower = {1, 1, true};
    rep.upper = {1, 1, true};
    rep.lower_stage = detail::convention_stage("rmax-floor", 1);
    rep.upper_stage = detail::convention_stage("rmax-ceiling", 1);
    return rep;
  }
  const Laplacian l = laplacian(d);

  auto run = [&](std::pair<MilpProblem, ModelMeta> model, const char* name,
                 long long cap, bool two_sided, ValueRange& range,
                 StageSummary& stage, std::optional<VertexSubset>& cert) {
    const SolveResult res = solve(model.first, cfg);
    stage = detail::summarize(name, res);
    if (res.status == SolveStatus::Infeasible)
      throw std::logic_error("bound model cannot be infeasible");
    if (res.status == SolveStatus::Optimal) {
      range = {*stage.optimum, *stage.optimum, true};
    } else {
      const long long lo = std::max(0ll, stage.bound_floor);
      const long long hi = stage.incumbent ? *stage.incumbent : cap;
      range = {std::min(lo, hi), hi, false};
    }
    if (res.incumbent_point)
      cert = detail::verified_subset_certificate(
          l, model.second, *res.incumbent_point, *stage.incumbent, two_sided);
  };

  run(build_lower_bound_milp(l), "rmax-floor", (d.n() + 1) / 2,
      /*two_sided=*/false, rep.lower, rep.lower_stage, rep.lower_certificate);
  run(build_upper_bound_milp(l), "rmax-ceiling", d.n() - 1,
      /*two_sided=*/true, rep.upper, rep.upper_stage, rep.upper_certificate);
  return rep;
}

}  // namespace rrobust
