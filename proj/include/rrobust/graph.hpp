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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Graph representation, Laplacian construction, and the reachability /
// subset-enumeration calculus everything else is built on.
//
// Vertices are numbered 1..n at I/O boundaries and 0..n-1 internally.
// Subsets are fixed-width 64-bit masks, so n <= 64; extending past that
// means swapping the mask type for a dynamic bitset, nothing else changes.

namespace rrobust {

inline constexpr int kMaxVertices = 64;

// A subset of {0,..,n-1} stored as a bitmask.
struct VertexSubset {
  int n = 0;
  std::uint64_t bits = 0;

  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(int v) const { return (bits >> (v - 1)) & 1u; }  // 1-based

  static VertexSubset full(int n) {
    return {n, n >= 64 ? ~0ull : ((1ull << n) - 1)};
  }

  // Build from 1-based vertex ids.
  static VertexSubset of(int n, const std::vector<int>& vertices) {
    VertexSubset s{n, 0};
    for (int v : vertices) {
      if (v < 1 || v > n) throw std::invalid_argument("vertex id out of range");
      s.bits |= 1ull << (v - 1);
    }
    return s;
  }

  // Members as sorted 1-based vertex ids.
  std::vector<int> vertices() const {
    std::vector<int> out;
    for (std::uint64_t m = bits; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend bool operator==(const VertexSubset& a, const VertexSubset& b) {
    return a.n == b.n && a.bits == b.bits;
  }
};

// Simple digraph given by per-vertex in-neighbor sets. Immutable once built.
class Digraph {
 public:
  // Edges are 1-based ordered pairs (i, j) meaning i -> j. Duplicates
  // collapse; self-loops and out-of-range ids are rejected.
  static Digraph from_edge_list(int n,
                                const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    if (n > kMaxVertices)
      throw std::invalid_argument("vertex count exceeds bitmask width (64)");
    Digraph d;
    d.n_ = n;
    d.in_.assign(n, 0);
    for (auto [i, j] : edges) {
      if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("edge endpoint out of range");
      if (i == j) throw std::invalid_argument("self-loops are not allowed");
      d.in_[j - 1] |= 1ull << (i - 1);
    }
    return d;
  }

  int n() const { return n_; }

  // In-neighbors of 1-based vertex j, as a mask over bits 0..n-1.
  std::uint64_t in_mask(int j) const { return in_[j - 1]; }

  int in_degree(int j) const { return std::popcount(in_[j - 1]); }

  bool has_edge(int i, int j) const {  // 1-based
    return (in_[j - 1] >> (i - 1)) & 1u;
  }

  // Edges as sorted 1-based pairs (canonical serialization order).
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if ((in_[j] >> i) & 1u) out.emplace_back(i + 1, j + 1);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (auto m : in_) c += std::popcount(m);
    return c;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> in_;
};

inline int min_in_degree(const Digraph& d) {
  int m = d.n();  // in-degree can be at most n-1, so this starts above it
  for (int j = 1; j <= d.n(); ++j) m = std::min(m, d.in_degree(j));
  return m;
}

// Dense integer Laplacian: row j has |N_j| on the diagonal and -1 at the
// in-neighbors of j. Every row sums to zero.
struct Laplacian {
  int n = 0;
  std::vector<long long> m;  // row-major n*n

  long long at(int i, int j) const { return m[std::size_t(i) * n + j]; }
};

inline Laplacian laplacian(const Digraph& d) {
  Laplacian l;
  l.n = d.n();
  l.m.assign(std::size_t(l.n) * l.n, 0);
  for (int j = 0; j < l.n; ++j) {
    l.m[std::size_t(j) * l.n + j] = d.in_degree(j + 1);
    for (std::uint64_t nb = d.in_mask(j + 1); nb != 0; nb &= nb - 1)
      l.m[std::size_t(j) * l.n + std::countr_zero(nb)] = -1;
  }
  return l;
}

// 0/1 indicator vector of S (length n), and its inverse.
inline std::vector<int> indicator(const VertexSubset& s) {
  std::vector<int> v(s.n, 0);
  for (int j = 0; j < s.n; ++j) v[j] = s.contains(j + 1) ? 1 : 0;
  return v;
}

inline VertexSubset inverse_indicator(const std::vector<int>& v) {
  if (v.size() > kMaxVertices)
    throw std::invalid_argument("indicator vector too long");
  VertexSubset s{int(v.size()), 0};
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0 && v[j] != 1)
      throw std::invalid_argument("indicator entries must be 0 or 1");
    if (v[j]) s.bits |= 1ull << j;
  }
  return s;
}

// Reachability of S: the largest count of in-neighbors outside S that any
// member of S has (0 for the empty set and for the full vertex set).
inline int reachability(const Digraph& d, const VertexSubset& s) {
  int best = 0;
  for (std::uint64_t m = s.bits; m != 0; m &= m - 1) {
    int j = std::countr_zero(m);
    best = std::max(best, std::popcount(d.in_mask(j + 1) & ~s.bits));
  }
  return best;
}

// Same value computed through the Laplacian: max_j L_j * indicator(S).
// Rows of members contribute |N_j \ S| >= 0, rows of non-members contribute
// -|N_j inter S| <= 0, so the max over all rows picks out the member max.
inline int reachability_via_laplacian(const Laplacian& l,
                                      const VertexSubset& s) {
  long long best = 0;  // the all-rows max is 0 when S is empty or full
  for (int i = 0; i < l.n; ++i) {
    long long dot = 0;
    for (int j = 0; j < l.n; ++j)
      if (s.contains(j + 1)) dot += l.at(i, j);
    best = std::max(best, dot);
  }
  return int(best);
}

// Members of S that have at least r in-neighbors outside S.
inline VertexSubset r_reachable_set(const Digraph& d, const VertexSubset& s,
                                    int r) {
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  VertexSubset x{s.n, 0};
  for (std::uint64_t m = s.bits; m != 0; m &= m - 1) {
    int j = std::countr_zero(m);
    if (std::popcount(d.in_mask(j + 1) & ~s.bits) >= r) x.bits |= 1ull << j;
  }
  return x;
}

// Stream of every ordered pair (S1, S2) of nonempty disjoint subsets of
// {1..n}, each exactly once, lexicographic by (S1 mask, S2 mask).
// Single-consumer.
class SubsetPairStream {
 public:
  explicit SubsetPairStream(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    if (n > kMaxVertices) throw std::invalid_argument("n exceeds 64");
    full_ = VertexSubset::full(n).bits;
  }

  bool next(VertexSubset& s1, VertexSubset& s2) {
    while (s1_ <= full_) {
      std::uint64_t comp = full_ & ~s1_;
      if (comp != 0) {
        // Ascending enumeration of submasks of comp: x -> (x - comp) & comp.
        s2_ = (s2_ - comp) & comp;
        if (s2_ != 0) {
          s1 = {n_, s1_};
          s2 = {n_, s2_};
          return true;
        }
      }
      ++s1_;   // s2_ is 0 again here, so the next complement restarts clean
      s2_ = 0;
    }
    return false;
  }

 private:
  int n_;
  std::uint64_t full_ = 0;
  std::uint64_t s1_ = 1;
  std::uint64_t s2_ = 0;
};

// Stream of the 2^n - 2 ordered bipartitions (S1, V \ S1), S1 proper and
// nonempty, ascending by S1 mask.
class BipartitionStream {
 public:
  explicit BipartitionStream(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    if (n > kMaxVertices) throw std::invalid_argument("n exceeds 64");
    full_ = VertexSubset::full(n).bits;
  }

  bool next(VertexSubset& s1, VertexSubset& s2) {
    if (s1_ >= full_) return false;
    s1 = {n_, s1_};
    s2 = {n_, full_ & ~s1_};
    ++s1_;
    return true;
  }

 private:
  int n_;
  std::uint64_t full_ = 0;
  std::uint64_t s1_ = 1;
};

// Number of ordered nonempty disjoint subset pairs:
//   sum_{p=2}^{n} C(n,p) * (2^p - 2).
// Throws on 64-bit overflow rather than wrapping.
inline unsigned long long count_subset_pairs(int n) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  auto checked_add = [](unsigned long long a, unsigned long long b) {
    unsigned long long r;
    if (__builtin_add_overflow(a, b, &r))
      throw std::overflow_error("subset pair count overflows 64 bits");
    return r;
  };
  auto checked_mul = [](unsigned long long a, unsigned long long b) {
    unsigned long long r;
    if (__builtin_mul_overflow(a, b, &r))
      throw std::overflow_error("subset pair count overflows 64 bits");
    return r;
  };
  unsigned long long total = 0;
  unsigned long long binom = (unsigned long long)n * (n - 1) / 2;  // C(n,2)
  unsigned long long pow2 = 4;                                     // 2^2
  for (int p = 2; p <= n; ++p) {
    total = checked_add(total, checked_mul(binom, pow2 - 2));
    if (p < n) {
      // C(n,p+1) = C(n,p) * (n-p) / (p+1); the product is exact before the
      // division, so multiply first under overflow checking.
      binom = checked_mul(binom, (unsigned long long)(n - p)) / (p + 1);
      pow2 = checked_mul(pow2, 2);
    }
  }
  return total;
}

}  // namespace rrobust
