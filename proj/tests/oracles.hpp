#pragma once

// Brute-force reference implementations, deliberately written with plain
// loops and their own tiny exact linear algebra so they share no nontrivial
// code path with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "nfw/base.hpp"

namespace oracle {

using nfw::Int;
using nfw::IntVec;

// Runs fn on every q in [0, bound]^n.
inline void scan_box(int n, Int bound, const std::function<void(const IntVec&)>& fn) {
  IntVec q(static_cast<size_t>(n), 0);
  while (true) {
    fn(q);
    int i = n - 1;
    while (i >= 0 && q[static_cast<size_t>(i)] == bound) {
      q[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++q[static_cast<size_t>(i)];
  }
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// #{q in N^n : <p_j,q> = mu_j for all j}; normals must be strictly positive,
// so q_i <= max_j mu_j bounds the search.
inline Int count_value_equal(const std::vector<IntVec>& normals, const IntVec& mu) {
  Int bound = 0;
  for (Int m : mu) bound = std::max(bound, m);
  if (bound < 0) return 0;
  Int count = 0;
  scan_box(static_cast<int>(normals[0].size()), bound, [&](const IntVec& q) {
    for (size_t j = 0; j < normals.size(); ++j) {
      if (dot(normals[j], q) != mu[j]) return;
    }
    ++count;
  });
  return count;
}

// #{q in N^n : <p_j,q> >= mu_j for all j and <p_j,q> <= mu_j for some j}.
inline Int count_graded(const std::vector<IntVec>& normals, const IntVec& mu) {
  Int bound = 0;
  for (Int m : mu) bound = std::max(bound, m);
  if (bound < 0) return 0;
  Int count = 0;
  scan_box(static_cast<int>(normals[0].size()), bound, [&](const IntVec& q) {
    bool all_ge = true, some_le = false;
    for (size_t j = 0; j < normals.size(); ++j) {
      const Int v = dot(normals[j], q);
      all_ge = all_ge && v >= mu[j];
      some_le = some_le || v <= mu[j];
    }
    if (all_ge && some_le) ++count;
  });
  return count;
}

// Rank of an integer matrix by fraction-free elimination in 128-bit
// arithmetic (inputs stay tiny).
inline int int_rank(std::vector<std::vector<__int128>> m) {
  int rank = 0;
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
    size_t pivot = static_cast<size_t>(rank);
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[static_cast<size_t>(rank)], m[pivot]);
    for (size_t r = static_cast<size_t>(rank) + 1; r < rows; ++r) {
      const __int128 a = m[r][col], b = m[static_cast<size_t>(rank)][col];
      if (a == 0) continue;
      for (size_t c = 0; c < cols; ++c) m[r][c] = m[r][c] * b - m[static_cast<size_t>(rank)][c] * a;
    }
    ++rank;
  }
  return rank;
}

struct FacetData {
  IntVec normal;
  Int offset;
};

// Compact facets of conv(points) + R_{>=0}^n found by scanning every
// primitive strictly positive normal with entries <= bound and keeping those
// whose minimizing set has affine dimension n-1.
inline std::vector<FacetData> facet_scan(const std::vector<IntVec>& points, int n, Int bound) {
  std::vector<FacetData> out;
  IntVec p(static_cast<size_t>(n), 1);
  while (true) {
    Int g = 0;
    for (Int c : p) g = std::gcd(g, c);
    if (g == 1) {
      Int offset = dot(p, points[0]);
      for (const auto& q : points) offset = std::min(offset, dot(p, q));
      std::vector<std::vector<__int128>> diffs;
      const IntVec* base = nullptr;
      for (const auto& q : points) {
        if (dot(p, q) != offset) continue;
        if (!base) {
          base = &q;
          continue;
        }
        std::vector<__int128> d(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = q[static_cast<size_t>(i)] - (*base)[static_cast<size_t>(i)];
        diffs.push_back(std::move(d));
      }
      if (base && int_rank(diffs) == n - 1) out.push_back({p, offset});
    }
    int i = n - 1;
    while (i >= 0 && p[static_cast<size_t>(i)] == bound) {
      p[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++p[static_cast<size_t>(i)];
  }
  std::sort(out.begin(), out.end(), [](const FacetData& a, const FacetData& b) {
    return a.normal != b.normal ? nfw::lex_less(a.normal, b.normal) : a.offset < b.offset;
  });
  return out;
}

}  // namespace oracle
