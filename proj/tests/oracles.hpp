#pragma once

// Brute-force reference implementations used only by the tests. None of these
// call into the library algorithms they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "rsv/rational.hpp"
#include "rsv/weights.hpp"

namespace oracle {

using rsv::Rational;

/// All weakly decreasing tuples of length `rows` with entries in [0, max_part]
/// summing to `size`, found by filtering the full box.
inline std::vector<std::vector<int>> box_partitions(std::size_t rows, int size, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(rows, 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == rows) {
      if (std::accumulate(cur.begin(), cur.end(), 0) == size && std::is_sorted(cur.rbegin(), cur.rend()))
        out.push_back(cur);
      return;
    }
    for (int v = 0; v <= max_part; ++v) {
      cur[i] = v;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

/// Number of partitions of `size` with at most `rows` parts.
inline std::size_t partition_count(std::size_t rows, int size) { return box_partitions(rows, size, size).size(); }

/// log_q delta_B(varpi^mu) as the sum over positive roots e_i - e_j (i < j)
/// of -(mu_i - mu_j); returned in Q = q^{1/2} units.
inline long delta_q_half_exponent(std::span<const int> mu) {
  long e = 0;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = i + 1; j < mu.size(); ++j) e -= 2L * (mu[i] - mu[j]);
  return e;
}

/// Every filling of shape `lam` with entries 1..N, kept if semistandard.
/// Calls visit(content) for each SSYT.
inline void for_each_ssyt(const std::vector<int>& lam, std::size_t num_vars,
                          const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lam.size(); ++r)
    for (int c = 0; c < lam[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::map<std::pair<int, int>, int> t;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == cells.size()) {
      for (const auto& [cell, v] : t) {
        const auto [r, c] = cell;
        if (auto it = t.find({r, c + 1}); it != t.end() && it->second < v) return;
        if (auto it = t.find({r + 1, c}); it != t.end() && it->second <= v) return;
      }
      std::vector<int> content(num_vars, 0);
      for (const auto& [cell, v] : t) ++content[static_cast<std::size_t>(v - 1)];
      visit(content);
      return;
    }
    for (int v = 1; v <= static_cast<int>(num_vars); ++v) {
      t[cells[i]] = v;
      go(i + 1);
    }
  };
  go(0);
}

inline std::uint64_t ssyt_count(const std::vector<int>& lam, std::size_t num_vars) {
  std::uint64_t n = 0;
  for_each_ssyt(lam, num_vars, [&](const std::vector<int>&) { ++n; });
  return n;
}

inline Rational ssyt_value(const std::vector<int>& lam, std::span<const Rational> point) {
  Rational total(0);
  for_each_ssyt(lam, point.size(), [&](const std::vector<int>& content) {
    Rational term(1);
    for (std::size_t i = 0; i < content.size(); ++i) term *= point[i].pow(content[i]);
    total += term;
  });
  return total;
}

/// Skew LR tableaux of shape u/x and content z by filling every cell with
/// every value and filtering: rows weak, columns strict, content z, and the
/// right-to-left, top-to-bottom reading word is a lattice word.
inline std::uint64_t lr_brute(const std::vector<int>& x, const std::vector<int>& z, const std::vector<int>& u) {
  const int sx = std::accumulate(x.begin(), x.end(), 0), sz = std::accumulate(z.begin(), z.end(), 0);
  if (sx + sz != std::accumulate(u.begin(), u.end(), 0)) return 0;
  auto part = [](const std::vector<int>& p, std::size_t i) { return i < p.size() ? p[i] : 0; };
  for (std::size_t i = 0; i < std::max(x.size(), u.size()); ++i)
    if (part(x, i) > part(u, i)) return 0;
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < u.size(); ++r)
    for (int c = u[r] - 1; c >= part(x, r); --c) cells.emplace_back(static_cast<int>(r), c);
  const int values = static_cast<int>(z.size());
  std::map<std::pair<int, int>, int> t;
  std::uint64_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == cells.size()) {
      for (const auto& [cell, v] : t) {
        const auto [r, c] = cell;
        if (auto it = t.find({r, c + 1}); it != t.end() && it->second < v) return;
        if (auto it = t.find({r + 1, c}); it != t.end() && it->second <= v) return;
      }
      std::vector<int> seen(static_cast<std::size_t>(values) + 1, 0);
      for (const auto& cell : cells) {
        const int v = t[cell];
        ++seen[static_cast<std::size_t>(v)];
        if (v > 1 && seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v - 1)]) return;
      }
      for (int v = 1; v <= values; ++v)
        if (seen[static_cast<std::size_t>(v)] != z[static_cast<std::size_t>(v - 1)]) return;
      ++count;
      return;
    }
    for (int v = 1; v <= values; ++v) {
      t[cells[i]] = v;
      go(i + 1);
    }
  };
  if (cells.empty()) return sz == 0 ? 1 : 0;
  if (values == 0) return 0;
  go(0);
  return count;
}

/// A rhombus as two obtuse and two acute vertices, (row, col) in the triangle r + c <= n.
struct Rhombus {
  std::pair<int, int> obtuse[2];
  std::pair<int, int> acute[2];
};

/// Every unit rhombus, built as the union of an upward and a downward unit
/// triangle sharing an edge. The shared edge joins the obtuse corners.
inline std::vector<Rhombus> rhombi_from_triangles(int n) {
  using V = std::pair<int, int>;
  std::vector<Rhombus> out;
  auto up_ok = [&](int r, int c) { return r >= 0 && c >= 0 && r + c <= n - 1; };
  for (int r = 0; r <= n; ++r)
    for (int c = 0; r + c <= n - 2; ++c) {
      // downward triangle (r,c+1), (r+1,c), (r+1,c+1)
      const V a{r, c + 1}, b{r + 1, c}, d{r + 1, c + 1};
      if (up_ok(r, c)) out.push_back({{a, b}, {d, V{r, c}}});
      if (up_ok(r + 1, c)) out.push_back({{b, d}, {a, V{r + 2, c}}});
      if (up_ok(r, c + 1)) out.push_back({{a, d}, {b, V{r, c + 2}}});
    }
  return out;
}

/// Border of the size-n triangle: corner (0,0) = 0, left edge upward adds x,
/// right edge downward adds y, bottom edge rightward adds z.
inline std::map<std::pair<int, int>, long> border(const std::vector<int>& x, const std::vector<int>& y,
                                                  const std::vector<int>& z, int n) {
  auto part = [](const std::vector<int>& p, int i) { return i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : 0; };
  std::map<std::pair<int, int>, long> b;
  long run = 0;
  b[{0, 0}] = 0;
  for (int r = 1; r <= n; ++r) b[{r, 0}] = run += part(x, r - 1);
  for (int t = 1; t <= n; ++t) b[{n - t, t}] = run += part(y, t - 1);
  run = 0;
  for (int c = 1; c <= n; ++c) b[{0, c}] = run += part(z, c - 1);
  return b;
}

/// Counts hives (sign = +1) or anti-hives (sign = -1) by trying every
/// interior value in a generous box around the border values, no pruning.
/// A box that is too small can only undercount.
inline std::uint64_t hive_brute(const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& z, int n,
                                int sign) {
  auto b = border(x, y, z, n);
  if (sign < 0)
    for (auto& [k, v] : b) v = -v;
  long lo = 0, hi = 0;
  for (const auto& [k, v] : b) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const long slack = std::accumulate(z.begin(), z.end(), 0L) + 1;
  lo -= slack;
  hi += slack;
  std::vector<std::pair<int, int>> interior;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; r + c <= n - 1; ++c) interior.emplace_back(r, c);
  const auto rhombi = rhombi_from_triangles(n);
  std::map<std::pair<int, int>, long> val = b;
  std::uint64_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == interior.size()) {
      for (const auto& rh : rhombi) {
        const long ob = val[rh.obtuse[0]] + val[rh.obtuse[1]], ac = val[rh.acute[0]] + val[rh.acute[1]];
        if (sign > 0 ? ob < ac : ob > ac) return;
      }
      ++count;
      return;
    }
    for (long v = lo; v <= hi; ++v) {
      val[interior[i]] = v;
      go(i + 1);
    }
  };
  go(0);
  return count;
}

}  // namespace oracle
