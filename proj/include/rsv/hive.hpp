#pragma once

// Knutson-Tao hives.
//
// An n-hive is an integer array a(row, col), 0 <= row, col, row + col <= n,
// drawn as a triangle with row 0 at the bottom (n+1 vertices) and the single
// vertex of row n at the top. Vertex (r+1, c) sits between (r, c) and
// (r, c+1). Every pair of unit triangles sharing an edge forms a rhombus;
// the shared edge joins its two obtuse vertices. A hive has
//     obtuse sum >= acute sum
// for every rhombus; an anti-hive has every inequality reversed.
//
// Boundary convention for c^z_{x,y} (pinned by the 3-hive grid with
// boundary 3 / 3 5 / 2 x 6 / 0 3 5 6, whose interior is x in {4, 5}):
//   * a(0, 0) = 0;
//   * left edge (r, 0), read bottom to top, increases by x_1, ..., x_n;
//   * right edge (n - t, t), read top to bottom, increases by y_1, ..., y_n;
//   * bottom edge (0, c), read left to right, increases by z_1, ..., z_n.
// The anti-hive boundary is the entrywise negation.

#include <algorithm>
#include <array>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rsv/errors.hpp"
#include "rsv/weights.hpp"

namespace rsv {

struct HiveVertex {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const HiveVertex&, const HiveVertex&) = default;
};

enum class HiveMode { hive, anti_hive };
enum class SearchOrder { diagonal, row_major, column_major };

inline const char* to_string(HiveMode m) { return m == HiveMode::hive ? "hive" : "antihive"; }
inline const char* to_string(SearchOrder o) {
  switch (o) {
    case SearchOrder::diagonal: return "diagonal";
    case SearchOrder::row_major: return "row-major";
    case SearchOrder::column_major: return "column-major";
  }
  return "?";
}

struct Rhombus {
  std::array<HiveVertex, 2> obtuse;
  std::array<HiveVertex, 2> acute;
};

inline std::size_t hive_vertex_count(int n) {
  return static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

/// Index of (row, col) in a row-major triangular layout; row r holds n + 1 - r vertices.
inline std::size_t hive_index(int n, HiveVertex v) {
  std::size_t idx = 0;
  for (int r = 0; r < v.row; ++r) idx += static_cast<std::size_t>(n + 1 - r);
  return idx + static_cast<std::size_t>(v.col);
}

inline bool in_hive(int n, HiveVertex v) { return v.row >= 0 && v.col >= 0 && v.row + v.col <= n; }

inline bool is_interior(int n, HiveVertex v) { return v.row >= 1 && v.col >= 1 && v.row + v.col <= n - 1; }

/// All unit rhombi of an n-hive, in the three orientations.
inline std::vector<Rhombus> hive_rhombi(int n) {
  std::vector<Rhombus> out;
  auto add = [&](HiveVertex o1, HiveVertex o2, HiveVertex a1, HiveVertex a2) {
    if (in_hive(n, o1) && in_hive(n, o2) && in_hive(n, a1) && in_hive(n, a2)) out.push_back({{o1, o2}, {a1, a2}});
  };
  for (int r = 0; r <= n; ++r) {
    for (int c = 0; r + c <= n; ++c) {
      // horizontal shared edge (r,c)-(r,c+1)
      add({r, c}, {r, c + 1}, {r + 1, c}, {r - 1, c + 1});
      // shared edge (r,c)-(r+1,c)
      add({r, c}, {r + 1, c}, {r, c + 1}, {r + 1, c - 1});
      // shared edge (r,c+1)-(r+1,c)
      add({r, c + 1}, {r + 1, c}, {r, c}, {r + 1, c + 1});
    }
  }
  return out;
}

/// A filled triangular array.
class Hive {
 public:
  explicit Hive(int n) : n_(n), values_(hive_vertex_count(n), 0) {
    if (n < 1) throw std::invalid_argument("Hive: size must be >= 1");
  }
  Hive(int n, std::vector<long> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != hive_vertex_count(n)) throw std::invalid_argument("Hive: wrong number of values");
  }

  int size() const { return n_; }
  long at(int row, int col) const { return values_.at(hive_index(n_, {row, col})); }
  long& at(int row, int col) { return values_.at(hive_index(n_, {row, col})); }
  const std::vector<long>& values() const { return values_; }

  bool satisfies(HiveMode mode) const {
    for (const Rhombus& rh : hive_rhombi(n_)) {
      const long l = at(rh.obtuse[0].row, rh.obtuse[0].col) + at(rh.obtuse[1].row, rh.obtuse[1].col) -
                     at(rh.acute[0].row, rh.acute[0].col) - at(rh.acute[1].row, rh.acute[1].col);
      if (mode == HiveMode::hive ? l < 0 : l > 0) return false;
    }
    return true;
  }

  Hive negated() const {
    Hive h(*this);
    for (long& v : h.values_) v = -v;
    return h;
  }

  /// Rows top to bottom, e.g. "3\n3 5\n2 4 6\n0 3 5 6".
  std::string grid() const {
    std::string s;
    for (int r = n_; r >= 0; --r) {
      for (int c = 0; r + c <= n_; ++c) {
        if (c) s += ' ';
        s += std::to_string(at(r, c));
      }
      if (r) s += '\n';
    }
    return s;
  }

  friend bool operator==(const Hive&, const Hive&) = default;

 private:
  int n_;
  std::vector<long> values_;
};

/// Boundary data for c^z_{x,y} in size n.
struct HiveBoundary {
  int n = 1;
  Partition x, y, z;

  HiveBoundary(Partition bx, Partition by, Partition bz, int size)
      : n(size), x(std::move(bx)), y(std::move(by)), z(std::move(bz)) {
    if (n < 1) throw std::invalid_argument("HiveBoundary: size must be >= 1");
    for (const Partition* p : {&x, &y, &z})
      if (p->length() > static_cast<std::size_t>(n))
        throw RankMismatch("HiveBoundary: " + p->str() + " has more than " + std::to_string(n) + " parts");
  }

  bool degree_ok() const { return z.size() == x.size() + y.size(); }
};

/// Smallest hive size that fits all three partitions.
inline int default_hive_size(const Partition& x, const Partition& y, const Partition& z) {
  return static_cast<int>(std::max({x.length(), y.length(), z.length(), std::size_t{1}}));
}

/// Values on the 3n border vertices under the convention above.
inline std::map<HiveVertex, long> boundary_values(const HiveBoundary& b, HiveMode mode = HiveMode::hive) {
  if (!b.degree_ok())
    throw PreconditionError("boundary_values: |z| != |x| + |y| for x=" + b.x.str() + " y=" + b.y.str() +
                            " z=" + b.z.str());
  const int n = b.n;
  const std::vector<int> x = b.x.padded(static_cast<std::size_t>(n));
  const std::vector<int> y = b.y.padded(static_cast<std::size_t>(n));
  const std::vector<int> z = b.z.padded(static_cast<std::size_t>(n));
  std::map<HiveVertex, long> out;
  long v = 0;
  out[{0, 0}] = 0;
  for (int r = 1; r <= n; ++r) out[{r, 0}] = v += x[static_cast<std::size_t>(r - 1)];
  for (int t = 1; t <= n; ++t) out[{n - t, t}] = v += y[static_cast<std::size_t>(t - 1)];
  v = 0;
  for (int c = 1; c <= n; ++c) out[{0, c}] = v += z[static_cast<std::size_t>(c - 1)];
  if (mode == HiveMode::anti_hive)
    for (auto& [k, val] : out) val = -val;
  return out;
}

struct HiveCount {
  std::uint64_t count = 0;
  /// Set when |z| != |x| + |y|: the coefficient vanishes by grading, nothing was searched.
  bool structurally_zero = false;
};

namespace detail {

/// Depth-first lattice-point search over the interior vertices.
/// Each vertex's range is the intersection of the bounds implied by every
/// rhombus whose other three vertices are already fixed.
class HiveSearch {
 public:
  HiveSearch(const HiveBoundary& b, HiveMode mode, SearchOrder order) : n_(b.n), mode_(mode), base_(b.n) {
    for (const auto& [vtx, val] : boundary_values(b, mode)) base_.at(vtx.row, vtx.col) = val;

    for (int r = 1; r <= n_; ++r)
      for (int c = 1; r + c <= n_ - 1; ++c) order_.push_back({r, c});
    std::sort(order_.begin(), order_.end(), [order](HiveVertex a, HiveVertex b) {
      switch (order) {
        case SearchOrder::row_major: return std::pair(a.row, a.col) < std::pair(b.row, b.col);
        case SearchOrder::column_major: return std::pair(a.col, a.row) < std::pair(b.col, b.row);
        case SearchOrder::diagonal: break;
      }
      return std::pair(a.row + a.col, a.row) < std::pair(b.row + b.col, b.row);
    });

    std::vector<int> step_of(hive_vertex_count(n_), -1);
    for (std::size_t i = 0; i < order_.size(); ++i) step_of[hive_index(n_, order_[i])] = static_cast<int>(i);

    steps_.resize(order_.size());
    for (const Rhombus& rh : hive_rhombi(n_)) {
      Form f;
      f.idx = {hive_index(n_, rh.obtuse[0]), hive_index(n_, rh.obtuse[1]), hive_index(n_, rh.acute[0]),
               hive_index(n_, rh.acute[1])};
      int last = -1;
      std::size_t last_pos = 0;
      for (std::size_t p = 0; p < 4; ++p) {
        const int s = step_of[f.idx[p]];
        if (s > last) {
          last = s;
          last_pos = p;
        }
      }
      if (last < 0) {
        boundary_forms_.push_back(f);
        continue;
      }
      f.target = last_pos;
      steps_[static_cast<std::size_t>(last)].push_back(f);
    }

    for (std::size_t i = 0; i < steps_.size(); ++i) {
      bool has_lo = false, has_hi = false;
      for (const Form& f : steps_[i]) (is_lower(f) ? has_lo : has_hi) = true;
      if (!has_lo || !has_hi)
        throw std::logic_error(std::string("HiveSearch: order ") + to_string(order) + " leaves a vertex unbounded");
    }
  }

  bool boundary_consistent() const {
    for (const Form& f : boundary_forms_)
      if (!holds(f, base_.values())) return false;
    return true;
  }

  std::uint64_t count(int workers = 1) const {
    if (!boundary_consistent()) return 0;
    if (order_.empty()) return 1;
    std::vector<long> vals = base_.values();
    long lo = 0, hi = 0;
    range(0, vals, lo, hi);
    if (lo > hi) return 0;
    if (workers <= 1 || hi - lo < 1) return count_from(0, vals);

    // Fan out over the first vertex's values; each worker owns its array.
    std::atomic<long> next{lo};
    std::atomic<std::uint64_t> total{0};
    std::vector<std::thread> pool;
    const std::size_t first = hive_index(n_, order_[0]);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, vals]() mutable {
        std::uint64_t local = 0;
        for (long v = next++; v <= hi; v = next++) {
          vals[first] = v;
          local += count_from(1, vals);
        }
        total += local;
      });
    }
    for (auto& t : pool) t.join();
    return total.load();
  }

  /// Calls `visit` on each hive until `cap` have been produced; returns the number visited.
  std::size_t enumerate(const std::function<void(const Hive&)>& visit, std::size_t cap) const {
    if (!boundary_consistent()) return 0;
    std::vector<long> vals = base_.values();
    std::size_t seen = 0;
    enumerate_from(0, vals, visit, cap, seen);
    return seen;
  }

  const std::vector<HiveVertex>& order() const { return order_; }
  const Hive& base() const { return base_; }

 private:
  struct Form {
    std::array<std::size_t, 4> idx{};  // obtuse, obtuse, acute, acute
    std::size_t target = 0;            // position of the vertex this form bounds
  };

  // Obtuse-minus-acute form L; hive: L >= 0, anti-hive: L <= 0.
  bool holds(const Form& f, const std::vector<long>& v) const {
    const long l = v[f.idx[0]] + v[f.idx[1]] - v[f.idx[2]] - v[f.idx[3]];
    return mode_ == HiveMode::hive ? l >= 0 : l <= 0;
  }

  bool is_lower(const Form& f) const {
    const bool obtuse = f.target < 2;
    return mode_ == HiveMode::hive ? obtuse : !obtuse;
  }

  void range(std::size_t step, const std::vector<long>& v, long& lo, long& hi) const {
    lo = std::numeric_limits<long>::min();
    hi = std::numeric_limits<long>::max();
    for (const Form& f : steps_[step]) {
      // rest = L - s * v[target], with s = +1 for obtuse and -1 for acute targets
      long rest = 0;
      for (std::size_t p = 0; p < 4; ++p) {
        if (p == f.target) continue;
        rest += p < 2 ? v[f.idx[p]] : -v[f.idx[p]];
      }
      const bool obtuse = f.target < 2;
      // hive: s*t + rest >= 0; anti-hive: s*t + rest <= 0
      const long bound = obtuse ? -rest : rest;
      if (is_lower(f)) lo = std::max(lo, bound);
      else hi = std::min(hi, bound);
    }
  }

  std::uint64_t count_from(std::size_t step, std::vector<long>& v) const {
    if (step == order_.size()) return 1;
    long lo = 0, hi = 0;
    range(step, v, lo, hi);
    const std::size_t at = hive_index(n_, order_[step]);
    std::uint64_t total = 0;
    for (long t = lo; t <= hi; ++t) {
      v[at] = t;
      total += count_from(step + 1, v);
    }
    return total;
  }

  bool enumerate_from(std::size_t step, std::vector<long>& v, const std::function<void(const Hive&)>& visit,
                      std::size_t cap, std::size_t& seen) const {
    if (seen >= cap) return false;
    if (step == order_.size()) {
      visit(Hive(n_, v));
      ++seen;
      return seen < cap;
    }
    long lo = 0, hi = 0;
    range(step, v, lo, hi);
    const std::size_t at = hive_index(n_, order_[step]);
    for (long t = lo; t <= hi; ++t) {
      v[at] = t;
      if (!enumerate_from(step + 1, v, visit, cap, seen)) return false;
    }
    return true;
  }

  int n_;
  HiveMode mode_;
  Hive base_;
  std::vector<HiveVertex> order_;
  std::vector<std::vector<Form>> steps_;
  std::vector<Form> boundary_forms_;
};

inline HiveCount count_in_mode(const Partition& x, const Partition& y, const Partition& z, int n, HiveMode mode,
                               SearchOrder order, int workers) {
  if (n <= 0) n = default_hive_size(x, y, z);
  HiveBoundary b(x, y, z, n);
  if (!b.degree_ok()) return {0, true};
  return {HiveSearch(b, mode, order).count(workers), false};
}

}  // namespace detail

/// c^z_{x,y} as the number of n-hives with the (x, y, z) boundary. n <= 0 picks the smallest size.
inline HiveCount count_hives(const Partition& x, const Partition& y, const Partition& z, int n = 0,
                             SearchOrder order = SearchOrder::diagonal, int workers = 1) {
  return detail::count_in_mode(x, y, z, n, HiveMode::hive, order, workers);
}

/// Number of anti-n-hives with the negated (x, y, z) boundary.
inline HiveCount count_anti_hives(const Partition& x, const Partition& y, const Partition& z, int n = 0,
                                  SearchOrder order = SearchOrder::diagonal, int workers = 1) {
  return detail::count_in_mode(x, y, z, n, HiveMode::anti_hive, order, workers);
}

inline constexpr std::size_t kHiveEnumerationCap = 1'000'000;

/// Streams every hive (or anti-hive) with boundary b, up to `cap` of them.
inline std::size_t for_each_hive(const HiveBoundary& b, HiveMode mode, const std::function<void(const Hive&)>& visit,
                                 std::size_t cap = kHiveEnumerationCap) {
  if (!b.degree_ok()) return 0;
  return detail::HiveSearch(b, mode, SearchOrder::diagonal).enumerate(visit, std::min(cap, kHiveEnumerationCap));
}

}  // namespace rsv
