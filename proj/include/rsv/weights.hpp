#pragma once

// Partitions and dominant GL weights, plus the weight surgery used by the
// unramified computation: star duals, middle-zero padding, the shifted
// weights v~ and lambda, and bounded enumeration of dominant tuples.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsv/errors.hpp"

namespace rsv {

namespace detail {

// Parses "[a,b,c]" (whitespace tolerated) into integers.
inline std::vector<int> parse_int_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("malformed tuple literal '" + std::string(text) + "' (expected [a,b,...])");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<int> out;
  if (body.empty()) return out;
  while (true) {
    const auto comma = body.find(',');
    std::string_view tok = trim(body.substr(0, comma));
    int v = 0;
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed integer '" + std::string(tok) + "' in tuple literal");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return out;
}

inline std::string format_int_list(std::span<const int> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace detail

/// Weakly decreasing sequence of nonnegative integers, stored without trailing zeros.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part in " + str());
      if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: not weakly decreasing: " + str());
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition parse(std::string_view text) { return Partition(detail::parse_int_list(text)); }

  std::span<const int> parts() const { return parts_; }
  /// Number of nonzero parts.
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Pads with zeros to exactly n entries.
  std::vector<int> padded(std::size_t n) const {
    if (parts_.size() > n)
      throw RankMismatch("partition " + str() + " has more than " + std::to_string(n) + " parts");
    std::vector<int> out(parts_);
    out.resize(n, 0);
    return out;
  }

  /// Young-diagram containment: other ⊆ *this.
  bool contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (std::size_t i = 0; i < other.length(); ++i)
      if (other.parts_[i] > parts_[i]) return false;
    return true;
  }

  std::string str() const { return detail::format_int_list(parts_); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Integer tuple of fixed length (the GL rank). Length is part of its identity;
/// entries may be negative and the tuple need not be dominant.
class GLWeight {
 public:
  GLWeight() = default;
  explicit GLWeight(std::vector<int> entries) : entries_(std::move(entries)) {}
  GLWeight(std::initializer_list<int> entries) : entries_(entries) {}

  /// The partition padded with zeros to `rank` entries.
  static GLWeight from_partition(const Partition& p, std::size_t rank) { return GLWeight(p.padded(rank)); }

  /// Parses "[a,b,...]@r"; the "@r" suffix is optional but must agree when present.
  static GLWeight parse(std::string_view text) {
    const auto at = text.rfind('@');
    std::vector<int> e = detail::parse_int_list(text.substr(0, at));
    if (at != std::string_view::npos) {
      std::string_view r = text.substr(at + 1);
      std::size_t rank = 0;
      auto [ptr, ec] = std::from_chars(r.data(), r.data() + r.size(), rank);
      if (ec != std::errc() || ptr != r.data() + r.size())
        throw std::invalid_argument("malformed rank suffix in '" + std::string(text) + "'");
      if (rank != e.size())
        throw RankMismatch("weight literal '" + std::string(text) + "' has " + std::to_string(e.size()) +
                           " entries but declares rank " + std::to_string(rank));
    }
    return GLWeight(std::move(e));
  }

  std::span<const int> entries() const { return entries_; }
  std::size_t rank() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_.at(i); }
  int size() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

  bool dominant() const { return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>()); }
  int min_entry() const { return entries_.empty() ? 0 : *std::min_element(entries_.begin(), entries_.end()); }

  /// Adds c to every entry (twist by det^c).
  GLWeight shifted(int c) const {
    GLWeight out(*this);
    for (int& e : out.entries_) e += c;
    return out;
  }

  /// Lossless conversion for dominant, nonnegative weights.
  Partition to_partition() const {
    if (!dominant() || min_entry() < 0) throw DomainError("weight " + str() + " is not a partition");
    return Partition(entries_);
  }

  std::string str() const { return detail::format_int_list(entries_) + "@" + std::to_string(rank()); }

  friend bool operator==(const GLWeight&, const GLWeight&) = default;
  friend auto operator<=>(const GLWeight&, const GLWeight&) = default;

 private:
  std::vector<int> entries_;
};

/// y* = (-y_n, ..., -y_1) as a length-n weight.
inline GLWeight star_dual(const Partition& y, std::size_t n) {
  std::vector<int> p = y.padded(n);
  std::reverse(p.begin(), p.end());
  for (int& e : p) e = -e;
  return GLWeight(std::move(p));
}

/// (x, 0, y*) in rank l: x padded to m entries, l-m-n zeros, then star_dual(y, n).
inline GLWeight central_weight(const Partition& x, const Partition& y, std::size_t l, std::size_t m,
                               std::size_t n) {
  if (m + n >= l)
    throw ConfigurationError("central_weight: need m+n < l, got l=" + std::to_string(l) + " m=" + std::to_string(m) +
                             " n=" + std::to_string(n));
  std::vector<int> e = x.padded(m);
  e.resize(l - n, 0);
  const GLWeight ys = star_dual(y, n);
  e.insert(e.end(), ys.entries().begin(), ys.entries().end());
  return GLWeight(std::move(e));
}

/// v~ = (v_1, ..., v_1, v_1 - v_n, ..., v_1 - v_2, 0) in rank l, with l-n leading copies of v_1.
inline GLWeight v_tilde(const Partition& v, std::size_t l, std::size_t n) {
  if (n >= l) throw ConfigurationError("v_tilde: need n < l");
  const std::vector<int> p = v.padded(n);
  const int v1 = v.first();
  std::vector<int> e(l - n, v1);
  for (std::size_t i = n; i-- > 1;) e.push_back(v1 - p[i]);
  if (n > 0) e.push_back(0);
  return GLWeight(std::move(e));
}

/// lambda = (x, 0, y*) + (v1, ..., v1).
inline GLWeight lambda_shift(const Partition& x, const Partition& y, int v1, std::size_t l, std::size_t m,
                             std::size_t n) {
  return central_weight(x, y, l, m, n).shifted(v1);
}

namespace detail {

inline void enumerate_partitions_rec(std::size_t rows, int remaining, int max_part, std::vector<int>& cur,
                                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (cur.size() == rows) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // the remaining rows must be able to absorb what is left
    if (static_cast<long>(p) * static_cast<long>(rows - cur.size()) < remaining) break;
    cur.push_back(p);
    enumerate_partitions_rec(rows, remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Partitions of s with at most m parts, lexicographically descending.
inline std::vector<Partition> enumerate_dominant(std::size_t m, int s) {
  std::vector<Partition> out;
  if (s < 0) return out;
  std::vector<int> cur;
  detail::enumerate_partitions_rec(m, s, s, cur, out);
  return out;
}

/// Partitions of s with at most m parts, each part at most max_part.
inline std::vector<Partition> enumerate_dominant_bounded(std::size_t m, int s, int max_part) {
  std::vector<Partition> out;
  if (s < 0 || max_part < 0) return out;
  std::vector<int> cur;
  detail::enumerate_partitions_rec(m, s, max_part, cur, out);
  return out;
}

/// All partitions fitting in an m x max_part box, by size then lex-descending.
inline std::vector<Partition> partitions_in_box(std::size_t m, int max_part) {
  std::vector<Partition> out;
  for (int s = 0; s <= static_cast<int>(m) * max_part; ++s) {
    auto level = enumerate_dominant_bounded(m, s, max_part);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace rsv
