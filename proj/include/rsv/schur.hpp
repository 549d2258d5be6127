#pragma once

// Schur polynomials for partitions and for dominant GL weights.
//
// Two independent routes are provided: the Jacobi-Trudi determinant in the
// complete homogeneous polynomials h_k, and the monomial sum over
// semistandard Young tableaux. Weights with negative entries are reduced to
// partitions by a determinant twist:  S_mu = S_{mu + s} * (x_1...x_N)^{-s}.

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <vector>

#include "rsv/errors.hpp"
#include "rsv/laurent.hpp"
#include "rsv/rational.hpp"
#include "rsv/weights.hpp"

namespace rsv {

inline constexpr int kDefaultOracleCap = 12;

template <class Ring>
using Matrix = std::vector<std::vector<Ring>>;

/// Determinant by Laplace expansion along rows, memoizing minors by column subset.
/// Division-free, so it works over any commutative ring. Cost O(2^k k).
template <class Ring>
Ring determinant_cofactor(const Matrix<Ring>& a, const Ring& zero, const Ring& one) {
  const std::size_t k = a.size();
  if (k == 0) return one;
  if (k > 20) throw std::invalid_argument("determinant_cofactor: matrix too large");
  std::vector<Ring> minor(std::size_t{1} << k, zero);
  minor[0] = one;
  // Masks in increasing popcount order; row index = popcount - 1.
  for (std::size_t pop = 1; pop <= k; ++pop) {
    for (std::size_t mask = 1; mask < minor.size(); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != pop) continue;
      const std::size_t row = pop - 1;
      Ring acc = zero;
      std::size_t pos = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (!(mask & (std::size_t{1} << j))) continue;
        const Ring& entry = a[row][j];
        const std::size_t rest = mask & ~(std::size_t{1} << j);
        if (!entry.is_zero() && !minor[rest].is_zero()) {
          Ring term = entry * minor[rest];
          if ((row + pos) % 2 == 0) acc += term;
          else acc -= term;
        }
        ++pos;
      }
      minor[mask] = std::move(acc);
    }
  }
  return minor.back();
}

/// Gaussian elimination over Q.
inline Rational determinant_gauss(Matrix<Rational> a) {
  const std::size_t k = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a[p][c].is_zero()) ++p;
    if (p == k) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Rational inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a[r][c].is_zero()) continue;
      const Rational f = a[r][c] * inv;
      for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

/// Rational determinant: cofactor expansion up to 6x6, elimination above.
inline Rational determinant(const Matrix<Rational>& a) {
  if (a.size() <= 6) return determinant_cofactor(a, Rational(0), Rational(1));
  return determinant_gauss(a);
}

namespace detail {

/// Process-wide memo of h_0..h_d in N variables. Contents are deterministic.
class CompleteHomogeneousCache {
 public:
  static CompleteHomogeneousCache& instance() {
    static CompleteHomogeneousCache cache;
    return cache;
  }

  /// h_k(x_1..x_N); zero for k < 0.
  LaurentPolynomial get(std::size_t num_vars, int k) {
    if (k < 0) return LaurentPolynomial(num_vars);
    std::lock_guard lock(mutex_);
    auto& table = tables_[num_vars];
    extend(table, num_vars, k);
    return table[static_cast<std::size_t>(k)];
  }

 private:
  // table[k] = h_k(x_1..x_N), built from h_k(x_1..x_i) = h_k(x_1..x_{i-1}) + x_i h_{k-1}(x_1..x_i).
  static void extend(std::vector<LaurentPolynomial>& table, std::size_t num_vars, int k) {
    if (static_cast<int>(table.size()) > k) return;
    const std::size_t degree = static_cast<std::size_t>(k) + 1;
    std::vector<LaurentPolynomial> level(degree, LaurentPolynomial(num_vars));
    level[0] = LaurentPolynomial::one(num_vars);
    for (std::size_t i = 0; i < num_vars; ++i) {
      const LaurentPolynomial xi = LaurentPolynomial::variable(num_vars, i);
      for (std::size_t d = 1; d < degree; ++d) level[d] += xi * level[d - 1];
    }
    table = std::move(level);
  }

  std::mutex mutex_;
  std::map<std::size_t, std::vector<LaurentPolynomial>> tables_;
};

/// Values h_0..h_degree at a point.
inline std::vector<Rational> complete_homogeneous_values(std::span<const Rational> point, int degree) {
  std::vector<Rational> h(static_cast<std::size_t>(std::max(degree, 0)) + 1, Rational(0));
  h[0] = Rational(1);
  for (const Rational& x : point)
    for (std::size_t d = 1; d < h.size(); ++d) h[d] += x * h[d - 1];
  return h;
}

}  // namespace detail

/// h_k(x_1..x_N) as a polynomial.
inline LaurentPolynomial complete_homogeneous(std::size_t num_vars, int k) {
  return detail::CompleteHomogeneousCache::instance().get(num_vars, k);
}

/// A Schur polynomial together with a flag marking the length-exceeds-variables vanishing.
struct SchurPolynomial {
  LaurentPolynomial poly;
  bool structurally_zero = false;
};

/// s_lam(x_1..x_N) = det(h_{lam_i - i + j}).
inline SchurPolynomial schur_jacobi_trudi(const Partition& lam, std::size_t num_vars) {
  if (lam.length() > num_vars) return {LaurentPolynomial(num_vars), true};
  const std::size_t k = lam.length();
  Matrix<LaurentPolynomial> m(k, std::vector<LaurentPolynomial>(k, LaurentPolynomial(num_vars)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m[i][j] = complete_homogeneous(num_vars, lam[i] - static_cast<int>(i) + static_cast<int>(j));
  return {determinant_cofactor(m, LaurentPolynomial(num_vars), LaurentPolynomial::one(num_vars)), false};
}

namespace detail {

class SsytEnumerator {
 public:
  SsytEnumerator(const Partition& lam, std::size_t num_vars) : num_vars_(num_vars), out_(num_vars) {
    for (std::size_t r = 0; r < lam.length(); ++r) rows_.emplace_back(static_cast<std::size_t>(lam[r]), 0);
    content_.assign(num_vars, 0);
  }

  LaurentPolynomial run() {
    fill(0, 0);
    return std::move(out_);
  }

 private:
  void fill(std::size_t r, std::size_t c) {
    if (r == rows_.size()) {
      out_.add_term(content_, Rational(1));
      return;
    }
    if (c == rows_[r].size()) {
      fill(r + 1, 0);
      return;
    }
    // column strictness leaves room for the cells below this one
    std::size_t below = 0;
    for (std::size_t rr = r + 1; rr < rows_.size() && rows_[rr].size() > c; ++rr) ++below;
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows_[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows_[r - 1][c] + 1);
    const int hi = static_cast<int>(num_vars_) - static_cast<int>(below);
    for (int v = lo; v <= hi; ++v) {
      rows_[r][c] = v;
      ++content_[static_cast<std::size_t>(v - 1)];
      fill(r, c + 1);
      --content_[static_cast<std::size_t>(v - 1)];
    }
  }

  std::size_t num_vars_;
  std::vector<std::vector<int>> rows_;
  Exponent content_;
  LaurentPolynomial out_;
};

}  // namespace detail

/// Monomial sum over semistandard Young tableaux of shape lam with entries <= N.
/// Brute force; refuses |lam| above `oracle_cap`.
inline LaurentPolynomial schur_ssyt(const Partition& lam, std::size_t num_vars, int oracle_cap = kDefaultOracleCap) {
  if (lam.size() > oracle_cap)
    throw OracleRefused("schur_ssyt: |lam| = " + std::to_string(lam.size()) + " exceeds oracle cap " +
                        std::to_string(oracle_cap));
  if (lam.length() > num_vars) return LaurentPolynomial(num_vars);
  return detail::SsytEnumerator(lam, num_vars).run();
}

/// S_mu for a dominant weight, computed with an explicit determinant twist `shift`
/// (requires mu_N + shift >= 0). The result does not depend on the shift.
inline LaurentPolynomial schur_glweight_shifted(const GLWeight& mu, int shift) {
  if (!mu.dominant()) throw DomainError("schur_glweight: weight " + mu.str() + " is not dominant");
  if (mu.min_entry() + shift < 0) throw std::invalid_argument("schur_glweight: shift too small for " + mu.str());
  const std::size_t n = mu.rank();
  const Partition lam = mu.shifted(shift).to_partition();
  return schur_jacobi_trudi(lam, n).poly.times_monomial(Exponent(n, -shift));
}

/// S_mu(x_1..x_N) for a dominant weight mu of rank N, negative entries allowed.
inline LaurentPolynomial schur_glweight(const GLWeight& mu, std::size_t num_vars) {
  if (mu.rank() != num_vars)
    throw RankMismatch("schur_glweight: weight " + mu.str() + " in " + std::to_string(num_vars) + " variables");
  return schur_glweight_shifted(mu, std::max(0, -mu.min_entry()));
}

/// s_lam at a point, via Jacobi-Trudi on the values of h_k.
inline Rational schur_value(const Partition& lam, std::span<const Rational> point) {
  if (lam.length() > point.size()) return Rational(0);
  const std::size_t k = lam.length();
  const std::vector<Rational> h = detail::complete_homogeneous_values(point, lam.first() + static_cast<int>(k));
  Matrix<Rational> m(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const int d = lam[i] - static_cast<int>(i) + static_cast<int>(j);
      if (d >= 0) m[i][j] = h[static_cast<std::size_t>(d)];
    }
  }
  return determinant(m);
}

/// S_mu at a point with all coordinates nonzero when mu has negative entries.
inline Rational schur_value(const GLWeight& mu, std::span<const Rational> point) {
  if (!mu.dominant()) throw DomainError("schur_value: weight " + mu.str() + " is not dominant");
  if (mu.rank() != point.size()) throw RankMismatch("schur_value: rank/point length mismatch for " + mu.str());
  const int s = std::max(0, -mu.min_entry());
  Rational v = schur_value(mu.shifted(s).to_partition(), point);
  if (s > 0) {
    Rational det(1);
    for (const Rational& x : point) {
      if (x.is_zero()) throw EvaluationError("schur_value: zero coordinate with a negative weight " + mu.str());
      det *= x;
    }
    v /= det.pow(s);
  }
  return v;
}

/// Checks S_{(v,0..0)}(point^{-1}) == S_{(0..0,v*)}(point).
inline bool schur_dual_check(const Partition& v, std::size_t l, std::span<const Rational> point) {
  if (point.size() != l) throw RankMismatch("schur_dual_check: point length must be l");
  std::vector<Rational> inv;
  inv.reserve(l);
  for (const Rational& x : point) {
    if (x.is_zero()) throw EvaluationError("schur_dual_check: zero coordinate");
    inv.push_back(x.inverse());
  }
  const GLWeight top = GLWeight::from_partition(v, l);
  const GLWeight bottom = star_dual(v, l);
  return schur_value(top, inv) == schur_value(bottom, point);
}

}  // namespace rsv
