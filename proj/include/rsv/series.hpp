#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsv/errors.hpp"
#include "rsv/laurent.hpp"
#include "rsv/rational.hpp"

namespace rsv {

/// Power series in T1, T2 truncated at T1^cap1, T2^cap2 (per-variable caps).
/// Coeff is Rational for numeric work or LaurentPolynomial in symbolic mode;
/// `zero` fixes the ring element used for absent coefficients.
template <class Coeff>
class TruncatedBiSeries {
 public:
  TruncatedBiSeries(int cap1, int cap2, Coeff zero = Coeff())
      : cap1_(cap1), cap2_(cap2), zero_(std::move(zero)) {
    if (cap1 < 0 || cap2 < 0) throw std::invalid_argument("TruncatedBiSeries: negative cap");
    coeffs_.assign(static_cast<std::size_t>(cap1 + 1) * static_cast<std::size_t>(cap2 + 1), zero_);
  }

  /// The constant series `c`.
  static TruncatedBiSeries constant(int cap1, int cap2, const Coeff& c, Coeff zero = Coeff()) {
    TruncatedBiSeries s(cap1, cap2, std::move(zero));
    s.coeffs_[0] = c;
    return s;
  }

  /// c * T1^a T2^b (zero if beyond the caps).
  static TruncatedBiSeries monomial(int cap1, int cap2, int a, int b, const Coeff& c, Coeff zero = Coeff()) {
    TruncatedBiSeries s(cap1, cap2, std::move(zero));
    if (a <= cap1 && b <= cap2) s.at(a, b) = c;
    return s;
  }

  int cap1() const { return cap1_; }
  int cap2() const { return cap2_; }
  const Coeff& zero() const { return zero_; }

  const Coeff& coeff(int a, int b) const { return coeffs_.at(index(a, b)); }
  Coeff& at(int a, int b) { return coeffs_.at(index(a, b)); }

  TruncatedBiSeries& operator+=(const TruncatedBiSeries& o) {
    check_caps(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedBiSeries& operator-=(const TruncatedBiSeries& o) {
    check_caps(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend TruncatedBiSeries operator+(TruncatedBiSeries a, const TruncatedBiSeries& b) { return a += b; }
  friend TruncatedBiSeries operator-(TruncatedBiSeries a, const TruncatedBiSeries& b) { return a -= b; }

  /// Cauchy product truncated at the caps.
  friend TruncatedBiSeries operator*(const TruncatedBiSeries& x, const TruncatedBiSeries& y) {
    x.check_caps(y);
    TruncatedBiSeries out(x.cap1_, x.cap2_, x.zero_);
    for (int a1 = 0; a1 <= x.cap1_; ++a1) {
      for (int b1 = 0; b1 <= x.cap2_; ++b1) {
        const Coeff& cx = x.coeff(a1, b1);
        if (is_zero_coeff(cx)) continue;
        for (int a2 = 0; a1 + a2 <= x.cap1_; ++a2) {
          for (int b2 = 0; b1 + b2 <= x.cap2_; ++b2) {
            const Coeff& cy = y.coeff(a2, b2);
            if (is_zero_coeff(cy)) continue;
            out.at(a1 + a2, b1 + b2) += cx * cy;
          }
        }
      }
    }
    return out;
  }
  TruncatedBiSeries& operator*=(const TruncatedBiSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
    return a.cap1_ == b.cap1_ && a.cap2_ == b.cap2_ && a.coeffs_ == b.coeffs_;
  }

  /// First (a, b) in row-major order where the two series differ.
  std::optional<std::pair<int, int>> first_mismatch(const TruncatedBiSeries& o) const {
    check_caps(o);
    for (int a = 0; a <= cap1_; ++a)
      for (int b = 0; b <= cap2_; ++b)
        if (!(coeff(a, b) == o.coeff(a, b))) return std::pair{a, b};
    return std::nullopt;
  }

 private:
  static bool is_zero_coeff(const Coeff& c) { return c.is_zero(); }

  std::size_t index(int a, int b) const {
    if (a < 0 || b < 0 || a > cap1_ || b > cap2_)
      throw std::out_of_range("TruncatedBiSeries: index (" + std::to_string(a) + "," + std::to_string(b) +
                              ") beyond caps");
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(cap2_ + 1) + static_cast<std::size_t>(b);
  }

  void check_caps(const TruncatedBiSeries& o) const {
    if (o.cap1_ != cap1_ || o.cap2_ != cap2_)
      throw CapMismatch("TruncatedBiSeries: caps (" + std::to_string(cap1_) + "," + std::to_string(cap2_) +
                        ") vs (" + std::to_string(o.cap1_) + "," + std::to_string(o.cap2_) + ")");
  }

  int cap1_;
  int cap2_;
  Coeff zero_;
  std::vector<Coeff> coeffs_;
};

using RationalSeries = TruncatedBiSeries<Rational>;
using SymbolicSeries = TruncatedBiSeries<LaurentPolynomial>;

template <class Coeff>
TruncatedBiSeries<Coeff> series_mul(const TruncatedBiSeries<Coeff>& a, const TruncatedBiSeries<Coeff>& b) {
  return a * b;
}

/// (1 - c T1^a T2^b)^{-1} = sum_e c^e T1^{ea} T2^{eb}, truncated.
template <class Coeff>
TruncatedBiSeries<Coeff> geom_inverse(const Coeff& c, int a, int b, int cap1, int cap2, const Coeff& one,
                                      Coeff zero) {
  if (a < 0 || b < 0) throw std::invalid_argument("geom_inverse: negative exponent");
  if (a == 0 && b == 0) throw DomainError("geom_inverse: (a,b) = (0,0) has a non-unit constant term");
  TruncatedBiSeries<Coeff> s(cap1, cap2, std::move(zero));
  Coeff power = one;
  for (int e = 0; e * a <= cap1 && e * b <= cap2; ++e) {
    s.at(e * a, e * b) = power;
    if (c.is_zero()) break;
    power = power * c;
  }
  return s;
}

inline RationalSeries geom_inverse(const Rational& c, int a, int b, int cap1, int cap2) {
  return geom_inverse<Rational>(c, a, b, cap1, cap2, Rational(1), Rational(0));
}

/// 1 - c T1^a T2^b, truncated.
template <class Coeff>
TruncatedBiSeries<Coeff> one_minus_monomial(const Coeff& c, int a, int b, int cap1, int cap2, const Coeff& one,
                                            Coeff zero) {
  TruncatedBiSeries<Coeff> s = TruncatedBiSeries<Coeff>::constant(cap1, cap2, one, zero);
  if (a <= cap1 && b <= cap2) s.at(a, b) -= c;
  return s;
}

}  // namespace rsv
