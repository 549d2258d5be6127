#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "rsv/errors.hpp"

namespace rsv {

/// Exact rational number backed by GMP. Always canonical: den > 0, gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rational: empty literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational: malformed literal '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
  }

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }
  std::string str() const { return v_.get_str(); }

  Rational inverse() const {
    if (is_zero()) throw EvaluationError("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(num, den));
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw EvaluationError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_{0};
};

/// A power of a fixed positive rational base Q, where Q stands for q^{1/2}.
/// Modulus characters are half-integral powers of q, hence integral powers of Q.
class HalfPowerScalar {
 public:
  HalfPowerScalar(Rational base, long exponent) : base_(std::move(base)), exponent_(exponent) {
    if (base_.sign() <= 0) throw DomainError("HalfPowerScalar: base must be positive");
  }

  const Rational& base() const { return base_; }
  long exponent() const { return exponent_; }
  Rational value() const { return base_.pow(exponent_); }

  HalfPowerScalar inverse() const { return {base_, -exponent_}; }

  friend HalfPowerScalar operator*(const HalfPowerScalar& a, const HalfPowerScalar& b) {
    if (a.base_ != b.base_) throw DomainError("HalfPowerScalar: mismatched bases");
    return {a.base_, a.exponent_ + b.exponent_};
  }
  friend bool operator==(const HalfPowerScalar&, const HalfPowerScalar&) = default;

 private:
  Rational base_;
  long exponent_;
};

/// Returns Q with Q*Q == q, or throws if q is not the square of a rational.
inline Rational rational_sqrt(const Rational& q) {
  if (q.sign() <= 0) throw DomainError("rational_sqrt: q must be positive");
  mpz_class num = q.raw().get_num(), den = q.raw().get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    throw DomainError("q = " + q.str() + " is not the square of a rational; pass Q directly");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

}  // namespace rsv
