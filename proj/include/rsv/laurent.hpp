#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "rsv/errors.hpp"
#include "rsv/rational.hpp"

namespace rsv {

using Exponent = std::vector<int>;

/// Graded-lexicographic order, highest total degree first.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse multivariate Laurent polynomial over Q. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexGreater>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static LaurentPolynomial constant(std::size_t num_vars, const Rational& c) {
    LaurentPolynomial p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
  }
  static LaurentPolynomial one(std::size_t num_vars) { return constant(num_vars, Rational(1)); }
  static LaurentPolynomial variable(std::size_t num_vars, std::size_t i) {
    Exponent e(num_vars, 0);
    e.at(i) = 1;
    return monomial(std::move(e), Rational(1));
  }
  static LaurentPolynomial monomial(Exponent e, const Rational& c) {
    LaurentPolynomial p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Exponent e, const Rational& c) {
    if (e.size() != num_vars_) throw std::invalid_argument("LaurentPolynomial: exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// True iff every monomial has total degree `degree`.
  bool is_homogeneous(long degree) const {
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0L) != degree) return false;
    return true;
  }

  /// Exact value at a point. A zero coordinate is an error only where a negative exponent meets it.
  Rational eval(std::span<const Rational> point) const {
    if (point.size() != num_vars_)
      throw EvaluationError("poly_eval: point has " + std::to_string(point.size()) + " coordinates, expected " +
                            std::to_string(num_vars_));
    Rational total(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < num_vars_ && !t.is_zero(); ++i) {
        if (e[i] == 0) continue;
        if (point[i].is_zero()) {
          if (e[i] < 0) throw EvaluationError("poly_eval: zero coordinate " + std::to_string(i) + " under a negative exponent");
          t = Rational(0);
          break;
        }
        t *= point[i].pow(e[i]);
      }
      total += t;
    }
    return total;
  }

  /// Swaps variables i and j.
  LaurentPolynomial swapped(std::size_t i, std::size_t j) const {
    LaurentPolynomial out(num_vars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      std::swap(f.at(i), f.at(j));
      out.add_term(std::move(f), c);
    }
    return out;
  }

  /// Re-homes the variables into a ring of `total` variables starting at `offset`.
  LaurentPolynomial embedded(std::size_t total, std::size_t offset) const {
    if (offset + num_vars_ > total) throw std::invalid_argument("LaurentPolynomial::embedded: out of range");
    LaurentPolynomial out(total);
    for (const auto& [e, c] : terms_) {
      Exponent f(total, 0);
      std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
      out.add_term(std::move(f), c);
    }
    return out;
  }

  /// Multiplies by the monomial x^shift.
  LaurentPolynomial times_monomial(const Exponent& shift) const {
    if (shift.size() != num_vars_) throw std::invalid_argument("times_monomial: length mismatch");
    LaurentPolynomial out(num_vars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      for (std::size_t i = 0; i < num_vars_; ++i) f[i] += shift[i];
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPolynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
  friend LaurentPolynomial operator*(const Rational& s, LaurentPolynomial a) { return a *= s; }
  LaurentPolynomial operator-() const { return *this * Rational(-1); }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.check_same(b);
    LaurentPolynomial out(a.num_vars_);
    Exponent f(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + eb[i];
        out.add_term(f, ca * cb);
      }
    }
    return out;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "x1^2 + x1*x2 - 1/2*x3^-1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational mag = c.sign() < 0 ? -c : c;
      if (!first) s += c.sign() < 0 ? " - " : " + ";
      else if (c.sign() < 0) s += "-";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) s += mag.str();
      else if (mag.is_one()) s += mono;
      else s += mag.str() + "*" + mono;
    }
    return s;
  }

 private:
  void check_same(const LaurentPolynomial& o) const {
    if (o.num_vars_ != num_vars_) throw std::invalid_argument("LaurentPolynomial: variable count mismatch");
  }

  std::size_t num_vars_ = 0;
  TermMap terms_;
};

/// The monomial (x_1 ... x_N)^c.
inline LaurentPolynomial det_power(std::size_t num_vars, int c) {
  return LaurentPolynomial::monomial(Exponent(num_vars, c), Rational(1));
}

/// Free-function spelling of LaurentPolynomial::eval.
inline Rational poly_eval(const LaurentPolynomial& p, std::span<const Rational> point) { return p.eval(point); }

}  // namespace rsv
