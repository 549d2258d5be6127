#include <gtest/gtest.h>

#include <random>

#include "rsv/laurent.hpp"
#include "rsv/series.hpp"

using namespace rsv;

namespace {

LaurentPolynomial random_poly(std::mt19937_64& rng, std::size_t nv) {
  LaurentPolynomial p(nv);
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    Exponent e(nv);
    for (auto& x : e) x = static_cast<int>(rng() % 5) - 2;
    p.add_term(e, Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)));
  }
  return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t nv) {
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < nv; ++i) {
    long num = static_cast<long>(rng() % 9) - 4;
    if (num >= 0) ++num;
    pt.emplace_back(num, 1 + static_cast<long>(rng() % 4));
  }
  return pt;
}

}  // namespace

TEST(Laurent, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a * LaurentPolynomial::one(3), a);
  }
}

TEST(Laurent, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng, 2), b = random_poly(rng, 2);
    const auto pt = random_point(rng, 2);
    EXPECT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
    EXPECT_EQ((a + b).eval(pt), a.eval(pt) + b.eval(pt));
  }
}

TEST(Laurent, EvaluationErrors) {
  const auto x = LaurentPolynomial::variable(2, 0);
  const std::vector<Rational> pt{Rational(0), Rational(1)};
  EXPECT_EQ(x.eval(pt), Rational(0));
  const auto inv = LaurentPolynomial::monomial({-1, 0}, Rational(1));
  EXPECT_THROW(inv.eval(pt), EvaluationError);
  EXPECT_THROW(x.eval(std::vector<Rational>{Rational(1)}), EvaluationError);
}

TEST(Laurent, MonomialsAndHomogeneity) {
  const auto x = LaurentPolynomial::variable(2, 0), y = LaurentPolynomial::variable(2, 1);
  const auto p = x * x + x * y;
  EXPECT_TRUE(p.is_homogeneous(2));
  EXPECT_FALSE((p + x).is_homogeneous(2));
  EXPECT_EQ(p.swapped(0, 1), y * y + x * y);
  EXPECT_EQ(det_power(2, -1) * x * y, LaurentPolynomial::one(2));
  EXPECT_EQ(p.coefficient({1, 1}), Rational(1));
}

TEST(Series, CauchyProductTruncates) {
  const auto a = RationalSeries::monomial(2, 2, 1, 0, Rational(1));
  const auto b = RationalSeries::monomial(2, 2, 2, 1, Rational(3));
  const auto ab = a * b;
  EXPECT_EQ(ab.coeff(2, 1), Rational(0));  // degree 3 in T1 falls off
  const auto aa = a * a;
  EXPECT_EQ(aa.coeff(2, 0), Rational(1));
  EXPECT_THROW(a * RationalSeries(3, 2), CapMismatch);
}

TEST(Series, GeometricInverse) {
  const auto g = geom_inverse(Rational(2), 1, 1, 4, 3);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 3; ++b) EXPECT_EQ(g.coeff(a, b), a == b ? Rational(2).pow(a) : Rational(0));
  const auto one_minus = one_minus_monomial<Rational>(Rational(2), 1, 1, 4, 3, Rational(1), Rational(0));
  EXPECT_EQ(g * one_minus, RationalSeries::constant(4, 3, Rational(1)));
  EXPECT_THROW(geom_inverse(Rational(2), 0, 0, 1, 1), DomainError);
}

TEST(Series, ZeroCapsIsConstantTerm) {
  const auto g = geom_inverse(Rational(5), 1, 0, 0, 0);
  EXPECT_EQ(g.coeff(0, 0), Rational(1));
}
