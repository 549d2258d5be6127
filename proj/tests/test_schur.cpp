#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rsv/lr.hpp"
#include "rsv/schur.hpp"
#include "rsv/unramified.hpp"

using namespace rsv;

namespace {

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < n; ++i) pt.push_back(random_nonzero_rational(rng, SatakeRange{}));
  return pt;
}

LaurentPolynomial var(std::size_t nv, std::size_t i) { return LaurentPolynomial::variable(nv, i); }

}  // namespace

TEST(Schur, SmallCases) {
  EXPECT_EQ(schur_jacobi_trudi(Partition{1}, 2).poly, var(2, 0) + var(2, 1));
  EXPECT_EQ(schur_jacobi_trudi(Partition{}, 3).poly, LaurentPolynomial::one(3));
  const std::vector<Rational> ones(3, Rational(1));
  EXPECT_EQ(schur_jacobi_trudi(Partition{2, 1}, 3).poly.eval(ones), Rational(8));
  EXPECT_EQ(oracle::ssyt_count({2, 1}, 3), 8u);
}

TEST(Schur, TableauOracleExamples) {
  const auto x = var(2, 0), y = var(2, 1);
  EXPECT_EQ(schur_ssyt(Partition{2}, 2), x * x + x * y + y * y);
  EXPECT_EQ(schur_ssyt(Partition{1, 1}, 2), x * y);
  EXPECT_TRUE(schur_ssyt(Partition{1, 1, 1}, 2).is_zero());
  EXPECT_THROW(schur_ssyt(Partition{13}, 2), OracleRefused);
  EXPECT_NO_THROW(schur_ssyt(Partition{13}, 1, 13));
}

TEST(Schur, TooManyRowsIsFlaggedZero) {
  const auto s = schur_jacobi_trudi(Partition{1, 1, 1}, 2);
  EXPECT_TRUE(s.structurally_zero);
  EXPECT_TRUE(s.poly.is_zero());
}

TEST(Schur, JacobiTrudiEqualsTableauSumExhaustive) {
  for (std::size_t nv = 1; nv <= 4; ++nv)
    for (int s = 0; s <= 8; ++s)
      for (const Partition& lam : enumerate_dominant(nv, s))
        ASSERT_EQ(schur_jacobi_trudi(lam, nv).poly, schur_ssyt(lam, nv)) << lam.str() << " N=" << nv;
}

TEST(Schur, ValuesAgreeWithBruteForceTableaux) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const std::size_t nv = 2 + rng() % 3;
    const Partition lam = enumerate_dominant(nv, 4 + static_cast<int>(rng() % 3))[0];
    const auto pt = random_point(rng, nv);
    const std::vector<int> parts(lam.parts().begin(), lam.parts().end());
    ASSERT_EQ(schur_value(lam, pt), oracle::ssyt_value(parts, pt)) << lam.str();
  }
}

TEST(Schur, LargerCasesAtRandomPoints) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const std::size_t nv = 2 + rng() % 3;
    const auto all = enumerate_dominant(nv, 9 + static_cast<int>(rng() % 4));
    const Partition lam = all[rng() % all.size()];
    const auto pt = random_point(rng, nv);
    ASSERT_EQ(schur_jacobi_trudi(lam, nv).poly.eval(pt), schur_ssyt(lam, nv).eval(pt)) << lam.str();
  }
}

TEST(Schur, HomogeneousAndSymmetric) {
  for (std::size_t nv = 2; nv <= 4; ++nv)
    for (int s = 0; s <= 6; ++s)
      for (const Partition& lam : enumerate_dominant(nv, s)) {
        const auto p = schur_jacobi_trudi(lam, nv).poly;
        EXPECT_TRUE(p.is_homogeneous(s));
        for (std::size_t i = 0; i + 1 < nv; ++i) EXPECT_EQ(p.swapped(i, i + 1), p);
      }
}

TEST(Schur, GLWeightExamples) {
  const auto s = schur_glweight(GLWeight({0, 0, 0, -2}), 4);
  EXPECT_EQ(s, schur_jacobi_trudi(Partition{2, 2, 2}, 4).poly * det_power(4, -2));
  EXPECT_EQ(schur_glweight(GLWeight({0, 0}), 2), LaurentPolynomial::one(2));
  const std::vector<Rational> pt{Rational(2), Rational(1), Rational(1, 2)};
  EXPECT_EQ(schur_glweight(GLWeight({1, 0, -1}), 3).eval(pt),
            oracle::ssyt_value({2, 1}, pt) / (Rational(2) * Rational(1) * Rational(1, 2)));
  EXPECT_THROW(schur_glweight(GLWeight({0, 1}), 2), DomainError);
}

TEST(Schur, ShiftCovariance) {
  for (const GLWeight& mu : {GLWeight({2, 0, -1}), GLWeight({1, 1, 1}), GLWeight({0, -1, -3})})
    for (int c = -2; c <= 3; ++c) {
      EXPECT_EQ(schur_glweight(mu.shifted(c), 3), schur_glweight(mu, 3) * det_power(3, c));
      EXPECT_EQ(schur_glweight_shifted(mu, 5), schur_glweight(mu, 3));
    }
}

TEST(Schur, ValueMatchesPolynomialForWeights) {
  std::mt19937_64 rng(23);
  const GLWeight mu({2, 1, 0, -2});
  for (int i = 0; i < 10; ++i) {
    const auto pt = random_point(rng, 4);
    EXPECT_EQ(schur_value(mu, pt), schur_glweight(mu, 4).eval(pt));
  }
}

TEST(Schur, DualCheck) {
  EXPECT_TRUE(schur_dual_check(Partition{}, 3, std::vector<Rational>{Rational(2), Rational(3), Rational(5)}));
  EXPECT_TRUE(schur_dual_check(Partition{1}, 2, std::vector<Rational>{Rational(2), Rational(3)}));
  std::mt19937_64 rng(24);
  for (std::size_t l = 1; l <= 5; ++l)
    for (int s = 0; s <= 6; ++s)
      for (const Partition& v : enumerate_dominant(l, s))
        for (int p = 0; p < 3; ++p) ASSERT_TRUE(schur_dual_check(v, l, random_point(rng, l)));
  EXPECT_THROW(schur_dual_check(Partition{1}, 2, std::vector<Rational>{Rational(0), Rational(3)}), EvaluationError);
}

TEST(Schur, ProductExpansionMatchesLrCoefficients) {
  for (std::size_t nv = 1; nv <= 4; ++nv)
    for (int sx = 0; sx <= 4; ++sx)
      for (int sz = 0; sx + sz <= 8; ++sz)
        for (const Partition& x : enumerate_dominant(nv, sx))
          for (const Partition& z : enumerate_dominant(nv, sz)) {
            LaurentPolynomial rhs(nv);
            for (const auto& [u, c] : schur_product_expand(x, z))
              rhs += schur_jacobi_trudi(u, nv).poly * Rational(static_cast<long>(c));
            ASSERT_EQ(schur_jacobi_trudi(x, nv).poly * schur_jacobi_trudi(z, nv).poly, rhs)
                << x.str() << " * " << z.str() << " N=" << nv;
          }
}

TEST(Determinant, GaussMatchesCofactor) {
  std::mt19937_64 rng(25);
  for (std::size_t k = 1; k <= 7; ++k) {
    Matrix<Rational> m(k, std::vector<Rational>(k, Rational(0)));
    for (auto& row : m)
      for (auto& e : row) e = Rational(static_cast<long>(rng() % 9) - 4);
    EXPECT_EQ(determinant_gauss(m), determinant_cofactor(m, Rational(0), Rational(1)));
  }
}
