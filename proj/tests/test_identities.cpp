#include <gtest/gtest.h>

#include <numeric>

#include "fdsum/fourier_dedekind.hpp"
#include "fdsum/identities.hpp"

using namespace fdsum;

TEST(Zagier, OddDimensionExamples) {
  EXPECT_TRUE(verify_zagier(Instance({2, 3, 5})).holds);
  EXPECT_TRUE(verify_zagier(Instance({3, 5, 7})).holds);
}

TEST(Zagier, UnsignedFormFailsForEvenLength) {
  // sigma_0(5;3) + sigma_0(3;5) = -1/3 - 2/5, and R'_0(3,5) = -4/15.
  const auto check = verify_zagier(Instance({3, 5}));
  EXPECT_EQ(check.lhs, Rational(-11, 15));
  EXPECT_EQ(check.rhs, Rational(19, 15));
  EXPECT_FALSE(check.holds);
  const auto signed_check = verify_zagier_signed(Instance({3, 5}));
  EXPECT_TRUE(signed_check.holds);
  EXPECT_EQ(signed_check.rhs, Rational(-11, 15));
}

TEST(Zagier, SignedFormHoldsEverywhere) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& inst : pairwise_coprime_tuples(n, 9)) {
      EXPECT_TRUE(verify_zagier_signed(inst).holds) << inst.str();
      EXPECT_EQ(verify_zagier(inst).holds, n % 2 == 1) << inst.str();
    }
  }
  EXPECT_THROW(verify_zagier(Instance({4, 6})), std::domain_error);
}

TEST(Gessel, GeneralExamples) {
  for (std::int64_t t = 1; t <= 7; ++t) EXPECT_TRUE(verify_gessel_general(Instance({3, 5}), t).holds);
  for (std::int64_t t = 1; t <= 9; ++t) EXPECT_TRUE(verify_gessel_general(Instance({2, 3, 5}), t).holds);
  try {
    verify_gessel_general(Instance({3, 5}), 8);
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "hypothesis violated");
  }
  EXPECT_THROW(verify_gessel_general(Instance({3, 5}), 0), std::invalid_argument);
}

TEST(Gessel, TwoDimensionalExamples) {
  const auto c = verify_gessel_2d(2, 3, 0);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.lhs, Rational(-17, 72));
  EXPECT_EQ(sigma_exact({1, {3, 1}, 2}), Rational(-1, 8));
  const auto unit = verify_gessel_2d(1, 1, 0);
  EXPECT_TRUE(unit.holds);
  EXPECT_EQ(unit.rhs, Rational(0));
  EXPECT_TRUE(verify_gessel_2d(3, 5, 7).holds);
  EXPECT_THROW(verify_gessel_2d(3, 5, 8), std::invalid_argument);
  EXPECT_THROW(verify_gessel_2d(2, 4, 0), std::invalid_argument);
}

TEST(Gessel, TwoDimensionalAgreesWithGeneralLawOnAppendedOne) {
  for (std::int64_t m = 1; m <= 8; ++m) {
    for (std::int64_t n = 1; n <= 8; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (std::int64_t r = 0; r < m + n; ++r) {
        EXPECT_EQ(verify_gessel_2d(m, n, r).holds, verify_gessel_general(Instance({m, n, 1}), r + 1).holds);
      }
    }
  }
}

TEST(EhrhartMacdonald, Examples) {
  for (std::int64_t t = 1; t <= 100; ++t) {
    EXPECT_TRUE(verify_ehrhart_macdonald(Instance({3, 5}), t).holds);
    EXPECT_TRUE(verify_ehrhart_macdonald(Instance({2, 3, 5}), t).holds);
    EXPECT_TRUE(verify_ehrhart_macdonald(Instance({1}), t).holds);
  }
  EXPECT_EQ(verify_ehrhart_macdonald(Instance({1}), 4).rhs, Rational(-5));
  EXPECT_THROW(verify_ehrhart_macdonald(Instance({3, 5}), 0), std::invalid_argument);
}

TEST(TriangleClosedForm, HoldsWithNegatedExponent) {
  for (std::int64_t a = 1; a <= 8; ++a) {
    for (std::int64_t b = 1; b <= 8; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::int64_t t = 0; t <= 40; ++t) {
        EXPECT_TRUE(verify_triangle_closed_form(a, b, t, TriangleExponent::kNegative).holds);
      }
    }
  }
}

TEST(TriangleClosedForm, PositiveExponentFailsOffTheSymmetricResidues) {
  // xi^{rt} and xi^{-rt} give the same sum when t == 0 mod a and mod b.
  EXPECT_TRUE(verify_triangle_closed_form(3, 5, 15).holds);
  EXPECT_TRUE(verify_triangle_closed_form(1, 1, 7).holds);
  const auto c = verify_triangle_closed_form(3, 5, 1);
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.rhs, Rational(1));
}

TEST(DedekindReciprocity, Holds) {
  for (std::int64_t h = 1; h <= 20; ++h) {
    for (std::int64_t k = 1; k <= 20; ++k) {
      if (std::gcd(h, k) != 1) continue;
      const auto c = verify_dedekind_reciprocity(h, k);
      EXPECT_TRUE(c.holds) << h << " " << k;
      // Classical form: s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk)) / 12.
      EXPECT_EQ(c.lhs, Rational(-1, 4) + Rational(h * h + k * k + 1, 12 * h * k));
    }
  }
}

TEST(Suites, RunAndSummarise) {
  SuiteOptions opts{6, 20, true};
  const auto gessel = run_suite(Suite::kGessel, opts);
  EXPECT_GT(gessel.checked, 0u);
  EXPECT_EQ(gessel.failed, 0u);
  const auto em = run_suite(Suite::kEhrhartMacdonald, opts);
  EXPECT_EQ(em.failed, 0u);
  const auto g2 = run_suite(Suite::kGessel2d, opts);
  EXPECT_EQ(g2.failed, 0u);
  const auto zag = run_suite(Suite::kZagier, opts);
  EXPECT_GT(zag.failed, 0u);
  EXPECT_EQ(zag.checked, zag.passed + zag.failed);
  EXPECT_EQ(parse_suite("gessel2d"), Suite::kGessel2d);
  EXPECT_FALSE(parse_suite("nope").has_value());
  EXPECT_EQ(suite_name(Suite::kEhrhartMacdonald), "ehrhart-macdonald");
}

TEST(Tuples, Enumeration) {
  const auto pairs = pairwise_coprime_tuples(2, 4);
  // (1,1) (1,2) (1,3) (1,4) (2,3) (3,4)
  EXPECT_EQ(pairs.size(), 6u);
  for (const auto& p : pairs) EXPECT_TRUE(p.pairwise_coprime());
  EXPECT_TRUE(pairwise_coprime_tuples(0, 5).empty());
}
