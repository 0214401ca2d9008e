#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <random>

#include "fdsum/cyclotomic.hpp"
#include "fdsum/number_theory.hpp"

using namespace fdsum;

namespace {

PolyQ x_pow(std::size_t k) { return PolyQ::monomial(k); }

PolyQ random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 7);
  std::vector<Rational> c(max_degree + 1);
  for (auto& r : c) r = Rational(num(rng), den(rng));
  return PolyQ(std::move(c));
}

std::complex<double> eval_complex(const PolyQ& p, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + it->to_double();
  return acc;
}

std::complex<double> complex_trace(const PolyQ& p, std::int64_t d) {
  std::complex<double> sum = 0;
  for (std::int64_t j = 1; j <= d; ++j) {
    if (gcd(j, d) == 1) sum += eval_complex(p, std::polar(1.0, 2 * std::numbers::pi * j / d));
  }
  return sum;
}

}  // namespace

TEST(PolyQ, ArithmeticAndDivision) {
  const PolyQ p{Rational(1), Rational(2), Rational(1)};  // (x+1)^2
  const PolyQ q{Rational(1), Rational(1)};
  EXPECT_EQ(q * q, p);
  auto [quo, rem] = p.divmod(q);
  EXPECT_EQ(quo, q);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(PolyQ().degree(), PolyQ::kZeroDegree);
  EXPECT_EQ((p - p).degree(), PolyQ::kZeroDegree);
  EXPECT_EQ(p.evaluate(Rational(2)), Rational(9));
  EXPECT_THROW(p.divmod(PolyQ()), std::domain_error);
  const PolyQ half{Rational(0), Rational(2)};
  auto [q2, r2] = p.divmod(half);
  EXPECT_EQ(q2 * half + r2, p);
}

TEST(Cyclotomic, SmallPolynomials) {
  EXPECT_EQ(cyclotomic_poly(1), (PolyQ{Rational(-1), Rational(1)}));
  EXPECT_EQ(cyclotomic_poly(2), (PolyQ{Rational(1), Rational(1)}));
  EXPECT_EQ(cyclotomic_poly(6), (PolyQ{Rational(1), Rational(-1), Rational(1)}));
  EXPECT_EQ(cyclotomic_poly(12), (PolyQ{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)}));
}

TEST(Cyclotomic, DivisorProductIsXdMinusOne) {
  for (std::int64_t d = 1; d <= 60; ++d) {
    PolyQ prod = PolyQ::constant(Rational(1));
    for (auto e : divisors(d)) prod = prod * cyclotomic_poly(e);
    EXPECT_EQ(prod, x_pow(d) - PolyQ::constant(Rational(1))) << "d=" << d;
    const auto& phi = cyclotomic_poly(d);
    EXPECT_EQ(phi.degree(), euler_phi(d));
    EXPECT_EQ(phi.leading(), Rational(1));
    for (const auto& c : phi.coeffs()) EXPECT_TRUE(c.is_integer());
  }
}

TEST(CycloElem, Reduce) {
  EXPECT_EQ(CycloElem::reduce(x_pow(2), 4).rep(), PolyQ::constant(Rational(-1)));
  EXPECT_EQ(CycloElem::reduce(x_pow(3), 3).rep(), PolyQ::constant(Rational(1)));
  const PolyQ xp1{Rational(1), Rational(1)};
  EXPECT_EQ(CycloElem::reduce(xp1, 5).rep(), xp1);
  EXPECT_EQ(CycloElem::root_power(-1, 4), CycloElem::root_power(3, 4));
}

TEST(CycloElem, Inverse) {
  EXPECT_EQ(CycloElem::reduce(x_pow(1), 4).inverse().rep(), (PolyQ{Rational(0), Rational(-1)}));
  const auto xm1 = CycloElem::reduce(PolyQ{Rational(-1), Rational(1)}, 3);
  EXPECT_EQ(xm1.inverse().rep(), (PolyQ{Rational(-2, 3), Rational(-1, 3)}));
  EXPECT_THROW(CycloElem::reduce(PolyQ{Rational(1), Rational(1)}, 2).inverse(), std::domain_error);
  EXPECT_THROW(CycloElem::reduce(PolyQ(), 7).inverse(), std::domain_error);
}

TEST(CycloElem, InverseRoundTrip) {
  std::mt19937_64 rng(11);
  for (std::int64_t d = 1; d <= 30; ++d) {
    for (int i = 0; i < 5; ++i) {
      const auto e = CycloElem::reduce(random_poly(rng, static_cast<std::size_t>(euler_phi(d))), d);
      if (e.is_zero()) continue;
      const auto inv = e.inverse();
      EXPECT_EQ(e * inv, CycloElem::one(d)) << "d=" << d;
      EXPECT_EQ(inv.inverse(), e) << "d=" << d;
    }
  }
}

TEST(CycloElem, Trace) {
  for (std::int64_t d = 1; d <= 20; ++d) EXPECT_EQ(CycloElem::one(d).trace(), Rational(euler_phi(d)));
  for (std::int64_t p : {2, 3, 5, 7, 11}) EXPECT_EQ(CycloElem::reduce(x_pow(1), p).trace(), Rational(-1));
  const auto e = CycloElem::reduce(PolyQ{Rational(-2, 3), Rational(-1, 3)}, 3);
  EXPECT_EQ(e.trace(), Rational(-1));
}

TEST(CycloElem, TraceIsLinearAndMatchesComplexSum) {
  std::mt19937_64 rng(5);
  for (std::int64_t d = 1; d <= 30; ++d) {
    const auto p = random_poly(rng, 2 * static_cast<std::size_t>(d));
    const auto q = random_poly(rng, static_cast<std::size_t>(d));
    const auto e = CycloElem::reduce(p, d), f = CycloElem::reduce(q, d);
    const Rational alpha(3, 7), beta(-5, 2);
    EXPECT_EQ((e * alpha + f * beta).trace(), alpha * e.trace() + beta * f.trace());
    const auto z = complex_trace(p, d);
    EXPECT_NEAR(e.trace().to_double(), z.real(), 1e-9 * std::max(1.0, std::abs(z.real())));
    EXPECT_NEAR(z.imag(), 0.0, 1e-8);
  }
}

TEST(CycloElem, OrderMismatchThrows) {
  EXPECT_THROW(CycloElem::one(3) + CycloElem::one(4), std::invalid_argument);
}
