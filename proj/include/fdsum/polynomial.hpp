#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fdsum/rational.hpp"

namespace fdsum {

/// Dense univariate polynomial over Q. coeffs()[k] multiplies x^k; trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
class PolyQ {
 public:
  static constexpr std::ptrdiff_t kZeroDegree = std::numeric_limits<std::ptrdiff_t>::min();

  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  PolyQ(std::initializer_list<Rational> coeffs);

  static PolyQ constant(const Rational& c);
  static PolyQ monomial(std::size_t k, const Rational& c = Rational(1));

  /// kZeroDegree for the zero polynomial.
  std::ptrdiff_t degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k, zero beyond the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const Rational& s);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const Rational& s) { return a *= s; }
  friend PolyQ operator*(const Rational& s, PolyQ a) { return a *= s; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  PolyQ operator-() const;

  friend bool operator==(const PolyQ&, const PolyQ&) = default;

  /// Polynomial long division; throws std::domain_error when dividing by zero.
  std::pair<PolyQ, PolyQ> divmod(const PolyQ& divisor) const;

  /// Human-readable form in the given variable, e.g. "1/2*t^2 - t + 3".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace fdsum
