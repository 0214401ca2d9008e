#pragma once

#include <cstdint>
#include <vector>

#include "fdsum/polynomial.hpp"
#include "fdsum/rational.hpp"

namespace fdsum {

/// B_0..B_count-1 with the w/(e^w - 1) convention (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(std::size_t count);

/// Truncated Laurent series in z whose coefficients are polynomials in a
/// symbol t. coeffs()[i] multiplies z^(lead() + i) and the series is exact
/// through z^order(); everything above is unknown, not zero.
class LaurentBlock {
 public:
  LaurentBlock(std::int64_t lead, std::vector<PolyQ> coeffs);

  /// e^{scale * z}, where scale is itself a polynomial in t, through z^order.
  static LaurentBlock exp(const PolyQ& scale, std::int64_t order);
  /// 1 / (e^{a z} - 1) through z^order, via the Bernoulli expansion of
  /// (a z) / (e^{a z} - 1). Requires a != 0.
  static LaurentBlock inverse_exp_minus_one(std::int64_t a, std::int64_t order);

  std::int64_t lead() const { return lead_; }
  std::int64_t order() const { return lead_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<PolyQ>& coeffs() const { return coeffs_; }

  /// Coefficient of z^k; throws std::out_of_range when k is past the truncation order.
  PolyQ coeff(std::int64_t k) const;
  /// Coefficient of z^-1.
  PolyQ residue() const { return coeff(-1); }

  LaurentBlock& operator*=(const Rational& s);
  friend LaurentBlock operator*(const LaurentBlock& a, const LaurentBlock& b);

 private:
  std::int64_t lead_;
  std::vector<PolyQ> coeffs_;
};

}  // namespace fdsum
