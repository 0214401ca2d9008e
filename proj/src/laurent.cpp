#include "fdsum/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fdsum {

std::vector<Rational> bernoulli_numbers(std::size_t count) {
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
  std::vector<Rational> b;
  b.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    if (m == 0) {
      b.emplace_back(1);
      continue;
    }
    Rational acc;
    Integer binom = 1;  // C(m+1, k)
    for (std::size_t k = 0; k < m; ++k) {
      acc += Rational(binom) * b[k];
      binom = binom * static_cast<unsigned long>(m + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    b.push_back(-acc / Rational(static_cast<std::int64_t>(m + 1)));
  }
  return b;
}

LaurentBlock::LaurentBlock(std::int64_t lead, std::vector<PolyQ> coeffs)
    : lead_(lead), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("LaurentBlock needs at least one coefficient");
}

LaurentBlock LaurentBlock::exp(const PolyQ& scale, std::int64_t order) {
  if (order < 0) throw std::invalid_argument("exp series order must be >= 0");
  std::vector<PolyQ> c;
  c.reserve(static_cast<std::size_t>(order) + 1);
  PolyQ power = PolyQ::constant(Rational(1));
  Integer factorial = 1;
  for (std::int64_t m = 0; m <= order; ++m) {
    if (m > 0) {
      power = power * scale;
      factorial *= static_cast<unsigned long>(m);
    }
    c.push_back(power * Rational(Integer(1), factorial));
  }
  return LaurentBlock(0, std::move(c));
}

LaurentBlock LaurentBlock::inverse_exp_minus_one(std::int64_t a, std::int64_t order) {
  if (a == 0) throw std::invalid_argument("inverse_exp_minus_one requires a != 0");
  if (order < -1) throw std::invalid_argument("series order must be >= -1");
  // 1/(e^{az}-1) = sum_m B_m a^{m-1} z^{m-1} / m!
  const auto terms = static_cast<std::size_t>(order + 2);
  const auto bern = bernoulli_numbers(terms);
  std::vector<PolyQ> c;
  c.reserve(terms);
  Rational a_pow = Rational(1) / Rational(a);  // a^{m-1}
  Integer factorial = 1;
  for (std::size_t m = 0; m < terms; ++m) {
    if (m > 0) {
      a_pow *= Rational(a);
      factorial *= static_cast<unsigned long>(m);
    }
    c.push_back(PolyQ::constant(bern[m] * a_pow / Rational(factorial)));
  }
  return LaurentBlock(-1, std::move(c));
}

PolyQ LaurentBlock::coeff(std::int64_t k) const {
  if (k > order()) {
    throw std::out_of_range("coefficient z^" + std::to_string(k) + " beyond truncation order " +
                            std::to_string(order()));
  }
  if (k < lead_) return {};
  return coeffs_[static_cast<std::size_t>(k - lead_)];
}

LaurentBlock& LaurentBlock::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

LaurentBlock operator*(const LaurentBlock& a, const LaurentBlock& b) {
  const std::int64_t lead = a.lead_ + b.lead_;
  const std::int64_t order = std::min(a.order() + b.lead_, b.order() + a.lead_);
  std::vector<PolyQ> c(static_cast<std::size_t>(order - lead + 1));
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (j >= a.coeffs_.size() || i - j >= b.coeffs_.size()) continue;
      if (a.coeffs_[j].is_zero() || b.coeffs_[i - j].is_zero()) continue;
      c[i] += a.coeffs_[j] * b.coeffs_[i - j];
    }
  }
  return LaurentBlock(lead, std::move(c));
}

}  // namespace fdsum
