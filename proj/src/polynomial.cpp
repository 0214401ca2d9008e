#include "fdsum/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdsum {

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::ptrdiff_t PolyQ::degree() const {
  return coeffs_.empty() ? kZeroDegree : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
}

Rational PolyQ::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational PolyQ::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyQ(std::move(out));
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const std::size_t dn = divisor.coeffs_.size();
  if (rem.size() < dn) return {PolyQ{}, *this};
  std::vector<Rational> quot(rem.size() - dn + 1);
  const Rational& lead = divisor.leading();
  const bool monic = lead == Rational(1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + dn - 1];
    if (q.is_zero()) continue;
    if (!monic) q /= lead;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * divisor.coeffs_[j];
    quot[k] = std::move(q);
  }
  rem.resize(dn - 1);
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

std::string PolyQ::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) out += mag.str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace fdsum
