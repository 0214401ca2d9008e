#include "fdsum/fourier_dedekind.hpp"

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fdsum/cyclotomic.hpp"
#include "fdsum/number_theory.hpp"

namespace fdsum {

void FDSumSpec::validate() const {
  if (modulus < 1) throw std::invalid_argument("Fourier-Dedekind modulus must be >= 1");
  for (std::int64_t a : args) {
    if (gcd(a, modulus) != 1) {
      throw std::invalid_argument("argument " + std::to_string(a) + " is not coprime to modulus " +
                                  std::to_string(modulus));
    }
  }
}

FourierDedekindSum::FourierDedekindSum(std::vector<std::int64_t> args, std::int64_t modulus)
    : args_(std::move(args)), modulus_(modulus) {
  FDSumSpec{0, args_, modulus_}.validate();
  for (std::int64_t d : divisors(modulus_)) {
    if (d == 1) continue;
    CycloElem product = CycloElem::one(d);
    for (std::int64_t a : args_) {
      // a is a unit mod d, so x^a - 1 vanishes at no primitive d-th root.
      CycloElem factor = CycloElem::root_power(a, d) - CycloElem::one(d);
      product *= factor.inverse();
    }
    OrderGroup group{d, product.rep().coeffs(), {}};
    group.ramanujan.reserve(static_cast<std::size_t>(d));
    for (std::int64_t m = 0; m < d; ++m) group.ramanujan.push_back(trace_root_of_unity(m, d));
    groups_.push_back(std::move(group));
  }
}

Rational FourierDedekindSum::operator()(std::int64_t t) const {
  Rational total;
  for (const auto& g : groups_) {
    const std::int64_t shift = floor_mod(t, g.order);
    for (std::size_t k = 0; k < g.product.size(); ++k) {
      if (g.product[k].is_zero()) continue;
      const auto idx = static_cast<std::size_t>((static_cast<std::int64_t>(k) + shift) % g.order);
      const std::int64_t r = g.ramanujan[idx];
      if (r != 0) total += g.product[k] * Rational(r);
    }
  }
  return total / Rational(modulus_);
}

Rational sigma_exact(const FDSumSpec& spec) {
  return FourierDedekindSum(spec.args, spec.modulus)(spec.t);
}

double sigma_numeric(const FDSumSpec& spec) {
  spec.validate();
  const std::int64_t c = spec.modulus;
  auto root = [c](std::int64_t exponent) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(floor_mod(exponent, c)) /
                         static_cast<double>(c);
    return std::polar(1.0, angle);
  };
  std::complex<double> sum = 0.0;
  for (std::int64_t k = 1; k < c; ++k) {
    std::complex<double> term = root(k * floor_mod(spec.t, c));
    for (std::int64_t a : spec.args) term /= root(k * floor_mod(a, c)) - 1.0;
    sum += term;
  }
  return sum.real() / static_cast<double>(c);
}

Rational sigma_closed_n1(std::int64_t t, std::int64_t a, std::int64_t c) {
  FDSumSpec{t, {a}, c}.validate();
  if (c == 1) return Rational(0);
  const std::int64_t inv = mod_inverse(a, c);
  const std::int64_t num = floor_mod(-inv * floor_mod(t, c), c);
  return sawtooth(Rational(num, c)) + Rational(1, 2 * c);
}

Rational sigma_closed_n2(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c) {
  FDSumSpec{t, {a, b}, c}.validate();
  if (c < 2) throw std::invalid_argument("sigma_closed_n2 requires modulus >= 2");
  const std::int64_t inv = mod_inverse(a, c);
  const std::int64_t bm = floor_mod(b, c), tm = floor_mod(t, c);
  Rational sum;
  for (std::int64_t m = 0; m < c; ++m) {
    const std::int64_t num = floor_mod(-inv * ((bm * m + tm) % c), c);
    sum += sawtooth(Rational(num, c)) * sawtooth(Rational(m, c));
  }
  return sum - Rational(1, 4 * c);
}

Rational dedekind_sum(std::int64_t h, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("dedekind_sum requires k >= 1");
  if (gcd(h, k) != 1) throw std::invalid_argument("dedekind_sum requires gcd(h, k) = 1");
  Rational sum;
  for (std::int64_t m = 1; m < k; ++m) {
    sum += sawtooth_classical(Rational(m, k)) * sawtooth_classical(Rational(floor_mod(h * m, k), k));
  }
  return sum;
}

Rational rademacher_lower_bound(std::int64_t c) {
  if (c < 1) throw std::invalid_argument("rademacher_lower_bound requires c >= 1");
  return -Rational(c, 12) - Rational(1, 12 * c);
}

}  // namespace fdsum
