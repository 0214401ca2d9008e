#include "fdsum/number_theory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace fdsum {

namespace {

void require_positive(std::int64_t c, const char* what) {
  if (c <= 0) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

}  // namespace

BezoutTriple gcd_ext(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw std::invalid_argument("gcd undefined");
  // Invariant: old_r = a*old_s + b*old_t, r = a*s + b*t.
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  require_positive(m, "floor_mod");
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t c) {
  if (c < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  const auto [g, x, y] = gcd_ext(floor_mod(a, c), c);
  (void)y;
  if (g != 1) throw std::domain_error("not invertible");
  return floor_mod(x, c);
}

Rational sawtooth(const Rational& x) { return x - Rational(x.floor()) - Rational(1, 2); }

Rational sawtooth_classical(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return sawtooth(x);
}

std::vector<std::int64_t> divisors(std::int64_t c) {
  require_positive(c, "divisors");
  std::vector<std::int64_t> small, large;
  for (std::int64_t i = 1; i * i <= c; ++i) {
    if (c % i != 0) continue;
    small.push_back(i);
    if (i != c / i) large.push_back(c / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t euler_phi(std::int64_t c) {
  require_positive(c, "euler_phi");
  std::int64_t result = c;
  for (std::int64_t p = 2; p * p <= c; ++p) {
    if (c % p != 0) continue;
    while (c % p == 0) c /= p;
    result -= result / p;
  }
  if (c > 1) result -= result / c;
  return result;
}

int moebius(std::int64_t c) {
  require_positive(c, "moebius");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= c; ++p) {
    if (c % p != 0) continue;
    c /= p;
    if (c % p == 0) return 0;
    sign = -sign;
  }
  if (c > 1) sign = -sign;
  return sign;
}

std::int64_t trace_root_of_unity(std::int64_t k, std::int64_t d) {
  require_positive(d, "trace_root_of_unity");
  const std::int64_t g = gcd(floor_mod(k, d), d);  // gcd(0, d) == d
  const std::int64_t q = d / g;
  return moebius(q) * (euler_phi(d) / euler_phi(q));
}

}  // namespace fdsum
