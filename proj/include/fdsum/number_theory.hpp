#pragma once

#include <cstdint>
#include <vector>

#include "fdsum/rational.hpp"

namespace fdsum {

struct BezoutTriple {
  std::int64_t gcd;
  std::int64_t x;
  std::int64_t y;
};

/// Extended Euclid: a*x + b*y == gcd >= 1. Throws std::invalid_argument if a == b == 0.
BezoutTriple gcd_ext(std::int64_t a, std::int64_t b);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Representative of a mod m in [0, m). Requires m >= 1.
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

/// Inverse of a modulo c in [1, c-1] (c >= 2). Throws std::domain_error if gcd(a, c) > 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t c);

/// ((x)) = x - floor(x) - 1/2, which is -1/2 at integers.
Rational sawtooth(const Rational& x);

/// Classical sawtooth: 0 at integers, x - floor(x) - 1/2 otherwise.
Rational sawtooth_classical(const Rational& x);

// The following require c >= 1 and throw std::invalid_argument otherwise.
std::vector<std::int64_t> divisors(std::int64_t c);
std::int64_t euler_phi(std::int64_t c);
int moebius(std::int64_t c);

/// Sum of zeta^k over the primitive d-th roots of unity (Ramanujan's sum):
/// mu(d/g) * phi(d) / phi(d/g) with g = gcd(k mod d, d).
std::int64_t trace_root_of_unity(std::int64_t k, std::int64_t d);

}  // namespace fdsum
