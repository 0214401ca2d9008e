#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fdsum/instance.hpp"
#include "fdsum/rational.hpp"

namespace fdsum {

/// Largest t with no representation sum m_k a_k = t in nonnegative integers,
/// or -1 when every t >= 0 is representable. Computed by a representability
/// sieve that stops after min(a_k) consecutive representable values.
/// Throws std::invalid_argument when the parts share a common factor.
std::int64_t frobenius_g(const Instance& instance);

/// Same question for strictly positive multiplicities: f = g + sum a_k.
std::int64_t frobenius_f(const Instance& instance);

/// All nonnegative t that have no nonnegative representation (the gaps), ascending.
std::vector<std::int64_t> nonrepresentable_values(const Instance& instance);

struct JohnsonReduction {
  std::vector<std::int64_t> reduced;  // pairwise coprime triple
  std::int64_t multiplier = 1;        // f(original) = multiplier * f(reduced)
};

/// Repeatedly applies f(a,b,c) = g * f(a/g, b/g, c) with g = gcd of a pair
/// until the triple is pairwise coprime. Throws std::invalid_argument if
/// gcd(a1, a2, a3) > 1.
JohnsonReduction johnson_reduce(std::int64_t a1, std::int64_t a2, std::int64_t a3);

struct ThreePartBound {
  Rational value;
  /// True when gcd(a1,a2,a3) > 1 and the exact f of the full instance was used instead.
  bool fell_back = false;
};

/// f(a_1..a_n) <= f(a_1, a_2, a_3) + a_4 + ... + a_n on the sorted parts, with the
/// three-part Frobenius number computed exactly through johnson_reduce.
ThreePartBound reduce_to_three(const Instance& instance);

/// Upper bound on f from the three smallest parts:
///   (1/2) (sqrt(a1 a2 a3 (a1+a2+a3)) + a1 + a2 + a3) + a4 + ... + an,
/// evaluated on the Johnson-reduced pairwise coprime triple and scaled by the
/// multiplier. The square root is replaced by its upper enclosure with
/// denominator 10^6. Parts are sorted internally. For n == 2 returns a1*a2.
Rational bound_estimate(const Instance& instance);

/// The same formula applied directly to the sorted triple with no reduction.
Rational bound_estimate_unreduced(const Instance& instance);

/// Literature bounds on g, on the sorted parts:
///   erdos_graham: 2 a_n floor(a_1/n) - a_1
///   selmer:       2 a_{n-1} floor(a_n/n) - a_n
///   vitek:        floor((a_2 - 1)(a_n - 2) / 2) - 1
Rational bound_erdos_graham(const Instance& instance);
Rational bound_selmer(const Instance& instance);
Rational bound_vitek(const Instance& instance);

/// Smallest rational with denominator 10^6 that is >= sqrt(x), x >= 0.
Rational sqrt_upper_enclosure(const Integer& x);

struct FrobeniusReport {
  Instance instance;
  std::int64_t f;
  std::int64_t g;
  std::map<std::string, Rational> bounds;  // bounds on f and on g, keyed by name
  std::vector<std::int64_t> witnesses;     // nonnegative gaps, ascending
};

FrobeniusReport frobenius_report(const Instance& instance);

}  // namespace fdsum
