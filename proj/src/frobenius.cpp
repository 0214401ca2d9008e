#include "fdsum/frobenius.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "fdsum/number_theory.hpp"

namespace fdsum {

namespace {

constexpr std::size_t kSieveLimit = std::size_t{1} << 32;

void require_coprime(const Instance& instance) {
  if (instance.overall_gcd() != 1) {
    throw std::invalid_argument("infinitely many non-representable values");
  }
}

// representable[v] for v in [0, last]; grows until min part consecutive hits.
std::vector<char> representability_sieve(const Instance& instance) {
  require_coprime(instance);
  const auto parts = instance.parts();
  const std::int64_t smallest = *std::min_element(parts.begin(), parts.end());
  std::vector<char> rep{1};
  std::int64_t run = 1;
  while (run < smallest) {
    if (rep.size() >= kSieveLimit) throw std::runtime_error("representability sieve too large");
    const auto v = static_cast<std::int64_t>(rep.size());
    char hit = 0;
    for (std::int64_t a : parts) {
      if (a <= v && rep[static_cast<std::size_t>(v - a)]) {
        hit = 1;
        break;
      }
    }
    rep.push_back(hit);
    run = hit ? run + 1 : 0;
  }
  return rep;
}

Rational three_part_formula(std::int64_t a, std::int64_t b, std::int64_t c) {
  const Integer s = Integer(static_cast<long>(a + b + c));
  const Integer product =
      Integer(static_cast<long>(a)) * Integer(static_cast<long>(b)) * Integer(static_cast<long>(c)) * s;
  return (sqrt_upper_enclosure(product) + Rational(s)) / Rational(2);
}

std::int64_t tail_sum(const Instance& sorted_instance) {
  std::int64_t tail = 0;
  for (std::size_t i = 3; i < sorted_instance.size(); ++i) tail += sorted_instance[i];
  return tail;
}

void require_literature_bound_input(const Instance& instance) {
  if (instance.size() < 2) throw std::invalid_argument("bound requires at least two parts");
  require_coprime(instance);
}

}  // namespace

std::vector<std::int64_t> nonrepresentable_values(const Instance& instance) {
  const auto rep = representability_sieve(instance);
  std::vector<std::int64_t> gaps;
  for (std::size_t v = 0; v < rep.size(); ++v) {
    if (!rep[v]) gaps.push_back(static_cast<std::int64_t>(v));
  }
  return gaps;
}

std::int64_t frobenius_g(const Instance& instance) {
  const auto rep = representability_sieve(instance);
  for (std::size_t v = rep.size(); v-- > 0;) {
    if (!rep[v]) return static_cast<std::int64_t>(v);
  }
  return -1;
}

std::int64_t frobenius_f(const Instance& instance) { return frobenius_g(instance) + instance.sum(); }

JohnsonReduction johnson_reduce(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  if (a1 < 1 || a2 < 1 || a3 < 1) throw std::invalid_argument("parts must be positive");
  if (gcd(gcd(a1, a2), a3) != 1) throw std::invalid_argument("parts share a common factor");
  JohnsonReduction out{{a1, a2, a3}, 1};
  auto& v = out.reduced;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        const std::int64_t g = gcd(v[i], v[j]);
        if (g == 1) continue;
        v[i] /= g;
        v[j] /= g;
        out.multiplier *= g;
        changed = true;
      }
    }
  }
  return out;
}

ThreePartBound reduce_to_three(const Instance& instance) {
  if (instance.size() < 3) throw std::invalid_argument("reduce_to_three requires at least three parts");
  require_coprime(instance);
  const Instance s = instance.sorted();
  if (gcd(gcd(s[0], s[1]), s[2]) != 1) return {Rational(frobenius_f(instance)), true};
  const auto j = johnson_reduce(s[0], s[1], s[2]);
  const std::int64_t f3 = j.multiplier * frobenius_f(Instance(j.reduced));
  return {Rational(f3 + tail_sum(s)), false};
}

Rational sqrt_upper_enclosure(const Integer& x) {
  if (x < 0) throw std::invalid_argument("square root of a negative number");
  const Integer scale = 1'000'000;
  const Integer scaled = x * scale * scale;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  if (root * root < scaled) root += 1;
  return Rational(root, scale);
}

Rational bound_estimate(const Instance& instance) {
  require_coprime(instance);
  if (instance.size() < 2) throw std::invalid_argument("bound_estimate requires at least two parts");
  const Instance s = instance.sorted();
  if (s.size() == 2) return Rational(s[0] * s[1]);
  if (gcd(gcd(s[0], s[1]), s[2]) != 1) return bound_estimate_unreduced(instance);
  auto j = johnson_reduce(s[0], s[1], s[2]);
  std::sort(j.reduced.begin(), j.reduced.end());
  return Rational(j.multiplier) * three_part_formula(j.reduced[0], j.reduced[1], j.reduced[2]) +
         Rational(tail_sum(s));
}

Rational bound_estimate_unreduced(const Instance& instance) {
  require_coprime(instance);
  if (instance.size() < 3) throw std::invalid_argument("three-part bound requires at least three parts");
  const Instance s = instance.sorted();
  return three_part_formula(s[0], s[1], s[2]) + Rational(tail_sum(s));
}

Rational bound_erdos_graham(const Instance& instance) {
  require_literature_bound_input(instance);
  const Instance s = instance.sorted();
  const auto n = static_cast<std::int64_t>(s.size());
  return Rational(2 * s[s.size() - 1] * (s[0] / n) - s[0]);
}

Rational bound_selmer(const Instance& instance) {
  require_literature_bound_input(instance);
  const Instance s = instance.sorted();
  const auto n = static_cast<std::int64_t>(s.size());
  const std::int64_t an = s[s.size() - 1];
  return Rational(2 * s[s.size() - 2] * (an / n) - an);
}

Rational bound_vitek(const Instance& instance) {
  require_literature_bound_input(instance);
  const Instance s = instance.sorted();
  // Floor of a possibly negative half-integer (a_n - 2 < 0 when a_n == 1).
  return Rational(Integer(Rational((s[1] - 1) * (s[s.size() - 1] - 2), 2).floor() - 1));
}

FrobeniusReport frobenius_report(const Instance& instance) {
  FrobeniusReport r{instance, frobenius_f(instance), frobenius_g(instance), {}, {}};
  r.witnesses = nonrepresentable_values(instance);
  if (instance.size() >= 2) {
    r.bounds.emplace("f_upper_estimate", bound_estimate(instance));
    r.bounds.emplace("g_erdos_graham", bound_erdos_graham(instance));
    r.bounds.emplace("g_selmer", bound_selmer(instance));
    r.bounds.emplace("g_vitek", bound_vitek(instance));
  }
  if (instance.size() >= 3) r.bounds.emplace("f_reduce_to_three", reduce_to_three(instance).value);
  return r;
}

}  // namespace fdsum
