#pragma once

#include <cstdint>
#include <vector>

#include "fdsum/rational.hpp"

namespace fdsum {

/// sigma_t(c_1, ..., c_n; c) =
///   (1/c) * sum over lambda^c = 1 != lambda of lambda^t / prod_j (lambda^{c_j} - 1).
struct FDSumSpec {
  std::int64_t t = 0;
  std::vector<std::int64_t> args;
  std::int64_t modulus = 1;

  /// Throws std::invalid_argument unless modulus >= 1 and every arg is coprime to it.
  void validate() const;
};

/// Exact evaluator for sigma_t(args; c) as a function of t.
///
/// The nontrivial c-th roots of unity are grouped by their order d | c, d > 1.
/// For each group the product prod_j 1/(x^{c_j} - 1) is formed once in
/// Q[x]/Phi_d, after which sigma_t is a sum of Galois traces of x^t times
/// those products, i.e. a dot product against Ramanujan sums. Construction
/// costs a handful of cyclotomic inversions; each evaluation is
/// O(sum of phi(d)) exact additions. Immutable after construction.
class FourierDedekindSum {
 public:
  FourierDedekindSum(std::vector<std::int64_t> args, std::int64_t modulus);

  Rational operator()(std::int64_t t) const;

  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& args() const { return args_; }

 private:
  struct OrderGroup {
    std::int64_t order;
    std::vector<Rational> product;          // coefficients of prod_j 1/(x^{c_j}-1) mod Phi_d
    std::vector<std::int64_t> ramanujan;    // trace of zeta_d^m, m in [0, d)
  };

  std::vector<std::int64_t> args_;
  std::int64_t modulus_;
  std::vector<OrderGroup> groups_;
};

/// Exact value via cyclotomic traces.
Rational sigma_exact(const FDSumSpec& spec);

/// Floating-point summation over the c-1 nontrivial complex roots. Cross-check only.
double sigma_numeric(const FDSumSpec& spec);

/// One-argument closed form ((-a^{-1} t / c)) + 1/(2c); zero when c == 1.
Rational sigma_closed_n1(std::int64_t t, std::int64_t a, std::int64_t c);

/// Two-argument sawtooth form
///   sum_{m=0}^{c-1} ((-a^{-1}(b m + t)/c)) ((m/c)) - 1/(4c), for c >= 2.
Rational sigma_closed_n2(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c);

/// Classical Dedekind sum s(h,k) with the sawtooth that vanishes at integers.
Rational dedekind_sum(std::int64_t h, std::int64_t k);

/// -c/12 - 1/(12c): lower bound for sigma_t(a,b;c).
Rational rademacher_lower_bound(std::int64_t c);

}  // namespace fdsum
