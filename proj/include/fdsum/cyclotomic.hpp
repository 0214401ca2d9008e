#pragma once

#include <cstdint>

#include "fdsum/polynomial.hpp"
#include "fdsum/rational.hpp"

namespace fdsum {

/// The d-th cyclotomic polynomial Phi_d (d >= 1), built by dividing x^d - 1 by
/// Phi_e for every proper divisor e of d. Results are cached process-wide;
/// the cache is safe for concurrent use.
const PolyQ& cyclotomic_poly(std::int64_t d);

/// An element of Q(zeta_d), stored as a polynomial of degree < phi(d) taken
/// modulo Phi_d.
class CycloElem {
 public:
  /// Reduces p modulo Phi_d.
  static CycloElem reduce(const PolyQ& p, std::int64_t d);
  static CycloElem one(std::int64_t d) { return reduce(PolyQ::constant(Rational(1)), d); }
  /// zeta_d^k for any integer k (negative k is taken modulo d).
  static CycloElem root_power(std::int64_t k, std::int64_t d);

  std::int64_t order() const { return order_; }
  const PolyQ& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  /// Multiplicative inverse via the polynomial extended Euclidean algorithm.
  /// Throws std::domain_error("not invertible in cyclotomic ring") for zero.
  CycloElem inverse() const;

  /// Sum of the Galois conjugates: sum over primitive d-th roots zeta of rep(zeta).
  Rational trace() const;

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  CycloElem& operator*=(const Rational& s);
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator*(CycloElem a, const Rational& s) { return a *= s; }

  friend bool operator==(const CycloElem&, const CycloElem&) = default;

 private:
  CycloElem(std::int64_t d, PolyQ rep) : order_(d), rep_(std::move(rep)) {}
  void require_same_order(const CycloElem& o) const;

  std::int64_t order_ = 1;
  PolyQ rep_;
};

}  // namespace fdsum
