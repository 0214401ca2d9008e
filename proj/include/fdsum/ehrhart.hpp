#pragma once

#include <cstdint>
#include <vector>

#include "fdsum/fourier_dedekind.hpp"
#include "fdsum/instance.hpp"
#include "fdsum/polynomial.hpp"
#include "fdsum/rational.hpp"

namespace fdsum {

/// Polynomial part of a lattice-point quasipolynomial, as an exact
/// polynomial in the dilation parameter t.
struct ResiduePolynomial {
  PolyQ poly;

  Rational operator()(const Rational& t) const { return poly.evaluate(t); }
  Rational operator()(std::int64_t t) const { return poly.evaluate(Rational(t)); }
  std::ptrdiff_t degree() const { return poly.degree(); }
  Rational coefficient(std::size_t k) const { return poly.coeff(k); }
};

/// R_{-t}(a_1..a_n) = -Res_{z=0} e^{-tz} / ((1 - e^{a_1 z}) ... (1 - e^{a_n z}) (1 - e^z)),
/// returned as the polynomial P with P(t) = R_{-t}. Degree n.
ResiduePolynomial residue_R(const Instance& instance);

/// R'_t(a_1..a_n) = Res_{w=0} e^{tw} / ((e^{a_1 w} - 1) ... (e^{a_n w} - 1)). Degree n-1.
/// Throws std::invalid_argument for n < 2.
ResiduePolynomial residue_Rprime(const Instance& instance);

/// Lattice-point counts for the simplex {x >= 0 : sum a_k x_k <= 1} and its
/// dilates, evaluated per t from the residue polynomials plus Fourier-Dedekind
/// corrections. Requires pairwise coprime parts; immutable after construction.
class SimplexCounter {
 public:
  /// Throws std::domain_error("unsupported: non-simple poles") when the parts
  /// are not pairwise coprime.
  explicit SimplexCounter(Instance instance);

  const Instance& instance() const { return instance_; }
  const ResiduePolynomial& closed_polynomial() const { return closed_poly_; }
  /// R'_t; throws std::invalid_argument for n < 2.
  const ResiduePolynomial& facet_polynomial() const;

  /// sum_j sigma_t(a_1..^a_j..a_n, 1; a_j)
  Rational vertex_sigma_sum(std::int64_t t) const;
  /// sum_j sigma_t(a_1..^a_j..a_n; a_j)
  Rational facet_sigma_sum(std::int64_t t) const;

  /// #(tP ∩ Z^n), t >= 0.
  Integer closed(std::int64_t t) const;
  /// Interior formula (-1)^n R_t + sum_j sigma_t(..., 1; a_j). For t >= 1 this is
  /// #(tP° ∩ Z^n); at t <= 0 it is the formal quasipolynomial value.
  Integer interior(std::int64_t t) const;
  /// Solutions of sum m_k a_k = t with every m_k >= 1; 0 for t <= 0. Needs n >= 2.
  Integer restricted_partitions(std::int64_t t) const;
  /// Solutions with every m_k >= 0. Needs n >= 2.
  Integer partitions(std::int64_t t) const;

 private:
  Instance instance_;
  ResiduePolynomial closed_poly_;
  std::vector<FourierDedekindSum> vertex_sums_;  // sigma(a_1..^a_j..a_n, 1; a_j)
  std::vector<FourierDedekindSum> facet_sums_;   // sigma(a_1..^a_j..a_n; a_j)
  ResiduePolynomial facet_poly_;
  bool has_facet_ = false;
};

Integer count_closed(const Instance& instance, std::int64_t t);
Integer count_interior(const Instance& instance, std::int64_t t);
Integer count_restricted_partitions(const Instance& instance, std::int64_t t);
Integer count_partitions(const Instance& instance, std::int64_t t);

/// Enumeration oracles. Each visits one row of lattice points per step and
/// throws std::runtime_error once more than `budget` rows were visited.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 200'000'000;

Integer brute_force_closed(const Instance& instance, std::int64_t t,
                           std::uint64_t budget = kDefaultEnumerationBudget);
Integer brute_force_interior(const Instance& instance, std::int64_t t,
                             std::uint64_t budget = kDefaultEnumerationBudget);
Integer brute_force_facet(const Instance& instance, std::int64_t t,
                          std::uint64_t budget = kDefaultEnumerationBudget);
/// Nonnegative solutions of sum m_k a_k = t.
Integer brute_force_partitions(const Instance& instance, std::int64_t t,
                               std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace fdsum
