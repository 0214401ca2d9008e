#include "fdsum/ehrhart.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fdsum/laurent.hpp"

namespace fdsum {

namespace {

// Residue at w = 0 of e^{scale*w} * prod_k 1/(e^{a_k w} - 1).
PolyQ exp_over_product_residue(const PolyQ& scale, const std::vector<std::int64_t>& parts) {
  const auto n = static_cast<std::int64_t>(parts.size());
  const std::int64_t order = n + 2;
  LaurentBlock series = LaurentBlock::exp(scale, order);
  for (std::int64_t a : parts) series = series * LaurentBlock::inverse_exp_minus_one(a, order);
  return series.residue();
}

PolyQ symbol_t(std::int64_t sign) { return PolyQ{Rational(0), Rational(sign)}; }

Instance require_pairwise_coprime(Instance instance) {
  if (!instance.pairwise_coprime()) throw std::domain_error("unsupported: non-simple poles");
  return instance;
}

}  // namespace

ResiduePolynomial residue_R(const Instance& instance) {
  // 1/(1 - e^{az}) = -1/(e^{az} - 1) for each of the n + 1 factors.
  std::vector<std::int64_t> parts(instance.parts().begin(), instance.parts().end());
  parts.push_back(1);
  PolyQ res = exp_over_product_residue(symbol_t(-1), parts);
  const bool odd_factor_count = parts.size() % 2 == 1;
  // R = -(-1)^{n+1} res
  return {odd_factor_count ? res : -res};
}

ResiduePolynomial residue_Rprime(const Instance& instance) {
  if (instance.size() < 2) throw std::invalid_argument("residue_Rprime requires at least two parts");
  std::vector<std::int64_t> parts(instance.parts().begin(), instance.parts().end());
  return {exp_over_product_residue(symbol_t(1), parts)};
}

SimplexCounter::SimplexCounter(Instance instance)
    : instance_(require_pairwise_coprime(std::move(instance))), closed_poly_(residue_R(instance_)) {
  for (std::size_t j = 0; j < instance_.size(); ++j) {
    auto rest = instance_.without(j);
    facet_sums_.emplace_back(rest, instance_[j]);
    rest.push_back(1);
    vertex_sums_.emplace_back(std::move(rest), instance_[j]);
  }
  if (instance_.size() >= 2) {
    facet_poly_ = residue_Rprime(instance_);
    has_facet_ = true;
  }
}

const ResiduePolynomial& SimplexCounter::facet_polynomial() const {
  if (!has_facet_) throw std::invalid_argument("facet quantities require at least two parts");
  return facet_poly_;
}

Rational SimplexCounter::vertex_sigma_sum(std::int64_t t) const {
  Rational sum;
  for (const auto& s : vertex_sums_) sum += s(t);
  return sum;
}

Rational SimplexCounter::facet_sigma_sum(std::int64_t t) const {
  Rational sum;
  for (const auto& s : facet_sums_) sum += s(t);
  return sum;
}

Integer SimplexCounter::closed(std::int64_t t) const {
  if (t < 0) throw std::invalid_argument("closed count needs t >= 0");
  Rational corrections = vertex_sigma_sum(-t);
  if (instance_.size() % 2 == 1) corrections = -corrections;
  return to_integer(closed_poly_(t) + corrections);
}

Integer SimplexCounter::interior(std::int64_t t) const {
  Rational value = closed_poly_(-t);  // R_t
  if (instance_.size() % 2 == 1) value = -value;
  return to_integer(value + vertex_sigma_sum(t));
}

Integer SimplexCounter::restricted_partitions(std::int64_t t) const {
  const auto& poly = facet_polynomial();
  if (t <= 0) return 0;
  return to_integer(poly(t) + facet_sigma_sum(t));
}

Integer SimplexCounter::partitions(std::int64_t t) const {
  facet_polynomial();
  if (t < 0) return 0;
  return restricted_partitions(t + instance_.sum());
}

Integer count_closed(const Instance& instance, std::int64_t t) {
  return SimplexCounter(instance).closed(t);
}

Integer count_interior(const Instance& instance, std::int64_t t) {
  return SimplexCounter(instance).interior(t);
}

Integer count_restricted_partitions(const Instance& instance, std::int64_t t) {
  return SimplexCounter(instance).restricted_partitions(t);
}

Integer count_partitions(const Instance& instance, std::int64_t t) {
  return SimplexCounter(instance).partitions(t);
}

namespace {

enum class Region { kClosed, kInterior, kFacet, kNonnegativeFacet };

class Enumerator {
 public:
  Enumerator(const Instance& instance, Region region, std::uint64_t budget)
      : parts_(instance.parts().begin(), instance.parts().end()),
        region_(region),
        budget_(budget),
        min_multiplicity_(region == Region::kInterior || region == Region::kFacet ? 1 : 0) {
    // Count the smallest part per row so that the explicit loops stay short.
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  Integer count(std::int64_t t) {
    if (t < 0) throw std::invalid_argument("enumeration needs t >= 0");
    return descend(0, t);
  }

 private:
  Integer descend(std::size_t index, std::int64_t remaining) {
    if (index + 1 == parts_.size()) return row(remaining);
    Integer total = 0;
    const std::int64_t a = parts_[index];
    for (std::int64_t m = min_multiplicity_; m * a <= remaining; ++m) {
      total += descend(index + 1, remaining - m * a);
    }
    return total;
  }

  // Number of admissible multiplicities of the last part given what is left.
  std::int64_t row(std::int64_t r) {
    if (++rows_ > budget_) throw std::runtime_error("enumeration budget exceeded");
    const std::int64_t a = parts_.back();
    switch (region_) {
      case Region::kClosed:
        return r / a + 1;
      case Region::kInterior:
        return r >= 1 ? (r - 1) / a : 0;  // m >= 1 with m*a < r
      case Region::kFacet:
        return r > 0 && r % a == 0 ? 1 : 0;
      case Region::kNonnegativeFacet:
        return r % a == 0 ? 1 : 0;
    }
    return 0;
  }

  std::vector<std::int64_t> parts_;
  Region region_;
  std::uint64_t budget_;
  std::uint64_t rows_ = 0;
  std::int64_t min_multiplicity_;
};

}  // namespace

Integer brute_force_closed(const Instance& instance, std::int64_t t, std::uint64_t budget) {
  return Enumerator(instance, Region::kClosed, budget).count(t);
}

Integer brute_force_interior(const Instance& instance, std::int64_t t, std::uint64_t budget) {
  return Enumerator(instance, Region::kInterior, budget).count(t);
}

Integer brute_force_facet(const Instance& instance, std::int64_t t, std::uint64_t budget) {
  return Enumerator(instance, Region::kFacet, budget).count(t);
}

Integer brute_force_partitions(const Instance& instance, std::int64_t t, std::uint64_t budget) {
  return Enumerator(instance, Region::kNonnegativeFacet, budget).count(t);
}

}  // namespace fdsum
