#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fdsum {

/// An ordered tuple A = (a_1, ..., a_n) of positive integers.
///
/// Coprimality metadata is computed on construction and never supplied by
/// the caller.
class Instance {
 public:
  /// Throws std::invalid_argument if parts is empty or any part is < 1.
  explicit Instance(std::vector<std::int64_t> parts);

  std::span<const std::int64_t> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::int64_t operator[](std::size_t i) const { return parts_[i]; }

  bool pairwise_coprime() const { return pairwise_coprime_; }
  /// gcd of all parts taken together.
  std::int64_t overall_gcd() const { return overall_gcd_; }
  std::int64_t sum() const { return sum_; }

  /// Parts with index j removed (the "hat" operation).
  std::vector<std::int64_t> without(std::size_t j) const;
  Instance sorted() const;

  std::string str() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<std::int64_t> parts_;
  bool pairwise_coprime_ = true;
  std::int64_t overall_gcd_ = 0;
  std::int64_t sum_ = 0;
};

}  // namespace fdsum
