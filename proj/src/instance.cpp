#include "fdsum/instance.hpp"

#include <algorithm>
#include <stdexcept>

#include "fdsum/number_theory.hpp"

namespace fdsum {

Instance::Instance(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("instance needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("instance parts must be positive integers");
    overall_gcd_ = gcd(overall_gcd_, parts_[i]);
    sum_ += parts_[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (gcd(parts_[i], parts_[j]) != 1) pairwise_coprime_ = false;
    }
  }
}

std::vector<std::int64_t> Instance::without(std::size_t j) const {
  std::vector<std::int64_t> rest;
  rest.reserve(parts_.size() - 1);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != j) rest.push_back(parts_[i]);
  }
  return rest;
}

Instance Instance::sorted() const {
  auto copy = parts_;
  std::sort(copy.begin(), copy.end());
  return Instance(std::move(copy));
}

std::string Instance::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

}  // namespace fdsum
