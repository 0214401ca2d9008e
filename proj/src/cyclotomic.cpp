#include "fdsum/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "fdsum/number_theory.hpp"

namespace fdsum {

namespace {

struct CyclotomicCache {
  std::mutex mutex;
  std::map<std::int64_t, std::unique_ptr<const PolyQ>> polys;
};

CyclotomicCache& cache() {
  static CyclotomicCache instance;
  return instance;
}

PolyQ build_cyclotomic(std::int64_t d) {
  PolyQ p = PolyQ::monomial(static_cast<std::size_t>(d)) - PolyQ::constant(Rational(1));
  for (std::int64_t e : divisors(d)) {
    if (e == d) break;
    auto [q, r] = p.divmod(cyclotomic_poly(e));
    if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    p = std::move(q);
  }
  return p;
}

}  // namespace

const PolyQ& cyclotomic_poly(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_poly: order must be >= 1");
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.polys.find(d); it != c.polys.end()) return *it->second;
  }
  // Built outside the lock: construction recurses into smaller orders.
  auto built = std::make_unique<const PolyQ>(build_cyclotomic(d));
  std::lock_guard lock(c.mutex);
  auto [it, inserted] = c.polys.try_emplace(d, std::move(built));
  return *it->second;
}

CycloElem CycloElem::reduce(const PolyQ& p, std::int64_t d) {
  const PolyQ& phi = cyclotomic_poly(d);
  if (p.degree() < phi.degree()) return CycloElem(d, p);
  return CycloElem(d, p.divmod(phi).second);
}

CycloElem CycloElem::root_power(std::int64_t k, std::int64_t d) {
  return reduce(PolyQ::monomial(static_cast<std::size_t>(floor_mod(k, d))), d);
}

void CycloElem::require_same_order(const CycloElem& o) const {
  if (order_ != o.order_) throw std::invalid_argument("cyclotomic elements of different orders");
}

CycloElem CycloElem::inverse() const {
  if (rep_.is_zero()) throw std::domain_error("not invertible in cyclotomic ring");
  // Track s with s * rep == r (mod Phi_d) along the remainder sequence.
  PolyQ r0 = cyclotomic_poly(order_), r1 = rep_;
  PolyQ s0, s1 = PolyQ::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, std::move(r));
    PolyQ next = s0 - q * s1;
    s0 = std::exchange(s1, std::move(next));
  }
  if (r0.degree() != 0) throw std::domain_error("not invertible in cyclotomic ring");
  return reduce(s0 * (Rational(1) / r0.leading()), order_);
}

Rational CycloElem::trace() const {
  Rational acc;
  const auto& c = rep_.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    acc += c[k] * Rational(trace_root_of_unity(static_cast<std::int64_t>(k), order_));
  }
  return acc;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  require_same_order(o);
  rep_ += o.rep_;
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  require_same_order(o);
  rep_ -= o.rep_;
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  require_same_order(o);
  *this = reduce(rep_ * o.rep_, order_);
  return *this;
}

CycloElem& CycloElem::operator*=(const Rational& s) {
  rep_ *= s;
  return *this;
}

}  // namespace fdsum
