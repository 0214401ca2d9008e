#include "fdsum/rational.hpp"

#include <stdexcept>

namespace fdsum {

namespace {

mpz_class from_int64(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform required");
  return mpz_class(static_cast<long>(v));
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(from_int64(n)) {}

Rational::Rational(const Integer& n) : value_(n) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(from_int64(num), from_int64(den)) {}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    mpz_class v;
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (part.size() == start || part.find_first_not_of("0123456789", start) != std::string::npos ||
        v.set_str(part[0] == '+' ? part.substr(1) : part, 10) != 0) {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
    return v;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Integer Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer to_integer(const Rational& r) {
  if (!r.is_integer()) throw std::logic_error("expected an integer, got " + r.str());
  return r.numerator();
}

std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace fdsum
