#pragma once

// Closed forms of the residue polynomials for small n, written out by hand so
// that the series expansion can be checked coefficient by coefficient.

#include <vector>

#include "fdsum/polynomial.hpp"
#include "fdsum/rational.hpp"

namespace fdsum::reference {

inline PolyQ R_minus_t(const std::vector<std::int64_t>& parts) {
  const Rational one(1);
  if (parts.size() == 1) {
    const Rational a(parts[0]);
    return PolyQ{one / (Rational(2) * a) + Rational(1, 2), one / a};
  }
  if (parts.size() == 2) {
    const Rational a(parts[0]), b(parts[1]);
    return PolyQ{Rational(1, 4) * (one + one / a + one / b) + Rational(1, 12) * (a / b + b / a + one / (a * b)),
                 Rational(1, 2) * (one / a + one / b + one / (a * b)), one / (Rational(2) * a * b)};
  }
  const Rational a(parts[0]), b(parts[1]), c(parts[2]);
  const Rational ab = a * b, ac = a * c, bc = b * c, abc = a * b * c;
  const Rational t3 = one / (Rational(6) * abc);
  const Rational t2 = Rational(1, 4) * (one / ab + one / ac + one / bc + one / abc);
  const Rational t1 = Rational(1, 12) * (Rational(3) / a + Rational(3) / b + Rational(3) / c + Rational(3) / ab +
                                         Rational(3) / ac + Rational(3) / bc + a / bc + b / ac + c / ab + one / abc);
  const Rational t0 = Rational(1, 24) * (Rational(3) + Rational(3) / a + Rational(3) / b + Rational(3) / c + a / b +
                                         a / c + b / a + b / c + c / a + c / b + one / ab + one / ac + one / bc +
                                         a / bc + b / ac + c / ab);
  return PolyQ{t0, t1, t2, t3};
}

inline PolyQ R_prime(const std::vector<std::int64_t>& parts) {
  const Rational one(1);
  if (parts.size() == 2) {
    const Rational a(parts[0]), b(parts[1]);
    return PolyQ{-Rational(1, 2) * (one / a + one / b), one / (a * b)};
  }
  if (parts.size() == 3) {
    const Rational a(parts[0]), b(parts[1]), c(parts[2]);
    return PolyQ{Rational(1, 12) * (Rational(3) / a + Rational(3) / b + Rational(3) / c + a / (b * c) +
                                    b / (a * c) + c / (a * b)),
                 -Rational(1, 2) * (one / (a * b) + one / (a * c) + one / (b * c)),
                 one / (Rational(2) * a * b * c)};
  }
  const Rational a(parts[0]), b(parts[1]), c(parts[2]), d(parts[3]);
  const Rational t3 = one / (Rational(6) * a * b * c * d);
  const Rational t2 = -Rational(1, 4) * (one / (a * b * c) + one / (a * b * d) + one / (a * c * d) + one / (b * c * d));
  const Rational three(3);
  const Rational t1 = Rational(1, 12) * (three / (a * b) + three / (a * c) + three / (a * d) + three / (b * c) +
                                         three / (b * d) + three / (c * d) + a / (b * c * d) + b / (a * c * d) +
                                         c / (a * b * d) + d / (a * b * c));
  const Rational t0 = -Rational(1, 24) * (a / (b * c) + a / (b * d) + a / (c * d) + b / (a * d) + b / (a * c) +
                                          b / (c * d) + c / (a * b) + c / (a * d) + c / (b * d) + d / (a * b) +
                                          d / (a * c) + d / (b * c)) -
                      Rational(1, 8) * (one / a + one / b + one / c + one / d);
  return PolyQ{t0, t1, t2, t3};
}

}  // namespace fdsum::reference
