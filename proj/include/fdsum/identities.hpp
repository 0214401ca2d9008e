#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fdsum/ehrhart.hpp"
#include "fdsum/instance.hpp"
#include "fdsum/rational.hpp"

namespace fdsum {

/// Both sides of an exact identity. `holds` is literal equality of the
/// canonical rationals; there is no tolerance.
struct IdentityCheck {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// sum_j sigma_0(a_1..^a_j..a_n; a_j) == 1 - R'_0(a_1..a_n). Pairwise coprime, n >= 2.
IdentityCheck verify_zagier(const Instance& instance);

/// Same sums against (-1)^(n-1) - R'_0, the constant term of the open
/// (n-1)-dimensional polytope. Differs from verify_zagier exactly when n is even.
IdentityCheck verify_zagier_signed(const Instance& instance);

/// sum_j sigma_t(a_1..^a_j..a_n; a_j) == -R'_t for 0 < t < sum a_k.
/// Throws std::invalid_argument("hypothesis violated") outside that range.
IdentityCheck verify_gessel_general(const Instance& instance, std::int64_t t);
IdentityCheck verify_gessel_general(const SimplexCounter& counter, std::int64_t t);

/// Two-dimensional form for coprime m, n and 0 <= r < m + n:
///   sigma_{r+1}(n, 1; m) + sigma_{r+1}(m, 1; n)
///     == -1/12 (m/n + n/m + 1/(mn)) + 1/4 (1/m + 1/n - 1)
///        + r/2 (1/m + 1/n - 1/(mn)) - r^2/(2mn).
IdentityCheck verify_gessel_2d(std::int64_t m, std::int64_t n, std::int64_t r);

/// Interior formula at -t against (-1)^n times the closed count at t, t >= 1.
IdentityCheck verify_ehrhart_macdonald(const Instance& instance, std::int64_t t);
IdentityCheck verify_ehrhart_macdonald(const SimplexCounter& counter, std::int64_t t);

/// Sign of the numerator exponent in the root-of-unity sums below.
enum class TriangleExponent { kPositive, kNegative };

/// Explicit two-dimensional closed count for coprime (a, b):
///   t^2/(2ab) + t/2 (1/a + 1/b + 1/(ab)) + 1/4 (1 + 1/a + 1/b) + 1/12 (a/b + b/a + 1/(ab))
///   + (1/a) sum_{r=1}^{a-1} xi_a^{rt} / ((1 - xi_a^{rb})(1 - xi_a^r)) + (a <-> b)
/// compared with count_closed((a, b), t). Each root-of-unity sum is sigma_t(b, 1; a).
/// kNegative uses xi^{-rt} instead, i.e. sigma_{-t}(b, 1; a), which is the form that agrees with the count.
IdentityCheck verify_triangle_closed_form(std::int64_t a, std::int64_t b, std::int64_t t,
                                          TriangleExponent exponent = TriangleExponent::kPositive);

/// s(h,k) + s(k,h) from direct Dedekind sums against the value forced by the
/// Zagier identity on (h, k, 1) and sigma_0(a,1;c) = 1/4 - 1/(4c) - s(a,c).
IdentityCheck verify_dedekind_reciprocity(std::int64_t h, std::int64_t k);

/// Non-decreasing pairwise coprime n-tuples with entries in [1, max_part].
std::vector<Instance> pairwise_coprime_tuples(std::size_t n, std::int64_t max_part);

enum class Suite { kZagier, kGessel, kGessel2d, kEhrhartMacdonald };

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite suite);

struct SuiteFailure {
  std::string suite;
  std::string input;
  Rational lhs;
  Rational rhs;
  std::string note;
};

struct SuiteSummary {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<SuiteFailure> failures;

  void merge(const SuiteSummary& other);
};

struct SuiteOptions {
  std::int64_t max_part = 12;
  /// Largest t for the Ehrhart-Macdonald sweep.
  std::int64_t max_t = 100;
  /// Also compare closed counts against enumeration and sigma values against
  /// floating-point summation.
  bool cross_check = false;
};

/// Exhaustive sweep over the suite's input family:
///   zagier, gessel:     pairwise coprime tuples, n in {2,3,4}, parts <= max_part
///   gessel2d:           coprime m, n <= max_part, 0 <= r < m + n, also checked
///                       against the general law on (m, n, 1) at t = r + 1
///   ehrhart-macdonald:  pairwise coprime tuples, n in {1,2,3}, 1 <= t <= max_t
SuiteSummary run_suite(Suite suite, const SuiteOptions& options);

}  // namespace fdsum
