#include "fdsum/identities.hpp"

#include <cmath>
#include <stdexcept>

#include "fdsum/fourier_dedekind.hpp"
#include "fdsum/number_theory.hpp"

namespace fdsum {

namespace {

IdentityCheck make_check(Rational lhs, Rational rhs) {
  const bool holds = lhs == rhs;
  return {std::move(lhs), std::move(rhs), holds};
}

void extend_tuples(std::size_t n, std::int64_t max_part, std::vector<std::int64_t>& prefix,
                   std::vector<Instance>& out) {
  if (prefix.size() == n) {
    out.emplace_back(prefix);
    return;
  }
  const std::int64_t start = prefix.empty() ? 1 : prefix.back();
  for (std::int64_t a = start; a <= max_part; ++a) {
    bool coprime = true;
    for (std::int64_t p : prefix) coprime = coprime && gcd(p, a) == 1;
    if (!coprime) continue;
    prefix.push_back(a);
    extend_tuples(n, max_part, prefix, out);
    prefix.pop_back();
  }
}

double numeric_facet_sum(const Instance& instance, std::int64_t t) {
  double sum = 0.0;
  for (std::size_t j = 0; j < instance.size(); ++j) {
    sum += sigma_numeric({t, instance.without(j), instance[j]});
  }
  return sum;
}

void record(SuiteSummary& summary, const std::string& suite, const std::string& input,
            const IdentityCheck& check, std::string note = {}) {
  ++summary.checked;
  if (check.holds && note.empty()) {
    ++summary.passed;
    return;
  }
  ++summary.failed;
  summary.failures.push_back({suite, input, check.lhs, check.rhs, std::move(note)});
}

std::string numeric_note(const Rational& exact, double numeric) {
  const double tol = 1e-9 * std::max(1.0, std::abs(numeric));
  if (std::abs(exact.to_double() - numeric) <= tol) return {};
  return "floating-point cross-check disagrees: " + std::to_string(numeric);
}

}  // namespace

IdentityCheck verify_zagier(const Instance& instance) {
  SimplexCounter counter(instance);
  return make_check(counter.facet_sigma_sum(0),
                    Rational(1) - counter.facet_polynomial()(std::int64_t{0}));
}

IdentityCheck verify_zagier_signed(const Instance& instance) {
  SimplexCounter counter(instance);
  const Rational euler(instance.size() % 2 == 1 ? 1 : -1);
  return make_check(counter.facet_sigma_sum(0), euler - counter.facet_polynomial()(std::int64_t{0}));
}

IdentityCheck verify_gessel_general(const SimplexCounter& counter, std::int64_t t) {
  if (t <= 0 || t >= counter.instance().sum()) throw std::invalid_argument("hypothesis violated");
  return make_check(counter.facet_sigma_sum(t), -counter.facet_polynomial()(t));
}

IdentityCheck verify_gessel_general(const Instance& instance, std::int64_t t) {
  if (t <= 0 || t >= instance.sum()) throw std::invalid_argument("hypothesis violated");
  return verify_gessel_general(SimplexCounter(instance), t);
}

IdentityCheck verify_gessel_2d(std::int64_t m, std::int64_t n, std::int64_t r) {
  if (m < 1 || n < 1 || gcd(m, n) != 1 || r < 0 || r >= m + n) {
    throw std::invalid_argument("hypothesis violated");
  }
  Rational lhs = sigma_exact({r + 1, {n, 1}, m}) + sigma_exact({r + 1, {m, 1}, n});
  const Rational M(m), N(n), R(r), one(1);
  Rational rhs = -Rational(1, 12) * (M / N + N / M + one / (M * N)) +
                 Rational(1, 4) * (one / M + one / N - one) +
                 R / Rational(2) * (one / M + one / N - one / (M * N)) - R * R / (Rational(2) * M * N);
  return make_check(std::move(lhs), std::move(rhs));
}

IdentityCheck verify_ehrhart_macdonald(const SimplexCounter& counter, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("Ehrhart-Macdonald check needs t >= 1");
  Rational rhs(counter.closed(t));
  if (counter.instance().size() % 2 == 1) rhs = -rhs;
  return make_check(Rational(counter.interior(-t)), std::move(rhs));
}

IdentityCheck verify_ehrhart_macdonald(const Instance& instance, std::int64_t t) {
  return verify_ehrhart_macdonald(SimplexCounter(instance), t);
}

IdentityCheck verify_triangle_closed_form(std::int64_t a, std::int64_t b, std::int64_t t,
                                          TriangleExponent exponent) {
  if (a < 1 || b < 1 || gcd(a, b) != 1) throw std::invalid_argument("parts must be coprime");
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  const Rational A(a), B(b), T(t), one(1);
  Rational value = T * T / (Rational(2) * A * B) +
                   T / Rational(2) * (one / A + one / B + one / (A * B)) +
                   Rational(1, 4) * (one + one / A + one / B) +
                   Rational(1, 12) * (A / B + B / A + one / (A * B));
  // (1 - x)(1 - y) == (x - 1)(y - 1), so each root sum is a Fourier-Dedekind sum.
  const std::int64_t e = exponent == TriangleExponent::kPositive ? t : -t;
  value += sigma_exact({e, {b, 1}, a}) + sigma_exact({e, {a, 1}, b});
  return make_check(std::move(value), Rational(count_closed(Instance({a, b}), t)));
}

IdentityCheck verify_dedekind_reciprocity(std::int64_t h, std::int64_t k) {
  if (h < 1 || k < 1 || gcd(h, k) != 1) throw std::invalid_argument("h and k must be coprime and positive");
  Rational lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
  const Rational rprime0 = residue_Rprime(Instance({h, k, 1}))(std::int64_t{0});
  Rational rhs = Rational(1, 2) - Rational(1, 4 * h) - Rational(1, 4 * k) - (Rational(1) - rprime0);
  return make_check(std::move(lhs), std::move(rhs));
}

std::vector<Instance> pairwise_coprime_tuples(std::size_t n, std::int64_t max_part) {
  std::vector<Instance> out;
  std::vector<std::int64_t> prefix;
  if (n > 0 && max_part >= 1) extend_tuples(n, max_part, prefix, out);
  return out;
}

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "zagier") return Suite::kZagier;
  if (name == "gessel") return Suite::kGessel;
  if (name == "gessel2d") return Suite::kGessel2d;
  if (name == "ehrhart-macdonald") return Suite::kEhrhartMacdonald;
  return std::nullopt;
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::kZagier:
      return "zagier";
    case Suite::kGessel:
      return "gessel";
    case Suite::kGessel2d:
      return "gessel2d";
    case Suite::kEhrhartMacdonald:
      return "ehrhart-macdonald";
  }
  return "unknown";
}

void SuiteSummary::merge(const SuiteSummary& other) {
  checked += other.checked;
  passed += other.passed;
  failed += other.failed;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

SuiteSummary run_suite(Suite suite, const SuiteOptions& options) {
  SuiteSummary summary;
  const std::string name = suite_name(suite);
  switch (suite) {
    case Suite::kZagier:
    case Suite::kGessel:
      for (std::size_t n = 2; n <= 4; ++n) {
        for (const auto& inst : pairwise_coprime_tuples(n, options.max_part)) {
          const SimplexCounter counter(inst);
          if (suite == Suite::kZagier) {
            const auto check = make_check(counter.facet_sigma_sum(0),
                                          Rational(1) - counter.facet_polynomial()(std::int64_t{0}));
            record(summary, name, inst.str(), check,
                   options.cross_check ? numeric_note(check.lhs, numeric_facet_sum(inst, 0)) : "");
            continue;
          }
          for (std::int64_t t = 1; t < inst.sum(); ++t) {
            const auto check = verify_gessel_general(counter, t);
            record(summary, name, inst.str() + " t=" + std::to_string(t), check,
                   options.cross_check ? numeric_note(check.lhs, numeric_facet_sum(inst, t)) : "");
          }
        }
      }
      break;
    case Suite::kGessel2d:
      for (std::int64_t m = 1; m <= options.max_part; ++m) {
        for (std::int64_t n = 1; n <= options.max_part; ++n) {
          if (gcd(m, n) != 1) continue;
          const SimplexCounter general(Instance({m, n, 1}));
          for (std::int64_t r = 0; r < m + n; ++r) {
            const auto check = verify_gessel_2d(m, n, r);
            const auto via_general = verify_gessel_general(general, r + 1);
            std::string note;
            if (via_general.holds != check.holds) note = "disagrees with the general law on (m,n,1)";
            if (options.cross_check && note.empty()) {
              const double numeric = sigma_numeric({r + 1, {n, 1}, m}) + sigma_numeric({r + 1, {m, 1}, n});
              note = numeric_note(check.lhs, numeric);
            }
            record(summary, name,
                   "m=" + std::to_string(m) + " n=" + std::to_string(n) + " r=" + std::to_string(r), check,
                   note);
          }
        }
      }
      break;
    case Suite::kEhrhartMacdonald:
      for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& inst : pairwise_coprime_tuples(n, options.max_part)) {
          const SimplexCounter counter(inst);
          for (std::int64_t t = 1; t <= options.max_t; ++t) {
            const auto check = verify_ehrhart_macdonald(counter, t);
            std::string note;
            if (options.cross_check) {
              if (counter.closed(t) != brute_force_closed(inst, t)) note = "closed count disagrees with enumeration";
              else if (counter.interior(t) != brute_force_interior(inst, t))
                note = "interior count disagrees with enumeration";
            }
            record(summary, name, inst.str() + " t=" + std::to_string(t), check, note);
          }
        }
      }
      break;
  }
  return summary;
}

}  // namespace fdsum
