#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <stdexcept>

#include "fdsum/ehrhart.hpp"
#include "fdsum/fourier_dedekind.hpp"
#include "fdsum/frobenius.hpp"
#include "fdsum/identities.hpp"
#include "fdsum/instance.hpp"

namespace fdsum::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Raised when a --check cross-verification disagrees with the result.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json envelope() {
  Json j;
  j["schema"] = kSchemaVersion;
  return j;
}

Json int_list(const std::vector<std::int64_t>& v) {
  Json arr = Json::array();
  for (auto x : v) arr.push_back(std::to_string(x));
  return arr;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    out << prefix << ":";
    for (const auto& v : j) out << " " << (v.is_string() ? v.get<std::string>() : v.dump());
    out << "\n";
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& j, bool text, std::ostream& out) {
  if (text) {
    flatten(j, "", out);
  } else {
    out << j.dump() << "\n";
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure("check failed: " + what);
}

struct Options {
  bool text = false;
  bool check = false;
  std::int64_t t = 0;
  std::vector<std::int64_t> args;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> parts;
  bool interior = false;
  bool restricted = false;
  bool prime = false;
  bool gaps = false;
  std::string suite;
  std::int64_t max_part = 12;
  std::int64_t max_t = 100;
};

Json cmd_sigma(const Options& o) {
  const FDSumSpec spec{o.t, o.args, o.modulus};
  const Rational value = sigma_exact(spec);
  Json j = envelope();
  j["value"] = value.str();
  if (o.check) {
    const double numeric = sigma_numeric(spec);
    require(std::abs(value.to_double() - numeric) <= 1e-9 * std::max(1.0, std::abs(numeric)),
            "exact value " + value.str() + " vs numeric " + std::to_string(numeric));
    j["check"] = "passed";
  }
  return j;
}

Json cmd_ehrhart(const Options& o) {
  const Instance inst(o.parts);
  if (o.t < 0) throw std::invalid_argument("--t must be >= 0");
  const Integer count = o.interior ? count_interior(inst, o.t) : count_closed(inst, o.t);
  Json j = envelope();
  j["count"] = count.get_str();
  if (o.check) {
    const Integer oracle = o.interior ? brute_force_interior(inst, o.t) : brute_force_closed(inst, o.t);
    require(count == oracle, "formula " + count.get_str() + " vs enumeration " + oracle.get_str());
    j["check"] = "passed";
  }
  return j;
}

Json cmd_partitions(const Options& o) {
  const Instance inst(o.parts);
  const Integer count =
      o.restricted ? count_restricted_partitions(inst, o.t) : count_partitions(inst, o.t);
  Json j = envelope();
  j["count"] = count.get_str();
  if (o.check) {
    Integer oracle = 0;
    if (o.t >= 0) oracle = o.restricted ? brute_force_facet(inst, o.t) : brute_force_partitions(inst, o.t);
    require(count == oracle, "formula " + count.get_str() + " vs enumeration " + oracle.get_str());
    j["check"] = "passed";
  }
  return j;
}

Json cmd_frobenius(const Options& o) {
  const Instance inst(o.parts);
  const std::int64_t f = frobenius_f(inst);
  const std::int64_t g = frobenius_g(inst);
  Json j = envelope();
  j["f"] = std::to_string(f);
  j["g"] = std::to_string(g);
  if (o.gaps) j["gaps"] = int_list(nonrepresentable_values(inst));
  if (o.check) {
    // f is not a positive combination; the next min(a) values all are, so every larger one is.
    const std::int64_t smallest = *std::min_element(o.parts.begin(), o.parts.end());
    if (f > 0) require(brute_force_facet(inst, f) == 0, "f is representable with positive multiplicities");
    for (std::int64_t t = std::max<std::int64_t>(f + 1, 1); t <= f + smallest; ++t) {
      require(brute_force_facet(inst, t) > 0, std::to_string(t) + " > f is not representable");
    }
    if (inst.pairwise_coprime() && inst.size() >= 2 && f > 0) {
      require(count_restricted_partitions(inst, f) == 0, "partition formula is nonzero at f");
    }
    j["check"] = "passed";
  }
  return j;
}

Json cmd_bounds(const Options& o) {
  const Instance inst(o.parts);
  const auto report = frobenius_report(inst);
  Json j = envelope();
  j["f"] = std::to_string(report.f);
  j["g"] = std::to_string(report.g);
  Json b = Json::object();
  for (const auto& [name, value] : report.bounds) b[name] = value.str();
  j["bounds"] = b;
  if (o.check) {
    for (const auto& [name, value] : report.bounds) {
      const Rational exact(name.rfind("f_", 0) == 0 ? report.f : report.g);
      require(value >= exact, name + " = " + value.str() + " is below the exact value " + exact.str());
    }
    j["check"] = "passed";
  }
  return j;
}

Json cmd_residue(const Options& o) {
  const Instance inst(o.parts);
  const ResiduePolynomial poly = o.prime ? residue_Rprime(inst) : residue_R(inst);
  Json j = envelope();
  j["polynomial"] = o.prime ? "Rprime" : "R";
  j["variable"] = "t";
  Json coeffs = Json::array();
  for (const auto& c : poly.poly.coeffs()) coeffs.push_back(c.str());
  j["coefficients"] = coeffs;
  if (o.check) {
    if (!inst.pairwise_coprime()) throw std::invalid_argument("--check needs pairwise coprime parts");
    const SimplexCounter counter(inst);
    for (std::int64_t t = 1; t <= 2 * inst.sum(); ++t) {
      if (o.prime) {
        require(counter.restricted_partitions(t) == brute_force_facet(inst, t),
                "facet count disagrees at t=" + std::to_string(t));
      } else {
        require(counter.closed(t) == brute_force_closed(inst, t),
                "closed count disagrees at t=" + std::to_string(t));
      }
    }
    j["check"] = "passed";
  }
  return j;
}

Json cmd_verify(const Options& o, bool& all_passed) {
  std::vector<Suite> suites;
  if (o.suite == "all") {
    suites = {Suite::kZagier, Suite::kGessel, Suite::kGessel2d, Suite::kEhrhartMacdonald};
  } else {
    suites.push_back(*parse_suite(o.suite));
  }
  SuiteOptions options{o.max_part, o.max_t, o.check};
  SuiteSummary total;
  for (Suite s : suites) total.merge(run_suite(s, options));
  Json j = envelope();
  j["suite"] = o.suite;
  j["checked"] = std::to_string(total.checked);
  j["passed"] = std::to_string(total.passed);
  j["failed"] = std::to_string(total.failed);
  Json failures = Json::array();
  for (const auto& f : total.failures) {
    Json item;
    item["suite"] = f.suite;
    item["input"] = f.input;
    item["lhs"] = f.lhs.str();
    item["rhs"] = f.rhs.str();
    if (!f.note.empty()) item["note"] = f.note;
    failures.push_back(item);
  }
  j["failures"] = failures;
  all_passed = total.failed == 0;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fourier-Dedekind sums, simplex lattice-point counts and Frobenius numbers", "fdsum"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--text", o.text, "Plain key: value output instead of JSON");

  auto add_check = [&o](CLI::App* sub) {
    sub->fallthrough();
    sub->add_flag("--check", o.check, "Re-verify the result against an independent oracle");
  };

  auto* sigma = app.add_subcommand("sigma", "Fourier-Dedekind sum sigma_t(args; mod)");
  sigma->add_option("--t", o.t, "Numerator exponent t")->required();
  sigma->add_option("--args", o.args, "Arguments c_1..c_n (coprime to the modulus)")->expected(0, -1);
  sigma->add_option("--mod", o.modulus, "Modulus c >= 1")->required();
  add_check(sigma);

  auto* ehrhart = app.add_subcommand("ehrhart", "Lattice points in the t-th dilate of the simplex");
  ehrhart->add_option("--parts", o.parts, "Pairwise coprime parts a_1..a_n")->required()->expected(1, -1);
  ehrhart->add_option("--t", o.t, "Dilation t >= 0")->required();
  ehrhart->add_flag("--interior", o.interior, "Count interior points only");
  add_check(ehrhart);

  auto* partitions = app.add_subcommand("partitions", "Partitions of t with parts in A");
  partitions->add_option("--parts", o.parts, "Pairwise coprime parts, at least two")->required()->expected(2, -1);
  partitions->add_option("--t", o.t, "Target t")->required();
  partitions->add_flag("--restricted", o.restricted, "Every part used at least once");
  add_check(partitions);

  auto* frobenius = app.add_subcommand("frobenius", "Frobenius numbers f (positive) and g (nonnegative)");
  frobenius->add_option("--parts", o.parts, "Parts with gcd 1")->required()->expected(1, -1);
  frobenius->add_flag("--gaps", o.gaps, "Also list every nonrepresentable value");
  add_check(frobenius);

  auto* bounds = app.add_subcommand("bounds", "Upper bounds on the Frobenius number");
  bounds->add_option("--parts", o.parts, "Parts with gcd 1, at least two")->required()->expected(2, -1);
  add_check(bounds);

  auto* residue = app.add_subcommand("residue", "Polynomial part R_{-t} (or R'_t) as coefficients in t");
  residue->add_option("--parts", o.parts, "Parts a_1..a_n")->required()->expected(1, -1);
  residue->add_flag("--prime", o.prime, "Emit R'_t (facet polynomial) instead of R_{-t}");
  add_check(residue);

  auto* verify = app.add_subcommand("verify", "Exhaustively verify reciprocity identities");
  verify->add_option("--suite", o.suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"zagier", "gessel", "gessel2d", "ehrhart-macdonald", "all"}));
  verify->add_option("--max", o.max_part, "Largest part in the enumerated family")->check(CLI::PositiveNumber);
  verify->add_option("--tmax", o.max_t, "Largest t for the ehrhart-macdonald suite")->check(CLI::PositiveNumber);
  add_check(verify);

  std::vector<const char*> argv{"fdsum"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    Json result;
    bool passed = true;
    if (*sigma) result = cmd_sigma(o);
    if (*ehrhart) result = cmd_ehrhart(o);
    if (*partitions) result = cmd_partitions(o);
    if (*frobenius) result = cmd_frobenius(o);
    if (*bounds) result = cmd_bounds(o);
    if (*residue) result = cmd_residue(o);
    if (*verify) result = cmd_verify(o, passed);
    emit(result, o.text, out);
    return passed ? 0 : 1;
  } catch (const std::exception& e) {
    Json j = envelope();
    j["error"] = {{"kind", dynamic_cast<const CheckFailure*>(&e) ? "check" : "computation"},
                  {"message", e.what()}};
    emit(j, o.text, out);
    return 1;
  }
}

}  // namespace fdsum::cli
