#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdsum/ehrhart.hpp"
#include "fdsum/fourier_dedekind.hpp"
#include "fdsum/frobenius.hpp"
#include "fdsum/identities.hpp"

namespace py = pybind11;
using namespace fdsum;

// Exact values cross the boundary as decimal strings; the Python package
// turns them into int and fractions.Fraction.
namespace {

std::vector<std::string> coefficients(const ResiduePolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.poly.coeffs()) out.push_back(c.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Fourier-Dedekind sums, simplex lattice-point counts and Frobenius numbers.";
  using release = py::call_guard<py::gil_scoped_release>;

  m.def(
      "sigma", [](std::int64_t t, std::vector<std::int64_t> args, std::int64_t c) {
        return sigma_exact({t, std::move(args), c}).str();
      },
      py::arg("t"), py::arg("args"), py::arg("modulus"), release());
  m.def(
      "sigma_numeric", [](std::int64_t t, std::vector<std::int64_t> args, std::int64_t c) {
        return sigma_numeric({t, std::move(args), c});
      },
      py::arg("t"), py::arg("args"), py::arg("modulus"));
  m.def("dedekind_sum", [](std::int64_t h, std::int64_t k) { return dedekind_sum(h, k).str(); });

  m.def("residue_r", [](std::vector<std::int64_t> parts) { return coefficients(residue_R(Instance(parts))); });
  m.def("residue_rprime",
        [](std::vector<std::int64_t> parts) { return coefficients(residue_Rprime(Instance(parts))); });

  py::class_<SimplexCounter>(m, "SimplexCounter")
      .def(py::init([](std::vector<std::int64_t> parts) { return SimplexCounter(Instance(std::move(parts))); }),
           release())
      .def("closed", [](const SimplexCounter& s, std::int64_t t) { return s.closed(t).get_str(); }, release())
      .def("interior", [](const SimplexCounter& s, std::int64_t t) { return s.interior(t).get_str(); }, release())
      .def("restricted_partitions",
           [](const SimplexCounter& s, std::int64_t t) { return s.restricted_partitions(t).get_str(); }, release())
      .def("partitions", [](const SimplexCounter& s, std::int64_t t) { return s.partitions(t).get_str(); },
           release());

  m.def("brute_force_closed", [](std::vector<std::int64_t> parts, std::int64_t t) {
    return brute_force_closed(Instance(parts), t).get_str();
  }, release());
  m.def("brute_force_facet", [](std::vector<std::int64_t> parts, std::int64_t t) {
    return brute_force_facet(Instance(parts), t).get_str();
  }, release());

  m.def("frobenius_f", [](std::vector<std::int64_t> parts) { return frobenius_f(Instance(parts)); }, release());
  m.def("frobenius_g", [](std::vector<std::int64_t> parts) { return frobenius_g(Instance(parts)); }, release());
  m.def("gaps", [](std::vector<std::int64_t> parts) { return nonrepresentable_values(Instance(parts)); },
        release());
  m.def("bounds", [](std::vector<std::int64_t> parts) {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : frobenius_report(Instance(parts)).bounds) out[k] = v.str();
    return out;
  }, release());

  m.def(
      "verify",
      [](const std::string& suite, std::int64_t max_part, std::int64_t max_t) {
        const auto s = parse_suite(suite);
        if (!s) throw std::invalid_argument("unknown suite: " + suite);
        const auto summary = run_suite(*s, {max_part, max_t, false});
        std::vector<std::tuple<std::string, std::string, std::string>> failures;
        for (const auto& f : summary.failures) failures.emplace_back(f.input, f.lhs.str(), f.rhs.str());
        return std::make_tuple(summary.checked, summary.failed, failures);
      },
      py::arg("suite"), py::arg("max_part") = 12, py::arg("max_t") = 100, release());
}
