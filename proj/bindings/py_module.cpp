// py_module.cpp -- pybind11 bindings exposing the main hilb2 operations.
// Big integers cross the boundary as Python ints (via decimal strings).
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "hilb2/betti.hpp"
#include "hilb2/bott.hpp"
#include "hilb2/errors.hpp"
#include "hilb2/gn_complex.hpp"
#include "hilb2/hilbert_series.hpp"
#include "hilb2/intersection.hpp"
#include "hilb2/mukai.hpp"
#include "hilb2/selftest.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const hilb2::Int& v) {
  PyObject* p = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (p == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(p);
}

py::dict coh_to_dict(const std::map<int, hilb2::Int>& m) {
  py::dict d;
  for (const auto& [k, v] : m) d[py::int_(k)] = to_py(v);
  return d;
}

}  // namespace

PYBIND11_MODULE(hilb2py, mod) {
  mod.doc() = "exact invariants of Hilbert squares of K3 surfaces";

  py::register_exception<hilb2::InvalidInput>(mod, "InvalidInput",
                                              PyExc_ValueError);
  py::register_exception<hilb2::MathInconsistency>(mod, "MathInconsistency",
                                                   PyExc_RuntimeError);

  // Section counts and ideal dimensions (d = half the square of the
  // polarization, i.e. the square is 2d).
  mod.def(
      "h0_power",
      [](long d, long e) { return to_py(hilb2::hilbert::h0_power(d, e)); },
      py::arg("d"), py::arg("e"),
      "h^0 of the e-th power of a square-2d polarization");
  mod.def("embedding_dimension", &hilb2::hilbert::embedding_dimension,
          py::arg("d"));
  mod.def(
      "ideal_dimension",
      [](long d, long e) {
        return to_py(hilb2::hilbert::ideal_dimension(d, e));
      },
      py::arg("d"), py::arg("e"));
  mod.def(
      "degree_from_hilbert",
      [](long d) { return to_py(hilb2::hilbert::degree_from_hilbert(d)); },
      py::arg("d"));
  mod.def(
      "quadric_section_count",
      [](long g) { return to_py(hilb2::hilbert::quadric_section_count(g)); },
      py::arg("g"));

  // Betti tables.
  mod.def(
      "expected_betti",
      [](long d, const std::string& fmt) {
        const auto t = hilb2::betti::expected_betti(d);
        const auto f = fmt == "json" ? hilb2::betti::TableFormat::Json
                       : fmt == "csv" ? hilb2::betti::TableFormat::Csv
                                      : hilb2::betti::TableFormat::Text;
        return hilb2::betti::render_table(t, f);
      },
      py::arg("d"), py::arg("format") = "text",
      "rendered single-strand expected Betti table of the square-2d model");
  mod.def(
      "validate_fixture",
      [](const std::string& name) {
        const auto f = hilb2::betti::fixture_from_name(name);
        const auto rep = hilb2::betti::validate_table(
            hilb2::betti::reference_table(f),
            hilb2::betti::fixture_square(f) / 2);
        return rep.pass;
      },
      py::arg("fixture"));

  // Borel-Weil-Bott cohomology.
  mod.def(
      "gr_cohomology",
      [](int k, int n, std::vector<long> quot, std::vector<long> sub,
         long twist) {
        hilb2::bott::Summand s;
        s.descriptor = hilb2::bott::GrPattern{std::move(quot), std::move(sub)};
        s.twist = twist;
        const hilb2::bott::HomogBundle b{hilb2::bott::Ambient::gr(k, n), {s}};
        return coh_to_dict(hilb2::bott::cohomology(b).h);
      },
      py::arg("k"), py::arg("n"), py::arg("quot_dual") = std::vector<long>{},
      py::arg("sub_dual") = std::vector<long>{}, py::arg("twist") = 0);
  mod.def(
      "quadric_cohomology",
      [](int m, std::vector<long> weight, long twist) {
        std::vector<long long> twice(m + 1, 0);
        if (!weight.empty()) {
          if (static_cast<int>(weight.size()) != m + 1) {
            throw hilb2::InvalidInput("weight needs m+1 entries");
          }
          for (int i = 0; i <= m; ++i) twice[i] = 2 * weight[i];
        }
        const auto b = hilb2::bott::quadric_bundle(
            hilb2::bott::Ambient::quadric(m), twice, twist);
        return coh_to_dict(hilb2::bott::cohomology(b).h);
      },
      py::arg("m"), py::arg("weight") = std::vector<long>{},
      py::arg("twist") = 0);
  mod.def(
      "spinor_cohomology",
      [](int m, long twist) {
        const auto b =
            hilb2::bott::spinor(hilb2::bott::Ambient::quadric(m), twist);
        return coh_to_dict(hilb2::bott::cohomology(b).h);
      },
      py::arg("m"), py::arg("twist") = 0);

  // Determinantal resolution.
  mod.def(
      "ideal_cohomology",
      [](const std::string& which, long d) {
        return coh_to_dict(
            hilb2::gn::ideal_cohomology(hilb2::gn::case_from_name(which), d));
      },
      py::arg("case"), py::arg("degree"));
  mod.def(
      "generator_report",
      [](const std::string& which) {
        const auto rep =
            hilb2::gn::generator_report(hilb2::gn::case_from_name(which));
        py::dict counts;
        for (const auto& [name, v] : rep.counts) {
          counts[py::str(name)] = to_py(v);
        }
        py::dict out;
        out["counts"] = counts;
        out["extension"] =
            py::make_tuple(to_py(rep.extension.first), to_py(rep.extension.second));
        out["extension_degree"] = rep.extension_degree;
        return out;
      },
      py::arg("case"));

  // Intersection theory.
  mod.def(
      "grassmannian_degree",
      [](int k, int n) { return to_py(hilb2::intersect::grassmannian_degree(k, n)); },
      py::arg("k"), py::arg("n"));
  mod.def("porteous_degree", [](const std::string& which) {
    const auto c = hilb2::gn::case_from_name(which);
    return to_py(c == hilb2::gn::Case::Genus7
                     ? hilb2::intersect::porteous_degree_genus7()
                     : hilb2::intersect::porteous_degree_genus8());
  });
  mod.def("spinor_chern", [] {
    const auto sp = hilb2::intersect::spinor_chern_via_hrr();
    return py::make_tuple(to_py(sp.c1), to_py(sp.c2), to_py(sp.c3));
  });
  mod.def(
      "sigma_decomposition",
      [](long g) {
        const auto sd = hilb2::intersect::sigma_decomposition(g);
        py::dict out;
        out["g"] = sd.g;
        out["sigma"] = to_py(sd.total);
        out["y0"] = to_py(sd.y0);
        out["y_top"] = to_py(sd.y_top);
        out["residual"] = to_py(sd.residual);
        return out;
      },
      py::arg("g"));

  // Lattice arithmetic.
  mod.def(
      "inequality_catalog",
      [](long g) {
        py::list out;
        for (const auto& e : hilb2::mukai::inequality_catalog(g)) {
          out.append(py::make_tuple(e.name, to_py(e.value), e.satisfied));
        }
        return out;
      },
      py::arg("g"));
  mod.def(
      "moduli_space_nonempty",
      [](long square2d, int gamma) {
        return hilb2::mukai::moduli_space_nonempty(square2d, gamma);
      },
      py::arg("square2d"), py::arg("gamma"));
  mod.def(
      "hilb2_class",
      [](long g, long a, long b) {
        const auto cls = hilb2::mukai::hilb2_class(g, a, b);
        py::dict out;
        out["square"] = to_py(cls.square);
        out["divisibility"] = to_py(cls.divisibility);
        return out;
      },
      py::arg("g"), py::arg("a"), py::arg("b"));

  // The acceptance battery.
  mod.def("selftest", [] {
    py::list out;
    for (const auto& c : hilb2::selftest::run_all()) {
      py::dict d;
      d["criterion"] = c.criterion;
      d["name"] = c.name;
      d["expected"] = c.expected;
      d["got"] = c.got;
      d["pass"] = c.pass;
      out.append(d);
    }
    return out;
  });
}
