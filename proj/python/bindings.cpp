#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hcc/bounds.hpp"
#include "hcc/cli.hpp"
#include "hcc/covers.hpp"
#include "hcc/error.hpp"
#include "hcc/homomorphism.hpp"
#include "hcc/omega.hpp"
#include "hcc/report.hpp"
#include "hcc/selfcheck.hpp"

namespace py = pybind11;
using namespace hcc;

// Structured results cross the boundary as JSON text; the Python package decodes them.
namespace {

std::vector<std::string> bigs(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact mod-p homology of regular covers of presentation complexes";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapError>(m, "CapError", PyExc_OverflowError);

  py::class_<OrderedGroup>(m, "Group")
      .def_static("elementary_abelian", &make_elementary_abelian, py::arg("p"), py::arg("r"))
      .def_static("cyclic", &make_cyclic, py::arg("n"))
      .def_static("from_table_text", &parse_group_table, py::arg("text"), py::arg("label") = "table")
      .def("__len__", &OrderedGroup::size)
      .def("mul", &OrderedGroup::mul)
      .def("inverse", &OrderedGroup::inverse)
      .def("element_name", &OrderedGroup::element_name)
      .def_property_readonly("label", &OrderedGroup::label)
      .def("__repr__", [](const OrderedGroup& g) { return "<Group " + g.label() + ">"; });

  py::class_<Presentation>(m, "Presentation")
      .def_static("parse", &parse_presentation, py::arg("text"))
      .def_readonly("generators", &Presentation::generator_names)
      .def_property_readonly("relators",
                             [](const Presentation& p) {
                               std::vector<std::string> out;
                               for (const auto& r : p.relators) out.push_back(format_word(r, p.generator_names));
                               return out;
                             })
      .def_property_readonly("deficiency", &Presentation::deficiency)
      .def("__str__", &format_presentation)
      .def("__repr__", [](const Presentation& p) { return "<Presentation " + format_presentation(p) + ">"; });

  py::class_<Homomorphism>(m, "Homomorphism")
      .def(py::init<Presentation, OrderedGroup, std::vector<element_t>>(), py::arg("source"), py::arg("target"),
           py::arg("images"))
      .def_property_readonly("images", &Homomorphism::images)
      .def_property_readonly("surjective", &Homomorphism::is_surjective);

  m.def("elementary_abelian_hom", &elementary_abelian_hom, py::arg("presentation"), py::arg("p"), py::arg("r"),
        py::arg("coordinates"));

  m.def("omega", [](std::uint32_t p, std::size_t r) { return bigs(omega_by_convolution(p, r).coeffs); },
        py::arg("p"), py::arg("r"));
  m.def("pi", [](std::uint32_t p, std::size_t r, std::size_t k) { return pi_value(p, r, k).str(); }, py::arg("p"),
        py::arg("r"), py::arg("k"));

  m.def("filtration_json",
        [](std::uint32_t p, const OrderedGroup& g, std::size_t k_max) {
          return to_json(filtration_profile(p, g, k_max)).dump();
        },
        py::arg("p"), py::arg("group"), py::arg("k_max") = 0);

  m.def("summary_json", [](const Presentation& pres, std::uint32_t p) { return to_json(complex_summary(pres, p)).dump(); },
        py::arg("presentation"), py::arg("p"));
  m.def("normalize", &normalize_presentation, py::arg("presentation"), py::arg("p"));
  m.def("reidemeister_schreier", &reidemeister_schreier, py::arg("presentation"), py::arg("hom"));

  m.def("cover_json",
        [](const Homomorphism& hom, std::uint32_t p) {
          const CoverComplex c = build_cover(hom, p);
          Json j = to_json(c);
          j["verdict"] = hom.target().elementary_abelian_rank(p) ? to_json(hc_verdict(c)) : Json(nullptr);
          return j.dump();
        },
        py::arg("hom"), py::arg("p"));

  m.def("bound_json",
        [](std::size_t b1, long long d, std::uint32_t p, std::size_t r, std::optional<std::size_t> actual) {
          BoundReport rep = bound_elementary_abelian(b1, d, p, r);
          if (actual) rep.attach_actual(*actual);
          return to_json(rep).dump();
        },
        py::arg("b1"), py::arg("d"), py::arg("p"), py::arg("r"), py::arg("actual") = py::none());
  m.def("manifold3_json", [](std::size_t b1_q, std::size_t r) { return to_json(verdict_3manifold_z2(b1_q, r)).dump(); },
        py::arg("b1_q"), py::arg("r"));
  m.def("growth_json",
        [](const Presentation& pres, std::uint32_t p, std::size_t steps) {
          return to_json(growth_iterate(pres, p, steps)).dump();
        },
        py::arg("presentation"), py::arg("p"), py::arg("steps") = 2);
  m.def("selfcheck_json", [] { return to_json(run_selfcheck()).dump(); });

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::vector<std::string> full{"hcc"};
          full.insert(full.end(), args.begin(), args.end());
          std::vector<const char*> argv;
          for (const auto& a : full) argv.push_back(a.c_str());
          std::ostringstream out, err;
          const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
