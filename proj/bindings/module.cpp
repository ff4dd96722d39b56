#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cgt/dyadic.hpp"
#include "cgt/dyadic_forms.hpp"
#include "cgt/notation.hpp"
#include "cgt/numbers.hpp"
#include "cgt/order.hpp"
#include "cgt/reduction.hpp"
#include "cgt/rulesets.hpp"

namespace py = pybind11;

namespace {

py::object value_str(cgt::Game g) {
  if (auto v = cgt::value_of(g)) return py::str(v->str());
  return py::none();
}

py::dict classify_dict(cgt::Game g) {
  cgt::Classification c = cgt::classify(g);
  py::dict d;
  d["outcome"] = cgt::to_string(c.outcome);
  d["birthday"] = c.birthday;
  d["is_number"] = c.is_number;
  d["value"] = c.value ? py::object(py::str(c.value->str())) : py::object(py::none());
  d["is_c_number"] = c.is_c_number;
  d["is_s_number"] = c.is_s_number;
  d["is_zugzwang"] = c.is_zugzwang;
  d["is_weak_zugzwang"] = c.is_weak_zugzwang;
  d["is_dicotic"] = c.is_dicotic;
  d["is_infinitesimal"] = c.is_infinitesimal;
  d["canonical"] = cgt::print_form(cgt::canonicalize(g), true);
  return d;
}

}  // namespace

PYBIND11_MODULE(_cgtengine, m) {
  m.doc() = "Symbolic engine for short partizan games";

  py::register_exception<cgt::ParseError>(m, "NotationError", PyExc_ValueError);

  py::class_<cgt::Game>(m, "Game")
      .def("__eq__", [](cgt::Game a, cgt::Game b) { return a == b; })
      .def("__hash__", [](cgt::Game g) { return g.id; })
      .def("__str__", [](cgt::Game g) { return cgt::print_form(g, true); })
      .def("__repr__",
           [](cgt::Game g) { return "Game(" + cgt::print_form(g, true) + ")"; })
      .def("__add__", [](cgt::Game a, cgt::Game b) { return cgt::sum(a, b); })
      .def("__neg__", [](cgt::Game g) { return cgt::conjugate(g); })
      .def_property_readonly("birthday", [](cgt::Game g) { return cgt::birthday(g); })
      .def_property_readonly("left_options",
                             [](cgt::Game g) {
                               auto s = cgt::left_options(g);
                               return std::vector<cgt::Game>(s.begin(), s.end());
                             })
      .def_property_readonly("right_options",
                             [](cgt::Game g) {
                               auto s = cgt::right_options(g);
                               return std::vector<cgt::Game>(s.begin(), s.end());
                             })
      .def("print", [](cgt::Game g, bool shorthand) { return cgt::print_form(g, shorthand); },
           py::arg("shorthand") = true);

  m.def("parse", [](const std::string& text) { return cgt::parse_game(text); });
  m.def("make_game", [](std::vector<cgt::Game> left, std::vector<cgt::Game> right) {
    return cgt::make_game(std::move(left), std::move(right));
  });
  m.def("outcome", [](cgt::Game g) { return cgt::to_string(cgt::outcome(g)); });
  m.def("compare", [](cgt::Game a, cgt::Game b) { return cgt::to_string(cgt::relation(a, b)); });
  m.def("canonicalize", &cgt::canonicalize);
  m.def("is_canonical", &cgt::is_canonical);
  m.def("value_of", &value_str);
  m.def("is_number", &cgt::is_number);
  m.def("classify", &classify_dict);
  m.def("fitting_contains", [](cgt::Game g, const std::string& x) {
    auto d = cgt::Dyadic::parse(x);
    if (!d) throw py::value_error("invalid dyadic: " + x);
    return cgt::fitting_contains(g, *d);
  });
  m.def("simplest_fitting", [](cgt::Game g) -> py::object {
    if (auto v = cgt::simplest_fitting(g)) return py::str(v->str());
    return py::none();
  });
  m.def("hackenbush", [](const std::string& text) {
    return cgt::hackenbush_to_form(cgt::parse_hackenbush(text));
  });
  m.def("toppling", [](const std::string& text) {
    return cgt::toppling_to_form(cgt::parse_toppling(text));
  });
  m.def("enumerate_forms", &cgt::enumerate_forms, py::arg("day"), py::arg("max_options") = 2);
  m.def("scan_weak_zugzwangs", &cgt::scan_weak_zugzwangs, py::arg("day"),
        py::arg("max_options") = 2);
  m.def("scan_infinitesimal_right_gap", &cgt::scan_infinitesimal_right_gap, py::arg("day"),
        py::arg("max_options") = 2);
}
