// Copyright 2026 The gwbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "gwb/classify_f3.hpp"
#include "gwb/classify_gp.hpp"
#include "gwb/errors.hpp"
#include "gwb/fl_bounds.hpp"
#include "gwb/genetics.hpp"
#include "gwb/offspring.hpp"
#include "gwb/report.hpp"
#include "gwb/sinf_estimates.hpp"
#include "gwb/specfun.hpp"

namespace py = pybind11;

namespace {

py::object CellToPy(const gwb::Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return py::none();
  if (const auto* d = std::get_if<double>(&c)) return py::float_(*d);
  if (const auto* i = std::get_if<long long>(&c)) return py::int_(*i);
  return py::str(std::get<std::string>(c));
}

py::dict TableToPy(const gwb::Table& t) {
  py::list rows;
  for (const auto& row : t.rows) {
    py::list r;
    for (const auto& c : row) r.append(CellToPy(c));
    rows.append(r);
  }
  py::dict out;
  out["header"] = t.header;
  out["rows"] = rows;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Survival probabilities and bounds for Galton-Watson processes";

  py::register_exception<gwb::Error>(m, "GwbError", PyExc_RuntimeError);
  py::register_exception<gwb::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<gwb::ApplicabilityError>(m, "ApplicabilityError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const gwb::ApplicabilityError& e) {
      py::object type = py::module_::import("gwbounds._core").attr("ApplicabilityError");
      py::object inst = type(e.what());
      inst.attr("condition") = e.condition();
      inst.attr("lhs") = e.lhs();
      inst.attr("rhs") = e.rhs();
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });

  m.def("lambert_w0", [](double z) { return gwb::lambert_w0(z); }, py::arg("z"));
  m.def("exp_integral_e1", &gwb::exp_integral_e1, py::arg("x"));

  py::class_<gwb::OffspringModel>(m, "OffspringModel")
      .def_static("poisson", &gwb::OffspringModel::poisson, py::arg("m"))
      .def_static("binomial", &gwb::OffspringModel::binomial, py::arg("n"), py::arg("p"))
      .def_static("neg_binomial", &gwb::OffspringModel::neg_binomial, py::arg("r"), py::arg("p"))
      .def_static("fractional_linear", &gwb::OffspringModel::fractional_linear, py::arg("pi"),
                  py::arg("rho"))
      .def_static("finite_three", &gwb::OffspringModel::finite_three, py::arg("p0"),
                  py::arg("p2"), py::arg("p3"))
      .def_static("generalized_poisson", &gwb::OffspringModel::generalized_poisson,
                  py::arg("mu"), py::arg("lambda_"))
      .def_property_readonly("name", &gwb::OffspringModel::name)
      .def("__repr__", &gwb::OffspringModel::describe);

  py::class_<gwb::Moments>(m, "Moments")
      .def_readonly("m", &gwb::Moments::m)
      .def_readonly("var", &gwb::Moments::var)
      .def_readonly("b", &gwb::Moments::b)
      .def_readonly("c", &gwb::Moments::c);

  py::class_<gwb::FixedPoint>(m, "FixedPoint")
      .def_readonly("p_inf", &gwb::FixedPoint::p_inf)
      .def_readonly("s_inf", &gwb::FixedPoint::s_inf)
      .def_readonly("gamma", &gwb::FixedPoint::gamma);

  py::class_<gwb::FLParams>(m, "FLParams")
      .def(py::init<double, double>(), py::arg("pi"), py::arg("rho"))
      .def_readonly("pi", &gwb::FLParams::pi)
      .def_readonly("rho", &gwb::FLParams::rho);

  m.def("pgf_eval", &gwb::pgf_eval, py::arg("model"), py::arg("x"));
  m.def("pgf_derivative", &gwb::pgf_derivative, py::arg("model"), py::arg("x"),
        py::arg("order"));
  m.def("moments", &gwb::moments, py::arg("model"));
  m.def("extinction_probability", &gwb::extinction_probability, py::arg("model"));
  m.def("survival_curve", &gwb::survival_curve, py::arg("model"), py::arg("n_max"));

  m.def("matching_fl", &gwb::matching_fl, py::arg("fixed_point"));
  m.def("fl_pgf", &gwb::fl_pgf, py::arg("fl"), py::arg("x"));
  m.def("fl_iterate_params", &gwb::fl_iterate_params, py::arg("fl"), py::arg("n"));
  m.def("sn_fl_bound", &gwb::sn_fl_bound, py::arg("model"), py::arg("n"));
  m.def("sn_simple_bound", &gwb::sn_simple_bound, py::arg("model"), py::arg("n"));
  m.def("sn_pollak_bound", &gwb::sn_pollak_bound, py::arg("model"), py::arg("n"));
  m.def("t_eps_exact", &gwb::t_eps_exact, py::arg("model"), py::arg("eps"));
  m.def("t_app", &gwb::t_app, py::arg("fixed_point"), py::arg("eps"));

  py::class_<gwb::BoundDirection>(m, "BoundDirection")
      .def_property_readonly("kind",
                             [](const gwb::BoundDirection& d) {
                               return std::string(gwb::direction_kind_name(d.kind));
                             })
      .def_readonly("switch_n", &gwb::BoundDirection::switch_n)
      .def_readonly("conjectured", &gwb::BoundDirection::conjectured)
      .def_readonly("note", &gwb::BoundDirection::note);
  m.def("bound_direction", &gwb::bound_direction, py::arg("model"));

  py::class_<gwb::F3Thresholds>(m, "F3Thresholds")
      .def_readonly("p0_plus", &gwb::F3Thresholds::p0_plus)
      .def_readonly("p0_r", &gwb::F3Thresholds::p0_r)
      .def_readonly("p0_gamma", &gwb::F3Thresholds::p0_gamma);
  py::class_<gwb::F3Class>(m, "F3Class")
      .def_property_readonly(
          "region", [](const gwb::F3Class& c) { return std::string(gwb::f3_region_name(c.region)); })
      .def_readonly("case_label", &gwb::F3Class::case_label)
      .def_readonly("subcase", &gwb::F3Class::subcase)
      .def_readonly("thresholds", &gwb::F3Class::thresholds)
      .def_readonly("fixed_point", &gwb::F3Class::fp)
      .def_readonly("switch_n", &gwb::F3Class::switch_n);
  m.def("classify_f3", &gwb::classify_f3, py::arg("p0"), py::arg("p2"), py::arg("p3"));
  m.def(
      "f3_region_volumes",
      [](long long samples, std::uint64_t seed) {
        const auto v = gwb::f3_region_volumes(samples, seed);
        return py::make_tuple(v.lower, v.switches, v.upper);
      },
      py::arg("samples"), py::arg("seed") = 42);

  py::class_<gwb::GPThresholds>(m, "GPThresholds")
      .def_readonly("s", &gwb::GPThresholds::s)
      .def_readonly("lambda_c0", &gwb::GPThresholds::lambda_c0)
      .def_readonly("lambda_c1", &gwb::GPThresholds::lambda_c1)
      .def_readonly("lambda_c2", &gwb::GPThresholds::lambda_c2);
  m.def("gp_thresholds", &gwb::gp_thresholds, py::arg("s"));
  m.def("classify_gp", &gwb::classify_gp, py::arg("s"), py::arg("lambda_"));

  py::class_<gwb::FamilySpec>(m, "FamilySpec")
      .def_static("poisson", &gwb::FamilySpec::poisson)
      .def_static("binomial", &gwb::FamilySpec::binomial, py::arg("n"))
      .def_static("neg_binomial", &gwb::FamilySpec::neg_binomial, py::arg("r"))
      .def_static("generalized_poisson", &gwb::FamilySpec::generalized_poisson,
                  py::arg("lambda_"))
      .def_static("fractional_linear", &gwb::FamilySpec::fractional_linear, py::arg("pi"))
      .def_property_readonly("label", &gwb::FamilySpec::label);
  m.def("model_at", &gwb::model_at, py::arg("family"), py::arg("s"));
  m.def("sinf_series_eval", &gwb::sinf_series_eval, py::arg("family"), py::arg("s"),
        py::arg("order") = 3);
  m.def("t_ser", &gwb::t_ser, py::arg("family"), py::arg("s"), py::arg("eps"));
  m.def("dn_upper", &gwb::dn_upper, py::arg("moments"));

  py::class_<gwb::SinfBounds>(m, "SinfBounds")
      .def_readonly("beta", &gwb::SinfBounds::beta)
      .def_readonly("quine_lower", &gwb::SinfBounds::quine_lower)
      .def_readonly("quine_upper", &gwb::SinfBounds::quine_upper)
      .def_readonly("quine_condition_met", &gwb::SinfBounds::quine_condition_met)
      .def_readonly("dn_upper", &gwb::SinfBounds::dn_upper)
      .def_readonly("dn_note", &gwb::SinfBounds::dn_note)
      .def_readonly("series3", &gwb::SinfBounds::series3)
      .def_readonly("haldane", &gwb::SinfBounds::haldane)
      .def_readonly("exact", &gwb::SinfBounds::exact);
  m.def("sinf_bounds", &gwb::sinf_bounds, py::arg("family"), py::arg("s"));

  m.def(
      "wf_fixation_exact",
      [](int n, double s, std::optional<double> ne) {
        return gwb::wf_fixation_exact({n, s, ne.value_or(n)});
      },
      py::arg("N"), py::arg("s"), py::arg("Ne") = py::none());
  m.def(
      "wf_fixation_diffusion",
      [](int n, double s, std::optional<double> ne) {
        return gwb::wf_fixation_diffusion({n, s, ne.value_or(n)});
      },
      py::arg("N"), py::arg("s"), py::arg("Ne") = py::none());
  m.def("within_variance", &gwb::within_variance, py::arg("a"));

  m.def("table", [](int id) {
    if (id == 1) return TableToPy(gwb::table1());
    if (id == 2) return TableToPy(gwb::table2());
    if (id == 3) return TableToPy(gwb::table3());
    throw gwb::DomainError("table id must be 1, 2 or 3");
  }, py::arg("id"));
  m.def("to_csv", [](int id, int digits) {
    if (id == 1) return gwb::to_csv(gwb::table1(), digits);
    if (id == 2) return gwb::to_csv(gwb::table2(), digits);
    if (id == 3) return gwb::to_csv(gwb::table3(), digits);
    throw gwb::DomainError("table id must be 1, 2 or 3");
  }, py::arg("id"), py::arg("digits") = 6);
}
