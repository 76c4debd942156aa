#include <sstream>
#include <string>
#include <vector>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gcfrac/cli.hpp"
#include "gcfrac/errors.hpp"
#include "gcfrac/fracint.hpp"
#include "gcfrac/theorems.hpp"

namespace py = pybind11;
using namespace gcfrac;

PYBIND11_MODULE(_gcfrac, m) {
  m.doc() = "Kernel-parameterised conformable fractional derivative and integral";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<KernelError>(m, "KernelError", PyExc_ArithmeticError);
  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);

  py::class_<FracOrder>(m, "FracOrder")
      .def(py::init<double>(), py::arg("alpha"))
      .def_property_readonly("value", &FracOrder::value)
      .def("__float__", &FracOrder::value)
      .def("__repr__", [](const FracOrder& a) { return "FracOrder(" + std::to_string(a.value()) + ")"; });
  py::implicitly_convertible<double, FracOrder>();
  py::implicitly_convertible<int, FracOrder>();

  py::class_<ScalarFunction>(m, "Function")
      .def(py::init([](const std::string& text) { return ScalarFunction::parse(text); }), py::arg("text"))
      .def("__call__", &ScalarFunction::value, py::arg("x"))
      .def("slope", &ScalarFunction::slope, py::arg("x"))
      .def_property_readonly("source", &ScalarFunction::source)
      .def_property_readonly("derivative", [](const ScalarFunction& f) { return f.derivative_expr().to_string(); })
      .def("__str__", [](const ScalarFunction& f) { return f.expr().to_string(); })
      .def("__repr__", [](const ScalarFunction& f) { return "Function('" + f.source() + "')"; });
  py::implicitly_convertible<std::string, ScalarFunction>();

  py::class_<Kernel>(m, "Kernel")
      .def(py::init([](const std::string& spec, double start) { return Kernel::from_spec(spec, start); }),
           py::arg("spec"), py::arg("expression_start") = 0.0)
      .def("k", &Kernel::k, py::arg("t"))
      .def("k_prime", &Kernel::k_prime, py::arg("t"))
      .def_property_readonly("validity_start", &Kernel::validity_start)
      .def_property_readonly("name", &Kernel::name)
      .def("validate", [](const Kernel& k, double a, double b, std::size_t samples) {
             std::vector<std::pair<double, std::string>> out;
             for (const auto& v : validate_kernel(k, a, b, samples).violations) out.emplace_back(v.t, v.reason);
             return out;
           },
           py::arg("a"), py::arg("b"), py::arg("samples") = 64)
      .def("__repr__", [](const Kernel& k) { return "Kernel('" + k.name() + "')"; });
  py::implicitly_convertible<std::string, Kernel>();

  py::class_<NumericConfig>(m, "NumericConfig")
      .def(py::init<>())
      .def_readwrite("eps0", &NumericConfig::eps0)
      .def_readwrite("step_ratio", &NumericConfig::step_ratio)
      .def_readwrite("max_steps", &NumericConfig::max_steps)
      .def_readwrite("tol_rel", &NumericConfig::tol_rel)
      .def_readwrite("richardson_depth", &NumericConfig::richardson_depth);

  py::class_<QuadConfig>(m, "QuadConfig")
      .def(py::init<>())
      .def_readwrite("tol_abs", &QuadConfig::tol_abs)
      .def_readwrite("tol_rel", &QuadConfig::tol_rel)
      .def_readwrite("max_subdivisions", &QuadConfig::max_subdivisions)
      .def_readwrite("endpoint_singularity", &QuadConfig::endpoint_singularity);

  py::class_<LimitEstimate>(m, "LimitEstimate")
      .def_readonly("value", &LimitEstimate::value)
      .def_readonly("error_estimate", &LimitEstimate::error_estimate)
      .def_readonly("steps_used", &LimitEstimate::steps_used)
      .def_readonly("converged", &LimitEstimate::converged)
      .def_readonly("note", &LimitEstimate::note);

  py::class_<QuadratureResult>(m, "QuadratureResult")
      .def_readonly("value", &QuadratureResult::value)
      .def_readonly("error_estimate", &QuadratureResult::error_estimate)
      .def_readonly("subdivisions", &QuadratureResult::subdivisions)
      .def_readonly("converged", &QuadratureResult::converged)
      .def_readonly("substituted", &QuadratureResult::substituted)
      .def_readonly("note", &QuadratureResult::note);

  py::class_<MeanValueWitness>(m, "MeanValueWitness")
      .def_readonly("xi", &MeanValueWitness::xi)
      .def_readonly("x0", &MeanValueWitness::x0)
      .def_readonly("residual", &MeanValueWitness::residual)
      .def_readonly("m", &MeanValueWitness::m)
      .def_readonly("M", &MeanValueWitness::M);

  py::class_<TheoremReport>(m, "TheoremReport")
      .def_readonly("theorem", &TheoremReport::theorem)
      .def_readonly("identity", &TheoremReport::identity)
      .def_readonly("residuals", &TheoremReport::residuals)
      .def_readonly("max_residual", &TheoremReport::max_residual)
      .def_readonly("tolerance", &TheoremReport::tolerance)
      .def_readonly("witness", &TheoremReport::witness)
      .def_readonly("printed_orientation_residual", &TheoremReport::printed_orientation_residual)
      .def_readonly("passed", &TheoremReport::passed)
      .def_readonly("notes", &TheoremReport::notes);

  m.def("d_alpha_closed", &d_alpha_closed, py::arg("f"), py::arg("kernel"), py::arg("alpha"), py::arg("t"));
  m.def("d_alpha_limit",
        py::overload_cast<const ScalarFunction&, const Kernel&, FracOrder, double, const NumericConfig&>(
            &d_alpha_limit),
        py::arg("f"), py::arg("kernel"), py::arg("alpha"), py::arg("t"), py::arg("cfg") = NumericConfig{});
  m.def("d_alpha_at_start", &d_alpha_at_start, py::arg("f"), py::arg("kernel"), py::arg("alpha"),
        py::arg("cfg") = NumericConfig{});
  m.def("special_table",
        [](FracOrder alpha, const Kernel& k, double x, double a, double b) {
          py::list rows;
          for (const auto& r : special_table(alpha, k, x, a, b)) {
            py::dict d;
            d["label"] = r.label;
            d["expression"] = r.expression;
            d["value"] = r.value ? py::cast(*r.value) : py::none();
            d["error"] = r.error;
            rows.append(d);
          }
          return rows;
        },
        py::arg("alpha"), py::arg("kernel"), py::arg("x"), py::arg("a") = 1.0, py::arg("b") = 1.0);

  m.def("i_alpha",
        py::overload_cast<const ScalarFunction&, const Kernel&, FracOrder, double, double, const QuadConfig&>(&i_alpha),
        py::arg("f"), py::arg("kernel"), py::arg("alpha"), py::arg("a"), py::arg("t"), py::arg("cfg") = QuadConfig{});
  m.def("check_D_of_I", &check_D_of_I, py::arg("f"), py::arg("kernel"), py::arg("alpha"), py::arg("a"),
        py::arg("t"), py::arg("cfg") = QuadConfig{});
  m.def("check_I_of_D", &check_I_of_D, py::arg("f"), py::arg("kernel"), py::arg("alpha"), py::arg("a"),
        py::arg("t"), py::arg("cfg") = QuadConfig{});
  m.def("integration_by_parts_residual", &integration_by_parts_residual, py::arg("f"), py::arg("g"),
        py::arg("kernel"), py::arg("alpha"), py::arg("a"), py::arg("b"), py::arg("cfg") = QuadConfig{});
  m.def("integral_mean_value", &integral_mean_value, py::arg("f"), py::arg("g"), py::arg("kernel"),
        py::arg("alpha"), py::arg("a"), py::arg("b"), py::arg("cfg") = QuadConfig{});

  m.def("rolle_find_c",
        [](const ScalarFunction& f, const Kernel& k, FracOrder alpha, double a, double b) {
          return rolle_find_c(f, k, alpha, a, b);
        },
        py::arg("f"), py::arg("kernel"), py::arg("alpha"), py::arg("a"), py::arg("b"));
  m.def("mvt_find_c",
        [](const ScalarFunction& f, const Kernel& k, FracOrder alpha, double a, double b) {
          return mvt_find_c(f, k, alpha, a, b);
        },
        py::arg("f"), py::arg("kernel"), py::arg("alpha"), py::arg("a"), py::arg("b"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::vector<const char*> argv{"gcfrac"};
          for (const auto& a : args) argv.push_back(a.c_str());
          std::ostringstream out, err;
          int code;
          {
            py::gil_scoped_release release;
            code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
          }
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line front end; returns (exit_code, stdout, stderr).");
}
