#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptau/cli.hpp"
#include "ptau/errors.hpp"
#include "ptau/painleve.hpp"
#include "ptau/taudet.hpp"

namespace py = pybind11;
using namespace ptau;

namespace {

py::dict params_dict(const ScalingParams& sp) {
  py::dict d;
  d["mu"] = sp.mu;
  d["nu"] = sp.nu;
  d["m"] = sp.m;
  d["shift_c"] = sp.shift_c;
  d["R2"] = sp.R2;
  d["p"] = sp.p;
  d["in_support"] = sp.in_support;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tau functions and Painleve VI data for 3x3 scaling problems";

  py::register_exception<PoleError>(m, "PoleError", PyExc_ArithmeticError);
  py::register_exception<InvalidParameters>(m, "InvalidParameters", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("normalize_params", [](const Triple& mu, const Triple& nu) { return params_dict(normalize_params(mu, nu)); },
        py::arg("mu"), py::arg("nu"));

  m.def("support_points", [](const Triple& mu, const Triple& nu) { return support_points(normalize_params(mu, nu)); },
        py::arg("mu"), py::arg("nu"));

  m.def(
      "pvi_params",
      [](const Triple& mu, const Triple& nu, const std::string& branch) {
        auto v = v_values(normalize_params(mu, nu), parse_branch(branch));
        auto p = pvi_params(v);
        py::dict d;
        py::list vs;
        for (const auto& x : v) vs.append(rational_to_string(x));
        d["v"] = vs;
        d["alpha"] = rational_to_string(p.alpha);
        d["beta"] = rational_to_string(p.beta);
        d["gamma"] = rational_to_string(p.gamma);
        d["delta"] = rational_to_string(p.delta);
        return d;
      },
      py::arg("mu"), py::arg("nu"), py::arg("branch") = "identity");

  m.def("parse_number", [](const std::string& s) { return rational_to_string(cli::parse_number(s)); });

  // JSON text out; the python wrapper decodes it
  m.def(
      "run_json",
      [](const std::string& command, const Triple& mu, const Triple& nu, const std::string& weights,
         const std::string& branch, const std::string& t0, double t_end, double tol, int samples, double threshold,
         double perturb, int order, int cap, bool corrupt_sign) {
        cli::RunConfig c;
        c.command = command;
        c.mu = mu;
        c.nu = nu;
        c.weights = weights;
        c.branch = branch;
        c.t0 = t0;
        c.t_end = t_end;
        c.tol = tol;
        c.samples = samples;
        c.threshold = threshold;
        c.perturb = perturb;
        c.order = order;
        c.cap = cap;
        c.corrupt_sign = corrupt_sign;
        cli::RunResult r;
        {
          py::gil_scoped_release nogil;
          r = cli::run(c);
        }
        return py::make_tuple(r.exit_code, r.json.dump(), r.csv);
      },
      py::arg("command"), py::arg("mu"), py::arg("nu"), py::arg("weights") = "symbolic", py::arg("branch") = "all",
      py::arg("t0") = "1/10", py::arg("t_end") = 0.9, py::arg("tol") = 1e-10, py::arg("samples") = 20,
      py::arg("threshold") = 1e-8, py::arg("perturb") = 0.0, py::arg("order") = 1, py::arg("cap") = 3,
      py::arg("corrupt_sign") = false);
}
