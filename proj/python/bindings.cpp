#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcy/best_constant.hpp"
#include "qcy/cayley.hpp"
#include "qcy/conformal.hpp"
#include "qcy/extremal.hpp"
#include "qcy/optimize.hpp"
#include "qcy/qmatrix.hpp"
#include "qcy/quadrature.hpp"
#include "qcy/suites.hpp"

namespace py = pybind11;
using namespace qcy;

namespace {

using Quat4 = std::array<double, 4>;

Quaternion to_quat(const Quat4& a) { return {a[0], a[1], a[2], a[3]}; }
Quat4 from_quat(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }
GroupPoint to_point(const Coords& c) { return GroupPoint::from_coords(c); }

py::dict report_dict(const Report& r) {
  py::dict d;
  d["check"] = r.check;
  d["samples"] = r.samples;
  d["max_residual"] = r.max_residual;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  d["provenance"] = r.provenance;
  d["seconds"] = r.seconds;
  d["notes"] = r.notes;
  return d;
}

py::dict quotient_dict(const QuotientReport& q) {
  py::dict d;
  d["numerator"] = q.numerator;
  d["power_integral"] = q.power_integral;
  d["denominator"] = q.denominator;
  d["quotient"] = q.quotient;
  d["error"] = q.error;
  d["method"] = q.method;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quaternionic Heisenberg group: frames, conformal deformations, extremals and audits";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_ArithmeticError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_AssertionError);

  m.def("quat_mul", [](const Quat4& a, const Quat4& b) { return from_quat(quat_mul(to_quat(a), to_quat(b))); });
  m.def("quat_inv", [](const Quat4& a) { return from_quat(quat_inv(to_quat(a))); });

  m.def("group_mul", [](const Coords& a, const Coords& b) { return group_mul(to_point(a), to_point(b)).coords(); },
        "Group law on coordinates (t1, x1, y1, z1, x, y, z).");
  m.def("group_inv", [](const Coords& a) { return group_inv(to_point(a)).coords(); });
  m.def("dilation", [](double l, const Coords& a) { return dilation(l, to_point(a)).coords(); });

  py::class_<ScalarField>(m, "ScalarField")
      .def_property_readonly("tag", &ScalarField::tag)
      .def("__call__", [](const ScalarField& f, const Coords& p) { return f.value(to_point(p)); })
      .def("jet",
           [](const ScalarField& f, const Coords& p) {
             const Jet2 j = f.eval_jet(to_point(p));
             return py::make_tuple(j.value, Vec7(j.gradient()), Mat7(j.hessian()));
           },
           "Value, Euclidean gradient and Hessian.")
      .def("__repr__", [](const ScalarField& f) { return "<ScalarField " + f.tag() + ">"; });

  m.def("constant", &constant_field);
  m.def("ubar", &ubar_field);
  m.def("v_field", &v_field);
  m.def("bubble_denominator", &bubble_denominator_field);
  m.def("h_family",
        [](double c, double nu, const Coords& center) { return h_family({c, nu, to_point(center)}); },
        py::arg("c") = 1.0, py::arg("nu") = 1.0, py::arg("center") = Coords{});
  m.def("translate", [](const ScalarField& u, const Coords& g0) { return translate_field(u, to_point(g0)); });
  m.def("dilate", &dilate_field);
  m.def("scale", &scale_field);
  m.def("kelvin", &kelvin);

  m.def("horizontal_gradient", [](const ScalarField& f, const Coords& p) { return horizontal_gradient(f, to_point(p)); });
  m.def("horizontal_hessian", [](const ScalarField& f, const Coords& p) { return horizontal_hessian(f, to_point(p)); });
  m.def("sub_laplacian", [](const ScalarField& f, const Coords& p) { return sub_laplacian(f, to_point(p)); });
  m.def("pde_residual", [](const ScalarField& f, const Coords& p) { return pde_residual(f, to_point(p)); });
  m.def("complex_structures", [] {
    const auto& cs = complex_structures();
    return std::vector<Mat4>(cs.I.begin(), cs.I.end());
  });

  m.def("torsion_T0_deformed",
        [](const ScalarField& h, const Coords& p) { return torsion_T0_deformed(h, to_point(p)).matrix(); });
  m.def("U_deformed", [](const ScalarField& h, const Coords& p) { return U_deformed(h, to_point(p)).matrix(); });
  m.def("scal_deformed",
        [](const ScalarField& h, const Coords& p, double base) { return scal_deformed(h, to_point(p), base); },
        py::arg("h"), py::arg("p"), py::arg("base_scal") = 0.0);

  m.def("cayley_forward", [](const Quat4& q, const Quat4& p) {
    return cayley_forward(SpherePoint(to_quat(q), to_quat(p))).coords();
  });
  m.def("cayley_inverse", [](const Coords& g) {
    const SpherePoint s = cayley_inverse(to_point(g));
    return py::make_tuple(from_quat(s.q()), from_quat(s.p()));
  });
  m.def("sigma", [](const Coords& g) { return sigma(to_point(g)).coords(); });

  // Python callables need the GIL, so they are integrated on the calling thread.
  m.def("integrate_biradial",
        [](const std::function<double(double, double)>& f, double decay, double tol) {
          QuadratureOptions o;
          o.threads = 1;
          const auto r = integrate_biradial({f, decay}, tol, o);
          return py::make_tuple(r.value, r.error);
        },
        py::arg("f"), py::arg("decay"), py::arg("tol") = 1e-10);
  m.def("fs_quotient", [](const ScalarField& u) {
    QuotientReport q;
    {
      py::gil_scoped_release release;
      q = fs_quotient(u);
    }
    return quotient_dict(q);
  });
  m.def("minimize_quotient",
        [](double log_nu, const Coords& center, const ScalarField& target, std::uint64_t seed) {
          MinimizeOptions o;
          o.seed = seed;
          MinimizeResult r;
          {
            py::gil_scoped_release release;
            r = minimize_quotient({log_nu, to_point(center)}, target, o);
          }
          py::dict d;
          d["log_nu"] = r.optimum.log_nu;
          d["center"] = r.optimum.center.coords();
          d["value"] = r.value;
          d["evaluations"] = r.evaluations;
          d["converged"] = r.converged;
          return d;
        },
        py::arg("log_nu") = 0.0, py::arg("center") = Coords{}, py::arg("target") = ubar_field(),
        py::arg("seed") = 0);

  m.def("q_matrix", [] { return q_matrix().m; });
  m.def("q_spectrum", &q_spectrum);
  m.def("quadratic_form_audit", [](const std::array<Quat4, 6>& blocks) {
    BlockVector v;
    for (std::size_t i = 0; i < 6; ++i) v[i] = Vec4(blocks[i][0], blocks[i][1], blocks[i][2], blocks[i][3]);
    return quadratic_form_audit(v);
  });

  m.def("best_constant_report", [] {
    BestConstantReport b;
    {
      py::gil_scoped_release release;
      b = best_constant_report();
    }
    py::dict d;
    d["bubble_integral"] = b.bubble_integral;
    d["bubble_closed_form"] = b.bubble_closed_form;
    d["quotient"] = quotient_dict(b.quotient);
    d["lambda_a"] = b.lambda_a;
    d["lambda_b"] = b.lambda_b;
    d["s2_a"] = b.s2_a;
    d["s2_b"] = b.s2_b;
    py::list comps;
    for (const auto& c : b.comparisons) {
      py::dict e;
      e["name"] = c.name;
      e["printed_expression"] = c.printed_expression;
      e["printed"] = c.printed;
      e["computed"] = c.computed;
      e["ratio"] = c.ratio;
      e["flagged"] = c.flagged;
      comps.append(e);
    }
    d["comparisons"] = comps;
    return d;
  });

  m.def("suite_names", &suite_names);
  m.def("run_suite",
        [](const std::string& name, std::uint64_t seed, std::size_t samples, std::optional<double> tol) {
          SuiteConfig c;
          c.seed = seed;
          c.samples = samples;
          c.tol = tol;
          SuiteResult r;
          {
            py::gil_scoped_release release;
            r = run_suite(name, c);
          }
          py::dict d;
          d["suite"] = r.suite;
          d["seed"] = r.seed;
          py::list reps;
          for (const auto& rep : r.reports) reps.append(report_dict(rep));
          d["reports"] = reps;
          return d;
        },
        py::arg("name"), py::arg("seed") = 0, py::arg("samples") = 0, py::arg("tol") = py::none());
}
