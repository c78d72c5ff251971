#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twodist/error.hpp"
#include "twodist/geometry.hpp"
#include "twodist/invariants.hpp"
#include "twodist/join.hpp"
#include "twodist/oracle.hpp"
#include "twodist/record.hpp"

namespace py = pybind11;
using namespace twodist;

namespace {

py::object big(const BigInt& x) { return py::module_::import("builtins").attr("int")(x.str()); }

py::list coefficients(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(big(c));
  return out;
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict dims_dict(const RepresentationDims& d) {
  py::dict out;
  out["dim_e"] = d.dim_e;
  out["dim_s"] = d.dim_s;
  out["dim_j"] = d.dim_j ? py::object(py::int_(*d.dim_j)) : py::object(py::none());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-distance representation numbers of graphs";

  py::register_exception<Error>(m, "TwodistError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges") = std::vector<Edge>{})
      .def_static("from_graph6", [](const std::string& s, int max_n) { return parse_graph6(s, max_n); },
                  py::arg("text"), py::arg("max_n") = kDefaultMaxN)
      .def_static("complete", &Graph::complete)
      .def_static("cycle", &Graph::cycle)
      .def_static("path", &Graph::path)
      .def_static("empty", &Graph::empty)
      .def_property_readonly("n", &Graph::order)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  m.def("join", [](const Graph& a, const Graph& b) { return join(a, b, kHardMaxN); });
  m.def("complete_multipartite", [](std::vector<int> parts) {
    return complete_multipartite(MultipartiteSignature(std::move(parts)), kHardMaxN);
  });
  m.def("disjoint_cliques", [](std::vector<int> parts) {
    return disjoint_cliques(MultipartiteSignature(std::move(parts)), kHardMaxN);
  });
  m.def("complement_components", &complement_components);
  m.def("isomorphic", &isomorphic);
  m.def("enumerate_graphs", &enumerate_graphs);

  m.def("cm_polynomials", [](const Graph& g) {
    const CmPolynomials p = cm_polynomials(g);
    return py::make_tuple(coefficients(p.c), coefficients(p.m));
  }, "Coefficient lists (lowest degree first) of C_G and M_G.");

  m.def("tau1_mu", [](const Graph& g) {
    const Tau1 t = tau1_mu(g);
    py::object tau = py::float_(std::numeric_limits<double>::infinity());
    if (t.tau1) tau = py::float_(t.tau1->to_double());
    return py::make_tuple(tau, t.mu);
  });

  m.def("analyze", [](const Graph& g, int precision_bits) {
    RecordOptions o;
    o.precision_bits = precision_bits;
    return json_to_py(analysis_record(g, o));
  }, py::arg("g"), py::arg("precision_bits") = 40);

  m.def("dim_s_bounded", [](const Graph& g, long long num, long long den) {
    return dim_s_bounded(g, Rational(num, den));
  }, py::arg("g"), py::arg("numerator"), py::arg("denominator"));

  m.def("beta_star", [](const Graph& g) { return beta_star_numeric(g).value; });
  m.def("phi", [](const Graph& g, double x) { return phi(g, x); });
  m.def("solve_phi", [](const Graph& g, double r) { return solve_phi(g, r).x; });

  m.def("realize", [](const Graph& g, double b, double a) { return realize(g, b, a).points; }, py::arg("g"),
        py::arg("b"), py::arg("a") = 1.0);
  m.def("jspherical_embedding", [](const Graph& g) { return jspherical_embedding(g).points; });

  m.def("min_enclosing_ball", [](const Eigen::MatrixXd& points) {
    const Ball b = min_enclosing_ball(points);
    return py::make_tuple(b.center, b.radius, b.support);
  }, "Centre, radius and support indices of the smallest enclosing ball of the rows.");

  m.def("kuperberg_decompose", [](const Eigen::MatrixXd& points) {
    PointConfig p;
    p.points = points;
    p.a = std::sqrt(2.0);
    const PointFactorization f = kuperberg_decompose(p);
    py::list out;
    for (const auto& x : f.factors) out.append(py::make_tuple(x.indices, x.type == FactorType::I ? "I" : "II"));
    return out;
  });

  m.def("join_decompose", [](const Graph& g) {
    const JoinFactorization f = join_decompose(g);
    py::list factors;
    for (const auto& x : f.factors) {
      py::object beta = x.beta_star ? py::object(py::float_(*x.beta_star)) : py::object(py::none());
      factors.append(py::make_tuple(x.graph, x.vertices, beta));
    }
    return py::make_tuple(factors, f.k);
  });
  m.def("dims_via_join", [](const Graph& g) { return dims_dict(dims_via_join(g)); });
  m.def("multipartite_dims", [](std::vector<int> parts) {
    return dims_dict(multipartite_dims(MultipartiteSignature(std::move(parts))));
  });

  m.def("verify_profile", [](const Graph& g) {
    return json_to_py(Json::parse(verify_profile(g, exact_invariants(g)).to_json_line()));
  });
  m.def("is_primitive_srg", &is_primitive_srg);
}
