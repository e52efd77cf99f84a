// Python bindings.  Rationals cross the boundary as fractions.Fraction,
// cycles as {vertex id: value} dicts; DomainError is re-raised as
// plumbline.DomainError with the stable error name in `.name`.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "plumbline/abel.hpp"
#include "plumbline/corpus.hpp"
#include "plumbline/error.hpp"
#include "plumbline/graph.hpp"
#include "plumbline/lattice.hpp"
#include "plumbline/poly.hpp"
#include "plumbline/seifert.hpp"
#include "plumbline/superisolated.hpp"

namespace py = pybind11;
using namespace plumbline;

namespace {

py::object fraction(const Q& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

Q to_q(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::isinstance<py::int_>(h)) return parse_rational(py::str(h).cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return parse_rational(py::str(h.attr("numerator")).cast<std::string>() + "/" +
                          py::str(h.attr("denominator")).cast<std::string>());
  throw py::type_error("expected int, fractions.Fraction or str");
}

py::dict cycle_dict(const ResolutionGraph& g, const RatCycle& x) {
  py::dict d;
  for (int v = 0; v < g.size(); ++v) d[py::str(g.id(v))] = fraction(x[v]);
  return d;
}

py::dict cycle_dict(const ResolutionGraph& g, const IntCycle& x) {
  py::dict d;
  for (int v = 0; v < g.size(); ++v) d[py::str(g.id(v))] = x[v];
  return d;
}

// Accepts the cycle text syntax ("(1,2,1)" or "v0=1/2,v1=1"), a
// {id: value} dict (missing ids are 0) or None for the zero cycle.
RatCycle rat_cycle(const ResolutionGraph& g, const py::object& o) {
  if (o.is_none()) return zero_cycle(g);
  if (py::isinstance<py::str>(o)) return parse_cycle(g, o.cast<std::string>());
  RatCycle x = zero_cycle(g);
  for (auto [k, v] : o.cast<py::dict>()) x[g.index_of(k.cast<std::string>())] = to_q(v);
  return x;
}

IntCycle int_cycle(const ResolutionGraph& g, const py::object& o) {
  RatCycle x = rat_cycle(g, o);
  IntCycle z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].get_den() != 1) throw DomainError("NotIntegral", "cycle must have integer coefficients");
    z[i] = x[i].get_num().get_si();
  }
  return z;
}

std::vector<Q> q_list(const py::object& o) {
  std::vector<Q> out;
  for (auto h : o) out.push_back(to_q(h));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "plumbline core bindings";

  // Intentionally leaked: the exception type lives as long as the interpreter.
  static PyObject* domain_error = PyErr_NewException("plumbline.DomainError", PyExc_ValueError, nullptr);
  m.attr("DomainError") = py::handle(domain_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::object err = py::handle(domain_error)(py::str(e.name()), py::str(e.what()));
      err.attr("name") = e.name();
      PyErr_SetObject(domain_error, err.ptr());
    }
  });

  m.def("corpus_names", &corpus_names);

  py::class_<ResolutionGraph>(m, "Graph")
      .def_static("from_text", &parse_graph, py::arg("text"))
      .def_static("corpus", &corpus_graph, py::arg("name"))
      .def_property_readonly("ids", &ResolutionGraph::ids)
      .def_property_readonly("euler", &ResolutionGraph::euler_numbers)
      .def_property_readonly("det", [](const ResolutionGraph& g) { return py::int_(py::str(to_string(g.det()))); })
      .def("__len__", &ResolutionGraph::size)
      .def("to_text", &format_graph)
      .def("to_dot", &to_dot)
      .def("canonical", [](const ResolutionGraph& g) { return cycle_dict(g, g.canonical()); })
      .def("dual_base",
           [](const ResolutionGraph& g) {
             py::dict d;
             for (int v = 0; v < g.size(); ++v) d[py::str(g.id(v))] = cycle_dict(g, g.dual_base()[v]);
             return d;
           })
      .def("dual_cycle",
           [](const ResolutionGraph& g, const py::object& a) {
             // Σ a_v E*_v for a {id: coefficient} dict.
             return cycle_dict(g, from_dual_coords(g, rat_cycle(g, a)));
           },
           py::arg("coefficients"))
      .def("zmin", [](const ResolutionGraph& g) { return cycle_dict(g, laufer_zmin(g)); })
      .def("chi", [](const ResolutionGraph& g, const py::object& x) { return fraction(chi(g, rat_cycle(g, x))); },
           py::arg("x"))
      .def("pairing",
           [](const ResolutionGraph& g, const py::object& x, const py::object& y) {
             return fraction(pairing(g, rat_cycle(g, x), rat_cycle(g, y)));
           },
           py::arg("x"), py::arg("y"))
      .def("is_rational", &is_rational_graph)
      .def("is_elliptic", &is_elliptic_graph)
      .def("in_sdom", [](const ResolutionGraph& g, const py::object& x) { return in_sdom(g, rat_cycle(g, x)); },
           py::arg("x"))
      .def("in_van", [](const ResolutionGraph& g, const py::object& x) { return in_van(g, rat_cycle(g, x)); },
           py::arg("x"))
      .def("l_dom",
           [](const ResolutionGraph& g, const py::object& lp) { return cycle_dict(g, l_dom(g, rat_cycle(g, lp))); },
           py::arg("lprime") = py::none())
      .def("generic_h1",
           [](const ResolutionGraph& g, const py::object& lp, const py::object& z) {
             return py::int_(py::str(to_string(generic_h1(g, rat_cycle(g, lp), int_cycle(g, z)))));
           },
           py::arg("lprime"), py::arg("z"))
      .def("is_dominant",
           [](const ResolutionGraph& g, const py::object& lp, const py::object& z) {
             return is_dominant(g, rat_cycle(g, lp), int_cycle(g, z));
           },
           py::arg("lprime"), py::arg("z"));

  py::class_<SeifertData>(m, "Seifert")
      .def_static("parse", &parse_seifert, py::arg("text"))
      .def("__str__", &format_seifert)
      .def("graph", &graph_from_seifert)
      .def("invariants",
           [](const SeifertData& sd) {
             WhInvariants w = wh_invariants(sd);
             py::dict d;
             d["pg"] = w.pg;
             d["W"] = w.W;
             d["n"] = w.n;
             d["omega_prime"] = w.omega_prime;
             d["tau"] = w.tau;
             d["e"] = fraction(w.e);
             return d;
           })
      .def("pg", [](const SeifertData& sd) { return wh_invariants(sd).pg; })
      .def("s0", &h1_generic_central)
      .def("dim_im_central", &dim_im_central)
      .def("h1_central", &h1_central, py::arg("k"))
      .def("h1_end", [](const SeifertData& sd, int leg) { return h1_end(sd, leg - 1).value; }, py::arg("leg"))
      .def("jet_rank",
           [](const SeifertData& sd, const py::object& jet) {
             auto sys = wh_jet_cut_system(sd, default_leg_points(sd), q_list(jet));
             return py::make_tuple(sys.rank, sys.h1);
           },
           py::arg("jet"));

  m.def("delta_identity",
        [](int n) {
          std::vector<Poly> det = delta_poly_det(n);
          for (int i = 1; i <= n; ++i)
            if (!(delta_poly_symbolic(n, i) == det[i - 1])) return false;
          return true;
        },
        py::arg("n"));
  m.def("det_mc_is_c1_power",
        [](int mm) { return det_Mc(mm) == Poly::var(1).pow(static_cast<unsigned>(mm * (mm - 1) / 2)); }, py::arg("m"));

  m.def("si_pg", &si_pg, py::arg("d"));
  m.def("si_dim_im_generic", &si_dim_im_generic, py::arg("d"), py::arg("k"));
  m.def("si_constraint_rank",
        [](int d, long long k) {
          auto sys = si_constraint_system(si_generic_instance(d, k));
          return py::make_tuple(sys.rank, sys.h1);
        },
        py::arg("d"), py::arg("k"));
}
