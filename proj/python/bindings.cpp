#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "iinf/congruence.hpp"
#include "iinf/error.hpp"
#include "iinf/expr.hpp"
#include "iinf/green.hpp"
#include "iinf/oracle.hpp"
#include "iinf/semilattice.hpp"
#include "iinf/solver.hpp"
#include "iinf/topology.hpp"

namespace py = pybind11;
using namespace iinf;

namespace {

// Python sets and lists of naturals cross the boundary as FinSet.
FinSet to_finset(std::vector<Point> const& points) { return FinSet(points); }

Nbhd make_nbhd(std::string const& flavor, PartialSelfmap const& center,
               std::vector<Point> const& constraint) {
  return Nbhd(parse_flavor(flavor), center, to_finset(constraint));
}

py::dict report_dict(Report const& r) {
  py::list props;
  for (auto const& p : r.results) {
    py::dict d;
    d["id"] = p.id;
    d["claim"] = p.claim;
    d["checked"] = p.checked;
    d["sampled"] = p.sampled;
    d["passed"] = p.passed;
    d["counterexample"] = p.counterexample;
    props.append(d);
  }
  py::dict out;
  out["suite"] = r.suite;
  out["window"] = r.window.elems();
  out["passed"] = r.passed();
  out["properties"] = props;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Almost-identity partial bijections of the naturals";

  static py::exception<Error> error(m, "IinfError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("kind") = std::string(error_name(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<PartialSelfmap>(m, "Element")
      .def(py::init<>())
      .def(py::init([](std::vector<PointPair> pairs, std::vector<Point> holes) {
             return PartialSelfmap::make(std::move(pairs), to_finset(holes));
           }),
           py::arg("pairs"), py::arg("holes") = std::vector<Point>{})
      .def_property_readonly("moved", &PartialSelfmap::moved)
      .def_property_readonly(
          "holes", [](PartialSelfmap const& a) { return a.holes().elems(); })
      .def_property_readonly("corank", &PartialSelfmap::corank)
      .def("__call__", &PartialSelfmap::apply)
      .def("is_idempotent", &PartialSelfmap::is_idempotent)
      .def("inverse", [](PartialSelfmap const& a) { return invert(a); })
      .def("__mul__", [](PartialSelfmap const& a, PartialSelfmap const& b) {
        return a * b;
      })
      .def(py::self == py::self)
      .def("__hash__",
           [](PartialSelfmap const& a) { return std::hash<PartialSelfmap>{}(a); })
      .def("__str__", [](PartialSelfmap const& a) { return format(a); })
      .def("__repr__", [](PartialSelfmap const& a) {
        return "Element('" + format(a) + "')";
      });

  m.def("parse", &parse);
  m.def("evaluate", &evaluate);

  m.def("green", [](std::string const& rel, PartialSelfmap const& a,
                    PartialSelfmap const& b) {
    if (rel == "R") return green_R(a, b);
    if (rel == "L") return green_L(a, b);
    if (rel == "H") return green_H(a, b);
    if (rel == "D") return green_D(a, b);
    if (rel == "J") return green_J(a, b);
    throw py::value_error("relation must be one of R, L, H, D, J");
  });
  m.def("d_witness", &d_witness);
  m.def("j_factor", &j_factor);
  m.def("nat_leq", &nat_leq);

  m.def("sign", [](PartialSelfmap const& a) {
    return std::string(to_string(sign(a)));
  });
  m.def("cong_related", [](std::string const& cid, PartialSelfmap const& a,
                           PartialSelfmap const& b) {
    return cong_related(parse_congruence(cid), a, b);
  });
  m.def("principal_congruence",
        [](PartialSelfmap const& a, PartialSelfmap const& b) {
          return to_string(principal_congruence(a, b));
        });
  m.def("class_label", [](std::string const& cid, PartialSelfmap const& a) {
    return to_string(class_label(parse_congruence(cid), a));
  });

  m.def("solve_left", &solve_left);
  m.def("solve_right", &solve_right);
  m.def("fiber_count", &fiber_count);

  m.def("f_solver", [](std::vector<Point> const& a, std::vector<Point> const& b) {
    std::vector<std::vector<Point>> out;
    for (auto const& x : f_solver(to_finset(a), to_finset(b))) {
      out.push_back(x.elems());
    }
    return out;
  });
  m.def("to_idempotent",
        [](std::vector<Point> const& a) { return to_idempotent(to_finset(a)); });

  m.def("member", [](std::string const& flavor, PartialSelfmap const& center,
                     std::vector<Point> const& constraint,
                     PartialSelfmap const& b) {
    return member(make_nbhd(flavor, center, constraint), b);
  });
  m.def("common_member",
        [](std::string const& flavor, PartialSelfmap const& c1,
           std::vector<Point> const& f1, PartialSelfmap const& c2,
           std::vector<Point> const& f2) {
          return common_member(make_nbhd(flavor, c1, f1),
                               make_nbhd(flavor, c2, f2));
        });
  m.def("separate", [](PartialSelfmap const& a, PartialSelfmap const& b,
                       std::string const& flavor) {
    auto [f1, f2] = separate(a, b, parse_flavor(flavor));
    return std::pair(f1.elems(), f2.elems());
  });

  m.def("enumerate_window", [](std::vector<Point> const& window) {
    return enumerate_window(to_finset(window));
  });
  m.def("window_count", &window_count);
  m.def(
      "verify",
      [](std::string const& suite, std::size_t n, std::uint64_t seed) {
        auto s = parse_suite(suite);
        if (!s) {
          throw py::value_error("unknown suite " + suite);
        }
        VerifyOptions options;
        options.seed = seed;
        Report r = verify(*s, FinSet::range(0, static_cast<Point>(n)), options);
        return report_dict(r);
      },
      py::arg("suite"), py::arg("window"), py::arg("seed") = 0);
}
