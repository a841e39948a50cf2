// Python module _concentric: thin bindings over the core library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "concentric/moments.hpp"
#include "concentric/oracle.hpp"
#include "concentric/pairing.hpp"
#include "concentric/reconstruct.hpp"
#include "concentric/special_cases.hpp"

namespace py = pybind11;
using namespace concentric;

namespace {

PyObject* geometry_error_type = nullptr;
PyObject* infeasible_family_type = nullptr;

void raise_with_code(PyObject* type, const GeometryError& e) {
  py::object err = py::reinterpret_steal<py::object>(PyObject_CallFunction(type, "s", e.what()));
  err.attr("code") = py::str(std::string(to_string(e.code())));
  PyErr_SetObject(type, err.ptr());
}

py::tuple point(PlanePoint p) { return py::make_tuple(p.x, p.y); }

}  // namespace

PYBIND11_MODULE(_concentric, m) {
  m.doc() = "Regular polygons and the concentric circles through their vertices";

  // Module-lifetime exception types; the references are kept on purpose.
  geometry_error_type = PyErr_NewException("concentric_gons._concentric.GeometryError",
                                           PyExc_ValueError, nullptr);
  infeasible_family_type = PyErr_NewException("concentric_gons._concentric.InfeasibleFamilyError",
                                              geometry_error_type, nullptr);
  m.attr("GeometryError") = py::handle(geometry_error_type);
  m.attr("InfeasibleFamilyError") = py::handle(infeasible_family_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InfeasibleFamilyError& e) {
      raise_with_code(infeasible_family_type, e);
    } catch (const GeometryError& e) {
      raise_with_code(geometry_error_type, e);
    }
  });

  py::class_<PlanePoint>(m, "PlanePoint")
      .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
      .def(py::init([](std::pair<double, double> p) { return PlanePoint{p.first, p.second}; }))
      .def_readwrite("x", &PlanePoint::x)
      .def_readwrite("y", &PlanePoint::y)
      .def("__iter__", [](const PlanePoint& p) { return py::iter(point(p)); })
      .def("__eq__", [](const PlanePoint& a, const PlanePoint& b) { return a == b; })
      .def("__repr__", [](const PlanePoint& p) {
        return "PlanePoint(" + py::repr(py::float_(p.x)).cast<std::string>() + ", " +
               py::repr(py::float_(p.y)).cast<std::string>() + ")";
      });
  py::implicitly_convertible<py::tuple, PlanePoint>();
  py::implicitly_convertible<py::list, PlanePoint>();

  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("relative_eps"), py::arg("absolute_floor") = 1e-12)
      .def_readonly("relative_eps", &Tolerance::relative_eps)
      .def_readonly("absolute_floor", &Tolerance::absolute_floor)
      .def("bound", &Tolerance::bound);

  py::class_<RegularPolygon>(m, "RegularPolygon")
      .def(py::init<int, PlanePoint, double, double>(), py::arg("n"), py::arg("center"),
           py::arg("circumradius"), py::arg("phase") = 0.0)
      .def_property_readonly("n", &RegularPolygon::n)
      .def_property_readonly("center", &RegularPolygon::center)
      .def_property_readonly("circumradius", &RegularPolygon::circumradius)
      .def_property_readonly("phase", &RegularPolygon::phase)
      .def("vertex", &RegularPolygon::vertex)
      .def("vertices", [](const RegularPolygon& p) { return vertices(p); })
      .def("__repr__", [](const RegularPolygon& p) {
        return "RegularPolygon(n=" + std::to_string(p.n()) + ", R=" +
               py::repr(py::float_(p.circumradius())).cast<std::string>() + ")";
      });

  py::class_<CircleFamily>(m, "CircleFamily")
      .def(py::init<PlanePoint, std::vector<double>>(), py::arg("center"), py::arg("radii"))
      .def_static("from_unsorted",
                  [](PlanePoint c, std::vector<double> radii) {
                    return CircleFamily::from_unsorted(c, std::move(radii));
                  },
                  py::arg("center"), py::arg("radii"))
      .def_property_readonly("center", &CircleFamily::center)
      .def_property_readonly("radii", &CircleFamily::radii)
      .def("__len__", &CircleFamily::size);

  py::class_<RadiiPair>(m, "RadiiPair")
      .def_readonly("r1", &RadiiPair::r1)
      .def_readonly("r2", &RadiiPair::r2)
      .def_readonly("degenerate", &RadiiPair::degenerate);

  py::class_<FeasibilityReport>(m, "FeasibilityReport")
      .def_readonly("condition1_ok", &FeasibilityReport::condition1_ok)
      .def_readonly("condition1_ratio", &FeasibilityReport::condition1_ratio)
      .def_readonly("condition2_ok", &FeasibilityReport::condition2_ok)
      .def_readonly("condition2_residuals", &FeasibilityReport::condition2_residuals)
      .def_readonly("degenerate_single_polygon", &FeasibilityReport::degenerate_single_polygon)
      .def_property_readonly("feasible", &FeasibilityReport::feasible);

  py::class_<PairingResult>(m, "PairingResult")
      .def_readonly("m_point", &PairingResult::m_point)
      .def_readonly("aligned_second", &PairingResult::aligned_second)
      .def_readonly("circles", &PairingResult::circles)
      .def_readonly("matched_vertex_pair", &PairingResult::matched_vertex_pair);

  py::class_<Reconstruction>(m, "Reconstruction")
      .def_readonly("first", &Reconstruction::first)
      .def_readonly("second", &Reconstruction::second)
      .def_readonly("report", &Reconstruction::report)
      .def_readonly("radii", &Reconstruction::radii)
      .def_readonly("first_residual", &Reconstruction::first_residual)
      .def_readonly("second_residual", &Reconstruction::second_residual)
      .def_readonly("second_is_point", &Reconstruction::second_is_point);

  py::class_<ClosedFormResult>(m, "ClosedFormResult")
      .def_readonly("exists", &ClosedFormResult::exists)
      .def_readonly("degenerate", &ClosedFormResult::degenerate)
      .def_readonly("r1", &ClosedFormResult::r1)
      .def_readonly("r2", &ClosedFormResult::r2);

  py::class_<SquareFeasibility, ClosedFormResult>(m, "SquareFeasibility")
      .def_property_readonly("rejection", [](const SquareFeasibility& s) {
        switch (s.reason) {
          case SquareRejection::SumCondition: return "sum_condition";
          case SquareRejection::AssociatedTriangle: return "associated_triangle";
          default: return "none";
        }
      });

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("best_phase", &SweepResult::best_phase)
      .def_readonly("best_residual", &SweepResult::best_residual);

  py::class_<RandomInstance>(m, "RandomInstance")
      .def_readonly("first", &RandomInstance::first)
      .def_readonly("second", &RandomInstance::second)
      .def_readonly("m_point", &RandomInstance::m_point)
      .def_readonly("family", &RandomInstance::family)
      .def_readonly("r1", &RandomInstance::r1)
      .def_readonly("r2", &RandomInstance::r2);

  const Tolerance dflt{};

  m.def("heron_area", &heron_area, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("tol") = dflt);
  m.def("circle_circle_intersection", &circle_circle_intersection, py::arg("c1"), py::arg("r1"),
        py::arg("c2"), py::arg("r2"), py::arg("tol") = dflt);
  m.def("distance_multiset", &distance_multiset, py::arg("poly"), py::arg("m_point"));

  m.def("cyclic_averages",
        [](const std::vector<double>& radii) { return cyclic_averages(radii).values; },
        py::arg("radii"), "S^(2m) for m = 1 .. n-1");
  m.def("two_radius_power_sum", &two_radius_power_sum, py::arg("r1"), py::arg("r2"), py::arg("n"),
        py::arg("m"));
  m.def("assess_feasibility",
        [](const std::vector<double>& radii, const Tolerance& tol) {
          return assess_feasibility(cyclic_averages(radii), tol);
        },
        py::arg("radii"), py::arg("tol") = dflt);
  m.def("recover_circumradii",
        [](const std::vector<double>& radii, const Tolerance& tol) {
          return recover_circumradii(cyclic_averages(radii), tol);
        },
        py::arg("radii"), py::arg("tol") = dflt);

  m.def("candidate_centers", &candidate_centers, py::arg("p1"), py::arg("p2"), py::arg("tol") = dflt);
  m.def("pair_polygons",
        [](const RegularPolygon& p1, const RegularPolygon& p2, const Tolerance& tol) {
          return pair_polygons(p1, p2, tol).results;
        },
        py::arg("p1"), py::arg("p2"), py::arg("tol") = dflt);
  m.def("shared_vertex_pairing",
        [](const RegularPolygon& p1, const RegularPolygon& p2, const Tolerance& tol) {
          return shared_vertex_pairing(p1, p2, tol).results;
        },
        py::arg("p1"), py::arg("p2"), py::arg("tol") = dflt);

  m.def("triangle_feasibility", &triangle_feasibility, py::arg("d1"), py::arg("d2"), py::arg("d3"),
        py::arg("tol") = dflt);
  m.def("triangle_circle_radii", &triangle_circle_radii, py::arg("r1"), py::arg("r2"), py::arg("d1"),
        py::arg("tol") = dflt);
  m.def("square_feasibility", &square_feasibility, py::arg("radii"), py::arg("tol") = dflt);
  m.def("square_circle_radii", &square_circle_radii, py::arg("r1"), py::arg("r2"), py::arg("d1"),
        py::arg("tol") = dflt);

  m.def("phase_candidates", &phase_candidates, py::arg("r"), py::arg("l"), py::arg("d"),
        py::arg("tol") = dflt);
  m.def("reconstruct_polygons", &reconstruct_polygons, py::arg("family"), py::arg("tol") = dflt);
  m.def("verify_reconstruction", &verify_reconstruction, py::arg("family"), py::arg("poly"));

  m.def("distance_identity_residual", &distance_identity_residual, py::arg("poly"), py::arg("m_point"), py::arg("m"),
        "Relative gap of the polygon power-sum identity at order m.");
  m.def("angle_sweep",
        [](double r, double l, int n, const std::vector<double>& target, int grid, int iters) {
          return angle_sweep(r, l, n, target, grid, iters);
        },
        py::arg("r"), py::arg("l"), py::arg("n"), py::arg("target"),
        py::arg("grid_size") = 3600, py::arg("refine_iterations") = 40);
  m.def("random_instance", &random_instance, py::arg("n"), py::arg("seed"),
        py::arg("point_second") = false);
}
