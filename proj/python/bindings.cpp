// Python bindings for the main operations. Exact integers cross the boundary
// as Python ints via decimal strings, so nothing is silently truncated.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cwtop/deficient.hpp"
#include "cwtop/io.hpp"
#include "cwtop/orevkov.hpp"

namespace py = pybind11;
using namespace cwtop;

namespace {

Int to_int(py::handle h) {
  return Int(py::str(h).cast<std::string>());
}

py::int_ from_int(const Int& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

IntegerMatrix to_matrix(const std::vector<std::vector<py::object>>& rows,
                        std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionMismatch("ragged attaching matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = to_int(rows[i][j]);
  }
  return m;
}

py::dict group_dict(const AbelianGroupPresentation& g) {
  py::dict d;
  d["free_rank"] = g.freeRank;
  py::list torsion;
  for (const Int& t : g.torsion) torsion.append(from_int(t));
  d["torsion"] = torsion;
  d["pretty"] = group_to_string(g);
  return d;
}

py::dict element_dict(const QuotientElement& e) {
  py::dict d;
  d["value"] = from_int(e.value);
  d["modulus"] = from_int(e.modulus);
  return d;
}

ComplexPresentation make_complex(int n, std::size_t spheres,
                                 const std::vector<std::vector<py::object>>& cells) {
  return ComplexPresentation(n, spheres, cells.size(), to_matrix(cells, spheres));
}

CellularSphereMap make_map(const ComplexPresentation& k, const std::string& target,
                           const std::vector<py::tuple>& cellDegrees,
                           const std::vector<py::object>& skeletonDegrees) {
  SphereTarget t;
  t.n = k.n;
  if (target == "one-cell")
    t.model = TargetModel::OneCell;
  else if (target == "two-hemispheres")
    t.model = TargetModel::TwoHemispheres;
  else
    throw ParseError("target must be 'one-cell' or 'two-hemispheres'");

  std::vector<CellAssignment> assignments;
  for (const py::tuple& entry : cellDegrees) {
    if (entry.size() != 2)
      throw ParseError("cell degrees must be (target_cell, degree) pairs");
    CellAssignment a;
    std::string cellName = entry[0].cast<std::string>();
    if (cellName == "north" || cellName == "cell")
      a.targetCell = kNorth;
    else if (cellName == "south")
      a.targetCell = kSouth;
    else
      throw ParseError("target cell must be 'north', 'south' or 'cell'");
    a.degree = to_int(entry[1]);
    assignments.push_back(a);
  }
  std::vector<Int> w;
  w.reserve(skeletonDegrees.size());
  for (const py::object& o : skeletonDegrees) w.push_back(to_int(o));
  return CellularSphereMap(k, t, std::move(assignments), std::move(w));
}

}  // namespace

PYBIND11_MODULE(_cwtop, m) {
  m.doc() = "Exact cohomology, tightness and degree computations for "
            "two-stage CW complexes, plus the fractal-tree sampler.";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<Error>(m, "CwtopError");

  py::class_<ComplexPresentation>(m, "Complex")
      .def(py::init(&make_complex), py::arg("n"), py::arg("spheres"),
           py::arg("cells"))
      .def_readonly("n", &ComplexPresentation::n)
      .def_readonly("sphere_count", &ComplexPresentation::sphereCount)
      .def_readonly("cell_count", &ComplexPresentation::cellCount);

  py::class_<CellularSphereMap>(m, "SphereMap")
      .def(py::init(&make_map), py::arg("source"), py::arg("target"),
           py::arg("cell_degrees"), py::arg("skeleton_degrees"));

  m.def("top_cohomology",
        [](const ComplexPresentation& k) { return group_dict(top_cohomology(k)); });
  m.def("cell_class", [](const ComplexPresentation& k, std::size_t i) {
    return element_dict(cell_class(k, i));
  });
  m.def("is_tight", [](const ComplexPresentation& k) {
    TightnessReport r = is_tight(k);
    py::list perCell;
    for (const auto& v : r.perCell) {
      py::dict d;
      d["injective"] = v.injective;
      if (v.witness) {
        py::list w;
        for (const Int& c : v.witness->coefficients) w.append(from_int(c));
        d["witness"] = w;
      }
      perCell.append(d);
    }
    py::dict out;
    out["tight"] = r.tight;
    out["per_cell"] = perCell;
    return out;
  });
  m.def("degree_report", [](const CellularSphereMap& f) {
    DegreeReport r = degree_report(f);
    py::dict d;
    d["deg_class"] = element_dict(r.degClass);
    d["deg_abs"] = from_int(r.degAbs);
    py::list kpc;
    for (const Int& v : r.kPerCell) kpc.append(from_int(v));
    d["k_per_cell"] = kpc;
    d["k_f"] = from_int(r.kf);
    d["absolute_degree"] = from_int(r.absoluteDegree);
    return d;
  });
  m.def("deficient_set", [](const CellularSphereMap& f) {
    DeficientSetDescription desc = deficient_set(f);
    py::list regions;
    for (const RegionReport& r : desc.allRegions) {
      py::dict d;
      const char* kind = r.region.kind == RegionKind::Equator ? "equator"
                         : r.region.kind == RegionKind::Pole  ? "pole"
                                                              : "interior";
      d["kind"] = kind;
      d["target_cell"] = r.region.targetCell;
      d["preimage_count"] = from_int(r.preimageCount);
      d["in_ef"] = r.inEf == EfMembership::No
                       ? "no"
                       : (r.inEf == EfMembership::Yes ? "yes" : "yes-by-bound");
      regions.append(d);
    }
    py::dict out;
    out["regions"] = regions;
    out["dimension"] = desc.dimension;
    return out;
  });
  m.def("single_point_stats",
        [](int dim, int stage, double scale, double angle, std::size_t samples,
           double epsilon, std::uint64_t seed) {
          TreeSpec tree = build_tree(scale, angle, stage);
          StagedMap g(dim, tree, stage);
          SinglePointStats st = single_point_stats(g, samples, epsilon, seed);
          py::dict d;
          d["stage"] = st.stage;
          d["samples"] = st.sampleCount;
          d["injective_fraction"] = st.injectiveFraction;
          d["eps_collision_fraction"] = st.epsCollisionFraction;
          return d;
        },
        py::arg("dim") = 2, py::arg("stage") = 6, py::arg("scale") = 0.45,
        py::arg("angle") = 0.78539816339744830961, py::arg("samples") = 10000,
        py::arg("epsilon") = 1e-3, py::arg("seed") = 1);
  m.def("parse_complex", &parse_complex);
  m.def("serialize_complex", &serialize_complex);
}
