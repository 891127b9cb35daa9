#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "cylspec/distribution.hpp"
#include "cylspec/errors.hpp"
#include "cylspec/generators.hpp"
#include "cylspec/graph.hpp"
#include "cylspec/io.hpp"
#include "cylspec/report.hpp"
#include "cylspec/spectrum.hpp"
#include "cylspec/svg.hpp"
#include "cylspec/verify.hpp"

namespace py = pybind11;
using namespace cylspec;

namespace {

py::int_ to_py_int(const BigInt& v) { return py::int_(py::str(bigint_to_string(v))); }

py::list spectrum_entries(const Spectrum& s) {
  py::list out;
  for (const auto& e : s.entries()) {
    out.append(py::make_tuple(e.value_d, to_py_int(e.multiplicity)));
  }
  return out;
}

py::list spectrum_exact_entries(const Spectrum& s) {
  if (!s.exact()) fail(ErrorKind::InvalidParameter, "spectrum carries float values only");
  py::list out;
  for (const auto& e : s.entries()) {
    out.append(py::make_tuple(rational_to_string(e.value), to_py_int(e.multiplicity)));
  }
  return out;
}

py::list ecdf_list(const Spectrum& s) {
  py::list out;
  EmpiricalCDF cdf = EmpiricalCDF::from_spectrum(s);
  for (const auto& j : cdf.jumps()) {
    out.append(py::make_tuple(j.value, j.cumulative_d));
  }
  return out;
}

py::list histogram_list(const Spectrum& s, int bins, double lo, double hi) {
  py::list out;
  for (const auto& b : histogram(s, bins, lo, hi)) {
    out.append(py::make_tuple(b.lo, b.hi, b.mass_d));
  }
  return out;
}

py::dict summary_dict(const Spectrum& s) {
  DistributionSummary d = summarize(s);
  py::dict out;
  out["gap"] = d.gap;
  out["normalized_gap"] = d.normalized_gap;
  out["mean"] = d.mean;
  out["variance"] = d.variance;
  out["symmetry_defect"] = d.symmetry_defect;
  out["kolmogorov_to_step_at_zero"] = d.kolmogorov_to_step_at_zero;
  if (d.kolmogorov_to_uniform_0_2) out["kolmogorov_to_uniform_0_2"] = *d.kolmogorov_to_uniform_0_2;
  if (d.kolmogorov_to_step_at_one) out["kolmogorov_to_step_at_one"] = *d.kolmogorov_to_step_at_one;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Iterated graph cylinders: exact spectra and their distributions";
  m.attr("__version__") = "0.1.0";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CylError& e) {
      if (e.exit_code() == 2) {
        PyErr_SetString(PyExc_RuntimeError, e.what());
      } else {
        PyErr_SetString(PyExc_ValueError, e.what());
      }
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<std::pair<int, int>>, std::vector<std::string>>(),
           py::arg("vertex_count"), py::arg("edges"),
           py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
      .def_property_readonly("labels", [](const Graph& g) { return g.labels(); })
      .def("degree", &Graph::degree, py::arg("vertex"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(vertices=" + std::to_string(g.vertex_count()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("generate_cycle", &generate_cycle, py::arg("n"));
  m.def("generate_complete", &generate_complete, py::arg("n"));
  m.def("generate_hypercube", &generate_hypercube, py::arg("d"),
        py::arg("dim_cap") = default_limits().hypercube_dim_cap);
  m.def("generate_petersen", &generate_petersen);
  m.def("named_graph", &named_graph, py::arg("name"));

  m.def("check_regular", &check_regular, py::arg("graph"));
  m.def("is_bipartite", &is_bipartite, py::arg("graph"));
  m.def("bipartition", &bipartition, py::arg("graph"));
  m.def("girth", [](const Graph& g) { return girth(g); }, py::arg("graph"));
  m.def("cylinder", &cylinder, py::arg("graph"));
  m.def("iterate_cylinder", &iterate_cylinder, py::arg("graph"), py::arg("n"),
        py::arg("explicit_cap") = default_limits().explicit_cap);
  m.def("cylinder_label", [](int vertex, int base_count) {
    CylinderLabel label = cylinder_label(vertex, base_count);
    return py::make_tuple(label.base_vertex, label.layer);
  }, py::arg("vertex"), py::arg("base_vertex_count"));

  py::class_<Spectrum>(m, "Spectrum")
      .def_property_readonly("kind", [](const Spectrum& s) { return kind_name(s.kind()); })
      .def_property_readonly("base_regularity", &Spectrum::base_regularity)
      .def_property_readonly("iterations", &Spectrum::iterations)
      .def_property_readonly("base_vertex_count", &Spectrum::base_vertex_count)
      .def_property_readonly("degree", &Spectrum::degree)
      .def_property_readonly("exact", &Spectrum::exact)
      .def_property_readonly("distinct_count", &Spectrum::distinct_count)
      .def_property_readonly("total_mass", [](const Spectrum& s) { return to_py_int(s.total_mass()); })
      .def("entries", &spectrum_entries)
      .def("exact_entries", &spectrum_exact_entries)
      .def("__eq__", [](const Spectrum& a, const Spectrum& b) { return a == b; })
      .def("__repr__", [](const Spectrum& s) {
        return "Spectrum(kind=" + kind_name(s.kind()) + ", k=" +
               std::to_string(s.base_regularity()) + ", N=" + std::to_string(s.iterations()) +
               ", distinct=" + std::to_string(s.distinct_count()) + ")";
      });

  m.def("base_spectrum", &base_spectrum, py::arg("graph"),
        py::arg("dense_cap") = default_limits().dense_cap);
  m.def("shift_once", &shift_once, py::arg("spectrum"));
  m.def("shift_iterate", &shift_iterate, py::arg("spectrum"), py::arg("n"));
  m.def("normalize_walk", &normalize_walk, py::arg("spectrum"));
  m.def("laplacian_spectrum", &laplacian_spectrum, py::arg("spectrum"));
  m.def("hypercube_spectrum_closed_form", &hypercube_spectrum_closed_form, py::arg("d"));

  m.def("spectral_gap", &spectral_gap, py::arg("spectrum"));
  m.def("spectral_gap_exact",
        [](const Spectrum& s) { return rational_to_string(spectral_gap_exact(s)); },
        py::arg("spectrum"));
  m.def("symmetry_defect", &symmetry_defect, py::arg("spectrum"));
  m.def("symmetry_defect_exact",
        [](const Spectrum& s) { return rational_to_string(symmetry_defect_exact(s)); },
        py::arg("spectrum"));
  m.def("moments", &moments, py::arg("spectrum"), py::arg("order"));
  m.def("ecdf", &ecdf_list, py::arg("spectrum"));
  m.def("histogram", &histogram_list, py::arg("spectrum"), py::arg("bins"), py::arg("lo"),
        py::arg("hi"));
  m.def("mass_outside",
        [](const Spectrum& s, const std::string& threshold) {
          return rational_to_string(mass_outside(s, rational_from_string(threshold)));
        },
        py::arg("spectrum"), py::arg("threshold"));
  m.def("kolmogorov_to_step",
        [](const Spectrum& s, double c) {
          return kolmogorov_to_step_exact(EmpiricalCDF::from_spectrum(s), c).get_d();
        },
        py::arg("spectrum"), py::arg("c"));
  m.def("kolmogorov_to_uniform",
        [](const Spectrum& s, double a, double b) {
          return kolmogorov_distance(EmpiricalCDF::from_spectrum(s), ReferenceCDF::uniform(a, b));
        },
        py::arg("spectrum"), py::arg("a"), py::arg("b"));
  m.def("gap_decay_curve",
        [](const Graph& g, int n_max, int dense_cap) {
          GapCurve curve = gap_decay_curve(g, n_max, dense_cap);
          py::list points;
          for (const auto& p : curve.points) {
            points.append(py::make_tuple(p.iterations, p.gap, p.gap_exact));
          }
          return py::make_tuple(points, curve.degenerate_top);
        },
        py::arg("graph"), py::arg("n_max"), py::arg("dense_cap") = default_limits().dense_cap);
  m.def("summarize", &summary_dict, py::arg("spectrum"));

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("base_name", &VerificationReport::base_name)
      .def_readonly("iterations", &VerificationReport::iterations)
      .def_readonly("eigenvalue_count", &VerificationReport::eigenvalue_count)
      .def_readonly("max_residual", &VerificationReport::max_residual)
      .def_readonly("passed", &VerificationReport::passed)
      .def("__repr__", [](const VerificationReport& r) {
        return "VerificationReport(base=" + r.base_name + ", N=" +
               std::to_string(r.iterations) + ", passed=" + (r.passed ? "True" : "False") + ")";
      });

  m.def("verify_shift_theorem", &verify_shift_theorem, py::arg("graph"), py::arg("base_name"),
        py::arg("iterations"), py::arg("tol") = 1e-8,
        py::arg("dense_merge_tol") = kDenseMergeTol,
        py::arg("dense_cap") = default_limits().dense_cap);

  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("write_edge_list", &write_edge_list, py::arg("graph"));
  m.def("parse_spectrum", &parse_spectrum, py::arg("text"));
  m.def("write_spectrum", &write_spectrum, py::arg("spectrum"));
  m.def("run_report", [](const std::filesystem::path& out_dir) {
    ReportResult r = run_report(out_dir);
    py::dict out;
    out["all_passed"] = r.all_passed;
    out["files"] = r.files;
    out["verifications"] = static_cast<int>(r.verification.size());
    return out;
  }, py::arg("out_dir"));
}
