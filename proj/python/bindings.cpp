// Python bindings for the casimir_liv core. Units are passed by name
// ("natural" or "SI"); library errors surface as DomainError / InputError /
// IoError, all subclasses of ValueError or OSError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "casimir_liv/bounds.hpp"
#include "casimir_liv/errors.hpp"
#include "casimir_liv/io.hpp"
#include "casimir_liv/mode_spectrum.hpp"
#include "casimir_liv/observables.hpp"
#include "casimir_liv/regularization.hpp"
#include "casimir_liv/sme_tensors.hpp"
#include "casimir_liv/zeta.hpp"

namespace py = pybind11;
using namespace casimir_liv;

namespace {

using Entry = std::tuple<sme::Index4, double>;

std::vector<sme::KFEntry> to_entries(const std::vector<Entry>& in) {
  std::vector<sme::KFEntry> out;
  out.reserve(in.size());
  for (const auto& [idx, v] : in) out.push_back({idx, v});
  return out;
}

observables::PlateGeometry geometry(double a, std::optional<double> area, std::optional<double> disk_diameter) {
  observables::PlateGeometry g;
  g.separation_a = a;
  g.area_A = area;
  g.disk_diameter = disk_diameter;
  return g;
}

py::dict bound_dict(const bounds::BoundResult& r) {
  py::dict d;
  d["L_max"] = r.L_max;
  d["reference_force"] = r.reference_force;
  d["a"] = r.inputs_echo.geometry.separation_a;
  d["area"] = r.inputs_echo.geometry.area();
  d["delta_F"] = r.inputs_echo.delta_F;
  d["source_label"] = r.inputs_echo.source_label;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Casimir energy, pressure and force with a Lorentz-violation factor";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<IoError> io_error(m, "IoError", PyExc_OSError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const IoError& e) {
      py::set_error(io_error, e.what());
    }
  });

  m.def("riemann_zeta", &zeta::riemann_zeta, py::arg("s"));

  // --- k_F and kappa -------------------------------------------------------
  py::class_<sme::KFTensor>(m, "KFTensor")
      .def(py::init<>())
      .def_static(
          "from_representatives",
          [](const std::vector<Entry>& e) { return sme::KFTensor::from_representatives(to_entries(e)); },
          py::arg("entries"), "One ((k, l, m, n), value) per orbit; partners are filled in.")
      .def_static(
          "from_components", [](const std::vector<Entry>& e) { return sme::KFTensor::from_components(to_entries(e)); },
          py::arg("entries"))
      .def("__call__", [](const sme::KFTensor& t, int k, int l, int mm, int n) { return t(k, l, mm, n); })
      .def("max_abs", &sme::KFTensor::max_abs)
      .def("nonzero_entries", [](const sme::KFTensor& t) {
        std::vector<Entry> out;
        for (const auto& e : t.nonzero_entries()) out.emplace_back(e.indices, e.value);
        return out;
      });

  py::class_<sme::KappaSet>(m, "KappaSet")
      .def(py::init<>())
      .def_readwrite("kappa_DE", &sme::KappaSet::kappa_DE)
      .def_readwrite("kappa_HB", &sme::KappaSet::kappa_HB)
      .def_readwrite("kappa_DB", &sme::KappaSet::kappa_DB)
      .def_readwrite("kappa_HE", &sme::KappaSet::kappa_HE);

  py::class_<sme::Medium>(m, "Medium")
      .def(py::init([](double eps, double mu) { return sme::Medium{eps, mu}; }), py::arg("epsilon") = 1.0,
           py::arg("mu") = 1.0)
      .def_readwrite("epsilon", &sme::Medium::epsilon)
      .def_readwrite("mu", &sme::Medium::mu);

  py::class_<sme::FieldStats>(m, "FieldStats")
      .def(py::init([](double E_sq, double B_sq, std::optional<sme::Vec3> E_dir, std::optional<sme::Vec3> B_dir,
                       bool isotropic) { return sme::FieldStats{E_sq, B_sq, E_dir, B_dir, isotropic}; }),
           py::arg("E_sq"), py::arg("B_sq"), py::arg("E_direction") = py::none(),
           py::arg("B_direction") = py::none(), py::arg("isotropic") = false)
      .def_readwrite("E_sq", &sme::FieldStats::E_sq)
      .def_readwrite("B_sq", &sme::FieldStats::B_sq)
      .def_readwrite("E_direction", &sme::FieldStats::E_direction)
      .def_readwrite("B_direction", &sme::FieldStats::B_direction)
      .def_readwrite("isotropic", &sme::FieldStats::isotropic);

  m.def(
      "validate_kf",
      [](const sme::KFTensor& t, bool bianchi, bool double_trace) {
        const auto r = sme::validate_kf(t, {bianchi, double_trace});
        py::dict d;
        d["ok"] = r.ok();
        d["summary"] = r.summary();
        d["violations"] = r.violations.size();
        d["large_components"] = r.large_components;
        return d;
      },
      py::arg("tensor"), py::arg("check_bianchi") = false, py::arg("check_double_trace") = false);
  m.def("kappa_from_kf", &sme::kappa_from_kf, py::arg("tensor"));
  m.def("kappa_HB_brute_force", &sme::kappa_HB_brute_force, py::arg("tensor"));
  m.def("liv_factor", &sme::liv_factor, py::arg("kappa"), py::arg("fields"), py::arg("medium") = sme::Medium{});
  m.def("cross_term_residual", &sme::cross_term_residual, py::arg("kappa"), py::arg("E"), py::arg("B"));
  m.def(
      "load_kf_file",
      [](const std::string& path) {
        const auto in = io::load_kf_file(path);
        return std::make_tuple(in.tensor, in.medium, in.fields);
      },
      py::arg("path"), "Returns (tensor, medium, fields or None).");

  // --- modes -----------------------------------------------------------------
  m.def(
      "mode_frequency",
      [](const std::string& bc, std::int64_t n, double k_T, double a) {
        if (bc != "dirichlet" && bc != "neumann") throw InputError("boundary must be 'dirichlet' or 'neumann'");
        const auto b = bc == "dirichlet" ? modes::Boundary::Dirichlet : modes::Boundary::Neumann;
        return modes::mode_frequency({b, n, k_T, a});
      },
      py::arg("bc"), py::arg("n"), py::arg("k_T"), py::arg("a"));
  m.def("shifted_frequency", &modes::shifted_frequency, py::arg("omega0"), py::arg("L"));
  m.def(
      "enumerate_modes",
      [](double a, double omega_max, int k_samples) {
        std::vector<std::tuple<std::string, std::int64_t, double, double>> out;
        for (const auto& md : modes::enumerate_modes(a, omega_max, k_samples)) {
          out.emplace_back(modes::to_string(md.spec.bc), md.spec.n, md.spec.k_T, md.frequency);
        }
        return out;
      },
      py::arg("a"), py::arg("omega_max"), py::arg("k_samples") = 1, "List of (bc, n, k_T, frequency).");

  // --- regularization --------------------------------------------------------
  m.def("closed_form_branch", &regularization::closed_form_branch, py::arg("s"), py::arg("a"));
  m.def("direct_regulated_sum", &regularization::direct_regulated_sum, py::arg("s"), py::arg("a"),
        py::arg("n_max") = 1000);
  m.def(
      "zeta_energy_per_area", [](double a) { return regularization::zeta_energy_per_area(a).energy_per_area; },
      py::arg("a"));
  m.def("cutoff_energy_per_area", &regularization::cutoff_energy_per_area, py::arg("a"), py::arg("delta"),
        py::arg("n_max") = 0);
  m.def(
      "extrapolated_cutoff_energy",
      [](double a, std::optional<std::vector<double>> deltas, int order, std::int64_t n_max) {
        auto sched = regularization::RegulatorSchedule::for_separation(a);
        if (deltas) sched.deltas = *deltas;
        sched.extrapolation_order = order;
        sched.n_max = n_max;
        const auto ex = regularization::extrapolated_cutoff_energy(a, sched);
        return std::make_tuple(ex.estimate, ex.error);
      },
      py::arg("a"), py::arg("deltas") = py::none(), py::arg("order") = 2, py::arg("n_max") = 0,
      "Returns (estimate, error estimate).");
  m.def(
      "oracle_agreement",
      [](double a_min, double a_max, int points, double tol) {
        std::vector<std::tuple<double, double, double, double, bool>> out;
        for (const auto& r : regularization::oracle_agreement(a_min, a_max, points, tol)) {
          out.emplace_back(r.a, r.zeta, r.oracle, r.relative_deviation, r.pass);
        }
        return out;
      },
      py::arg("a_min") = 0.1, py::arg("a_max") = 10.0, py::arg("points") = 10, py::arg("tolerance") = 1e-3,
      "List of (a, zeta, oracle, relative deviation, pass).");

  // --- observables -----------------------------------------------------------
  const auto units = [](const std::string& name) { return observables::UnitSystem::from_name(name); };
  m.def(
      "casimir_pressure",
      [units](double a, double L, const std::string& u) { return observables::casimir_pressure(a, L, units(u)); },
      py::arg("a"), py::arg("L") = 0.0, py::arg("units") = "natural");
  m.def(
      "energy_per_area",
      [units](double a, double L, const std::string& u) {
        return observables::energy_per_area_physical(a, L, units(u));
      },
      py::arg("a"), py::arg("L") = 0.0, py::arg("units") = "natural");
  m.def(
      "casimir_force",
      [units](double a, std::optional<double> area, std::optional<double> disk_diameter, double L,
              const std::string& u) { return observables::casimir_force(geometry(a, area, disk_diameter), L, units(u)); },
      py::arg("a"), py::kw_only(), py::arg("area") = py::none(), py::arg("disk_diameter") = py::none(),
      py::arg("L") = 0.0, py::arg("units") = "natural");

  // --- bounds ----------------------------------------------------------------
  m.def(
      "liv_upper_bound",
      [units](double delta_F, double a, std::optional<double> area, std::optional<double> disk_diameter,
              const std::string& u) {
        bounds::MeasurementRecord rec;
        rec.delta_F = delta_F;
        rec.geometry = geometry(a, area, disk_diameter);
        return bound_dict(bounds::liv_upper_bound(rec, units(u)));
      },
      py::arg("delta_F"), py::arg("a"), py::kw_only(), py::arg("area") = py::none(),
      py::arg("disk_diameter") = py::none(), py::arg("units") = "SI");
  m.def(
      "preset_bound",
      [](const std::string& name, std::optional<std::string> variant) {
        const auto p = io::load_preset(name);
        const auto r = bounds::liv_upper_bound(p.measurement(variant.value_or("")),
                                               observables::UnitSystem::from_name(p.units));
        py::dict d = bound_dict(r);
        if (p.published_bound) {
          d["published_bound"] = *p.published_bound;
          d["discrepancy_note"] = bounds::discrepancy_note(r, *p.published_bound);
        }
        return d;
      },
      py::arg("name"), py::arg("variant") = py::none());
  m.def("preset_directory", &io::preset_directory);
}
