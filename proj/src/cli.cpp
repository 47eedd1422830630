#include "casimir_liv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir_liv/bounds.hpp"
#include "casimir_liv/errors.hpp"
#include "casimir_liv/io.hpp"
#include "casimir_liv/mode_spectrum.hpp"
#include "casimir_liv/regularization.hpp"

namespace casimir_liv::cli {

using ojson = nlohmann::ordered_json;
using observables::UnitMode;
using observables::UnitSystem;

std::string to_string(Command c) {
  switch (c) {
    case Command::Kappa: return "kappa";
    case Command::Modes: return "modes";
    case Command::Energy: return "energy";
    case Command::Force: return "force";
    case Command::Bound: return "bound";
    case Command::Sweep: return "sweep";
    case Command::Validate: return "validate";
  }
  return "unknown";
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Pretty: return "pretty";
  }
  return "unknown";
}

std::string to_string(SweepKind k) { return k == SweepKind::Convergence ? "convergence" : "bound"; }

namespace {

// ---------------------------------------------------------------------------
// Parsing

CLI::Validator positive(const std::string& what) {
  return CLI::Validator(
      [what](std::string& s) -> std::string {
        double v = 0.0;
        try {
          std::size_t used = 0;
          v = std::stod(s, &used);
          if (used != s.size()) return "malformed number '" + s + "'";
        } catch (const std::exception&) {
          return "malformed number '" + s + "'";
        }
        if (!(v > 0.0) || !std::isfinite(v)) return what + " must be > 0";
        return {};
      },
      "POSITIVE");
}

const std::set<std::string>& config_keys() {
  static const std::set<std::string> keys = {
      "units", "format", "input", "a", "L", "area", "disk_diameter", "delta_F", "omega_max", "k_samples",
      "preset", "variant", "sweep_kind", "deltas", "order", "n_max", "a_min", "a_max", "points", "tolerance",
      "E_sq", "B_sq", "E_direction", "B_direction", "isotropic", "check_bianchi", "check_double_trace"};
  return keys;
}

OutputFormat format_from_name(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "pretty") return OutputFormat::Pretty;
  throw UsageError("unknown output format '" + s + "' (json, csv, pretty)");
}

SweepKind sweep_kind_from_name(const std::string& s) {
  if (s == "convergence") return SweepKind::Convergence;
  if (s == "bound") return SweepKind::Bound;
  throw UsageError("unknown sweep kind '" + s + "' (convergence, bound)");
}

double config_number(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) throw UsageError("config: '" + key + "' must be a number");
  return v.get<double>();
}

int config_int(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer()) throw UsageError("config: '" + key + "' must be an integer");
  return v.get<int>();
}

std::string config_string(const nlohmann::json& v, const std::string& key) {
  if (!v.is_string()) throw UsageError("config: '" + key + "' must be a string");
  return v.get<std::string>();
}

bool config_bool(const nlohmann::json& v, const std::string& key) {
  if (!v.is_boolean()) throw UsageError("config: '" + key + "' must be true or false");
  return v.get<bool>();
}

sme::Vec3 config_vec3(const nlohmann::json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 3) throw UsageError("config: '" + key + "' must hold 3 numbers");
  return {config_number(v[0], key), config_number(v[1], key), config_number(v[2], key)};
}

void require_positive(const std::optional<double>& v, const std::string& what) {
  if (v && (!(*v > 0.0) || !std::isfinite(*v))) throw UsageError(what + " must be > 0");
}

void apply_config_key(RunConfig& c, const std::string& key, const nlohmann::json& v) {
  if (key == "units") {
    const auto name = config_string(v, key);
    if (name != "SI" && name != "si" && name != "natural") throw UsageError("config: units must be SI or natural");
    c.units = (name == "natural") ? UnitMode::Natural : UnitMode::SI;
    c.units_explicit = true;
  } else if (key == "format") {
    c.format = format_from_name(config_string(v, key));
  } else if (key == "input") {
    c.input_path = config_string(v, key);
  } else if (key == "a") {
    c.a = config_number(v, key);
  } else if (key == "L") {
    c.L = config_number(v, key);
  } else if (key == "area") {
    c.area = config_number(v, key);
  } else if (key == "disk_diameter") {
    c.disk_diameter = config_number(v, key);
  } else if (key == "delta_F") {
    c.delta_F = config_number(v, key);
  } else if (key == "omega_max") {
    c.omega_max = config_number(v, key);
  } else if (key == "k_samples") {
    c.k_samples = config_int(v, key);
  } else if (key == "preset") {
    c.preset = config_string(v, key);
  } else if (key == "variant") {
    c.variant = config_string(v, key);
  } else if (key == "sweep_kind") {
    c.sweep_kind = sweep_kind_from_name(config_string(v, key));
  } else if (key == "deltas") {
    if (!v.is_array()) throw UsageError("config: 'deltas' must be a list of numbers");
    c.deltas.clear();
    for (const auto& d : v) c.deltas.push_back(config_number(d, key));
  } else if (key == "order") {
    c.order = config_int(v, key);
  } else if (key == "n_max") {
    if (!v.is_number_integer()) throw UsageError("config: 'n_max' must be an integer");
    c.n_max = v.get<std::int64_t>();
  } else if (key == "a_min") {
    c.a_min = config_number(v, key);
  } else if (key == "a_max") {
    c.a_max = config_number(v, key);
  } else if (key == "points") {
    c.points = config_int(v, key);
  } else if (key == "tolerance") {
    c.tolerance = config_number(v, key);
  } else if (key == "E_sq") {
    c.E_sq = config_number(v, key);
  } else if (key == "B_sq") {
    c.B_sq = config_number(v, key);
  } else if (key == "E_direction") {
    c.E_direction = config_vec3(v, key);
  } else if (key == "B_direction") {
    c.B_direction = config_vec3(v, key);
  } else if (key == "isotropic") {
    c.isotropic = config_bool(v, key);
  } else if (key == "check_bianchi") {
    c.check_bianchi = config_bool(v, key);
  } else if (key == "check_double_trace") {
    c.check_double_trace = config_bool(v, key);
  }
}

void check_config(const RunConfig& c) {
  require_positive(c.a, "plate separation a");
  require_positive(c.area, "plate area");
  require_positive(c.disk_diameter, "disk diameter");
  require_positive(c.delta_F, "force accuracy delta_F");
  require_positive(c.omega_max, "omega_max");
  require_positive(c.a_min, "a_min");
  require_positive(c.a_max, "a_max");
  require_positive(c.tolerance, "tolerance");
  if (c.L && (!(*c.L > -1.0) || !std::isfinite(*c.L))) throw UsageError("LIV factor L must be > -1");
  if (c.area && c.disk_diameter) throw UsageError("give either --area or --disk-diameter, not both");
  if (c.k_samples && *c.k_samples < 1) throw UsageError("k_samples must be >= 1");
  if (c.points && *c.points < 1) throw UsageError("points must be >= 1");
  if (c.order && *c.order < 1) throw UsageError("extrapolation order must be >= 1");
  if (c.n_max && *c.n_max < 0) throw UsageError("n_max must be >= 0");
  for (double d : c.deltas) {
    if (!(d > 0.0) || !std::isfinite(d)) throw UsageError("deltas must be > 0");
  }

  const bool has_area = c.area || c.disk_diameter;
  switch (c.command) {
    case Command::Kappa:
      if (!c.input_path) throw UsageError("kappa: --input <k_F file> is required");
      break;
    case Command::Modes:
      if (!c.a) throw UsageError("modes: --a is required");
      if (!c.omega_max) throw UsageError("modes: --omega-max is required");
      break;
    case Command::Energy:
      if (!c.a) throw UsageError("energy: --a is required");
      break;
    case Command::Force:
      if (!c.a) throw UsageError("force: --a is required");
      if (!has_area) throw UsageError("force: --area or --disk-diameter is required");
      break;
    case Command::Bound:
      if (!c.preset) {
        if (!c.a) throw UsageError("bound: --a is required (or --preset)");
        if (!has_area) throw UsageError("bound: --area or --disk-diameter is required (or --preset)");
        if (!c.delta_F) throw UsageError("bound: --delta-f is required (or --preset)");
      }
      break;
    case Command::Sweep:
      if (c.sweep_kind == SweepKind::Bound && !c.preset && (!has_area || !c.delta_F)) {
        throw UsageError("sweep --kind bound: needs --preset or both --delta-f and --area/--disk-diameter");
      }
      break;
    case Command::Validate:
      break;
  }
}

// ---------------------------------------------------------------------------
// Output helpers

ojson config_json(const RunConfig& c) {
  ojson j;
  j["command"] = to_string(c.command);
  // Without --si/--natural a preset's own units apply; echo "preset" then.
  j["units"] = !c.units_explicit && c.preset ? "preset" : c.units == UnitMode::SI ? "SI" : "natural";
  j["format"] = to_string(c.format);
  if (c.config_path) j["config"] = *c.config_path;
  if (c.input_path) j["input"] = *c.input_path;
  if (c.a) j["a"] = *c.a;
  if (c.L) j["L"] = *c.L;
  if (c.area) j["area"] = *c.area;
  if (c.disk_diameter) j["disk_diameter"] = *c.disk_diameter;
  if (c.delta_F) j["delta_F"] = *c.delta_F;
  if (c.omega_max) j["omega_max"] = *c.omega_max;
  if (c.k_samples) j["k_samples"] = *c.k_samples;
  if (c.preset) j["preset"] = *c.preset;
  if (c.variant) j["variant"] = *c.variant;
  if (c.command == Command::Sweep) j["sweep_kind"] = to_string(c.sweep_kind);
  if (!c.deltas.empty()) j["deltas"] = c.deltas;
  if (c.order) j["order"] = *c.order;
  if (c.n_max) j["n_max"] = *c.n_max;
  if (c.a_min) j["a_min"] = *c.a_min;
  if (c.a_max) j["a_max"] = *c.a_max;
  if (c.points) j["points"] = *c.points;
  if (c.tolerance) j["tolerance"] = *c.tolerance;
  if (c.E_sq) j["E_sq"] = *c.E_sq;
  if (c.B_sq) j["B_sq"] = *c.B_sq;
  if (c.E_direction) j["E_direction"] = *c.E_direction;
  if (c.B_direction) j["B_direction"] = *c.B_direction;
  if (c.isotropic) j["isotropic"] = true;
  if (c.check_bianchi) j["check_bianchi"] = true;
  if (c.check_double_trace) j["check_double_trace"] = true;
  return j;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void emit_json(std::ostream& out, const ojson& j) { out << j.dump(2) << '\n'; }

UnitSystem units_of(const RunConfig& c) { return c.units == UnitMode::SI ? UnitSystem::si() : UnitSystem::natural(); }

observables::PlateGeometry geometry_of(const RunConfig& c) {
  observables::PlateGeometry g;
  g.separation_a = c.a.value_or(0.0);
  g.area_A = c.area;
  g.disk_diameter = c.disk_diameter;
  return g;
}

ojson matrix_json(const sme::Mat3& m) {
  ojson rows = ojson::array();
  for (const auto& r : m) rows.push_back(ojson::array({r[0], r[1], r[2]}));
  return rows;
}

// ---------------------------------------------------------------------------
// Subcommands

int run_kappa(const RunConfig& c, std::ostream& out) {
  const auto input = io::load_kf_file(*c.input_path);
  const auto report = sme::validate_kf(input.tensor, {c.check_bianchi, c.check_double_trace});
  const auto kappa = sme::kappa_from_kf(input.tensor);

  std::optional<sme::FieldStats> fields = input.fields;
  if (c.E_sq || c.B_sq || c.E_direction || c.B_direction || c.isotropic) {
    sme::FieldStats f = fields.value_or(sme::FieldStats{});
    if (c.E_sq) f.E_sq = *c.E_sq;
    if (c.B_sq) f.B_sq = *c.B_sq;
    if (c.E_direction) f.E_direction = c.E_direction;
    if (c.B_direction) f.B_direction = c.B_direction;
    // Explicit directions on the command line replace a file-level isotropic setting.
    if (c.E_direction || c.B_direction) f.isotropic = false;
    if (c.isotropic) f.isotropic = true;
    fields = f;
  }
  std::optional<double> L;
  if (fields) L = sme::liv_factor(kappa, *fields, input.medium);

  double cross_max = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      sme::Vec3 e{}, b{};
      e[i] = 1.0;
      b[j] = 1.0;
      cross_max = std::max(cross_max, std::abs(sme::cross_term_residual(kappa, e, b)));
    }

  const std::pair<const char*, const sme::Mat3*> mats[] = {{"kappa_DE", &kappa.kappa_DE},
                                                             {"kappa_HB", &kappa.kappa_HB},
                                                             {"kappa_DB", &kappa.kappa_DB},
                                                             {"kappa_HE", &kappa.kappa_HE}};

  switch (c.format) {
    case OutputFormat::Json: {
      ojson j;
      j["config"] = config_json(c);
      for (const auto& [name, m] : mats) j[name] = matrix_json(*m);
      ojson violations = ojson::array();
      for (const auto& v : report.violations) {
        violations.push_back({{"relation", sme::to_string(v.relation)}, {"indices", v.first}, {"partner", v.second},
                              {"residual", v.residual}});
      }
      j["validation"] = {{"ok", report.ok()}, {"violations", violations},
                         {"large_components", report.large_components}};
      j["medium"] = {{"epsilon", input.medium.epsilon}, {"mu", input.medium.mu}};
      if (input.kaf) j["kaf"] = input.kaf->components;
      j["cross_term_residual_max"] = cross_max;
      if (L) j["L"] = *L;
      j["units"] = "dimensionless";
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "matrix,row,column,value\n";
      for (const auto& [name, m] : mats)
        for (int r = 0; r < 3; ++r)
          for (int col = 0; col < 3; ++col)
            out << name << ',' << r + 1 << ',' << col + 1 << ',' << io::format_full((*m)[r][col]) << '\n';
      if (L) out << "L,0,0," << io::format_full(*L) << '\n';
      break;
    case OutputFormat::Pretty:
      for (const auto& [name, m] : mats) {
        out << name << ":\n";
        for (const auto& r : *m) out << "  " << short_num(r[0]) << "  " << short_num(r[1]) << "  " << short_num(r[2]) << '\n';
      }
      out << "validation: " << report.summary() << '\n';
      if (!report.large_components.empty()) {
        out << "warning: " << report.large_components.size() << " k_F components exceed 1e-2\n";
      }
      out << "max cross-term residual: " << short_num(cross_max) << '\n';
      if (L) out << "LIV factor L = " << short_num(*L) << '\n';
      break;
  }
  return kExitOk;
}

int run_modes(const RunConfig& c, std::ostream& out) {
  const auto list = modes::enumerate_modes(*c.a, *c.omega_max, c.k_samples.value_or(1));
  const auto L = c.L.value_or(0.0);
  switch (c.format) {
    case OutputFormat::Json: {
      ojson j;
      j["config"] = config_json(c);
      ojson rows = ojson::array();
      for (const auto& m : list) {
        rows.push_back({{"bc", modes::to_string(m.spec.bc)}, {"n", m.spec.n}, {"k_T", m.spec.k_T},
                        {"frequency", m.frequency}, {"shifted_frequency", modes::shifted_frequency(m.frequency, L)}});
      }
      j["modes"] = rows;
      j["units"] = "1/length";
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "bc,n,k_T,frequency,shifted_frequency\n";
      for (const auto& m : list) {
        out << modes::to_string(m.spec.bc) << ',' << m.spec.n << ',' << io::format_full(m.spec.k_T) << ','
            << io::format_full(m.frequency) << ',' << io::format_full(modes::shifted_frequency(m.frequency, L)) << '\n';
      }
      break;
    case OutputFormat::Pretty:
      out << list.size() << " modes with omega <= " << short_num(*c.omega_max) << " (1/length)\n";
      for (const auto& m : list) {
        out << "  " << modes::to_string(m.spec.bc) << " n=" << m.spec.n << " k_T=" << short_num(m.spec.k_T)
            << " omega=" << short_num(m.frequency) << '\n';
      }
      break;
  }
  return kExitOk;
}

int run_observables(const RunConfig& c, std::ostream& out) {
  const auto u = units_of(c);
  const auto g = geometry_of(c);
  const auto r = observables::evaluate(g, c.L.value_or(0.0), u);

  switch (c.format) {
    case OutputFormat::Json: {
      ojson j;
      j["config"] = config_json(c);
      j["a"] = r.a;
      j["A"] = r.area ? ojson(*r.area) : ojson(nullptr);
      j["L"] = r.L;
      j["pressure"] = r.pressure;
      j["force"] = r.force ? ojson(*r.force) : ojson(nullptr);
      j["energy_per_area"] = r.energy_per_area;
      j["units"] = r.units;
      j["warnings"] = r.warnings;
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "a,A,L,pressure,force,energy_per_area,units,warnings\n";
      out << io::format_full(r.a) << ',' << (r.area ? io::format_full(*r.area) : "") << ',' << io::format_full(r.L)
          << ',' << io::format_full(r.pressure) << ',' << (r.force ? io::format_full(*r.force) : "") << ','
          << io::format_full(r.energy_per_area) << ',' << r.units << ',' << csv_field(join(r.warnings, "; "))
          << '\n';
      break;
    case OutputFormat::Pretty: {
      const auto label = [](double v) { return v < 0.0 ? "attractive" : "repulsive"; };
      out << "separation a     = " << short_num(r.a) << ' ' << u.length_unit() << '\n';
      if (r.area) out << "plate area A     = " << short_num(*r.area) << ' ' << u.area_unit() << '\n';
      out << "LIV factor L     = " << short_num(r.L) << '\n';
      out << "pressure         = " << short_num(r.pressure) << ' ' << u.pressure_unit() << " ("
          << label(r.pressure) << ")\n";
      if (r.force) {
        out << "force            = " << short_num(*r.force) << ' ' << u.force_unit() << " (magnitude "
            << short_num(std::abs(*r.force)) << ' ' << u.force_unit() << ", " << label(*r.force) << ")\n";
      }
      out << "energy per area  = " << short_num(r.energy_per_area) << ' ' << u.energy_per_area_unit() << '\n';
      for (const auto& w : r.warnings) out << "warning: " << w << '\n';
      break;
    }
  }
  return kExitOk;
}

// Measurement and published bound for bound/sweep: preset first, flags override.
struct BoundInputs {
  bounds::MeasurementRecord record;
  std::optional<double> published_bound;
  UnitSystem units = UnitSystem::natural();
};

BoundInputs bound_inputs(const RunConfig& c) {
  BoundInputs in;
  in.units = units_of(c);
  if (c.preset) {
    const auto preset = io::load_preset(*c.preset);
    in.record = preset.measurement(c.variant.value_or(""));
    in.published_bound = preset.published_bound;
    if (!c.units_explicit) in.units = UnitSystem::from_name(preset.units);
  }
  if (c.a) in.record.geometry.separation_a = *c.a;
  if (c.area || c.disk_diameter) {
    in.record.geometry.area_A = c.area;
    in.record.geometry.disk_diameter = c.disk_diameter;
  }
  if (c.delta_F) in.record.delta_F = *c.delta_F;
  return in;
}

ojson inputs_json(const bounds::MeasurementRecord& m) {
  ojson j;
  j["delta_F"] = m.delta_F;
  j["separation_a"] = m.geometry.separation_a;
  j["area_A"] = m.geometry.area_A ? ojson(*m.geometry.area_A) : ojson(nullptr);
  j["disk_diameter"] = m.geometry.disk_diameter ? ojson(*m.geometry.disk_diameter) : ojson(nullptr);
  j["area"] = m.geometry.area();
  j["label"] = m.geometry.label;
  j["source_label"] = m.source_label;
  j["accuracy_provenance"] = m.accuracy_provenance;
  return j;
}

int run_bound(const RunConfig& c, std::ostream& out) {
  const auto in = bound_inputs(c);
  const auto r = bounds::liv_upper_bound(in.record, in.units);
  const auto warnings = in.record.geometry.warnings(in.units);
  std::optional<std::string> note;
  if (in.published_bound) note = bounds::discrepancy_note(r, *in.published_bound);

  switch (c.format) {
    case OutputFormat::Json: {
      ojson j;
      j["config"] = config_json(c);
      j["L_max"] = r.L_max;
      j["reference_force"] = r.reference_force;
      j["units"] = in.units.name();
      j["inputs"] = inputs_json(r.inputs_echo);
      if (in.published_bound) {
        j["published_bound"] = *in.published_bound;
        j["paper_discrepancy"] = *note;
      }
      j["warnings"] = warnings;
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "a,A,delta_F,reference_force,L_max,units,published_bound\n";
      out << io::format_full(r.inputs_echo.geometry.separation_a) << ','
          << io::format_full(r.inputs_echo.geometry.area()) << ',' << io::format_full(r.inputs_echo.delta_F) << ','
          << io::format_full(r.reference_force) << ',' << io::format_full(r.L_max) << ',' << in.units.name() << ','
          << (in.published_bound ? io::format_full(*in.published_bound) : "") << '\n';
      break;
    case OutputFormat::Pretty:
      if (!r.inputs_echo.source_label.empty()) out << "inputs           : " << r.inputs_echo.source_label << '\n';
      out << "separation a     = " << short_num(r.inputs_echo.geometry.separation_a) << ' '
          << in.units.length_unit() << '\n';
      out << "plate area A     = " << short_num(r.inputs_echo.geometry.area()) << ' ' << in.units.area_unit() << '\n';
      out << "force accuracy   = " << short_num(r.inputs_echo.delta_F) << ' ' << in.units.force_unit() << '\n';
      out << "|F(L=0)|         = " << short_num(r.reference_force) << ' ' << in.units.force_unit()
          << " (attractive)\n";
      out << "L_max            = " << short_num(r.L_max) << '\n';
      if (note) out << "note: " << *note << '\n';
      for (const auto& w : warnings) out << "warning: " << w << '\n';
      break;
  }
  return kExitOk;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g;
  for (int i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    g.push_back(lo * std::pow(hi / lo, t));
  }
  return g;
}

int run_sweep(const RunConfig& c, std::ostream& out) {
  if (c.sweep_kind == SweepKind::Convergence) {
    const double a = c.a.value_or(1.0);
    auto sched = regularization::RegulatorSchedule::for_separation(a);
    if (!c.deltas.empty()) sched.deltas = c.deltas;
    if (c.order) sched.extrapolation_order = *c.order;
    if (c.n_max) sched.n_max = *c.n_max;
    const auto rows = regularization::convergence_table(a, sched);

    if (c.format == OutputFormat::Json) {
      ojson j;
      j["config"] = config_json(c);
      ojson arr = ojson::array();
      for (const auto& r : rows) {
        arr.push_back({{"a", r.a}, {"delta", r.delta}, {"raw_sum", r.raw_sum}, {"continuum", r.continuum},
                       {"subtracted", r.subtracted}, {"extrapolated", r.extrapolated},
                       {"zeta_reference", r.zeta_reference}});
      }
      j["rows"] = arr;
      j["units"] = "natural (energy per area in 1/length^3)";
      emit_json(out, j);
    } else {
      out << "a,delta,raw_sum,continuum,subtracted,extrapolated,zeta_reference\n";
      for (const auto& r : rows) {
        out << io::format_full(r.a) << ',' << io::format_full(r.delta) << ',' << io::format_full(r.raw_sum) << ','
            << io::format_full(r.continuum) << ',' << io::format_full(r.subtracted) << ','
            << io::format_full(r.extrapolated) << ',' << io::format_full(r.zeta_reference) << '\n';
      }
    }
    return kExitOk;
  }

  const auto in = bound_inputs(c);
  const bool si = in.units.mode() == UnitMode::SI;
  const auto grid =
      log_grid(c.a_min.value_or(si ? 1e-8 : 0.1), c.a_max.value_or(si ? 1e-6 : 10.0), c.points.value_or(9));
  const auto rows = bounds::bound_sweep(in.record, grid, in.units);

  if (c.format == OutputFormat::Json) {
    ojson j;
    j["config"] = config_json(c);
    ojson arr = ojson::array();
    for (const auto& r : rows) {
      arr.push_back({{"a", r.inputs_echo.geometry.separation_a}, {"F", -r.reference_force}, {"L_max", r.L_max}});
    }
    j["rows"] = arr;
    j["units"] = in.units.name();
    emit_json(out, j);
  } else {
    out << "a,F,L_max\n";
    for (const auto& r : rows) {
      out << io::format_full(r.inputs_echo.geometry.separation_a) << ',' << io::format_full(-r.reference_force)
          << ',' << io::format_full(r.L_max) << '\n';
    }
  }
  return kExitOk;
}

int run_validate(const RunConfig& c, std::ostream& out) {
  const auto rows = regularization::oracle_agreement(c.a_min.value_or(0.1), c.a_max.value_or(10.0),
                                                     c.points.value_or(10), c.tolerance.value_or(1e-3));
  const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });

  switch (c.format) {
    case OutputFormat::Json: {
      ojson j;
      j["config"] = config_json(c);
      ojson arr = ojson::array();
      for (const auto& r : rows) {
        arr.push_back({{"a", r.a}, {"zeta", r.zeta}, {"oracle", r.oracle}, {"oracle_error", r.oracle_error},
                       {"relative_deviation", r.relative_deviation}, {"pass", r.pass}});
      }
      j["rows"] = arr;
      j["pass"] = all_pass;
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "a,zeta,oracle,oracle_error,relative_deviation,pass\n";
      for (const auto& r : rows) {
        out << io::format_full(r.a) << ',' << io::format_full(r.zeta) << ',' << io::format_full(r.oracle) << ','
            << io::format_full(r.oracle_error) << ',' << io::format_full(r.relative_deviation) << ','
            << (r.pass ? "true" : "false") << '\n';
      }
      break;
    case OutputFormat::Pretty:
      for (const auto& r : rows) {
        out << (r.pass ? "PASS" : "FAIL") << "  a=" << short_num(r.a) << "  zeta=" << short_num(r.zeta)
            << "  oracle=" << short_num(r.oracle) << "  rel.dev=" << short_num(r.relative_deviation) << '\n';
      }
      out << (all_pass ? "oracle agrees with zeta regularization\n" : "oracle DISAGREES with zeta regularization\n");
      break;
  }
  return all_pass ? kExitOk : kExitDomain;
}

}  // namespace

RunConfig parse_invocation(const std::vector<std::string>& args) {
  CLI::App app{"Casimir energy, pressure and force between parallel plates with a Lorentz-violation factor",
               "casimir_liv"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig cfg;
  std::set<std::string> given;
  std::string format_name;
  std::string config_path;
  bool si = false;
  bool natural = false;

  auto* format_opt = app.add_option("--format", format_name, "Output format")
                         ->check(CLI::IsMember({"json", "csv", "pretty"}));
  auto* si_opt = app.add_flag("--si", si, "SI units (metres, newtons)");
  auto* natural_opt = app.add_flag("--natural", natural, "Natural units, hbar = c = 1 (default)");
  si_opt->excludes(natural_opt);
  app.add_option("--config", config_path, "JSON run configuration; command-line flags take precedence");

  // Registers an option and remembers its config key when given.
  std::vector<std::pair<CLI::Option*, std::string>> tracked;
  auto track = [&](CLI::Option* o, const std::string& key) {
    tracked.emplace_back(o, key);
    return o;
  };
  auto add_a = [&](CLI::App* sub) {
    track(sub->add_option("--a", cfg.a, "Plate separation")->check(positive("plate separation a")), "a");
  };
  auto add_L = [&](CLI::App* sub) { track(sub->add_option("--L", cfg.L, "LIV factor L (> -1)"), "L"); };
  auto add_area = [&](CLI::App* sub) {
    auto* area = track(sub->add_option("--area", cfg.area, "Plate area")->check(positive("plate area")), "area");
    auto* disk = track(sub->add_option("--disk-diameter", cfg.disk_diameter, "Disk plate diameter")
                           ->check(positive("disk diameter")),
                       "disk_diameter");
    area->excludes(disk);
  };
  auto add_preset = [&](CLI::App* sub) {
    track(sub->add_option("--preset", cfg.preset, "Measurement preset name (e.g. paper_inputs)"), "preset");
    track(sub->add_option("--variant", cfg.variant, "Preset variant (force accuracy choice)"), "variant");
    track(sub->add_option("--delta-f", cfg.delta_F, "Force accuracy")->check(positive("force accuracy delta_F")),
          "delta_F");
  };

  std::vector<double> e_dir, b_dir;
  auto* kappa = app.add_subcommand("kappa", "kappa matrices (and optionally L) from a k_F file");
  track(kappa->add_option("--input", cfg.input_path, "k_F file (JSON)"), "input");
  track(kappa->add_option("--E-sq", cfg.E_sq, "Mean-square electric field"), "E_sq");
  track(kappa->add_option("--B-sq", cfg.B_sq, "Mean-square magnetic field"), "B_sq");
  track(kappa->add_option("--E-dir", e_dir, "Electric field direction x,y,z")->delimiter(',')->expected(3),
        "E_direction");
  track(kappa->add_option("--B-dir", b_dir, "Magnetic field direction x,y,z")->delimiter(',')->expected(3),
        "B_direction");
  track(kappa->add_flag("--isotropic", cfg.isotropic, "Rotationally averaged L"), "isotropic");
  track(kappa->add_flag("--bianchi", cfg.check_bianchi, "Also check the cyclic identity"), "check_bianchi");
  track(kappa->add_flag("--double-trace", cfg.check_double_trace, "Also check double tracelessness"),
        "check_double_trace");

  auto* modes_cmd = app.add_subcommand("modes", "Dirichlet/Neumann mode frequencies below omega_max");
  add_a(modes_cmd);
  add_L(modes_cmd);
  track(modes_cmd->add_option("--omega-max", cfg.omega_max, "Frequency ceiling")->check(positive("omega_max")),
        "omega_max");
  track(modes_cmd->add_option("--k-samples", cfg.k_samples, "Transverse samples per branch"), "k_samples");

  auto* energy = app.add_subcommand("energy", "Casimir energy per area and pressure");
  add_a(energy);
  add_L(energy);
  add_area(energy);

  auto* force = app.add_subcommand("force", "Casimir force on plates of given area");
  add_a(force);
  add_L(force);
  add_area(force);

  auto* bound = app.add_subcommand("bound", "Upper bound on L from a force accuracy");
  add_a(bound);
  add_area(bound);
  add_preset(bound);

  std::string sweep_kind = "convergence";
  auto* sweep = app.add_subcommand("sweep", "Cutoff convergence table or bound-vs-separation table");
  track(sweep->add_option("--kind", sweep_kind, "convergence or bound")
            ->check(CLI::IsMember({"convergence", "bound"})),
        "sweep_kind");
  add_a(sweep);
  add_area(sweep);
  add_preset(sweep);
  track(sweep->add_option("--deltas", cfg.deltas, "Cutoff schedule, decreasing")->delimiter(','), "deltas");
  track(sweep->add_option("--order", cfg.order, "Richardson order"), "order");
  track(sweep->add_option("--n-max", cfg.n_max, "Mode-sum truncation (0: automatic)"), "n_max");
  track(sweep->add_option("--a-min", cfg.a_min, "Smallest separation")->check(positive("a_min")), "a_min");
  track(sweep->add_option("--a-max", cfg.a_max, "Largest separation")->check(positive("a_max")), "a_max");
  track(sweep->add_option("--points", cfg.points, "Grid points"), "points");

  auto* validate = app.add_subcommand("validate", "Cutoff oracle vs zeta regularization over a separation grid");
  track(validate->add_option("--a-min", cfg.a_min, "Smallest separation")->check(positive("a_min")), "a_min");
  track(validate->add_option("--a-max", cfg.a_max, "Largest separation")->check(positive("a_max")), "a_max");
  track(validate->add_option("--points", cfg.points, "Grid points"), "points");
  track(validate->add_option("--tolerance", cfg.tolerance, "Relative tolerance")->check(positive("tolerance")),
        "tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const std::map<CLI::App*, Command> commands = {{kappa, Command::Kappa},   {modes_cmd, Command::Modes},
                                                 {energy, Command::Energy}, {force, Command::Force},
                                                 {bound, Command::Bound},   {sweep, Command::Sweep},
                                                 {validate, Command::Validate}};
  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = commands.at(chosen);

  for (const auto& [opt, key] : tracked) {
    if (opt->count() > 0) given.insert(key);
  }
  if (format_opt->count() > 0) {
    cfg.format = format_from_name(format_name);
    given.insert("format");
  }
  if (si || natural) {
    cfg.units = si ? UnitMode::SI : UnitMode::Natural;
    cfg.units_explicit = true;
    given.insert("units");
  }
  if (given.contains("sweep_kind")) cfg.sweep_kind = sweep_kind_from_name(sweep_kind);
  if (e_dir.size() == 3) cfg.E_direction = sme::Vec3{e_dir[0], e_dir[1], e_dir[2]};
  if (b_dir.size() == 3) cfg.B_direction = sme::Vec3{b_dir[0], b_dir[1], b_dir[2]};

  if (!config_path.empty()) {
    cfg.config_path = config_path;
    nlohmann::json root;
    try {
      root = nlohmann::json::parse(io::read_file(config_path), nullptr, true, true);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError("config '" + config_path + "': " + e.what());
    }
    if (!root.is_object()) throw UsageError("config '" + config_path + "': expected an object");
    for (const auto& [key, value] : root.items()) {
      if (!config_keys().contains(key)) throw UsageError("config '" + config_path + "': unknown key '" + key + "'");
      if (given.contains(key)) continue;
      // The config may name an area when the flag named a diameter, or vice versa.
      if ((key == "area" && given.contains("disk_diameter")) || (key == "disk_diameter" && given.contains("area"))) {
        continue;
      }
      apply_config_key(cfg, key, value);
    }
  }

  check_config(cfg);
  return cfg;
}

int run(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::Kappa: return run_kappa(config, out);
    case Command::Modes: return run_modes(config, out);
    case Command::Energy:
    case Command::Force: return run_observables(config, out);
    case Command::Bound: return run_bound(config, out);
    case Command::Sweep: return run_sweep(config, out);
    case Command::Validate: return run_validate(config, out);
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_invocation(args);
    return run(config, out);
  } catch (const HelpRequested& h) {
    out << h.usage();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << " (see --help)\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace casimir_liv::cli
