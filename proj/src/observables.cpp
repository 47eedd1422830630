#include "casimir_liv/observables.hpp"

#include <cmath>
#include <numbers>

#include "casimir_liv/errors.hpp"
#include "casimir_liv/regularization.hpp"

namespace casimir_liv::observables {

namespace {

void require_inputs(double a, double L, const char* where) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError(std::string(where) + ": plate separation a must be > 0");
  if (!(L > -1.0) || !std::isfinite(L)) throw DomainError(std::string(where) + ": LIV factor L must be > -1");
}

// L = 0 pressure: -d/da of an a^-3 energy is 3/a times it, i.e. three times
// the energy per volume.
double lorentz_invariant_pressure(double a, const UnitSystem& u) {
  return u.hbar_c() * 3.0 * regularization::zeta_energy_per_area(a).energy_per_volume;
}

}  // namespace

UnitSystem UnitSystem::from_name(const std::string& name) {
  if (name == "natural") return natural();
  if (name == "SI" || name == "si") return si();
  throw DomainError("unknown unit system '" + name + "' (expected natural or SI)");
}

std::string UnitSystem::length_unit() const { return mode_ == UnitMode::SI ? "m" : "length"; }
std::string UnitSystem::area_unit() const { return mode_ == UnitMode::SI ? "m^2" : "length^2"; }
std::string UnitSystem::pressure_unit() const { return mode_ == UnitMode::SI ? "Pa" : "1/length^4"; }
std::string UnitSystem::force_unit() const { return mode_ == UnitMode::SI ? "N" : "1/length^2"; }
std::string UnitSystem::energy_per_area_unit() const { return mode_ == UnitMode::SI ? "J/m^2" : "1/length^3"; }

double PlateGeometry::area() const {
  if (area_A && disk_diameter) throw DomainError("plate geometry: give either area or disk diameter, not both");
  if (area_A) {
    if (!(*area_A > 0.0) || !std::isfinite(*area_A)) throw DomainError("plate geometry: area A must be > 0");
    return *area_A;
  }
  if (disk_diameter) {
    if (!(*disk_diameter > 0.0) || !std::isfinite(*disk_diameter)) {
      throw DomainError("plate geometry: disk diameter must be > 0");
    }
    const double r = 0.5 * *disk_diameter;
    return std::numbers::pi * r * r;
  }
  throw DomainError("plate geometry: plate area or disk diameter required");
}

void PlateGeometry::validate() const {
  if (!(separation_a > 0.0) || !std::isfinite(separation_a)) {
    throw DomainError("plate geometry: plate separation a must be > 0");
  }
  (void)area();
}

std::vector<std::string> PlateGeometry::warnings(const UnitSystem& u) const {
  std::vector<std::string> out;
  if (u.mode() == UnitMode::SI && separation_a >= 1e-6) {
    out.emplace_back("separation >= 1 um: the parallel-plate Casimir force is measurable only below about 1 um");
  }
  return out;
}

double casimir_pressure(double a, double L, const UnitSystem& u) {
  require_inputs(a, L, "casimir_pressure");
  return (1.0 + L) * lorentz_invariant_pressure(a, u);
}

double casimir_force(const PlateGeometry& g, double L, const UnitSystem& u) {
  g.validate();
  return casimir_pressure(g.separation_a, L, u) * g.area();
}

double energy_per_area_physical(double a, double L, const UnitSystem& u) {
  require_inputs(a, L, "energy_per_area_physical");
  return (1.0 + L) * (u.hbar_c() * regularization::zeta_energy_per_area(a).energy_per_area);
}

ObservableRecord evaluate(const PlateGeometry& g, double L, const UnitSystem& u) {
  ObservableRecord r;
  r.a = g.separation_a;
  r.L = L;
  r.pressure = casimir_pressure(g.separation_a, L, u);
  r.energy_per_area = energy_per_area_physical(g.separation_a, L, u);
  if (g.area_A || g.disk_diameter) {
    r.area = g.area();
    r.force = casimir_force(g, L, u);
  }
  r.units = u.name();
  r.warnings = g.warnings(u);
  return r;
}

}  // namespace casimir_liv::observables
