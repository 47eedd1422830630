#pragma once

#include <optional>
#include <string>
#include <vector>

namespace casimir_liv::observables {

enum class UnitMode { Natural, SI };

/// hbar and c. Natural mode sets both to 1 and lengths are in an arbitrary
/// unit; SI mode uses the CODATA 2018 values with lengths in metres.
class UnitSystem {
 public:
  static constexpr double kHbarSI = 1.054571817e-34;  // J s
  static constexpr double kSpeedOfLightSI = 2.99792458e8;  // m / s

  static UnitSystem natural() { return UnitSystem(UnitMode::Natural, 1.0, 1.0); }
  static UnitSystem si() { return UnitSystem(UnitMode::SI, kHbarSI, kSpeedOfLightSI); }
  static UnitSystem from_name(const std::string& name);

  UnitMode mode() const { return mode_; }
  double hbar() const { return hbar_; }
  double c() const { return c_; }
  double hbar_c() const { return hbar_ * c_; }
  std::string name() const { return mode_ == UnitMode::SI ? "SI" : "natural"; }

  std::string length_unit() const;
  std::string area_unit() const;
  std::string pressure_unit() const;
  std::string force_unit() const;
  std::string energy_per_area_unit() const;

 private:
  UnitSystem(UnitMode mode, double hbar, double c) : mode_(mode), hbar_(hbar), c_(c) {}
  UnitMode mode_;
  double hbar_;
  double c_;
};

/// Two parallel plates. Give either area_A or disk_diameter, not both.
struct PlateGeometry {
  double separation_a = 0.0;
  std::optional<double> area_A;
  std::optional<double> disk_diameter;
  std::string label;

  /// Resolved plate area; pi (d/2)^2 for a disk. Throws DomainError if both
  /// or neither area inputs are set, or a value is not positive.
  double area() const;
  void validate() const;
  /// Advisory messages (SI mode only: separations of 1 um and above).
  std::vector<std::string> warnings(const UnitSystem& u) const;
};

/// -(1 + L) pi^2 hbar c / (240 a^4). Attractive, so always negative.
double casimir_pressure(double a, double L, const UnitSystem& u);

/// casimir_pressure(a, L) * A.
double casimir_force(const PlateGeometry& g, double L, const UnitSystem& u);

/// -(1 + L) pi^2 hbar c / (720 a^3).
double energy_per_area_physical(double a, double L, const UnitSystem& u);

struct ObservableRecord {
  double a = 0.0;
  std::optional<double> area;
  double L = 0.0;
  double pressure = 0.0;
  std::optional<double> force;
  double energy_per_area = 0.0;
  std::string units;
  std::vector<std::string> warnings;
};

/// Pressure and energy per area at separation a; force too when the
/// geometry carries an area.
ObservableRecord evaluate(const PlateGeometry& g, double L, const UnitSystem& u);

}  // namespace casimir_liv::observables
