#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casimir_liv/observables.hpp"

namespace casimir_liv::bounds {

struct MeasurementRecord {
  double delta_F = 0.0;  // force accuracy, N in SI
  observables::PlateGeometry geometry;
  std::string source_label;
  std::string accuracy_provenance;

  void validate() const;
};

struct BoundResult {
  double L_max = 0.0;
  double reference_force = 0.0;  // |F(a, A, L = 0)|
  MeasurementRecord inputs_echo;
};

/// L_max = delta_F / |F(a, A, L = 0)|: the largest LIV factor whose force
/// shift (1 + L) F - F stays within the measurement accuracy.
BoundResult liv_upper_bound(const MeasurementRecord& m, const observables::UnitSystem& u);

/// liv_upper_bound at every separation in a_grid (geometry area held fixed),
/// sorted by a. Throws DomainError on an empty grid or a non-positive point.
std::vector<BoundResult> bound_sweep(const MeasurementRecord& m, const std::vector<double>& a_grid,
                                     const observables::UnitSystem& u);

/// Human-readable comparison of a computed bound with a published value,
/// stating the ratio and the order-of-magnitude gap.
std::string discrepancy_note(const BoundResult& r, double published_bound);

}  // namespace casimir_liv::bounds
