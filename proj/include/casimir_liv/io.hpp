#pragma once

#include <map>
#include <optional>
#include <string>

#include "casimir_liv/bounds.hpp"
#include "casimir_liv/sme_tensors.hpp"

namespace casimir_liv::io {

/// Contents of a k_F input file. JSON, `//` comments allowed:
///
///   {
///     "kf": [ {"indices": [0,1,0,1], "value": 1.0e-17}, ... ],
///     "kaf": [0, 0, 0, 0],                      // optional
///     "medium": {"epsilon": 1.0, "mu": 1.0},    // optional
///     "fields": {"E_sq": 1, "B_sq": 1, "isotropic": true}  // optional
///   }
///
/// One `kf` entry per symmetry orbit; partners are filled in. `fields` also
/// accepts "E_direction" / "B_direction" 3-vectors.
struct KFInput {
  sme::KFTensor tensor;
  std::optional<sme::KAFVector> kaf;
  sme::Medium medium;
  std::optional<sme::FieldStats> fields;
};

/// Throws IoError if the file cannot be read, InputError on malformed
/// content or unknown keys, DomainError on conflicting or non-finite entries.
KFInput load_kf_file(const std::string& path);
KFInput parse_kf_text(const std::string& text);

struct PresetVariant {
  double delta_F = 0.0;
  std::string provenance;
};

/// A measurement preset: geometry plus one or more force-accuracy variants.
struct Preset {
  std::string name;
  std::string units = "SI";
  observables::PlateGeometry geometry;
  std::map<std::string, PresetVariant> variants;
  std::string default_variant;
  std::optional<double> published_bound;

  /// Measurement record for a variant; empty name selects default_variant.
  bounds::MeasurementRecord measurement(const std::string& variant = {}) const;
};

Preset parse_preset_text(const std::string& text, const std::string& name);

/// Directory holding preset files: $CASIMIR_LIV_PRESET_DIR if set, else the
/// compiled-in repository presets/ directory.
std::string preset_directory();

/// Loads <preset_directory()>/<name>.json.
Preset load_preset(const std::string& name);

std::string read_file(const std::string& path);

/// %.17g
std::string format_full(double v);

}  // namespace casimir_liv::io
