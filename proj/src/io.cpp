#include "casimir_liv/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "casimir_liv/errors.hpp"

#ifndef CASIMIR_LIV_PRESET_DIR_DEFAULT
#define CASIMIR_LIV_PRESET_DIR_DEFAULT "presets"
#endif

namespace casimir_liv::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text, nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw InputError(where + ": unknown key '" + key + "'");
  }
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + ": expected a number");
  return v.get<double>();
}

std::string text(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": expected a string");
  return v.get<std::string>();
}

sme::Vec3 vec3(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3) throw InputError(where + ": expected 3 numbers");
  return {number(v[0], where), number(v[1], where), number(v[2], where)};
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

KFInput parse_kf_text(const std::string& content) {
  const json root = parse_json(content, "k_F file");
  reject_unknown_keys(root, {"kf", "kaf", "medium", "fields"}, "k_F file");

  KFInput out;
  std::vector<sme::KFEntry> entries;
  if (root.contains("kf")) {
    const auto& list = root.at("kf");
    if (!list.is_array()) throw InputError("k_F file: 'kf' must be a list");
    for (const auto& item : list) {
      reject_unknown_keys(item, {"indices", "value"}, "k_F entry");
      if (!item.contains("indices") || !item.contains("value")) {
        throw InputError("k_F entry: needs 'indices' and 'value'");
      }
      const auto& idx = item.at("indices");
      if (!idx.is_array() || idx.size() != 4) throw InputError("k_F entry: 'indices' must hold 4 integers");
      sme::KFEntry e;
      for (std::size_t i = 0; i < 4; ++i) {
        if (!idx[i].is_number_integer()) throw InputError("k_F entry: 'indices' must hold 4 integers");
        e.indices[i] = idx[i].get<int>();
      }
      e.value = number(item.at("value"), "k_F entry value");
      entries.push_back(e);
    }
  }
  out.tensor = sme::KFTensor::from_representatives(entries);

  if (root.contains("kaf")) {
    const auto& v = root.at("kaf");
    if (!v.is_array() || v.size() != 4) throw InputError("k_F file: 'kaf' must hold 4 numbers");
    sme::KAFVector kaf;
    for (std::size_t i = 0; i < 4; ++i) kaf.components[i] = number(v[i], "kaf");
    sme::validate_kaf(kaf);
    out.kaf = kaf;
  }

  if (root.contains("medium")) {
    const auto& m = root.at("medium");
    reject_unknown_keys(m, {"epsilon", "mu"}, "medium");
    if (m.contains("epsilon")) out.medium.epsilon = number(m.at("epsilon"), "medium.epsilon");
    if (m.contains("mu")) out.medium.mu = number(m.at("mu"), "medium.mu");
    if (!(out.medium.epsilon > 0.0) || !(out.medium.mu > 0.0)) {
      throw DomainError("medium: epsilon and mu must be > 0");
    }
  }

  if (root.contains("fields")) {
    const auto& f = root.at("fields");
    reject_unknown_keys(f, {"E_sq", "B_sq", "E_direction", "B_direction", "isotropic"}, "fields");
    sme::FieldStats stats;
    if (f.contains("E_sq")) stats.E_sq = number(f.at("E_sq"), "fields.E_sq");
    if (f.contains("B_sq")) stats.B_sq = number(f.at("B_sq"), "fields.B_sq");
    if (f.contains("E_direction")) stats.E_direction = vec3(f.at("E_direction"), "fields.E_direction");
    if (f.contains("B_direction")) stats.B_direction = vec3(f.at("B_direction"), "fields.B_direction");
    if (f.contains("isotropic")) {
      if (!f.at("isotropic").is_boolean()) throw InputError("fields.isotropic: expected true or false");
      stats.isotropic = f.at("isotropic").get<bool>();
    }
    out.fields = stats;
  }
  return out;
}

KFInput load_kf_file(const std::string& path) { return parse_kf_text(read_file(path)); }

Preset parse_preset_text(const std::string& content, const std::string& name) {
  const json root = parse_json(content, "preset '" + name + "'");
  const std::string where = "preset '" + name + "'";
  reject_unknown_keys(root, {"units", "geometry", "variants", "default_variant", "published_bound"}, where);

  Preset p;
  p.name = name;
  if (root.contains("units")) p.units = text(root.at("units"), where + " units");

  if (!root.contains("geometry")) throw InputError(where + ": missing 'geometry'");
  const auto& g = root.at("geometry");
  reject_unknown_keys(g, {"separation_a", "area_A", "disk_diameter", "label"}, where + " geometry");
  if (!g.contains("separation_a")) throw InputError(where + ": geometry needs 'separation_a'");
  p.geometry.separation_a = number(g.at("separation_a"), "separation_a");
  if (g.contains("area_A")) p.geometry.area_A = number(g.at("area_A"), "area_A");
  if (g.contains("disk_diameter")) p.geometry.disk_diameter = number(g.at("disk_diameter"), "disk_diameter");
  if (g.contains("label")) p.geometry.label = text(g.at("label"), "label");

  if (!root.contains("variants") || !root.at("variants").is_object() || root.at("variants").empty()) {
    throw InputError(where + ": needs a non-empty 'variants' object");
  }
  for (const auto& [key, v] : root.at("variants").items()) {
    reject_unknown_keys(v, {"delta_F", "provenance"}, where + " variant '" + key + "'");
    if (!v.contains("delta_F")) throw InputError(where + " variant '" + key + "': missing 'delta_F'");
    PresetVariant pv;
    pv.delta_F = number(v.at("delta_F"), "delta_F");
    if (v.contains("provenance")) pv.provenance = text(v.at("provenance"), "provenance");
    p.variants.emplace(key, pv);
  }
  p.default_variant = root.contains("default_variant") ? text(root.at("default_variant"), "default_variant")
                                                      : p.variants.begin()->first;
  if (!p.variants.contains(p.default_variant)) {
    throw InputError(where + ": default_variant '" + p.default_variant + "' is not a listed variant");
  }
  if (root.contains("published_bound")) p.published_bound = number(root.at("published_bound"), "published_bound");
  return p;
}

bounds::MeasurementRecord Preset::measurement(const std::string& variant) const {
  const std::string key = variant.empty() ? default_variant : variant;
  const auto it = variants.find(key);
  if (it == variants.end()) throw InputError("preset '" + name + "' has no variant '" + key + "'");
  bounds::MeasurementRecord m;
  m.delta_F = it->second.delta_F;
  m.geometry = geometry;
  m.source_label = name + ":" + key;
  m.accuracy_provenance = it->second.provenance;
  return m;
}

std::string preset_directory() {
  if (const char* env = std::getenv("CASIMIR_LIV_PRESET_DIR"); env != nullptr && *env != '\0') return env;
  return CASIMIR_LIV_PRESET_DIR_DEFAULT;
}

Preset load_preset(const std::string& name) {
  return parse_preset_text(read_file(preset_directory() + "/" + name + ".json"), name);
}

std::string format_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace casimir_liv::io
