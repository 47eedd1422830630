#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir_liv/observables.hpp"
#include "casimir_liv/sme_tensors.hpp"

namespace casimir_liv::cli {

enum class Command { Kappa, Modes, Energy, Force, Bound, Sweep, Validate };
enum class OutputFormat { Json, Csv, Pretty };
enum class SweepKind { Convergence, Bound };

std::string to_string(Command c);
std::string to_string(OutputFormat f);
std::string to_string(SweepKind k);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitDomain = 4;

/// Effective settings of one invocation: flags layered over an optional JSON
/// config file (flags win). Unset optionals fall back to per-command defaults
/// inside run().
struct RunConfig {
  Command command = Command::Force;
  std::optional<std::string> input_path;
  std::optional<std::string> config_path;
  observables::UnitMode units = observables::UnitMode::Natural;
  bool units_explicit = false;
  OutputFormat format = OutputFormat::Pretty;

  std::optional<double> a;
  std::optional<double> L;
  std::optional<double> area;
  std::optional<double> disk_diameter;
  std::optional<double> delta_F;
  std::optional<double> omega_max;
  std::optional<int> k_samples;

  std::optional<std::string> preset;
  std::optional<std::string> variant;

  SweepKind sweep_kind = SweepKind::Convergence;
  std::vector<double> deltas;
  std::optional<int> order;
  std::optional<std::int64_t> n_max;
  std::optional<double> a_min;
  std::optional<double> a_max;
  std::optional<int> points;
  std::optional<double> tolerance;

  std::optional<double> E_sq;
  std::optional<double> B_sq;
  std::optional<sme::Vec3> E_direction;
  std::optional<sme::Vec3> B_direction;
  bool isotropic = false;
  bool check_bianchi = false;
  bool check_double_trace = false;
};

/// Bad flags, conflicting inputs or malformed numbers. Maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// `--help` was given; carries the rendered usage text. Maps to exit 0.
class HelpRequested : public std::runtime_error {
 public:
  explicit HelpRequested(const std::string& usage) : std::runtime_error("help requested"), usage_(usage) {}
  const std::string& usage() const { return usage_; }

 private:
  std::string usage_;
};

/// argv without the program name. Throws UsageError, HelpRequested, or
/// IoError (unreadable --config file).
RunConfig parse_invocation(const std::vector<std::string>& args);

/// Executes a parsed configuration, writing the result to `out`. Library
/// exceptions propagate.
int run(const RunConfig& config, std::ostream& out);

/// parse_invocation + run with exceptions mapped to exit codes; errors are a
/// single line on `err`.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir_liv::cli
