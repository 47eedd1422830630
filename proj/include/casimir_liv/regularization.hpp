#pragma once

#include <cstdint>
#include <vector>

namespace casimir_liv::regularization {

/// Factors of the closed-form branch value at continuation point s,
///   (1/a) (pi/a)^{2-s} zeta(s-2) / (2 pi (s-2)),
/// kept for audit output.
struct ClosedFormTerms {
  double s = 0.0;
  double mode_scale_power = 0.0;  // (pi/a)^{2-s}
  double zeta_value = 0.0;        // zeta(s-2)
  double transverse_factor = 0.0; // 1 / (2 pi (s-2))
  double inverse_separation = 0.0;
};

struct ZetaResult {
  double energy_per_area = 0.0;    // 1/length^3
  double energy_per_volume = 0.0;  // 1/length^4
  double s_evaluated = -1.0;
  ClosedFormTerms closed_form_terms;
};

/// Closed form of the n >= 1 branch of the s-regulated mode sum,
///   (1/a) sum_n int d^2k/(2pi)^2 [(pi n/a)^2 + k^2]^{-s/2},
/// analytically continued to any s != 3. Shares the zeta evaluation with
/// zeta_energy_per_area().
ClosedFormTerms closed_form_terms(double s, double a);
double closed_form_branch(double s, double a);

/// The same n >= 1 branch summed mode by mode (transverse integral done
/// analytically), with an Euler-Maclaurin remainder past n_max. Only defined
/// for s > 3 where the sum converges. The n = 0 branch is scaleless and
/// contributes 0 under the continuation.
///
/// Throws DomainError for s <= 3, a <= 0, or when the first neglected
/// remainder term exceeds 1e-12 of the sum (n_max too small).
double direct_regulated_sum(double s, double a, std::int64_t n_max = 1000);

/// Regularized vacuum energy between plates at s = -1: -pi^2/(720 a^3) per
/// unit area, natural units.
ZetaResult zeta_energy_per_area(double a);

struct CutoffTerms {
  double raw_sum = 0.0;     // sum' over modes with e^{-delta omega}
  double continuum = 0.0;   // a -> infinity subtraction, 3a/(pi^2 delta^4)
  double subtracted = 0.0;  // raw_sum - continuum
  std::int64_t n_max = 0;
};

/// Smallest n_max for which the exponential tail is negligible against the
/// finite part at this (a, delta).
std::int64_t default_cutoff_n_max(double a, double delta);

/// Exponential-cutoff oracle for the vacuum energy per area:
///   (1/2pi) sum'_n e^{-delta m}(m^2/delta + 2m/delta^2 + 2/delta^3),  m = pi n / a,
/// n = 0 weighted by 1/2, minus the continuum integral over n of the same
/// summand. n_max = 0 picks default_cutoff_n_max().
///
/// Throws DomainError if e^{-delta pi n_max / a} >= 1e-12.
CutoffTerms cutoff_terms(double a, double delta, std::int64_t n_max = 0);
double cutoff_energy_per_area(double a, double delta, std::int64_t n_max = 0);

struct RegulatorSchedule {
  std::vector<double> deltas;  // strictly decreasing, > 0
  std::int64_t n_max = 0;      // 0: per-delta default
  int extrapolation_order = 2;

  /// deltas = a * {0.08, 0.04, 0.02}.
  static RegulatorSchedule for_separation(double a);

  void validate() const;
};

struct Extrapolated {
  double estimate = 0.0;
  double error = 0.0;  // last Richardson increment
  std::vector<CutoffTerms> points;
};

/// Richardson extrapolation of cutoff_energy_per_area to delta -> 0. The
/// oracle's deviation is even in delta, so order k eliminates the
/// delta^2 ... delta^{2k} terms using the last k+1 schedule points.
///
/// Throws DomainError on an invalid schedule or when the raw values do not
/// converge monotonically.
Extrapolated extrapolated_cutoff_energy(double a, const RegulatorSchedule& sched);

/// One row of the convergence diagnostic.
struct ConvergenceRow {
  double a = 0.0;
  double delta = 0.0;
  double raw_sum = 0.0;
  double continuum = 0.0;
  double subtracted = 0.0;
  double extrapolated = 0.0;
  double zeta_reference = 0.0;
};

std::vector<ConvergenceRow> convergence_table(double a, const RegulatorSchedule& sched);

/// Relative oracle-vs-zeta agreement at one separation.
struct Agreement {
  double a = 0.0;
  double zeta = 0.0;
  double oracle = 0.0;
  double oracle_error = 0.0;
  double relative_deviation = 0.0;
  bool pass = false;
};

/// Compares the extrapolated oracle against the zeta result over a
/// logarithmic grid of `points` separations in [a_min, a_max], using
/// RegulatorSchedule::for_separation at each point. A row passes when the
/// relative deviation is below `tolerance`; the oracle's own error estimate
/// is reported alongside.
std::vector<Agreement> oracle_agreement(double a_min, double a_max, int points, double tolerance = 1e-3);

}  // namespace casimir_liv::regularization
