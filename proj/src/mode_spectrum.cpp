#include "casimir_liv/mode_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "casimir_liv/errors.hpp"

namespace casimir_liv::modes {

std::string to_string(Boundary b) { return b == Boundary::Dirichlet ? "dirichlet" : "neumann"; }

double mode_frequency(const ModeSpec& m) {
  if (!(m.a > 0.0) || !std::isfinite(m.a)) throw DomainError("mode_frequency: plate separation a must be > 0");
  if (!(m.k_T >= 0.0) || !std::isfinite(m.k_T)) throw DomainError("mode_frequency: k_T must be finite and >= 0");
  if (m.n < 0) throw DomainError("mode_frequency: mode number n must be >= 0");
  if (m.bc == Boundary::Dirichlet && m.n == 0) {
    throw DomainError("mode_frequency: Dirichlet modes start at n = 1");
  }
  const double normal = std::numbers::pi * static_cast<double>(m.n) / m.a;
  return std::hypot(normal, m.k_T);
}

double shifted_frequency(double omega0, double L) {
  if (!(omega0 >= 0.0)) throw DomainError("shifted_frequency: omega0 must be >= 0");
  if (!(L > -1.0) || !std::isfinite(L)) throw DomainError("shifted_frequency: L must be > -1");
  return (1.0 + L) * omega0;
}

std::vector<Mode> enumerate_modes(double a, double omega_max, int k_samples) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("enumerate_modes: plate separation a must be > 0");
  if (!(omega_max > 0.0) || !std::isfinite(omega_max)) throw DomainError("enumerate_modes: omega_max must be > 0");
  if (k_samples < 1) throw DomainError("enumerate_modes: k_samples must be a positive integer");

  std::vector<Mode> out;
  for (std::int64_t n = 0;; ++n) {
    const double normal = std::numbers::pi * static_cast<double>(n) / a;
    if (normal > omega_max) break;
    const double k_edge = std::sqrt(std::max(0.0, omega_max * omega_max - normal * normal));
    for (const Boundary bc : {Boundary::Neumann, Boundary::Dirichlet}) {
      if (bc == Boundary::Dirichlet && n == 0) continue;
      for (int i = 0; i < k_samples; ++i) {
        const double k_T = k_samples == 1 ? 0.0 : k_edge * static_cast<double>(i) / (k_samples - 1);
        ModeSpec spec{bc, n, k_T, a};
        // hypot at the grid edge can land one ulp above omega_max.
        const double omega = std::min(mode_frequency(spec), omega_max);
        out.push_back({spec, omega});
      }
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const Mode& x, const Mode& y) {
    return std::tuple(x.frequency, x.spec.bc == Boundary::Dirichlet, x.spec.n) <
           std::tuple(y.frequency, y.spec.bc == Boundary::Dirichlet, y.spec.n);
  });
  return out;
}

}  // namespace casimir_liv::modes
