#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace casimir_liv::modes {

enum class Boundary { Dirichlet, Neumann };

std::string to_string(Boundary b);

/// A scalar-field mode between plates: sin(pi n x / a) for Dirichlet,
/// cos(pi n x / a) for Neumann, times a transverse plane wave of |k| = k_T.
/// Natural units throughout (frequencies and wavenumbers in inverse length).
struct ModeSpec {
  Boundary bc = Boundary::Dirichlet;
  std::int64_t n = 1;
  double k_T = 0.0;
  double a = 1.0;
};

struct Mode {
  ModeSpec spec;
  double frequency = 0.0;
};

/// sqrt((pi n / a)^2 + k_T^2). Dirichlet needs n >= 1, Neumann n >= 0.
double mode_frequency(const ModeSpec& m);

/// (1 + L) omega0, for L > -1.
double shifted_frequency(double omega0, double L);

/// Every (bc, n) branch with pi n / a <= omega_max, each sampled at k_samples
/// uniformly spaced k_T in [0, sqrt(omega_max^2 - (pi n / a)^2)]. With a
/// single sample only k_T = 0 is taken. Sorted by frequency, then Neumann
/// before Dirichlet, then n.
std::vector<Mode> enumerate_modes(double a, double omega_max, int k_samples);

}  // namespace casimir_liv::modes
