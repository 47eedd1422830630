#include "casimir_liv/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "casimir_liv/errors.hpp"

namespace casimir_liv::zeta {

namespace {

// B_{2k} / (2k)! for k = 1..8.
constexpr std::array<double, 8> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

// Direct sum to n = kCut - 1, then Euler-Maclaurin at kCut. At kCut = 16 the
// truncation after eight correction terms is far below double rounding for
// every s >= 1/2.
constexpr int kCut = 16;

double euler_maclaurin(double s) {
  double sum = 0.0;
  for (int n = kCut - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);

  const double big_n = kCut;
  const double n_pow = std::pow(big_n, -s);
  double tail = big_n * n_pow / (s - 1.0) + 0.5 * n_pow;

  // Rising factorial s (s+1) ... (s+2k-2) times N^{-s-2k+1}.
  double rising = s;
  double term_pow = n_pow / big_n;
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    tail += kBernoulliOverFactorial[k] * rising * term_pow;
    const double j = 2.0 * static_cast<double>(k) + 1.0;
    rising *= (s + j) * (s + j + 1.0);
    term_pow /= big_n * big_n;
  }
  return sum + tail;
}

}  // namespace

double riemann_zeta(double s) {
  if (!std::isfinite(s)) throw DomainError("riemann_zeta: argument must be finite");
  if (s == 1.0) throw DomainError("riemann_zeta: pole at s = 1");

  if (s >= 0.5) return euler_maclaurin(s);

  if (s == 0.0) return -0.5;
  if (s < 0.0 && std::fmod(s, 2.0) == 0.0) return 0.0;

  using std::numbers::pi;
  const double one_minus_s = 1.0 - s;
  return std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(0.5 * pi * s) *
         std::tgamma(one_minus_s) * euler_maclaurin(one_minus_s);
}

}  // namespace casimir_liv::zeta
