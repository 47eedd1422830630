#include <doctest.h>

#include <cmath>
#include <numbers>

#include "casimir_liv/errors.hpp"
#include "casimir_liv/zeta.hpp"

using casimir_liv::zeta::riemann_zeta;
using std::numbers::pi;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Brute-force partial sum with the integral tail and half end term; only good
// for s comfortably above 1.
double partial_sum_oracle(double s) {
  const int n_cut = 200000;
  double sum = 0.0;
  for (int n = n_cut - 1; n >= 1; --n) sum += std::pow(n, -s);
  const double big_n = n_cut;
  return sum + std::pow(big_n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(big_n, -s);
}

}  // namespace

TEST_CASE("zeta at even positive integers matches the Bernoulli closed forms") {
  CHECK(rel(riemann_zeta(2.0), pi * pi / 6.0) < 1e-15);
  CHECK(rel(riemann_zeta(4.0), std::pow(pi, 4) / 90.0) < 1e-15);
  CHECK(rel(riemann_zeta(6.0), std::pow(pi, 6) / 945.0) < 1e-15);
}

TEST_CASE("zeta against reference values (30-digit mpmath)") {
  CHECK(rel(riemann_zeta(3.0), 1.2020569031595942854) < 1e-15);
  CHECK(rel(riemann_zeta(1.5), 2.6123753486854883433) < 1e-14);
  CHECK(rel(riemann_zeta(0.5), -1.4603545088095868129) < 1e-14);
  CHECK(rel(riemann_zeta(2.5), 1.3414872572509171798) < 1e-15);
  CHECK(rel(riemann_zeta(5.5), 1.0252045799546856946) < 1e-15);
  CHECK(rel(riemann_zeta(-0.5), -0.20788622497735456602) < 1e-14);
}

TEST_CASE("zeta continued to non-positive integers") {
  CHECK(rel(riemann_zeta(0.0), -0.5) < 1e-15);
  CHECK(rel(riemann_zeta(-1.0), -1.0 / 12.0) < 1e-14);
  CHECK(rel(riemann_zeta(-3.0), 1.0 / 120.0) < 1e-14);
  CHECK(riemann_zeta(-2.0) == 0.0);
  CHECK(riemann_zeta(-4.0) == 0.0);
}

TEST_CASE("zeta agrees with brute-force partial sums") {
  for (double s : {2.0, 2.7, 3.0, 4.5, 7.0}) {
    CAPTURE(s);
    CHECK(rel(riemann_zeta(s), partial_sum_oracle(s)) < 1e-12);
  }
}

TEST_CASE("zeta rejects the pole and non-finite input") {
  CHECK_THROWS_AS(riemann_zeta(1.0), casimir_liv::DomainError);
  CHECK_THROWS_AS(riemann_zeta(NAN), casimir_liv::DomainError);
}
