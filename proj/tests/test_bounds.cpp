#include <doctest.h>

#include <cmath>

#include "casimir_liv/bounds.hpp"
#include "casimir_liv/errors.hpp"

using namespace casimir_liv;
using namespace casimir_liv::bounds;
using observables::UnitSystem;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

MeasurementRecord sapphire(double delta_F, double a) {
  MeasurementRecord m;
  m.delta_F = delta_F;
  m.geometry.separation_a = a;
  m.geometry.disk_diameter = 1.25e-2;
  m.source_label = "test";
  return m;
}

}  // namespace

TEST_CASE("liv_upper_bound examples") {
  const auto si = UnitSystem::si();
  const auto r = liv_upper_bound(sapphire(1e-12, 1e-8), si);
  // 1e-12 N / 15.9549436541587 N, mpmath.
  CHECK(rel(r.L_max, 6.26764983741794e-14) < 1e-12);
  CHECK(rel(r.L_max, 6.27e-14) < 1e-2);
  CHECK(r.inputs_echo.source_label == "test");

  const double f = r.reference_force;
  CHECK(liv_upper_bound(sapphire(f, 1e-8), si).L_max == 1.0);

  const auto doubled = liv_upper_bound(sapphire(1e-12, 2e-8), si);
  CHECK(rel(doubled.L_max, 16.0 * r.L_max) < 1e-12);
}

TEST_CASE("liv_upper_bound invariants") {
  const auto si = UnitSystem::si();
  for (double a : {1e-8, 4e-8, 2e-7}) {
    for (double dF : {1e-13, 1e-12, 1.6e-12}) {
      const auto m = sapphire(dF, a);
      const auto r = liv_upper_bound(m, si);
      CHECK(rel(r.L_max * std::abs(observables::casimir_force(m.geometry, 0.0, si)), dF) < 1e-12);

      // delta_F -> lambda delta_F with A -> lambda A leaves L_max unchanged.
      MeasurementRecord scaled = m;
      scaled.delta_F *= 3.0;
      scaled.geometry.disk_diameter.reset();
      scaled.geometry.area_A = 3.0 * m.geometry.area();
      CHECK(rel(liv_upper_bound(scaled, si).L_max, r.L_max) < 1e-12);
    }
  }
}

TEST_CASE("liv_upper_bound errors") {
  const auto si = UnitSystem::si();
  CHECK_THROWS_AS(liv_upper_bound(sapphire(0.0, 1e-8), si), DomainError);
  CHECK_THROWS_AS(liv_upper_bound(sapphire(-1e-12, 1e-8), si), DomainError);
  CHECK_THROWS_AS(liv_upper_bound(sapphire(1e-12, 0.0), si), DomainError);
}

TEST_CASE("bound_sweep") {
  const auto si = UnitSystem::si();
  const auto m = sapphire(1e-12, 1e-8);

  const auto two = bound_sweep(m, {1e-7, 1e-8}, si);
  REQUIRE(two.size() == 2);
  CHECK(two[0].inputs_echo.geometry.separation_a == 1e-8);
  CHECK(rel(two[1].L_max, 1e4 * two[0].L_max) < 1e-12);

  const auto one = bound_sweep(m, {1e-8}, si);
  REQUIRE(one.size() == 1);
  CHECK(one[0].L_max == liv_upper_bound(m, si).L_max);

  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(1e-8 * std::pow(10.0, 2.0 * i / 20.0));
  const auto rows = bound_sweep(m, grid, si);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].L_max > rows[i - 1].L_max);
  CHECK(std::log10(rows.back().L_max / rows.front().L_max) == doctest::Approx(8.0).epsilon(1e-12));
  for (const auto& r : rows) {
    auto point = m;
    point.geometry.separation_a = r.inputs_echo.geometry.separation_a;
    CHECK(r.L_max == liv_upper_bound(point, si).L_max);
  }

  CHECK_THROWS_AS(bound_sweep(m, {}, si), DomainError);
  CHECK_THROWS_AS(bound_sweep(m, {1e-8, -1e-8}, si), DomainError);
}

TEST_CASE("discrepancy note names both values") {
  const auto r = liv_upper_bound(sapphire(1e-12, 1e-8), UnitSystem::si());
  const auto note = discrepancy_note(r, 1.6e-5);
  CHECK(note.find("1.6e-05") != std::string::npos);
  CHECK(note.find("6.27e-14") != std::string::npos);
  CHECK(note.find("8.4 orders") != std::string::npos);
}
