#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "casimir_liv/errors.hpp"
#include "casimir_liv/sme_tensors.hpp"
#include "generators.hpp"

using namespace casimir_liv;
using namespace casimir_liv::sme;

namespace {

KFTensor single(Index4 i, double v) {
  const std::vector<KFEntry> e{{i, v}};
  return KFTensor::from_representatives(e);
}

bool has_violation(const ValidationReport& r, Symmetry s, Index4 a, Index4 b) {
  for (const auto& v : r.violations) {
    if (v.relation == s && ((v.first == a && v.second == b) || (v.first == b && v.second == a))) return true;
  }
  return false;
}

Mat3 zero3() { return Mat3{}; }

}  // namespace

TEST_CASE("symmetry completion fills all 8 partners of a representative") {
  const auto t = single({0, 1, 0, 1}, 1e-17);
  CHECK(t(0, 1, 0, 1) == 1e-17);
  CHECK(t(1, 0, 0, 1) == -1e-17);
  CHECK(t(0, 1, 1, 0) == -1e-17);
  CHECK(t(1, 0, 1, 0) == 1e-17);
  CHECK(t.nonzero_entries().size() == 4);  // (0101) orbit is closed under pair exchange

  const auto u = single({0, 1, 2, 3}, 2e-16);
  CHECK(u(2, 3, 0, 1) == 2e-16);
  CHECK(u(3, 2, 1, 0) == 2e-16);
  CHECK(u(3, 2, 0, 1) == -2e-16);
  CHECK(u.nonzero_entries().size() == 8);
}

TEST_CASE("conflicting or self-contradictory entries are rejected") {
  const std::vector<KFEntry> conflict{{{0, 1, 0, 1}, 1e-17}, {{1, 0, 0, 1}, 1e-17}};
  CHECK_THROWS_AS(KFTensor::from_representatives(conflict), DomainError);

  const std::vector<KFEntry> consistent{{{0, 1, 0, 1}, 1e-17}, {{1, 0, 1, 0}, 1e-17}};
  CHECK_NOTHROW(KFTensor::from_representatives(consistent));

  const std::vector<KFEntry> diagonal{{{1, 1, 0, 2}, 1e-17}};
  CHECK_THROWS_AS(KFTensor::from_representatives(diagonal), DomainError);

  const std::vector<KFEntry> out_of_range{{{0, 4, 0, 1}, 1e-17}};
  CHECK_THROWS_AS(KFTensor::from_representatives(out_of_range), DomainError);
}

TEST_CASE("validate_kf examples") {
  SUBCASE("symmetry-consistent single orbit") { CHECK(validate_kf(single({0, 1, 0, 1}, 1e-17)).ok()); }

  SUBCASE("first-pair sign violation is cited with both index tuples") {
    const std::vector<KFEntry> raw{{{0, 1, 0, 1}, 1e-17}, {{1, 0, 0, 1}, 1e-17}};
    const auto report = validate_kf(KFTensor::from_components(raw));
    CHECK_FALSE(report.ok());
    CHECK(has_violation(report, Symmetry::FirstPairAntisymmetry, {0, 1, 0, 1}, {1, 0, 0, 1}));
  }

  SUBCASE("zero tensor") { CHECK(validate_kf(KFTensor{}).ok()); }

  SUBCASE("non-finite entry is a hard error") {
    const std::vector<KFEntry> raw{{{0, 1, 0, 1}, INFINITY}};
    CHECK_THROWS_AS(validate_kf(KFTensor::from_components(raw)), DomainError);
  }

  SUBCASE("large components are advisory only") {
    const auto report = validate_kf(single({0, 1, 0, 1}, 0.5));
    CHECK(report.ok());
    CHECK(report.large_components.size() == 4);
  }
}

TEST_CASE("optional Bianchi and double-trace checks") {
  // (0,1,2,3) alone breaks the cyclic identity: k0123 + k0231 + k0312 != 0.
  const auto t = single({0, 1, 2, 3}, 1e-16);
  CHECK(validate_kf(t).ok());
  const auto with_bianchi = validate_kf(t, {.check_bianchi = true});
  CHECK_FALSE(with_bianchi.ok());
  CHECK(with_bianchi.violations.front().relation == Symmetry::Bianchi);

  // k0101 alone has a nonzero double trace: eta00 eta11 (k0101 + k1010) = -2c.
  const auto d = single({0, 1, 0, 1}, 1e-17);
  CHECK(validate_kf(d, {.check_bianchi = true}).ok());
  const auto with_trace = validate_kf(d, {.check_double_trace = true});
  CHECK_FALSE(with_trace.ok());
  CHECK(with_trace.violations.front().relation == Symmetry::DoubleTrace);

  // k0101 = c balanced by k2323 = c: traces cancel (-2c + 2c).
  const std::vector<KFEntry> balanced{{{0, 1, 0, 1}, 1e-17}, {{2, 3, 2, 3}, 1e-17}};
  CHECK(validate_kf(KFTensor::from_representatives(balanced), {.check_double_trace = true}).ok());
}

TEST_CASE("kappa_from_kf examples") {
  SUBCASE("temporal-spatial block feeds kappa_DE") {
    const auto k = kappa_from_kf(single({0, 1, 0, 1}, 1e-17));
    Mat3 expected{};
    expected[0][0] = -2e-17;
    CHECK(k.kappa_DE == expected);
    CHECK(k.kappa_HB == zero3());
  }
  SUBCASE("spatial block feeds kappa_HB[3][3]") {
    const auto k = kappa_from_kf(single({1, 2, 1, 2}, 1e-17));
    Mat3 expected{};
    expected[2][2] = 2e-17;
    CHECK(k.kappa_HB == expected);
    CHECK(k.kappa_DE == zero3());
  }
  SUBCASE("zero tensor") {
    const auto k = kappa_from_kf(KFTensor{});
    CHECK(k.kappa_DE == zero3());
    CHECK(k.kappa_HB == zero3());
    CHECK(k.kappa_DB == zero3());
    CHECK(k.kappa_HE == zero3());
  }
  SUBCASE("mixed block feeds kappa_DB and kappa_HE") {
    // k^{0,1,2,3} = c: kappa_DB^{1k} = k^{01pq} eps^{kpq} -> k=1: 2c.
    const auto k = kappa_from_kf(single({0, 1, 2, 3}, 3e-17));
    CHECK(k.kappa_DB[0][0] == 6e-17);
    CHECK(k.kappa_HE[0][0] == -6e-17);
  }
  SUBCASE("invalid tensor names the failed symmetry") {
    const std::vector<KFEntry> raw{{{0, 1, 0, 1}, 1e-17}};
    try {
      (void)kappa_from_kf(KFTensor::from_components(raw));
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("antisymmetry") != std::string::npos);
    }
  }
}

TEST_CASE("kappa properties over random tensors") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = testing::random_kf(rng);
    const auto k = kappa_from_kf(t);
    const auto brute = kappa_HB_brute_force(t);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        REQUIRE(k.kappa_DE[i][j] == k.kappa_DE[j][i]);
        REQUIRE(k.kappa_HB[i][j] == k.kappa_HB[j][i]);
        REQUIRE(k.kappa_DB[i][j] == -k.kappa_HE[j][i]);
        REQUIRE(k.kappa_HB[i][j] == brute[i][j]);
      }
  }
}

TEST_CASE("kappa_from_kf is linear") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> scale(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t1 = testing::random_kf(rng);
    const auto t2 = testing::random_kf(rng);
    const double s = scale(rng);
    const auto combined = kappa_from_kf(s * t1 + t2);
    const auto k1 = kappa_from_kf(t1);
    const auto k2 = kappa_from_kf(t2);
    const double tol = 1e-14 * std::max(std::abs(s) * t1.max_abs(), t2.max_abs());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(combined.kappa_DE[i][j] - (s * k1.kappa_DE[i][j] + k2.kappa_DE[i][j])) <= tol);
        CHECK(std::abs(combined.kappa_HB[i][j] - (s * k1.kappa_HB[i][j] + k2.kappa_HB[i][j])) <= tol);
        CHECK(std::abs(combined.kappa_DB[i][j] - (s * k1.kappa_DB[i][j] + k2.kappa_DB[i][j])) <= tol);
      }
  }
}

TEST_CASE("liv_factor examples") {
  SUBCASE("isotropic kappas, equal field weights") {
    KappaSet k;
    const double alpha = 3e-6, beta = -1e-6;
    for (int i = 0; i < 3; ++i) {
      k.kappa_DE[i][i] = alpha;
      k.kappa_HB[i][i] = beta;
    }
    for (double w : {1e-9, 1.0, 4.2e7}) {
      FieldStats f{.E_sq = w, .B_sq = w};
      CHECK(std::abs(liv_factor(k, f) - (alpha + beta) / 2.0) <= 1e-15);
    }
  }
  SUBCASE("no LIV gives L = 0") {
    FieldStats f{.E_sq = 2.0, .B_sq = 5.0, .isotropic = true};
    CHECK(liv_factor(KappaSet{}, f) == 0.0);
  }
  SUBCASE("polarised E along x picks kappa_DE[1][1]") {
    KappaSet k;
    k.kappa_DE[0][0] = 4e-9;
    FieldStats f{.E_sq = 7.0, .B_sq = 0.0, .E_direction = Vec3{1.0, 0.0, 0.0}};
    CHECK(liv_factor(k, f) == doctest::Approx(4e-9).epsilon(1e-15));
    // Direction need not be normalised.
    f.E_direction = Vec3{3.0, 0.0, 0.0};
    CHECK(liv_factor(k, f) == doctest::Approx(4e-9).epsilon(1e-15));
  }
  SUBCASE("rotational average uses tr(kappa)/3") {
    KappaSet k;
    k.kappa_DE[0][0] = 3e-9;
    k.kappa_HB[1][2] = k.kappa_HB[2][1] = 1.0;  // traceless
    FieldStats f{.E_sq = 1.0, .B_sq = 1.0, .isotropic = true};
    CHECK(liv_factor(k, f) == doctest::Approx(0.5e-9).epsilon(1e-14));
  }
  SUBCASE("errors") {
    KappaSet k;
    k.kappa_DE[0][0] = 1e-9;
    CHECK_THROWS_AS(liv_factor(k, FieldStats{.E_sq = 0.0, .B_sq = 0.0, .isotropic = true}), DomainError);
    CHECK_THROWS_AS(liv_factor(k, FieldStats{.E_sq = 1.0, .B_sq = 1.0}), DomainError);
    CHECK_THROWS_AS(liv_factor(k, FieldStats{.E_sq = 1.0, .E_direction = Vec3{0, 0, 0}}), DomainError);
    CHECK_THROWS_AS(liv_factor(k, FieldStats{.E_sq = 1.0, .isotropic = true}, Medium{0.0, 1.0}), DomainError);
  }
}

TEST_CASE("liv_factor properties") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.01, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto k = kappa_from_kf(testing::random_kf(rng));
    FieldStats f{.E_sq = pos(rng), .B_sq = pos(rng), .E_direction = Vec3{unit(rng), unit(rng), unit(rng)},
                 .B_direction = Vec3{unit(rng), unit(rng), unit(rng)}};
    const Medium m{pos(rng), pos(rng)};
    const double L = liv_factor(k, f, m);

    // Ratio: common rescaling of E^2 and B^2 leaves L unchanged.
    FieldStats scaled = f;
    const double lambda = pos(rng);
    scaled.E_sq *= lambda;
    scaled.B_sq *= lambda;
    CHECK(liv_factor(k, scaled, m) == doctest::Approx(L).epsilon(1e-12));

    // Norm bound.
    const double bound =
        std::max(inf_norm(k.kappa_DE), inf_norm(k.kappa_HB)) / std::min(m.epsilon, 1.0 / m.mu);
    CHECK(std::abs(L) <= bound * (1.0 + 1e-12));

    // Cross terms cancel exactly.
    CHECK(cross_term_residual(k, *f.E_direction, *f.B_direction) == 0.0);
  }

  // kappa I in both blocks, vacuum: L = kappa for any weights.
  KappaSet k;
  for (int i = 0; i < 3; ++i) k.kappa_DE[i][i] = k.kappa_HB[i][i] = 2.5e-7;
  for (int trial = 0; trial < 50; ++trial) {
    FieldStats f{.E_sq = pos(rng), .B_sq = pos(rng)};
    CHECK(liv_factor(k, f) == doctest::Approx(2.5e-7).epsilon(1e-15));
  }
}

TEST_CASE("k_AF is validated for finiteness only") {
  CHECK_NOTHROW(validate_kaf(KAFVector{{1e-20, 0.0, -3e-21, 0.0}}));
  CHECK_THROWS_AS(validate_kaf(KAFVector{{0.0, NAN, 0.0, 0.0}}), DomainError);
}
