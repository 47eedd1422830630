#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace casimir_liv::sme {

using Index4 = std::array<int, 4>;
using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// One user-supplied component of k_F, contravariant indices in {0,1,2,3}.
struct KFEntry {
  Index4 indices{};
  double value = 0.0;
};

/// The CPT-even photon-sector coefficient (k_F)^{klmn}, stored densely.
///
/// Two construction routes:
///  - from_representatives() takes one component per symmetry orbit and fills
///    the partners (first-pair and second-pair antisymmetry, pair exchange).
///    Conflicting explicit entries throw.
///  - from_components() stores exactly what it is given, so a tensor that
///    breaks the symmetries can be inspected with validate_kf().
class KFTensor {
 public:
  KFTensor() { components_.fill(0.0); }

  static KFTensor from_representatives(std::span<const KFEntry> entries);
  static KFTensor from_components(std::span<const KFEntry> entries);

  double operator()(int k, int l, int m, int n) const { return components_[offset(k, l, m, n)]; }
  double operator()(const Index4& i) const { return (*this)(i[0], i[1], i[2], i[3]); }

  /// Largest |component|.
  double max_abs() const;

  /// Nonzero components in lexicographic index order.
  std::vector<KFEntry> nonzero_entries() const;

  friend KFTensor operator+(const KFTensor& a, const KFTensor& b);
  friend KFTensor operator*(double s, const KFTensor& t);

 private:
  static std::size_t offset(int k, int l, int m, int n);
  std::array<double, 256> components_;
};

/// The CPT-odd vector (k_AF)^k. Stored and validated; no routine consumes it.
struct KAFVector {
  std::array<double, 4> components{};
};

struct KappaSet {
  Mat3 kappa_DE{};
  Mat3 kappa_HB{};
  Mat3 kappa_DB{};
  Mat3 kappa_HE{};
};

struct Medium {
  double epsilon = 1.0;
  double mu = 1.0;
};

/// Mean-square field strengths entering the LIV factor. A direction, when
/// given, need not be normalised.
struct FieldStats {
  double E_sq = 0.0;
  double B_sq = 0.0;
  std::optional<Vec3> E_direction;
  std::optional<Vec3> B_direction;
  bool isotropic = false;
};

enum class Symmetry { FirstPairAntisymmetry, SecondPairAntisymmetry, PairExchange, Bianchi, DoubleTrace };

std::string to_string(Symmetry s);

struct Violation {
  Symmetry relation;
  Index4 first{};
  Index4 second{};  // partner tuple; unused for DoubleTrace
  double residual = 0.0;
};

struct ValidationOptions {
  bool check_bianchi = false;
  bool check_double_trace = false;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Components with |value| > 1e-2. Advisory only.
  std::vector<Index4> large_components;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Reports every broken symmetry relation with the offending index pairs.
/// Throws DomainError on a non-finite component.
ValidationReport validate_kf(const KFTensor& t, ValidationOptions options = {});

/// Throws DomainError on a non-finite component.
void validate_kaf(const KAFVector& v);

/// kappa matrices from k_F:
///   kappa_DE^{jk} = -2 k^{0j0k}
///   kappa_HB^{jk} = 1/2 eps^{jpq} eps^{krs} k^{pqrs}
///   kappa_DB^{jk} = k^{0jpq} eps^{kpq},  kappa_HE = -kappa_DB^T
/// Matrix index 0..2 stands for spatial index 1..3. Throws DomainError naming
/// the failed symmetry when validate_kf() rejects t.
KappaSet kappa_from_kf(const KFTensor& t);

/// kappa_HB by the full 81-term (p,q,r,s) contraction, for cross-checking.
Mat3 kappa_HB_brute_force(const KFTensor& t);

/// LIV factor L = (E^2 e.kDE.e + B^2 b.kHB.b) / (eps E^2 + B^2/mu).
/// With FieldStats::isotropic the quadratic forms are replaced by tr(kappa)/3.
double liv_factor(const KappaSet& k, const FieldStats& f, const Medium& m = {});

/// Electric-magnetic cross terms of the energy density,
///   1/2 E.(kappa_DB B) + 1/2 B.(kappa_HE E),
/// which vanish identically because kappa_HE = -kappa_DB^T.
double cross_term_residual(const KappaSet& k, const Vec3& E, const Vec3& B);

/// Induced infinity norm (maximum absolute row sum).
double inf_norm(const Mat3& m);

}  // namespace casimir_liv::sme
