#include "casimir_liv/sme_tensors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "casimir_liv/errors.hpp"

namespace casimir_liv::sme {

namespace {

struct SignedIndex {
  Index4 index;
  double sign;
};

// The eight images of (k,l,m,n) under the two antisymmetries and pair exchange.
std::array<SignedIndex, 8> orbit(const Index4& i) {
  const auto [k, l, m, n] = i;
  return {{{{k, l, m, n}, 1.0},
           {{l, k, m, n}, -1.0},
           {{k, l, n, m}, -1.0},
           {{l, k, n, m}, 1.0},
           {{m, n, k, l}, 1.0},
           {{n, m, k, l}, -1.0},
           {{m, n, l, k}, -1.0},
           {{n, m, l, k}, 1.0}}};
}

std::string format_index(const Index4& i) {
  std::ostringstream os;
  os << '(' << i[0] << ',' << i[1] << ',' << i[2] << ',' << i[3] << ')';
  return os.str();
}

void check_range(const Index4& i) {
  for (int v : i) {
    if (v < 0 || v > 3) throw DomainError("k_F index out of range 0..3 in " + format_index(i));
  }
}

// Levi-Civita symbol on spatial indices 1..3.
int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (1,2,3).
  if ((i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 1) || (i == 3 && j == 1 && k == 2)) return 1;
  return -1;
}

bool is_multiple_of_identity(const Mat3& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && m[i][j] != 0.0) return false;
    }
  }
  return m[0][0] == m[1][1] && m[1][1] == m[2][2];
}

double quadratic_form(const Mat3& m, const Vec3& d) {
  double num = 0.0;
  double norm_sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    norm_sq += d[i] * d[i];
    for (int j = 0; j < 3; ++j) num += d[i] * m[i][j] * d[j];
  }
  if (!(norm_sq > 0.0) || !std::isfinite(norm_sq)) {
    throw DomainError("liv_factor: field direction must be a finite nonzero vector");
  }
  return num / norm_sq;
}

double trace(const Mat3& m) { return m[0][0] + m[1][1] + m[2][2]; }

// Weighted kappa contribution for one field; 0 when the field is absent.
double field_term(const Mat3& kappa, double mean_sq, const std::optional<Vec3>& direction, bool isotropic,
                  const char* field_name) {
  if (mean_sq == 0.0) return 0.0;
  if (isotropic) return mean_sq * trace(kappa) / 3.0;
  if (direction) return mean_sq * quadratic_form(kappa, *direction);
  if (is_multiple_of_identity(kappa)) return mean_sq * kappa[0][0];
  throw DomainError(std::string("liv_factor: anisotropic kappa needs a ") + field_name +
                    " direction or the isotropic flag");
}

}  // namespace

std::size_t KFTensor::offset(int k, int l, int m, int n) {
  return static_cast<std::size_t>(((k * 4 + l) * 4 + m) * 4 + n);
}

KFTensor KFTensor::from_components(std::span<const KFEntry> entries) {
  KFTensor t;
  for (const auto& e : entries) {
    check_range(e.indices);
    t.components_[offset(e.indices[0], e.indices[1], e.indices[2], e.indices[3])] = e.value;
  }
  return t;
}

KFTensor KFTensor::from_representatives(std::span<const KFEntry> entries) {
  KFTensor t;
  std::array<bool, 256> assigned{};
  for (const auto& e : entries) {
    check_range(e.indices);
    if (!std::isfinite(e.value)) {
      throw DomainError("k_F component " + format_index(e.indices) + " is not finite");
    }
    for (const auto& [index, sign] : orbit(e.indices)) {
      const double value = sign * e.value;
      if (index == e.indices && sign < 0.0 && e.value != 0.0) {
        throw DomainError("k_F component " + format_index(e.indices) +
                          " must vanish by antisymmetry but is nonzero");
      }
      const auto slot = offset(index[0], index[1], index[2], index[3]);
      if (assigned[slot] && t.components_[slot] != value) {
        throw DomainError("conflicting k_F entries: " + format_index(e.indices) + " implies " +
                          format_index(index) + " differently from an earlier entry");
      }
      t.components_[slot] = value;
      assigned[slot] = true;
    }
  }
  return t;
}

double KFTensor::max_abs() const {
  double m = 0.0;
  for (double v : components_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<KFEntry> KFTensor::nonzero_entries() const {
  std::vector<KFEntry> out;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          const double v = (*this)(k, l, m, n);
          if (v != 0.0) out.push_back({{k, l, m, n}, v});
        }
  return out;
}

KFTensor operator+(const KFTensor& a, const KFTensor& b) {
  KFTensor r;
  for (std::size_t i = 0; i < r.components_.size(); ++i) r.components_[i] = a.components_[i] + b.components_[i];
  return r;
}

KFTensor operator*(double s, const KFTensor& t) {
  KFTensor r;
  for (std::size_t i = 0; i < r.components_.size(); ++i) r.components_[i] = s * t.components_[i];
  return r;
}

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::FirstPairAntisymmetry:
      return "first-pair antisymmetry";
    case Symmetry::SecondPairAntisymmetry:
      return "second-pair antisymmetry";
    case Symmetry::PairExchange:
      return "pair-exchange symmetry";
    case Symmetry::Bianchi:
      return "cyclic (Bianchi) identity";
    case Symmetry::DoubleTrace:
      return "double tracelessness";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "k_F valid";
  std::ostringstream os;
  const auto& v = violations.front();
  os << "k_F violates " << to_string(v.relation) << " at " << format_index(v.first);
  if (v.relation != Symmetry::DoubleTrace) os << '/' << format_index(v.second);
  if (violations.size() > 1) os << " (" << violations.size() - 1 << " further violations)";
  return os.str();
}

ValidationReport validate_kf(const KFTensor& t, ValidationOptions options) {
  ValidationReport report;

  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          const Index4 i{k, l, m, n};
          const double v = t(i);
          if (!std::isfinite(v)) throw DomainError("k_F component " + format_index(i) + " is not finite");
          if (std::abs(v) > 1e-2) report.large_components.push_back(i);
        }

  // Each relation pairs index tuple i with partner j; report every unordered pair once.
  auto check_pair = [&](Symmetry relation, const Index4& i, const Index4& j, double sign) {
    if (j < i) return;
    const double residual = t(i) - sign * t(j);
    if (residual != 0.0) report.violations.push_back({relation, i, j, residual});
  };

  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          check_pair(Symmetry::FirstPairAntisymmetry, {k, l, m, n}, {l, k, m, n}, -1.0);
          check_pair(Symmetry::SecondPairAntisymmetry, {k, l, m, n}, {k, l, n, m}, -1.0);
          check_pair(Symmetry::PairExchange, {k, l, m, n}, {m, n, k, l}, 1.0);
        }

  const double tolerance = 8.0 * std::numeric_limits<double>::epsilon() * t.max_abs();

  if (options.check_bianchi) {
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
          for (int n = 0; n < 4; ++n) {
            // (l,m,n) and its two rotations give the same sum; visit the smallest.
            const std::array<int, 3> rot0{l, m, n}, rot1{m, n, l}, rot2{n, l, m};
            if (rot1 < rot0 || rot2 < rot0) continue;
            const double sum = t(k, l, m, n) + t(k, m, n, l) + t(k, n, l, m);
            if (std::abs(sum) > tolerance) {
              report.violations.push_back({Symmetry::Bianchi, {k, l, m, n}, {k, m, n, l}, sum});
            }
          }
  }

  if (options.check_double_trace) {
    constexpr std::array<double, 4> metric{1.0, -1.0, -1.0, -1.0};
    double sum = 0.0;
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) sum += metric[k] * metric[l] * t(k, l, k, l);
    if (std::abs(sum) > 64.0 * std::numeric_limits<double>::epsilon() * t.max_abs()) {
      report.violations.push_back({Symmetry::DoubleTrace, {0, 0, 0, 0}, {0, 0, 0, 0}, sum});
    }
  }

  return report;
}

void validate_kaf(const KAFVector& v) {
  for (double c : v.components) {
    if (!std::isfinite(c)) throw DomainError("k_AF component is not finite");
  }
}

Mat3 kappa_HB_brute_force(const KFTensor& t) {
  Mat3 out{};
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      double acc = 0.0;
      for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
          for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s)
              acc += static_cast<double>(levi_civita(j, p, q)) * static_cast<double>(levi_civita(k, r, s)) *
                     t(p, q, r, s);
      out[j - 1][k - 1] = 0.5 * acc;
    }
  return out;
}

KappaSet kappa_from_kf(const KFTensor& t) {
  const auto report = validate_kf(t);
  if (!report.ok()) throw DomainError("kappa_from_kf: " + report.summary());

  // (p,q) pairs with eps^{jpq} != 0, in lexicographic order so the kappa_HB
  // accumulation visits terms in the same order as the 81-term contraction.
  constexpr std::array<std::array<std::array<int, 3>, 2>, 3> pairs{{
      {{{2, 3, 1}, {3, 2, -1}}},
      {{{1, 3, -1}, {3, 1, 1}}},
      {{{1, 2, 1}, {2, 1, -1}}},
  }};

  KappaSet out;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      // 0.0 - x keeps vanishing entries at +0 for clean output.
      out.kappa_DE[j][k] = 0.0 - 2.0 * t(0, j + 1, 0, k + 1);

      double hb = 0.0;
      for (const auto& [p, q, s1] : pairs[j])
        for (const auto& [r, s, s2] : pairs[k])
          hb += static_cast<double>(s1) * static_cast<double>(s2) * t(p, q, r, s);
      out.kappa_HB[j][k] = 0.5 * hb;

      double db = 0.0;
      for (const auto& [p, q, sign] : pairs[k]) db += t(0, j + 1, p, q) * static_cast<double>(sign);
      out.kappa_DB[j][k] = db;
    }
  }
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) out.kappa_HE[k][j] = 0.0 - out.kappa_DB[j][k];
  return out;
}

double liv_factor(const KappaSet& k, const FieldStats& f, const Medium& m) {
  if (!(m.epsilon > 0.0) || !(m.mu > 0.0) || !std::isfinite(m.epsilon) || !std::isfinite(m.mu)) {
    throw DomainError("liv_factor: medium requires epsilon > 0 and mu > 0");
  }
  if (!(f.E_sq >= 0.0) || !(f.B_sq >= 0.0) || !std::isfinite(f.E_sq) || !std::isfinite(f.B_sq)) {
    throw DomainError("liv_factor: mean-square fields must be finite and >= 0");
  }
  const double denominator = m.epsilon * f.E_sq + f.B_sq / m.mu;
  if (!(denominator > 0.0)) throw DomainError("liv_factor: zero denominator (E^2 and B^2 both vanish)");

  const double numerator = field_term(k.kappa_DE, f.E_sq, f.E_direction, f.isotropic, "E") +
                           field_term(k.kappa_HB, f.B_sq, f.B_direction, f.isotropic, "B");
  return numerator / denominator;
}

double cross_term_residual(const KappaSet& k, const Vec3& E, const Vec3& B) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // B.(kappa_HE E) relabelled as E_i kappa_HE^{ji} B_j.
      sum += 0.5 * E[i] * k.kappa_DB[i][j] * B[j] + 0.5 * E[i] * k.kappa_HE[j][i] * B[j];
    }
  return sum;
}

double inf_norm(const Mat3& m) {
  double best = 0.0;
  for (const auto& row : m) best = std::max(best, std::abs(row[0]) + std::abs(row[1]) + std::abs(row[2]));
  return best;
}

}  // namespace casimir_liv::sme
