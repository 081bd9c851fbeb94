#pragma once

/**
 * @file spectrum.hpp
 * @brief Fourier transform on Z_n, Ramanujan sums and orbit structure.
 *
 * The transform is (F f)(z) = sum_i f(i) zeta_n^(iz) with zeta_n = exp(2 pi i / n),
 * so (F 1_A)(z) is the value of the character chi_z on the group-ring element
 * summing x^A. Values are double precision; callers that need exact answers
 * snap to integers with the table's tolerance and confirm with exact
 * convolution identities elsewhere.
 *
 * Also here:
 * - Ramanujan sums (transform of an orbit indicator) via the Moebius/phi formula
 * - decomposition of an orbit-constant function into orbit indicators
 * - the support Gamma_c of a two-valued spectrum with its gcd data
 * - the translation stabilizer of a multiset and the coset structure it implies
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dsrg/group_ring.hpp"
#include "dsrg/number_theory.hpp"
#include "dsrg/residue_multiset.hpp"

namespace dsrg {

/// Default snapping tolerance for a transform over Z_n.
inline double default_tolerance(int n) { return 1e-6 * n; }

/// zeta_n^k, computed from the reduced exponent k mod n for accuracy.
inline std::complex<double> root_of_unity(int n, long long k) {
  const double angle = 2.0 * std::numbers::pi * mod(k, n) / n;
  return {std::cos(angle), std::sin(angle)};
}

struct SpectrumTable {
  int n = 0;
  std::vector<std::complex<double>> values;
  double tolerance = 0.0;

  const std::complex<double>& operator[](int z) const { return values[mod(z, n)]; }

  /// The value at z as an exact integer, if it is within tolerance of one.
  std::optional<std::int64_t> snapped(int z) const {
    const auto v = (*this)[z];
    const double r = std::round(v.real());
    if (std::abs(v.imag()) <= tolerance && std::abs(v.real() - r) <= tolerance)
      return static_cast<std::int64_t>(r);
    return std::nullopt;
  }

  /// All values snapped, or nullopt if any value is not near an integer.
  std::optional<std::vector<std::int64_t>> snapped_all() const {
    std::vector<std::int64_t> out;
    for (int z = 0; z < n; ++z) {
      auto s = snapped(z);
      if (!s) return std::nullopt;
      out.push_back(*s);
    }
    return out;
  }
};

/// Transform of an arbitrary complex-valued function on Z_n (length = n).
inline SpectrumTable fourier(const std::vector<std::complex<double>>& f, std::optional<double> tol = {}) {
  const int n = static_cast<int>(f.size());
  if (n == 0) throw std::invalid_argument("fourier: empty input");
  SpectrumTable t{n, std::vector<std::complex<double>>(n), tol.value_or(default_tolerance(n))};
  for (int z = 0; z < n; ++z) {
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < n; ++i) acc += f[i] * root_of_unity(n, static_cast<long long>(i) * z);
    t.values[z] = acc;
  }
  return t;
}

inline SpectrumTable fourier(const std::vector<std::int64_t>& counts, std::optional<double> tol = {}) {
  std::vector<std::complex<double>> f(counts.begin(), counts.end());
  return fourier(f, tol);
}

inline SpectrumTable fourier(const ResidueMultiset& m, std::optional<double> tol = {}) {
  return fourier(m.counts(), tol);
}

inline SpectrumTable fourier(const CyclicRingElem& a, std::optional<double> tol = {}) {
  return fourier(a.coeffs(), tol);
}

/// (F 1_{O_v})(z) = moebius(v/(v,z)) * phi(v) / phi(v/(v,z)).
inline std::int64_t ramanujan(int n, int v, long long z) {
  require_divisor(v, n, "ramanujan");
  const int g = std::gcd(v, mod(z, n));  // gcd(v, 0) = v
  const int q = v / g;
  return moebius(q) * (euler_phi(v) / euler_phi(q));
}

// ---------------------------------------------------------------------------
// Orbit decomposition

struct OrbitDecomposition {
  int n = 0;
  /// divisor v of n -> alpha_v, for every divisor (zeros included).
  std::map<int, std::int64_t> alpha;

  ResidueMultiset reconstruct() const {
    ResidueMultiset m(n);
    for (auto [v, a] : alpha) m = ms_union(m, ms_scale(a, orbit(n, v)));
    return m;
  }
};

/// Two residues from the same orbit with different multiplicities.
struct NotOrbitConstant {
  int z1 = 0;
  int z2 = 0;
};

/// Writes f = sum_v alpha_v 1_{O_v} when f is constant on every orbit.
inline std::variant<OrbitDecomposition, NotOrbitConstant> orbit_decompose(const ResidueMultiset& f) {
  const int n = f.modulus();
  OrbitDecomposition d{n, {}};
  for (int v : divisors(n)) {
    const auto members = orbit(n, v).support();
    const auto value = f.count(members.front());
    for (int z : members)
      if (f.count(z) != value) return NotOrbitConstant{members.front(), z};
    d.alpha[v] = value;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Two-valued spectra

struct SpectrumNotTwoValued : std::runtime_error {
  int z;
  explicit SpectrumNotTwoValued(int witness)
      : std::runtime_error("spectrum value at z=" + std::to_string(witness) + " is not 0 or c"), z(witness) {}
};

struct GammaData {
  std::int64_t c = 0;
  std::vector<int> gamma;   // nonzero z with spectrum value c
  int delta = 0;            // gcd(n, gcd(gamma)); n when gamma is empty
  std::vector<int> s_set;   // divisors of n not dividing delta
  bool zero_set_is_subgroup = false;  // Z_n \ supp(U) == (n/delta) Z_n
};

/// Requires every nonprincipal value of F(U) to snap to 0 or c.
inline GammaData gamma_data(const ResidueMultiset& u, std::int64_t c, std::optional<double> tol = {}) {
  const int n = u.modulus();
  const auto spec = fourier(u, tol);
  GammaData g;
  g.c = c;
  int acc = 0;
  for (int z = 1; z < n; ++z) {
    const auto s = spec.snapped(z);
    if (!s || (*s != 0 && *s != c)) throw SpectrumNotTwoValued(z);
    if (*s == c && c != 0) {
      g.gamma.push_back(z);
      acc = std::gcd(acc, z);
    }
  }
  g.delta = std::gcd(n, acc);
  for (int v : divisors(n))
    if (g.delta % v != 0) g.s_set.push_back(v);
  const auto expected = subgroup(n, n / g.delta);
  bool ok = true;
  for (int z = 0; z < n; ++z) ok = ok && ((u.count(z) == 0) == expected.contains(z));
  g.zero_set_is_subgroup = ok;
  return g;
}

/// Index in Z_n of the character of C_n that induces the j-th character of C_n / <x^v>.
inline int quotient_char_index(int n, int v, int j) {
  require_divisor(v, n, "quotient_char_index");
  if (j < 0 || j >= v)
    throw std::invalid_argument("quotient_char_index: j=" + std::to_string(j) + " outside [0," +
                                std::to_string(v) + ")");
  return (n / v) * j;
}

// ---------------------------------------------------------------------------
// Translation structure

/// Smallest positive divisor g of n with U + g = U. The stabilizer of U under
/// translation is then exactly gZ_n.
inline int period_subgroup(const ResidueMultiset& u) {
  const int n = u.modulus();
  for (int g : divisors(n)) {
    bool fixed = true;
    for (int z = 0; z < n && fixed; ++z) fixed = u.count(z + g) == u.count(z);
    if (fixed) return g;
  }
  return n;  // unreachable: g = n always fixes U
}

/// The part of U inside {0, ..., g-1}; U = base + gZ_n when g is a period.
inline ResidueMultiset period_base(const ResidueMultiset& u, int g) {
  require_divisor(g, u.modulus(), "period_base");
  ResidueMultiset b(u.modulus());
  for (int i = 0; i < g; ++i) b.add(i, u.count(i));
  return b;
}

struct HypothesisFailed : std::runtime_error {
  int z;
  explicit HypothesisFailed(int witness)
      : std::runtime_error("spectrum value at z=" + std::to_string(witness) + " is not a multiple of c"),
        z(witness) {}
};

struct ConclusionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StructureReport {
  int subgroup_generator = 0;  // m with U = E + mZ_n
  ResidueMultiset base{1};     // E, elements in {0, ..., m-1}
  int period = 0;              // period_subgroup(U), divides m
};

/// Checks that U is a union of cosets of <x^(n/c)> (c odd) or <x^(2n/c)> (c even)
/// given that every nonprincipal spectrum value of U is a multiple of c.
inline StructureReport coset_structure_mod_c(const ResidueMultiset& u, int c, std::optional<double> tol = {}) {
  const int n = u.modulus();
  if (c <= 0) throw std::invalid_argument("coset_structure_mod_c: c must be positive");
  require_divisor(c, n, "coset_structure_mod_c");
  const auto spec = fourier(u, tol);
  for (int z = 1; z < n; ++z) {
    const auto s = spec.snapped(z);
    if (!s || *s % c != 0) throw HypothesisFailed(z);
  }
  const int m = (c % 2 == 1) ? n / c : 2 * n / c;
  const int g = period_subgroup(u);
  if (m % g != 0)
    throw ConclusionFailed("U=" + u.to_string() + " has period " + std::to_string(g) +
                           " which does not divide " + std::to_string(m));
  return StructureReport{m, period_base(u, m), g};
}

/// Every nonempty U with 0 not in U, multiplicities at most 2, and all
/// nonprincipal spectrum values in {0, c}. Sorted by multiplicity vector.
inline std::vector<ResidueMultiset> two_valued_solutions(int n, std::int64_t c, std::optional<double> tol = {}) {
  if (n < 2 || n > 16) throw std::invalid_argument("two_valued_solutions: n must lie in [2, 16]");
  std::vector<ResidueMultiset> out;
  std::vector<std::int64_t> counts(n, 0);
  std::size_t total = 1;
  for (int i = 1; i < n; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t r = code;
    for (int i = 1; i < n; ++i, r /= 3) counts[i] = static_cast<std::int64_t>(r % 3);
    const auto spec = fourier(counts, tol);
    bool ok = true;
    for (int z = 1; z < n && ok; ++z) {
      const auto s = spec.snapped(z);
      ok = s && (*s == 0 || *s == c);
    }
    if (ok) out.push_back(ResidueMultiset::from_counts(counts));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.counts() < b.counts(); });
  return out;
}

/// The solutions asserted for c = -1 (Z_n minus 0) and c = -2 (n even:
/// Z_n minus {0, n/2}, and {n/2} joined with Z_n minus 0), without the empty
/// multiset. Sorted like two_valued_solutions.
inline std::vector<ResidueMultiset> claimed_two_valued_solutions(int n, std::int64_t c) {
  std::vector<std::int64_t> all(n, 1);
  all[0] = 0;
  std::vector<ResidueMultiset> out;
  if (c == -1) {
    out.push_back(ResidueMultiset::from_counts(all));
  } else if (c == -2 && n % 2 == 0) {
    auto without = all, doubled = all;
    without[n / 2] = 0;
    doubled[n / 2] = 2;
    if (n > 2) out.push_back(ResidueMultiset::from_counts(without));
    out.push_back(ResidueMultiset::from_counts(doubled));
  } else if (c != -2) {
    throw std::invalid_argument("claimed_two_valued_solutions: c must be -1 or -2");
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.counts() < b.counts(); });
  return out;
}

}  // namespace dsrg
