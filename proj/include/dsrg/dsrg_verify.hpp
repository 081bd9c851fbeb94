#pragma once

/**
 * @file dsrg_verify.hpp
 * @brief Directed strongly regular graph recognition for dihedrants.
 *
 * A digraph on N vertices with adjacency matrix A is a DSRG with parameters
 * (N, k, mu, lambda, t) iff AJ = JA = kJ and A^2 = tI + lambda A + mu (J - I - A).
 *
 * Three independent routes are provided:
 * - verify_matrix:     builds A for Dih(n, X, Y) and squares it
 * - verify_group_ring: checks the two Z[C_n] identities
 *                        Y (X + X^-1)          = (lambda - mu) Y + mu C_n
 *                        X^2 + Y Y^-1          = (t - mu) e + (lambda - mu) X + mu C_n
 * - verify_spectral:   the same identities after the Fourier transform (diagnostic)
 *
 * Throughout, N is the vertex count and n the order of the rotation subgroup
 * (N = 2n for dihedrants).
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "dsrg/dihedrant.hpp"
#include "dsrg/group_ring.hpp"
#include "dsrg/number_theory.hpp"
#include "dsrg/spectrum.hpp"

namespace dsrg {

struct DsrgParams {
  std::int64_t vertices = 0;  // N
  std::int64_t k = 0;
  std::int64_t mu = 0;
  std::int64_t lambda = 0;
  std::int64_t t = 0;

  bool genuine() const { return 0 < t && t < k; }

  friend bool operator==(const DsrgParams&, const DsrgParams&) = default;
  friend auto operator<=>(const DsrgParams& a, const DsrgParams& b) {
    return std::tie(a.vertices, a.k, a.mu, a.lambda, a.t) <=> std::tie(b.vertices, b.k, b.mu, b.lambda, b.t);
  }
};

/// "(6,2,1,0,1)" in (N, k, mu, lambda, t) order.
inline std::string to_string(const DsrgParams& p) {
  return "(" + std::to_string(p.vertices) + "," + std::to_string(p.k) + "," + std::to_string(p.mu) + "," +
         std::to_string(p.lambda) + "," + std::to_string(p.t) + ")";
}

struct EigenData {
  std::int64_t d = 0;
  std::int64_t rho = 0;
  std::int64_t sigma = 0;
  std::int64_t m_rho = 0;
  std::int64_t m_sigma = 0;
  bool feasible = false;  // rho, sigma integral and both multiplicities non-negative integers

  friend bool operator==(const EigenData&, const EigenData&) = default;
};

/// Why a graph failed: the entry (row, col) breaks the constancy of A^2
/// (or of row/column sums, for kind == "regularity").
struct NotDsrg {
  std::string kind;
  int row = 0;
  int col = 0;
  std::string detail;
};

using Verdict = std::variant<DsrgParams, NotDsrg>;

inline bool accepted(const Verdict& v) { return std::holds_alternative<DsrgParams>(v); }

// ---------------------------------------------------------------------------
// Adjacency matrices

/// Dense square 0/1 matrix, row-major.
struct AdjacencyMatrix {
  int size = 0;
  std::vector<std::uint8_t> entries;

  explicit AdjacencyMatrix(int n = 0) : size(n), entries(static_cast<std::size_t>(n) * n, 0) {}

  std::uint8_t operator()(int r, int c) const { return entries[static_cast<std::size_t>(r) * size + c]; }
  std::uint8_t& operator()(int r, int c) { return entries[static_cast<std::size_t>(r) * size + c]; }

  std::vector<int> out_neighbours(int r) const {
    std::vector<int> out;
    for (int c = 0; c < size; ++c)
      if ((*this)(r, c)) out.push_back(c);
    return out;
  }

  /// J - I - A.
  AdjacencyMatrix complement() const {
    AdjacencyMatrix m(size);
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) m(r, c) = (r != c && !(*this)(r, c)) ? 1 : 0;
    return m;
  }

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;
};

/// Vertex x^i has index i and x^i.t has index n + i; (g, h) is an arc iff g^-1 h lies in X u Y.t.
///
/// In D_n, (x^a)^-1 x^b t^s = x^(b-a) t^s and (x^a t)^-1 x^b t^s = x^(a-b) t^(1+s).
inline AdjacencyMatrix adjacency_matrix(const DihedrantSpec& s) {
  const int n = s.n;
  std::vector<std::uint8_t> in_x(n, 0), in_y(n, 0);
  for (int e : s.x) in_x[e] = 1;
  for (int e : s.y) in_y[e] = 1;
  AdjacencyMatrix a(2 * n);
  for (int g = 0; g < 2 * n; ++g) {
    const bool g_refl = g >= n;
    const int ga = g % n;
    for (int h = 0; h < 2 * n; ++h) {
      const bool h_refl = h >= n;
      const int hb = h % n;
      const int exponent = g_refl ? mod(ga - hb, n) : mod(hb - ga, n);
      const bool quotient_refl = g_refl != h_refl;
      a(g, h) = quotient_refl ? in_y[exponent] : in_x[exponent];
    }
  }
  return a;
}

/// Recognizes a DSRG from its adjacency matrix. t comes from the first diagonal
/// entry of A^2, lambda from the first arc in row-major order, mu from the first
/// off-diagonal non-arc; constancy is then checked over the whole matrix.
inline Verdict verify_adjacency(const AdjacencyMatrix& a) {
  const int n = a.size;
  if (n == 0) return NotDsrg{"empty", 0, 0, "graph has no vertices"};

  std::int64_t k = 0;
  for (int c = 0; c < n; ++c) k += a(0, c);
  for (int r = 0; r < n; ++r) {
    std::int64_t row = 0, col = 0;
    for (int c = 0; c < n; ++c) {
      row += a(r, c);
      col += a(c, r);
    }
    if (row != k) return NotDsrg{"regularity", r, r, "out-degree " + std::to_string(row) + " != " + std::to_string(k)};
    if (col != k) return NotDsrg{"regularity", r, r, "in-degree " + std::to_string(col) + " != " + std::to_string(k)};
  }
  for (int r = 0; r < n; ++r)
    if (a(r, r)) return NotDsrg{"loop", r, r, "diagonal entry is 1"};

  // A^2 via neighbour lists
  std::vector<std::vector<int>> nbr(n);
  for (int r = 0; r < n; ++r) nbr[r] = a.out_neighbours(r);
  std::vector<std::int64_t> sq(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r)
    for (int m : nbr[r])
      for (int c : nbr[m]) ++sq[static_cast<std::size_t>(r) * n + c];
  auto at = [&](int r, int c) { return sq[static_cast<std::size_t>(r) * n + c]; };

  std::optional<std::int64_t> t, lambda, mu;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const auto v = at(r, c);
      std::optional<std::int64_t>* slot = r == c ? &t : (a(r, c) ? &lambda : &mu);
      const char* name = r == c ? "t" : (a(r, c) ? "lambda" : "mu");
      if (!slot->has_value()) {
        *slot = v;
      } else if (**slot != v) {
        return NotDsrg{name, r, c,
                       std::string("A^2 entry ") + std::to_string(v) + " differs from " + name + "=" +
                           std::to_string(**slot)};
      }
    }
  }
  return DsrgParams{n, k, mu.value_or(0), lambda.value_or(0), t.value_or(0)};
}

inline Verdict verify_matrix(const DihedrantSpec& s) { return verify_adjacency(adjacency_matrix(s)); }

/// Group-ring recognition. The parameters are read off S^2 exactly as in
/// verify_adjacency (row 0 of A^2 is the coefficient vector of S^2) and then
/// both identities are compared coefficient by coefficient.
inline Verdict verify_group_ring(const DihedrantSpec& s) {
  const int n = s.n;
  if (s.degree() < 1) return NotDsrg{"empty", 0, 0, "connection set is empty"};
  const auto xe = CyclicRingElem::from_exponents(n, s.x);
  const auto ye = CyclicRingElem::from_exponents(n, s.y);
  const auto ux = xe + involution_inv(xe);
  const auto refl_lhs = cyc_mul(ye, ux);                                // Y U_X
  const auto rot_lhs = cyc_mul(xe, xe) + cyc_mul(ye, involution_inv(ye));  // X^2 + Y Y^-1

  // Row 0 of A^2 laid out as [rotation coefficients, reflection coefficients].
  auto sq = [&](int idx) { return idx < n ? rot_lhs.coeff(idx) : refl_lhs.coeff(idx - n); };
  auto is_arc = [&](int idx) {
    return idx < n ? xe.coeff(idx) != 0 : ye.coeff(idx - n) != 0;
  };
  std::optional<std::int64_t> lambda, mu;
  for (int idx = 1; idx < 2 * n; ++idx) {
    auto& slot = is_arc(idx) ? lambda : mu;
    if (!slot) slot = sq(idx);
  }
  const std::int64_t t = sq(0);
  const std::int64_t lam = lambda.value_or(0), m = mu.value_or(0);

  const auto cn = CyclicRingElem::all_ones(n);
  const auto refl_rhs = (lam - m) * ye + m * cn;
  const auto rot_rhs = (t - m) * CyclicRingElem::identity(n) + (lam - m) * xe + m * cn;
  for (int i = 0; i < n; ++i) {
    if (rot_lhs.coeff(i) != rot_rhs.coeff(i))
      return NotDsrg{"rotation identity", 0, i,
                     "coefficient of x^" + std::to_string(i) + ": " + std::to_string(rot_lhs.coeff(i)) +
                         " != " + std::to_string(rot_rhs.coeff(i))};
  }
  for (int i = 0; i < n; ++i) {
    if (refl_lhs.coeff(i) != refl_rhs.coeff(i))
      return NotDsrg{"reflection identity", 0, n + i,
                     "coefficient of x^" + std::to_string(i) + ".t: " + std::to_string(refl_lhs.coeff(i)) +
                         " != " + std::to_string(refl_rhs.coeff(i))};
  }
  return DsrgParams{2 * n, s.degree(), m, lam, t};
}

struct SpectralReport {
  bool ok = false;
  double worst_deviation = 0.0;
  int worst_z = 0;
};

/// Fourier-side check of claimed parameters. For Y = X this is
///   r(r + conj r) = mu n [z=0] + (lambda - mu) r,  together with t = mu;
/// otherwise both transformed identities are checked with r = F(1_X), s = F(1_Y):
///   s(r + conj r) = mu n [z=0] + (lambda - mu) s
///   r^2 + |s|^2  = t - mu + mu n [z=0] + (lambda - mu) r
inline SpectralReport verify_spectral(const DihedrantSpec& s, const DsrgParams& p, std::optional<double> tol = {}) {
  const int n = s.n;
  const auto r = fourier(s.x_set(), tol);
  const auto f = fourier(s.y_set(), tol);
  const double mu = static_cast<double>(p.mu), lm = static_cast<double>(p.lambda - p.mu);
  SpectralReport rep{true, 0.0, 0};
  auto note = [&](int z, double dev) {
    if (dev > rep.worst_deviation) {
      rep.worst_deviation = dev;
      rep.worst_z = z;
    }
  };
  const bool same = s.x == s.y;
  if (same && p.t != p.mu) rep.ok = false;
  if (p.vertices != 2 * n || p.k != s.degree()) rep.ok = false;
  for (int z = 0; z < n; ++z) {
    const double principal = z == 0 ? mu * n : 0.0;
    const auto rz = r.values[z], sz = f.values[z];
    if (same) {
      note(z, std::abs(rz * (rz + std::conj(rz)) - (principal + lm * rz)));
    } else {
      note(z, std::abs(sz * (rz + std::conj(rz)) - (principal + lm * sz)));
      note(z, std::abs(rz * rz + std::norm(sz) - (static_cast<double>(p.t) - mu + principal + lm * rz)));
    }
  }
  const double tol_v = tol.value_or(default_tolerance(n));
  if (rep.worst_deviation > tol_v) rep.ok = false;
  return rep;
}

/// U_X^2 - c U_X == alpha C_n exactly, alpha = |U_X|(|U_X| - c)/n. This holds iff
/// every nonprincipal character takes U_X to 0 or c.
inline bool quadratic_identity_check(int n, const std::vector<int>& x, std::int64_t c,
                                     std::int64_t* alpha_out = nullptr) {
  const auto u = u_of(n, x);
  const std::int64_t size = u.augmentation();
  const std::int64_t num = checked_mul(size, size - c);
  if (num % n != 0) return false;
  const std::int64_t alpha = num / n;
  if (alpha_out) *alpha_out = alpha;
  return cyc_mul(u, u) - c * u == alpha * CyclicRingElem::all_ones(n);
}

// ---------------------------------------------------------------------------
// Parameter engine

/// Eigenvalues k > rho > sigma with multiplicities 1, m_rho, m_sigma.
inline EigenData eigen_data(const DsrgParams& p) {
  const std::int64_t diff = p.mu - p.lambda;
  const std::int64_t d2 = diff * diff + 4 * (p.t - p.mu);
  const std::int64_t d = exact_sqrt(d2);
  if (d <= 0) throw std::invalid_argument("eigen_data: d^2 = " + std::to_string(d2) + " is not a positive square");
  EigenData e;
  e.d = d;
  const bool integral_eigs = (d - diff) % 2 == 0;
  e.rho = (-diff + d) / 2;  // exact when integral_eigs
  e.sigma = (-diff - d) / 2;
  const std::int64_t gap = d;  // rho - sigma
  const std::int64_t num_rho = -(p.k + e.sigma * (p.vertices - 1));
  const std::int64_t num_sigma = p.k + e.rho * (p.vertices - 1);
  e.m_rho = num_rho / gap;
  e.m_sigma = num_sigma / gap;
  e.feasible = integral_eigs && num_rho % gap == 0 && num_sigma % gap == 0 && e.m_rho >= 0 && e.m_sigma >= 0;
  return e;
}

/// Parameters of the complementary digraph J - I - A.
inline DsrgParams complement_params(const DsrgParams& p) {
  const std::int64_t s = p.vertices - 2 * p.k;
  return DsrgParams{p.vertices, s + (p.k - 1), s + p.lambda, s + (p.mu - 2), s + (p.t - 1)};
}

/// The identity k(k + (mu - lambda)) = t + (N - 1) mu.
inline bool counting_identity(const DsrgParams& p) {
  return p.k * (p.k + (p.mu - p.lambda)) == p.t + (p.vertices - 1) * p.mu;
}

/// Every genuine tuple on N vertices passing the necessary conditions: the
/// inequalities 0 <= lambda < t < k, 0 < mu <= t, -2(k-t-1) <= mu-lambda <= 2(k-t),
/// the counting identity, d^2 a positive square, and integral non-negative
/// eigenvalue multiplicities. Sorted by (k, mu, lambda, t).
inline std::vector<DsrgParams> feasible_params(std::int64_t vertices) {
  if (vertices < 2) throw std::invalid_argument("feasible_params: need at least 2 vertices");
  std::vector<DsrgParams> out;
  for (std::int64_t k = 1; k < vertices; ++k)
    for (std::int64_t mu = 1; mu < k; ++mu)
      for (std::int64_t lambda = 0; lambda < k; ++lambda)
        for (std::int64_t t = std::max(mu, lambda + 1); t < k; ++t) {
          const DsrgParams p{vertices, k, mu, lambda, t};
          const std::int64_t diff = mu - lambda;
          if (diff < -2 * (k - t - 1) || diff > 2 * (k - t)) continue;
          if (!counting_identity(p)) continue;
          const std::int64_t d = exact_sqrt(diff * diff + 4 * (t - mu));
          if (d <= 0) continue;
          if (!eigen_data(p).feasible) continue;
          out.push_back(p);
        }
  return out;
}

}  // namespace dsrg
