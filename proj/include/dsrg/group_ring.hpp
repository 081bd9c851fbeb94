#pragma once

// Integer group rings Z[C_n] and Z[D_n].
//
// An element of Z[C_n] is a coefficient vector indexed by exponent. An element
// of Z[D_n] is kept in the normal form P + Q.t with P, Q in Z[C_n]; the relation
// t.x = x^-1.t is applied eagerly during multiplication. All arithmetic is
// exact and overflow-checked.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsrg/dihedrant.hpp"
#include "dsrg/number_theory.hpp"
#include "dsrg/residue_multiset.hpp"

namespace dsrg {

class CyclicRingElem {
 public:
  /// The zero element of Z[C_n].
  explicit CyclicRingElem(int n) : coeffs_(require_positive(n), 0) {}

  explicit CyclicRingElem(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("CyclicRingElem: empty coefficient vector");
  }

  /// The identity element e = x^0.
  static CyclicRingElem identity(int n) { return monomial(n, 0); }

  /// C_n summed: every coefficient 1.
  static CyclicRingElem all_ones(int n) { return CyclicRingElem(std::vector<std::int64_t>(require_positive(n), 1)); }

  static CyclicRingElem monomial(int n, long long exponent, std::int64_t coeff = 1) {
    CyclicRingElem r(n);
    r.coeffs_[mod(exponent, n)] = coeff;
    return r;
  }

  /// The element summing a multiset of exponents with multiplicity.
  static CyclicRingElem from_multiset(const ResidueMultiset& m) { return CyclicRingElem(m.counts()); }

  static CyclicRingElem from_exponents(int n, const std::vector<int>& exps) {
    return from_multiset(ResidueMultiset::from_elements(n, exps));
  }

  int modulus() const { return static_cast<int>(coeffs_.size()); }
  std::int64_t coeff(long long i) const { return coeffs_[mod(i, modulus())]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  std::int64_t augmentation() const {
    std::int64_t s = 0;
    for (auto c : coeffs_) s = checked_add(s, c);
    return s;
  }

  bool is_zero() const {
    for (auto c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  CyclicRingElem& operator+=(const CyclicRingElem& o) {
    require_same(o, "+");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    return *this;
  }
  CyclicRingElem& operator-=(const CyclicRingElem& o) {
    require_same(o, "-");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], -o.coeffs_[i]);
    return *this;
  }
  CyclicRingElem& operator*=(std::int64_t k) {
    for (auto& c : coeffs_) c = checked_mul(c, k);
    return *this;
  }

  friend CyclicRingElem operator+(CyclicRingElem a, const CyclicRingElem& b) { return a += b; }
  friend CyclicRingElem operator-(CyclicRingElem a, const CyclicRingElem& b) { return a -= b; }
  friend CyclicRingElem operator*(std::int64_t k, CyclicRingElem a) { return a *= k; }
  friend bool operator==(const CyclicRingElem&, const CyclicRingElem&) = default;

  /// Human-readable form, e.g. "3e + x + x^2 + 3x^3".
  std::string to_string() const {
    std::string s;
    for (int i = 0; i < modulus(); ++i) {
      const auto c = coeffs_[i];
      if (c == 0) continue;
      std::string mono = i == 0 ? "e" : (i == 1 ? "x" : "x^" + std::to_string(i));
      std::string coef = (c == 1) ? "" : (c == -1 ? "-" : std::to_string(c));
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      if (!s.empty() && c < 0) coef = c == -1 ? "" : std::to_string(-c);
      s += coef + mono;
    }
    return s.empty() ? "0" : s;
  }

 private:
  static std::size_t require_positive(int n) {
    if (n <= 0) throw std::invalid_argument("CyclicRingElem: modulus must be positive");
    return static_cast<std::size_t>(n);
  }
  void require_same(const CyclicRingElem& o, const char* op) const {
    if (o.modulus() != modulus())
      throw std::invalid_argument(std::string("CyclicRingElem ") + op + ": modulus mismatch");
  }

  std::vector<std::int64_t> coeffs_;
};

/// Product in Z[C_n]: schoolbook cyclic convolution.
inline CyclicRingElem cyc_mul(const CyclicRingElem& a, const CyclicRingElem& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("cyc_mul: modulus mismatch");
  const int n = a.modulus();
  std::vector<std::int64_t> out(n, 0);
  for (int i = 0; i < n; ++i) {
    const auto ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (int j = 0; j < n; ++j) {
      const auto bj = b.coeffs()[j];
      if (bj == 0) continue;
      auto& slot = out[(i + j) % n];
      slot = checked_add(slot, checked_mul(ai, bj));
    }
  }
  return CyclicRingElem(std::move(out));
}

/// a -> a^(-1): the coefficient of x^i moves to x^-i.
inline CyclicRingElem involution_inv(const CyclicRingElem& a) {
  const int n = a.modulus();
  std::vector<std::int64_t> out(n, 0);
  for (int i = 0; i < n; ++i) out[mod(-i, n)] = a.coeffs()[i];
  return CyclicRingElem(std::move(out));
}

/// X summed plus X^(-1) summed. X must be a set avoiding 0.
inline CyclicRingElem u_of(int n, const std::vector<int>& x) {
  auto xs = ResidueMultiset::from_elements(n, x);
  if (xs.contains(0)) throw std::invalid_argument("u_of: 0 must not belong to X");
  if (!xs.is_set()) throw std::invalid_argument("u_of: X must be a set");
  const auto xe = CyclicRingElem::from_multiset(xs);
  return xe + involution_inv(xe);
}

/// P + Q.t in Z[D_n].
struct DihedralRingElem {
  CyclicRingElem p;
  CyclicRingElem q;

  DihedralRingElem(CyclicRingElem rot, CyclicRingElem refl) : p(std::move(rot)), q(std::move(refl)) {
    if (p.modulus() != q.modulus()) throw std::invalid_argument("DihedralRingElem: parts differ in modulus");
  }

  static DihedralRingElem zero(int n) { return {CyclicRingElem(n), CyclicRingElem(n)}; }

  /// The connection element X + Y.t of Dih(n, X, Y).
  static DihedralRingElem connection(const DihedrantSpec& s) {
    return {CyclicRingElem::from_exponents(s.n, s.x), CyclicRingElem::from_exponents(s.n, s.y)};
  }

  int modulus() const { return p.modulus(); }
  std::int64_t augmentation() const { return checked_add(p.augmentation(), q.augmentation()); }

  friend bool operator==(const DihedralRingElem&, const DihedralRingElem&) = default;
};

/// (P1 + Q1.t)(P2 + Q2.t) = (P1 P2 + Q1 Q2^(-1)) + (P1 Q2 + Q1 P2^(-1)).t
inline DihedralRingElem dih_mul(const DihedralRingElem& a, const DihedralRingElem& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("dih_mul: modulus mismatch");
  return {cyc_mul(a.p, b.p) + cyc_mul(a.q, involution_inv(b.q)),
          cyc_mul(a.p, b.q) + cyc_mul(a.q, involution_inv(b.p))};
}

/// Square of the connection element of Dih(n, X, Y). The rotation part is
/// X^2 + Y Y^(-1) and the reflection part is Y (X + X^(-1)).
inline DihedralRingElem square_connection(const DihedrantSpec& s) {
  const auto conn = DihedralRingElem::connection(s);
  return dih_mul(conn, conn);
}

}  // namespace dsrg
