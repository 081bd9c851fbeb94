#pragma once

/**
 * @file residue_multiset.hpp
 * @brief Multisets of residues modulo n.
 *
 * A multiset over Z_n is stored as its multiplicity function: a length-n
 * vector of non-negative counts. Plain sets are the special case where every
 * count is 0 or 1. Exponent multisets stand in for multisets of powers of a
 * generator x of C_n (x^i <-> i).
 *
 * Operations:
 * - union        counts add
 * - scale        counts multiply by a natural number
 * - difference   counts subtract, clamped at zero
 * - negate       i -> -i
 * - sumset       {a + b} with multiplicities (cyclic convolution of counts)
 *
 * Orbits O_v (elements of additive order v), subgroups vZ_n and coset
 * expansions T + vZ_n round out the vocabulary used by the spectrum code.
 */

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsrg/number_theory.hpp"

namespace dsrg {

class ResidueMultiset {
 public:
  /// Empty multiset over Z_n.
  explicit ResidueMultiset(int n) : n_(n), counts_(check_modulus(n), 0) {}

  /// Elements are reduced mod n; repeats accumulate multiplicity.
  ResidueMultiset(int n, std::initializer_list<long long> elems) : ResidueMultiset(n) {
    for (long long e : elems) ++counts_[mod(e, n_)];
  }

  template <typename Int>
  static ResidueMultiset from_elements(int n, std::span<const Int> elems) {
    ResidueMultiset m(n);
    for (Int e : elems) ++m.counts_[mod(static_cast<long long>(e), n)];
    return m;
  }

  static ResidueMultiset from_elements(int n, const std::vector<int>& elems) {
    return from_elements<int>(n, std::span<const int>(elems));
  }

  static ResidueMultiset from_counts(std::vector<std::int64_t> counts) {
    if (counts.empty()) throw std::invalid_argument("ResidueMultiset: empty count vector");
    for (auto c : counts)
      if (c < 0) throw std::invalid_argument("ResidueMultiset: negative multiplicity");
    ResidueMultiset m(static_cast<int>(counts.size()));
    m.counts_ = std::move(counts);
    return m;
  }

  int modulus() const { return n_; }
  std::int64_t count(long long i) const { return counts_[mod(i, n_)]; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  bool contains(long long i) const { return count(i) > 0; }

  std::int64_t cardinality() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
  }
  bool empty() const { return cardinality() == 0; }
  std::int64_t max_multiplicity() const { return *std::max_element(counts_.begin(), counts_.end()); }
  bool is_set() const { return max_multiplicity() <= 1; }

  /// Elements in ascending order, each repeated by its multiplicity.
  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      for (std::int64_t c = 0; c < counts_[i]; ++c) out.push_back(i);
    return out;
  }

  /// Support (distinct elements) in ascending order.
  std::vector<int> support() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (counts_[i] > 0) out.push_back(i);
    return out;
  }

  void add(long long i, std::int64_t times = 1) {
    auto& c = counts_[mod(i, n_)];
    c = checked_add(c, times);
    if (c < 0) throw std::invalid_argument("ResidueMultiset: negative multiplicity");
  }

  friend bool operator==(const ResidueMultiset&, const ResidueMultiset&) = default;

  /// "{1,1,2,3}" in ascending order.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ',';
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  static std::size_t check_modulus(int n) {
    if (n <= 0) throw std::invalid_argument("ResidueMultiset: modulus must be positive");
    return static_cast<std::size_t>(n);
  }

  int n_;
  std::vector<std::int64_t> counts_;
};

namespace detail {
inline void require_same_modulus(const ResidueMultiset& a, const ResidueMultiset& b, const char* op) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument(std::string(op) + ": modulus mismatch (" + std::to_string(a.modulus()) +
                                " vs " + std::to_string(b.modulus()) + ")");
}
}  // namespace detail

inline ResidueMultiset ms_union(const ResidueMultiset& a, const ResidueMultiset& b) {
  detail::require_same_modulus(a, b, "ms_union");
  std::vector<std::int64_t> c(a.counts());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(c[i], b.counts()[i]);
  return ResidueMultiset::from_counts(std::move(c));
}

inline ResidueMultiset ms_scale(std::int64_t k, const ResidueMultiset& a) {
  if (k < 0) throw std::invalid_argument("ms_scale: scalar must be non-negative");
  std::vector<std::int64_t> c(a.counts());
  for (auto& x : c) x = checked_mul(x, k);
  return ResidueMultiset::from_counts(std::move(c));
}

inline ResidueMultiset ms_diff(const ResidueMultiset& a, const ResidueMultiset& b) {
  detail::require_same_modulus(a, b, "ms_diff");
  std::vector<std::int64_t> c(a.counts());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max<std::int64_t>(c[i] - b.counts()[i], 0);
  return ResidueMultiset::from_counts(std::move(c));
}

inline ResidueMultiset ms_negate(const ResidueMultiset& a) {
  const int n = a.modulus();
  std::vector<std::int64_t> c(n, 0);
  for (int i = 0; i < n; ++i) c[mod(-i, n)] = a.counts()[i];
  return ResidueMultiset::from_counts(std::move(c));
}

inline ResidueMultiset ms_sumset(const ResidueMultiset& a, const ResidueMultiset& b) {
  detail::require_same_modulus(a, b, "ms_sumset");
  const int n = a.modulus();
  std::vector<std::int64_t> c(n, 0);
  for (int i = 0; i < n; ++i) {
    if (a.counts()[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b.counts()[j] == 0) continue;
      auto& slot = c[(i + j) % n];
      slot = checked_add(slot, checked_mul(a.counts()[i], b.counts()[j]));
    }
  }
  return ResidueMultiset::from_counts(std::move(c));
}

/// O_v: the residues of additive order v, i.e. {c * n/v : 1 <= c <= v, gcd(c, v) = 1}.
inline ResidueMultiset orbit(int n, int v) {
  require_divisor(v, n, "orbit");
  ResidueMultiset m(n);
  for (int c = 1; c <= v; ++c)
    if (std::gcd(c, v) == 1) m.add(static_cast<long long>(c) * (n / v));
  return m;
}

/// vZ_n = {0, v, 2v, ..., n - v}.
inline ResidueMultiset subgroup(int n, int v) {
  require_divisor(v, n, "subgroup");
  ResidueMultiset m(n);
  for (int i = 0; i < n; i += v) m.add(i);
  return m;
}

/// T + vZ_n, where T lives in {0, ..., v-1}. Multiplicities in T carry over to whole cosets.
inline ResidueMultiset coset_expand(int n, int v, const ResidueMultiset& t) {
  require_divisor(v, n, "coset_expand");
  const auto& tc = t.counts();
  for (std::size_t i = static_cast<std::size_t>(v); i < tc.size(); ++i)
    if (tc[i] > 0)
      throw std::invalid_argument("coset_expand: element " + std::to_string(i) + " of T is not below " +
                                  std::to_string(v));
  ResidueMultiset lifted(n);
  for (int i = 0; i < std::min<int>(v, t.modulus()); ++i) lifted.add(i, tc[i]);
  return ms_sumset(lifted, subgroup(n, v));
}

}  // namespace dsrg
