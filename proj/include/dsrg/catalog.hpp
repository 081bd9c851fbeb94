#pragma once

/**
 * @file catalog.hpp
 * @brief Known families of directed strongly regular dihedrants.
 *
 * Generators:
 * - gen_c51: X = T + vZ_n for odd v | n, T a transversal of the pairs {j, v-j}.
 *   Parameters (2n, n-l, (n-l)/2, (n-l)/2 - l, (n-l)/2) with l = n/v.
 * - gen_c52: X = T' + 2vZ_n for 2v | n, v in T', T' a transversal of the pairs
 *   {j, 2v-j} (j != 0, v) that also meets every pair {j, j+v}.
 *   Parameters (2n, n, n/2 + l', n/2 - l', n/2 + l') with l' = n/(2v).
 *
 * Every Dih(n, X, X) that is a genuine DSRG falls in one of these two families
 * (case a / case b). classify_xx enumerates them; brute_force_xx finds them by
 * checking all 2^(n-1) subsets with the adjacency-matrix oracle.
 *
 * check_t11 / check_t13 test the group-ring conditions of two older families
 * for general Y and compare against the oracle.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dsrg/dihedrant.hpp"
#include "dsrg/dsrg_verify.hpp"
#include "dsrg/group_ring.hpp"
#include "dsrg/parallel.hpp"
#include "dsrg/residue_multiset.hpp"
#include "dsrg/spectrum.hpp"

namespace dsrg {

enum class CaseTag { a, b };

inline const char* to_string(CaseTag c) { return c == CaseTag::a ? "a" : "b"; }

struct ClassificationEntry {
  CaseTag case_tag = CaseTag::a;
  int n = 0;
  int v = 0;
  std::vector<int> t;  // T (case a, inside {1..v-1}) or T' (case b, inside {1..2v-1})
  std::vector<int> x;
  DsrgParams params;

  friend bool operator==(const ClassificationEntry&, const ClassificationEntry&) = default;
};

struct Generated {
  DihedrantSpec spec;
  DsrgParams params;
};

/// A generator precondition that does not hold; `condition` names it.
struct ConstructionError : std::invalid_argument {
  std::string condition;
  int witness;
  ConstructionError(std::string cond, int w, const std::string& msg)
      : std::invalid_argument(cond + ": " + msg), condition(std::move(cond)), witness(w) {}
};

/// A failed group-ring condition together with the first offending coefficient.
struct ConditionFail {
  std::string condition;
  int index = 0;
};

struct NoCaseMatched : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

inline std::vector<int> sorted_support(const ResidueMultiset& m) { return m.support(); }

/// Runs the matrix oracle and insists on the predicted parameters.
inline DsrgParams confirm_with_oracle(const DihedrantSpec& s, const DsrgParams& predicted) {
  const auto v = verify_matrix(s);
  if (!accepted(v) || std::get<DsrgParams>(v) != predicted)
    throw std::logic_error("adjacency oracle rejects " + to_string(s) + " with predicted parameters " +
                           to_string(predicted));
  return predicted;
}

/// All choices of one element from each pair {j, m - j}, 1 <= j < m - j, with
/// `fixed` always included. Empty when m is even and m/2 must be chosen from a
/// pair with itself (no transversal exists). Each result is sorted; the list is
/// in lexicographic order.
inline std::vector<std::vector<int>> pair_transversals(int m, const std::vector<int>& fixed = {}) {
  std::vector<std::vector<int>> out;
  if (m % 2 == 0 && std::find(fixed.begin(), fixed.end(), m / 2) == fixed.end()) return out;
  std::vector<int> lows;
  for (int j = 1; j < m - j; ++j) lows.push_back(j);
  const std::size_t count = std::size_t{1} << lows.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<int> t(fixed);
    for (std::size_t b = 0; b < lows.size(); ++b) t.push_back((mask >> b) & 1 ? m - lows[b] : lows[b]);
    std::sort(t.begin(), t.end());
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline ResidueMultiset lift(int n, const std::vector<int>& t) { return ResidueMultiset::from_elements(n, t); }

inline void check_range(const std::vector<int>& t, int lo, int hi, const char* what) {
  for (int e : t)
    if (e < lo || e > hi)
      throw ConstructionError("range", e,
                              std::string(what) + " element " + std::to_string(e) + " outside [" + std::to_string(lo) +
                                  "," + std::to_string(hi) + "]");
  auto s = t;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw ConstructionError("range", 0, std::string(what) + " has a repeated element");
}

}  // namespace detail

inline DsrgParams c51_params(int n, int v) {
  const std::int64_t l = n / v, h = (n - l) / 2;
  return {2 * n, n - l, h, h - l, h};
}

inline DsrgParams c52_params(int n, int v) {
  const std::int64_t l = n / (2 * v);
  return {2 * n, n, n / 2 + l, n / 2 - l, n / 2 + l};
}

inline Generated gen_c51(int n, int v, std::vector<int> t) {
  if (v < 3 || v % 2 == 0 || n % v != 0)
    throw ConstructionError("v", v, "v must be an odd divisor of n with v >= 3");
  detail::check_range(t, 1, v - 1, "T");
  std::sort(t.begin(), t.end());
  auto has = [&](int e) { return std::binary_search(t.begin(), t.end(), e); };
  for (int j = 1; j < v - j; ++j) {
    if (has(j) == has(v - j))
      throw ConstructionError("transversal", j,
                              std::string(has(j) ? "both" : "neither") + " of the pair {" + std::to_string(j) + "," +
                                  std::to_string(v - j) + "} chosen");
  }
  const auto x = coset_expand(n, v, detail::lift(n, t)).support();
  const auto spec = DihedrantSpec::make(n, x, x);
  return {spec, detail::confirm_with_oracle(spec, c51_params(n, v))};
}

inline Generated gen_c52(int n, int v, std::vector<int> t) {
  if (v < 2 || n % (2 * v) != 0) throw ConstructionError("v", v, "need v >= 2 and 2v | n");
  const int m = 2 * v;
  detail::check_range(t, 1, m - 1, "T'");
  std::sort(t.begin(), t.end());
  auto has = [&](int e) { return std::binary_search(t.begin(), t.end(), mod(e, m)); };
  if (!has(v)) throw ConstructionError("(i)", v, "v=" + std::to_string(v) + " must belong to T'");
  for (int j = 1; j < m - j; ++j)
    if (has(j) == has(m - j))
      throw ConstructionError("(ii)", j,
                              std::string(has(j) ? "both" : "neither") + " of the pair {" + std::to_string(j) + "," +
                                  std::to_string(m - j) + "} chosen");
  for (int j = 0; j < v; ++j)
    if (!has(j) && !has(j + v))
      throw ConstructionError("(iii)", j,
                              "residue " + std::to_string(j) + " is not covered by T' u (T'+" + std::to_string(v) + ")");
  const auto x = coset_expand(n, m, detail::lift(n, t)).support();
  const auto spec = DihedrantSpec::make(n, x, x);
  return {spec, detail::confirm_with_oracle(spec, c52_params(n, v))};
}

enum class Construction { c51, c52 };

/// Every valid (v, T) for the chosen family, ordered by v then T; each entry is oracle-verified.
inline std::vector<ClassificationEntry> enumerate_construction(int n, Construction which) {
  if (n < 3) throw std::invalid_argument("enumerate_construction: n must be at least 3");
  std::vector<ClassificationEntry> out;
  for (int v : divisors(n)) {
    if (which == Construction::c51) {
      if (v < 3 || v % 2 == 0) continue;
      for (auto& t : detail::pair_transversals(v)) {
        auto g = gen_c51(n, v, t);
        out.push_back({CaseTag::a, n, v, t, g.spec.x, g.params});
      }
    } else {
      if (v < 2 || n % (2 * v) != 0) continue;
      for (auto& t : detail::pair_transversals(2 * v, {v})) {
        try {
          auto g = gen_c52(n, v, t);
          out.push_back({CaseTag::b, n, v, t, g.spec.x, g.params});
        } catch (const ConstructionError& e) {
          if (e.condition != "(iii)") throw;
        }
      }
    }
  }
  return out;
}

/// All genuine directed strongly regular Dih(n, X, X), via the two families.
/// Case (a) is tried for every divisor v >= 3 (even v yield no transversal).
/// Entries are keyed on X, keeping the smallest v, and sorted by (case, v, T).
inline std::vector<ClassificationEntry> classify_xx(int n) {
  if (n < 3) throw std::invalid_argument("classify_xx: n must be at least 3");
  std::vector<ClassificationEntry> out;
  auto seen = [&](const std::vector<int>& x) {
    return std::any_of(out.begin(), out.end(), [&](const auto& e) { return e.x == x; });
  };
  for (int v : divisors(n)) {
    if (v < 3) continue;
    for (auto& t : detail::pair_transversals(v)) {
      const auto x = coset_expand(n, v, detail::lift(n, t)).support();
      if (seen(x)) continue;
      const auto spec = DihedrantSpec::make(n, x, x);
      const auto verdict = verify_matrix(spec);
      if (!accepted(verdict)) throw std::logic_error("case (a) candidate rejected by oracle: " + to_string(spec));
      const auto p = std::get<DsrgParams>(verdict);
      if (p.mu - p.lambda != n / v) throw std::logic_error("case (a) candidate has mu - lambda != n/v");
      if (p.genuine()) out.push_back({CaseTag::a, n, v, t, x, p});
    }
  }
  for (auto& e : enumerate_construction(n, Construction::c52))
    if (!seen(e.x) && e.params.genuine()) out.push_back(e);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.case_tag, a.v, a.t) < std::tie(b.case_tag, b.v, b.t);
  });
  return out;
}

struct XxResult {
  std::vector<int> x;
  DsrgParams params;
  friend bool operator==(const XxResult&, const XxResult&) = default;
};

struct XyResult {
  std::vector<int> x;
  std::vector<int> y;
  DsrgParams params;
  friend bool operator==(const XyResult&, const XyResult&) = default;
};

namespace detail {
inline std::vector<int> mask_to_set(std::uint64_t mask, int offset) {
  std::vector<int> s;
  for (int b = 0; mask >> b; ++b)
    if ((mask >> b) & 1) s.push_back(b + offset);
  return s;
}
}  // namespace detail

/// Exhaustive search over X in {1..n-1} with the matrix oracle; genuine graphs only, sorted by X.
inline std::vector<XxResult> brute_force_xx(int n, unsigned threads = 1) {
  if (n < 3 || n > 16) throw std::invalid_argument("brute_force_xx: n must lie in [3, 16]");
  const std::size_t count = std::size_t{1} << (n - 1);
  auto found = parallel_map(count, threads, [n](std::size_t mask) -> std::optional<XxResult> {
    if (mask == 0) return std::nullopt;
    const auto x = detail::mask_to_set(mask, 1);
    const auto v = verify_matrix(DihedrantSpec::make(n, x, x));
    if (!accepted(v) || !std::get<DsrgParams>(v).genuine()) return std::nullopt;
    return XxResult{x, std::get<DsrgParams>(v)};
  });
  std::vector<XxResult> out;
  for (auto& f : found)
    if (f) out.push_back(std::move(*f));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
  return out;
}

/// Exhaustive search over pairs X in {1..n-1}, Y in {0..n-1}; genuine graphs only, sorted by (X, Y).
inline std::vector<XyResult> brute_force_xy(int n, unsigned threads = 1) {
  if (n < 3 || n > 8) throw std::invalid_argument("brute_force_xy: n must lie in [3, 8]");
  const std::size_t xs = std::size_t{1} << (n - 1), ys = std::size_t{1} << n;
  auto found = parallel_map(xs * ys, threads, [n, ys](std::size_t idx) -> std::optional<XyResult> {
    const auto x = detail::mask_to_set(idx / ys, 1);
    const auto y = detail::mask_to_set(idx % ys, 0);
    if (x.empty() && y.empty()) return std::nullopt;
    const auto v = verify_matrix(DihedrantSpec::make(n, x, y));
    if (!accepted(v) || !std::get<DsrgParams>(v).genuine()) return std::nullopt;
    return XyResult{x, y, std::get<DsrgParams>(v)};
  });
  std::vector<XyResult> out;
  for (auto& f : found)
    if (f) out.push_back(std::move(*f));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
  return out;
}

namespace detail {
inline std::optional<int> first_difference(const CyclicRingElem& a, const CyclicRingElem& b) {
  for (int i = 0; i < a.modulus(); ++i)
    if (a.coeff(i) != b.coeff(i)) return i;
  return std::nullopt;
}
}  // namespace detail

/// n odd. Conditions: (i) X + X^-1 = C_n - e, (ii) Y Y^-1 - X X^-1 = eps C_n.
/// On success the graph is a DSRG with parameters
/// (2n, n-1+eps, (n-1)/2+eps, (n-3)/2+eps, (n-1)/2+eps), confirmed by the oracle.
inline std::variant<Generated, ConditionFail> check_t11(int n, const std::vector<int>& x, const std::vector<int>& y,
                                                        int eps) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("check_t11: n must be odd and at least 3");
  if (eps != 0 && eps != 1) throw std::invalid_argument("check_t11: eps must be 0 or 1");
  const auto xe = CyclicRingElem::from_exponents(n, x);
  const auto ye = CyclicRingElem::from_exponents(n, y);
  const auto cn = CyclicRingElem::all_ones(n);
  if (auto i = detail::first_difference(xe + involution_inv(xe), cn - CyclicRingElem::identity(n)))
    return ConditionFail{"(i)", *i};
  const auto lhs = cyc_mul(ye, involution_inv(ye)) - cyc_mul(xe, involution_inv(xe));
  if (auto i = detail::first_difference(lhs, eps * cn)) return ConditionFail{"(ii)", *i};
  const DsrgParams predicted{2 * n, n - 1 + eps, (n - 1) / 2 + eps, (n - 3) / 2 + eps, (n - 1) / 2 + eps};
  const auto spec = DihedrantSpec::make(n, x, y);
  return Generated{spec, detail::confirm_with_oracle(spec, predicted)};
}

struct T13Report {
  std::optional<ConditionFail> failure;
  DsrgParams printed;
  std::optional<Verdict> oracle;  // absent only when X contains 0
  bool oracle_matches_printed = false;
};

/// n even, c = x^(n/2). Conditions: (i) X + X^-1 = C_n - e - c, (ii) Y in {X, X^-1},
/// (iii) X c = X^-1. The oracle verdict is reported next to the claimed parameters
/// (2n, n-1, n/2-1, n/2-1, n/2); the two are not forced to agree.
inline T13Report check_t13(int n, const std::vector<int>& x, const std::vector<int>& y) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("check_t13: n must be even and at least 4");
  T13Report r;
  r.printed = DsrgParams{2 * n, n - 1, n / 2 - 1, n / 2 - 1, n / 2};
  const auto xe = CyclicRingElem::from_exponents(n, x);
  const auto ye = CyclicRingElem::from_exponents(n, y);
  const auto xinv = involution_inv(xe);
  const auto c = CyclicRingElem::monomial(n, n / 2);
  if (auto i = detail::first_difference(xe + xinv, CyclicRingElem::all_ones(n) - CyclicRingElem::identity(n) - c))
    r.failure = ConditionFail{"(i)", *i};
  else if (ye != xe && ye != xinv)
    r.failure = ConditionFail{"(ii)", *detail::first_difference(ye, xe)};
  else if (auto j = detail::first_difference(cyc_mul(xe, c), xinv))
    r.failure = ConditionFail{"(iii)", *j};
  if (std::find(x.begin(), x.end(), 0) == x.end()) {
    r.oracle = verify_matrix(DihedrantSpec::make(n, x, y));
    r.oracle_matches_printed = accepted(*r.oracle) && std::get<DsrgParams>(*r.oracle) == r.printed;
  }
  return r;
}

/// X is a union of cosets of <x^(n/(mu-lambda))> when mu - lambda is odd and of
/// <x^(2n/(mu-lambda))> when it is even.
inline bool coset_period_consistent(int n, const std::vector<int>& x, const DsrgParams& p) {
  const std::int64_t m = p.mu - p.lambda;
  if (m <= 0 || n % m != 0) return false;
  const std::int64_t gen = (m % 2 == 1) ? n / m : 2 * n / m;
  if (n % gen != 0) return false;
  return gen % period_subgroup(ResidueMultiset::from_elements(n, x)) == 0;
}

/// Recovers (case, v, T) for an accepted Dih(n, X, X). Exactly one case must apply.
inline ClassificationEntry structure_report(int n, const std::vector<int>& x_in, const DsrgParams& p) {
  const auto xs = ResidueMultiset::from_elements(n, x_in);
  const auto x = xs.support();
  const std::int64_t m = p.mu - p.lambda;
  if (m <= 0 || n % m != 0)
    throw NoCaseMatched("mu - lambda = " + std::to_string(m) + " does not divide n = " + std::to_string(n));
  const int v = static_cast<int>(n / m);
  const int period = period_subgroup(xs);
  const auto neg = ms_negate(xs);
  const auto all = subgroup(n, 1);

  std::optional<ClassificationEntry> a, b;
  if (v % period == 0 && v >= 2) {
    // X u X^-1 = C_n \ <x^v>, with X and X^-1 disjoint
    const auto u = ms_union(xs, neg);
    if (u == ms_diff(all, subgroup(n, v))) {
      std::vector<int> t;
      for (int e : x)
        if (e < v) t.push_back(e);
      a = ClassificationEntry{CaseTag::a, n, v, t, x, p};
    }
  }
  if (n % (2 * v) == 0 && (2 * v) % period == 0) {
    const auto expected = ms_union(ms_diff(all, subgroup(n, 2 * v)), coset_expand(n, 2 * v, ResidueMultiset(n, {v})));
    const auto shifted = ms_sumset(xs, ResidueMultiset(n, {v}));
    bool covers = true;
    for (int z = 0; z < n; ++z) covers = covers && (xs.contains(z) || shifted.contains(z));
    if (ms_union(xs, neg) == expected && covers) {
      std::vector<int> t;
      for (int e : x)
        if (e < 2 * v) t.push_back(e);
      b = ClassificationEntry{CaseTag::b, n, v, t, x, p};
    }
  }
  if (a && b) throw NoCaseMatched("both cases match X=" + format_set(x));
  if (a) return *a;
  if (b) return *b;
  throw NoCaseMatched("no case matches X=" + format_set(x) + " with parameters " + to_string(p));
}

}  // namespace dsrg
