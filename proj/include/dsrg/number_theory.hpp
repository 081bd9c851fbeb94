#pragma once

// Small-integer arithmetic helpers: divisors, Euler phi, Moebius, checked ops.
// Everything here works by trial division, which is plenty for the moduli
// this library handles (n in the low hundreds at most).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsrg {

/// Reduce `a` into {0, ..., n-1}.
constexpr int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// Positive divisors of n in increasing order.
inline std::vector<int> divisors(int n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<int> small, large;
  for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<int, int>> factorize(int n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline long long euler_phi(int n) {
  long long phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

/// The Moebius function. Named to keep it apart from the DSRG parameter mu.
inline int moebius(int n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline bool divides(int d, int n) { return d != 0 && n % d == 0; }

inline void require_divisor(int v, int n, const char* where) {
  if (n <= 0 || v <= 0 || n % v != 0)
    throw std::invalid_argument(std::string(where) + ": " + std::to_string(v) +
                                " does not divide " + std::to_string(n));
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

/// Exact integer square root if `x` is a perfect square, else -1.
inline std::int64_t exact_sqrt(std::int64_t x) {
  if (x < 0) return -1;
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : -1;
}

}  // namespace dsrg
