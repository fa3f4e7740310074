#pragma once

#include "ring.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcert {

/* Reference sequences computed from first principles.  Nothing here touches
 * the power-series engine: these tables are the independent side of every
 * series-vs-oracle comparison, so they keep their own (deliberately plain)
 * convolution code. */

enum class SeqKind { Pod, Rsq, Tri };

inline std::string seq_kind_name(SeqKind kind) {
  switch (kind) {
    case SeqKind::Pod: return "pod";
    case SeqKind::Rsq: return "r";
    case SeqKind::Tri: return "t";
  }
  throw std::logic_error("unreachable sequence kind");
}

// values[n] for 0 <= n < values.size().
struct SequenceTable {
  SeqKind kind = SeqKind::Pod;
  std::uint64_t k = 1;
  std::vector<BigInt> values;
};

namespace detail {

// Full truncated convolution of two dense tables.
inline std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < n; i++) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; j++) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Convolution with a weighted indicator given as (exponent, weight) pairs.
inline std::vector<BigInt> convolve_sparse(const std::vector<BigInt>& a,
                                           const std::vector<std::pair<std::size_t, int>>& points) {
  std::vector<BigInt> out(a.size());
  for (const auto& [e, w] : points) {
    if (e >= a.size()) break;
    for (std::size_t i = 0; i + e < a.size(); i++) {
      if (a[i].is_zero()) continue;
      if (w == 1)
        out[i + e] += a[i];
      else
        out[i + e] += w * a[i];
    }
  }
  return out;
}

inline std::vector<std::pair<std::size_t, int>> triangular_points(std::size_t length) {
  std::vector<std::pair<std::size_t, int>> pts;
  for (std::uint64_t j = 0; j * (j + 1) / 2 < length; j++) pts.emplace_back(j * (j + 1) / 2, 1);
  return pts;
}

inline std::vector<std::pair<std::size_t, int>> square_points(std::size_t length) {
  std::vector<std::pair<std::size_t, int>> pts;
  pts.emplace_back(0, 1);
  for (std::uint64_t j = 1; j * j < length; j++) pts.emplace_back(j * j, 2);
  return pts;
}

}  // namespace detail

// Sum of divisors of n >= 1.
inline BigInt sigma_divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma is defined for n >= 1");
  BigInt s = 0;
  for (std::uint64_t d = 1; d * d <= n; d++) {
    if (n % d) continue;
    s += d;
    if (d != n / d) s += n / d;
  }
  return s;
}

// Jacobi symbol (a | n) for odd n >= 1; 0 when gcd(a, n) > 1.
inline int jacobi_symbol(BigInt a, BigInt n) {
  if (n <= 0 || n % 2 == 0)
    throw std::invalid_argument("jacobi symbol needs odd positive lower argument");
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const BigInt r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

/* pod(n): partitions of n where odd parts are distinct (even parts repeat
 * freely).  Knapsack over parts -- 0/1 for odd parts, unbounded for even --
 * then a k-fold convolution for k-tuples. */
inline SequenceTable pod_table(std::uint64_t k, std::size_t length) {
  if (k < 1 || length < 1) throw std::invalid_argument("pod_table needs k >= 1, length >= 1");
  std::vector<BigInt> f(length);
  f[0] = 1;
  for (std::uint64_t e = 2; e < length; e += 2)  // even parts, unlimited multiplicity
    for (std::size_t i = e; i < length; i++) f[i] += f[i - e];
  for (std::uint64_t o = 1; o < length; o += 2)  // odd parts, at most once
    for (std::size_t i = length; i-- > o;) f[i] += f[i - o];
  std::vector<BigInt> g = f;
  for (std::uint64_t j = 1; j < k; j++) g = detail::convolve(g, f);
  return {SeqKind::Pod, k, std::move(g)};
}

// t_k(n): representations of n as an ordered sum of k triangular numbers.
inline SequenceTable tri_table(std::uint64_t k, std::size_t length) {
  if (k < 1 || length < 1) throw std::invalid_argument("tri_table needs k >= 1, length >= 1");
  const auto pts = detail::triangular_points(length);
  std::vector<BigInt> g(length);
  for (const auto& [e, w] : pts) g[e] = w;
  for (std::uint64_t j = 1; j < k; j++) g = detail::convolve_sparse(g, pts);
  return {SeqKind::Tri, k, std::move(g)};
}

/* r_k(n): representations of n as an ordered sum of k integer squares, signs
 * counted.  r_2 is filled by walking the lattice disk directly (a unit test
 * pins it to the convolution definition); higher k fold in one square layer
 * at a time. */
inline SequenceTable square_table(std::uint64_t k, std::size_t length) {
  if (k < 1 || length < 1) throw std::invalid_argument("square_table needs k >= 1, length >= 1");
  const auto pts = detail::square_points(length);
  std::vector<BigInt> g(length);
  if (k == 1) {
    for (const auto& [e, w] : pts) g[e] = w;
    return {SeqKind::Rsq, k, std::move(g)};
  }
  std::vector<std::uint64_t> r2(length, 0);
  for (long long x = 0; static_cast<std::uint64_t>(x * x) < length; x++)
    for (long long y = 0; static_cast<std::uint64_t>(x * x + y * y) < length; y++) {
      const std::size_t n = static_cast<std::size_t>(x * x + y * y);
      const int w = (x > 0 ? 2 : 1) * (y > 0 ? 2 : 1);
      r2[n] += w;
    }
  for (std::size_t i = 0; i < length; i++) g[i] = r2[i];
  for (std::uint64_t j = 2; j < k; j++) g = detail::convolve_sparse(g, pts);
  return {SeqKind::Rsq, k, std::move(g)};
}

// t_4(n) = sigma(2n + 1).
inline BigInt t4_from_sigma(std::uint64_t n) { return sigma_divisors(2 * n + 1); }

// t_8(n) = sum over odd divisors d of n+1 of ((n+1)/d)^3.
inline BigInt t8_from_divisors(std::uint64_t n) {
  const std::uint64_t m = n + 1;
  BigInt s = 0;
  for (std::uint64_t d = 1; d * d <= m; d++) {
    if (m % d) continue;
    const std::uint64_t e = m / d;
    if (d % 2 == 1) s += BigInt(e) * e * e;
    if (e != d && e % 2 == 1) s += BigInt(d) * d * d;
  }
  return s;
}

// r_k(8n + k) = 2^k (1 + C(k,4)/2) t_k(n) for 1 <= k <= 7; this returns the
// constant 2^k + 2^{k-1} C(k,4), always an integer.
inline BigInt rk_tk_factor(std::uint64_t k) {
  if (k < 1 || k > 7) throw std::invalid_argument("rk_tk_factor is defined for 1 <= k <= 7");
  static constexpr std::uint64_t binom4[8] = {0, 0, 0, 0, 1, 5, 15, 35};
  return (BigInt(1) << k) + (BigInt(1) << (k - 1)) * binom4[k];
}

inline BigInt rk_from_tk(std::uint64_t k, const BigInt& tk_value) {
  return rk_tk_factor(k) * tk_value;
}

namespace detail {

inline BigInt geometric_sum(std::uint64_t base, std::uint64_t terms) {
  BigInt s = 0, p = 1;
  for (std::uint64_t i = 0; i < terms; i++) {
    s += p;
    p *= base;
  }
  return s;
}

inline void require_odd_prime(std::uint64_t p, const char* where) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument(std::string(where) + ": p must be an odd prime");
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) throw std::invalid_argument(std::string(where) + ": p must be prime");
}

}  // namespace detail

/* r_3 at a p^{2a}-scaled argument, one level deep:
 *   r_3(p^{2a} n) = ((p^{a+1}-1)/(p-1) - (-n|p)(p^a-1)/(p-1)) r_3(n)
 *                   - p (p^a-1)/(p-1) r_3(n/p^2),
 * with the last term present only when p^2 | n.  The prefactors are built as
 * integer geometric sums, never as quotients. */
inline BigInt r3_scaling_formula(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                                 const SequenceTable& r3) {
  detail::require_odd_prime(p, "r3_scaling_formula");
  if (r3.kind != SeqKind::Rsq || r3.k != 3)
    throw std::invalid_argument("r3_scaling_formula needs an r_3 table");
  if (n >= r3.values.size())
    throw std::invalid_argument("r3_scaling_formula: table too short for n = " + std::to_string(n));
  const BigInt g1 = detail::geometric_sum(p, alpha + 1);  // 1 + p + ... + p^alpha
  const BigInt g2 = detail::geometric_sum(p, alpha);      // 1 + p + ... + p^{alpha-1}
  const int chi = jacobi_symbol(-BigInt(n), BigInt(p));
  BigInt value = (g1 - chi * g2) * r3.values[n];
  if (n % (p * p) == 0) value -= p * g2 * r3.values[n / (p * p)];
  return value;
}

// r_7 analogue with ratio p^5, valid only when p^2 does not divide n:
//   r_7(p^{2a} n) = ((p^{5(a+1)}-1)/(p^5-1) - p^2 (-n|p)(p^{5a}-1)/(p^5-1)) r_7(n).
inline BigInt r7_scaling_formula(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                                 const SequenceTable& r7) {
  detail::require_odd_prime(p, "r7_scaling_formula");
  if (r7.kind != SeqKind::Rsq || r7.k != 7)
    throw std::invalid_argument("r7_scaling_formula needs an r_7 table");
  if (n % (p * p) == 0)
    throw std::invalid_argument("r7_scaling_formula requires p^2 not dividing n");
  if (n >= r7.values.size())
    throw std::invalid_argument("r7_scaling_formula: table too short for n = " + std::to_string(n));
  const std::uint64_t p5 = p * p * p * p * p;
  const BigInt g1 = detail::geometric_sum(p5, alpha + 1);
  const BigInt g2 = detail::geometric_sum(p5, alpha);
  const int chi = jacobi_symbol(-BigInt(n), BigInt(p));
  return (g1 - BigInt(p) * p * chi * g2) * r7.values[n];
}

}  // namespace qcert
