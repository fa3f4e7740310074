#pragma once

#include "ring.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcert {

/* Truncated power series.  A series of order N carries exact coefficients of
 * q^0 .. q^{N-1}; everything from q^N on is unknown, not zero.  Binary
 * operations therefore return the minimum of the two orders -- never padded.
 * Values are immutable: every operation builds a new series. */

template <class Ring>
class Series {
public:
  using value_type = typename Ring::value_type;

  Series(Ring ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
    if (c_.empty())
      throw std::invalid_argument("a series needs at least the constant coefficient");
    for (auto& v : c_) v = ring_.canon(std::move(v));
  }

  static Series zero(Ring ring, std::size_t order) {
    check_order(order);
    return Series(std::move(ring), std::vector<value_type>(order));
  }

  static Series one(Ring ring, std::size_t order) { return monomial(std::move(ring), 0, order); }

  // q^exp, all other coefficients zero.  exp >= order yields the zero window.
  static Series monomial(Ring ring, std::size_t exp, std::size_t order) {
    check_order(order);
    std::vector<value_type> c(order);
    if (exp < order) c[exp] = ring.one();
    return Series(std::move(ring), std::move(c));
  }

  static Series from_ints(Ring ring, const std::vector<long long>& vals) {
    std::vector<value_type> c;
    c.reserve(vals.size());
    for (long long v : vals) c.push_back(ring.canon_int(v));
    return Series(std::move(ring), std::move(c));
  }

  std::size_t order() const { return c_.size(); }
  const Ring& ring() const { return ring_; }
  const std::vector<value_type>& coeffs() const { return c_; }

  const value_type& operator[](std::size_t n) const {
    if (n >= c_.size())
      throw std::out_of_range("coefficient index " + std::to_string(n) +
                              " is at or beyond truncation order " + std::to_string(c_.size()));
    return c_[n];
  }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!ring_.is_zero(v)) return false;
    return true;
  }

  // Shorten the window; n must stay within the known range.
  Series truncated(std::size_t n) const {
    check_order(n);
    if (n > order())
      throw std::invalid_argument("cannot extend a series: requested order " + std::to_string(n) +
                                  " exceeds known order " + std::to_string(order()));
    return Series(ring_, std::vector<value_type>(c_.begin(), c_.begin() + n));
  }

  friend Series operator+(const Series& a, const Series& b) {
    require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<value_type> c(n);
    for (std::size_t i = 0; i < n; i++) c[i] = a.ring_.add(a.c_[i], b.c_[i]);
    return Series(a.ring_, std::move(c));
  }

  friend Series operator-(const Series& a, const Series& b) {
    require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<value_type> c(n);
    for (std::size_t i = 0; i < n; i++) c[i] = a.ring_.sub(a.c_[i], b.c_[i]);
    return Series(a.ring_, std::move(c));
  }

  Series operator-() const {
    std::vector<value_type> c(order());
    for (std::size_t i = 0; i < order(); i++) c[i] = ring_.neg(c_[i]);
    return Series(ring_, std::move(c));
  }

  Series scaled(const value_type& s) const {
    const value_type f = ring_.canon(s);
    std::vector<value_type> c(order());
    for (std::size_t i = 0; i < order(); i++) c[i] = ring_.mul(c_[i], f);
    return Series(ring_, std::move(c));
  }

  // Truncated Cauchy product.  The plain O(N^2) convolution, with one
  // refinement that preserves the contract: the operand with fewer nonzero
  // coefficients drives the outer loop, so multiplying by a theta-sparse
  // series costs O(N * nnz) instead of O(N^2).
  friend Series operator*(const Series& a, const Series& b) {
    require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    const bool a_sparser = a.nonzero_count(n) <= b.nonzero_count(n);
    const Series& s = a_sparser ? a : b;
    const Series& d = a_sparser ? b : a;
    if constexpr (Ring::modular)
      return mul_mod(s, d, n);
    else
      return mul_exact(s, d, n);
  }

  /* Multiplicative inverse via the triangular recurrence
   *   b_0 = a_0^{-1},   b_n = -a_0^{-1} * sum_{i=1..n} a_i b_{n-i}.
   * Requires a unit constant term.  Only the nonzero a_i contribute, so
   * inverting a theta-sparse series costs O(N * nnz). */
  Series inverse() const {
    const std::size_t n = order();
    const value_type inv0 = ring_.unit_inverse(c_[0]);
    const value_type ninv0 = ring_.neg(inv0);

    std::vector<std::size_t> nz;  // nonzero indices of *this, from 1 on
    for (std::size_t i = 1; i < n; i++)
      if (!ring_.is_zero(c_[i])) nz.push_back(i);

    std::vector<value_type> b(n);
    b[0] = inv0;
    if constexpr (Ring::modular) {
      const std::uint64_t m = ring_.modulus();
      const std::uint64_t chunk = lazy_chunk(m);
      for (std::size_t t = 1; t < n; t++) {
        std::uint64_t acc = 0, cnt = 0;
        for (std::size_t i : nz) {
          if (i > t) break;
          acc += c_[i] * b[t - i];
          if (++cnt == chunk) {
            acc %= m;
            cnt = 0;
          }
        }
        b[t] = (ninv0 * (acc % m)) % m;
      }
    } else {
      for (std::size_t t = 1; t < n; t++) {
        value_type acc = 0;
        for (std::size_t i : nz) {
          if (i > t) break;
          acc += c_[i] * b[t - i];
        }
        b[t] = ring_.mul(ninv0, acc);
      }
    }
    return Series(ring_, std::move(b));
  }

  // a^k at the same order; k = 0 gives 1.  Small exponents multiply one factor
  // at a time (keeps sparse bases cheap); large ones square.
  Series pow(std::uint64_t k) const {
    if (k == 0) return one(ring_, order());
    if (k <= 16) {
      Series r = *this;
      for (std::uint64_t i = 1; i < k; i++) r = r * *this;
      return r;
    }
    Series r = one(ring_, order());
    Series base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  // q -> q^k.  Exactness improves: a window of N coefficients determines
  // k*N coefficients of a(q^k), so the result order is k * order().
  Series substitute_power(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("substitute_power requires k >= 1");
    const std::size_t n = order();
    if (k > (std::numeric_limits<std::size_t>::max)() / n)
      throw std::invalid_argument("substitute_power order overflow");
    std::vector<value_type> c(k * n);
    for (std::size_t i = 0; i < n; i++) c[k * i] = c_[i];
    return Series(ring_, std::move(c));
  }

  // q -> -q: negate the odd-index coefficients.  An involution and a ring map.
  Series substitute_negate() const {
    std::vector<value_type> c(c_);
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = ring_.neg(c[i]);
    return Series(ring_, std::move(c));
  }

  // Keep the coefficients at indices r, r+m, r+2m, ...; result coefficient j
  // is a[m*j + r].  The window shrinks to ceil((order - r) / m).
  Series extract_progression(std::size_t r, std::size_t m) const {
    if (m == 0 || r >= m)
      throw std::invalid_argument("extract_progression requires 0 <= r < m");
    if (r >= order())
      throw std::invalid_argument("series of order " + std::to_string(order()) +
                                  " is too short to extract residue " + std::to_string(r));
    const std::size_t n = (order() - r + m - 1) / m;
    std::vector<value_type> c(n);
    for (std::size_t j = 0; j < n; j++) c[j] = c_[m * j + r];
    return Series(ring_, std::move(c));
  }

  // Divide by q^j; every coefficient below j must vanish.
  Series shift_down(std::size_t j) const {
    if (j >= order())
      throw std::invalid_argument("shift_down by " + std::to_string(j) +
                                  " would empty a series of order " + std::to_string(order()));
    for (std::size_t i = 0; i < j; i++)
      if (!ring_.is_zero(c_[i]))
        throw std::invalid_argument("shift_down by " + std::to_string(j) +
                                    " hits a nonzero coefficient at index " + std::to_string(i));
    return Series(ring_, std::vector<value_type>(c_.begin() + j, c_.end()));
  }

  std::size_t nonzero_count(std::size_t upto) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < std::min(upto, order()); i++)
      if (!ring_.is_zero(c_[i])) k++;
    return k;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
  }

private:
  static void check_order(std::size_t order) {
    if (order == 0) throw std::invalid_argument("series order must be at least 1");
  }

  static void require_same_ring(const Series& a, const Series& b) {
    if (!(a.ring_ == b.ring_))
      throw std::domain_error("ring mismatch: " + a.ring_.describe() + " vs " +
                              b.ring_.describe());
  }

  // How many products (m-1)^2 fit in a uint64 before reduction is needed.
  static std::uint64_t lazy_chunk(std::uint64_t m) {
    const std::uint64_t p = (m - 1) * (m - 1);
    return p == 0 ? (std::numeric_limits<std::uint64_t>::max)()
                  : (std::numeric_limits<std::uint64_t>::max)() / p;
  }

  static Series mul_exact(const Series& s, const Series& d, std::size_t n) {
    std::vector<value_type> out(n);
    for (std::size_t i = 0; i < n; i++) {
      if (s.ring_.is_zero(s.c_[i])) continue;
      const value_type& ai = s.c_[i];
      for (std::size_t j = 0; i + j < n; j++) out[i + j] += ai * d.c_[j];
    }
    return Series(s.ring_, std::move(out));
  }

  // Gather form with lazy reduction: coefficients stay below m <= 2^31, so
  // products fit in 64 bits and many can be summed before reducing.
  static Series mul_mod(const Series& s, const Series& d, std::size_t n) {
    const std::uint64_t m = s.ring_.modulus();
    const std::uint64_t chunk = lazy_chunk(m);
    std::vector<value_type> out(n);
    const value_type* sv = s.c_.data();
    const value_type* dv = d.c_.data();

    if (s.nonzero_count(n) == n && chunk >= n) {
      // dense fast path
      for (std::size_t t = 0; t < n; t++) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i <= t; i++) acc += sv[i] * dv[t - i];
        out[t] = acc % m;
      }
      return Series(s.ring_, std::move(out));
    }

    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < n; i++)
      if (sv[i] != 0) nz.push_back(i);
    for (std::size_t t = 0; t < n; t++) {
      std::uint64_t acc = 0, cnt = 0;
      for (std::size_t i : nz) {
        if (i > t) break;
        acc += sv[i] * dv[t - i];
        if (++cnt == chunk) {
          acc %= m;
          cnt = 0;
        }
      }
      out[t] = acc % m;
    }
    return Series(s.ring_, std::move(out));
  }

  Ring ring_;
  std::vector<value_type> c_;
};

// First disagreement between two series, checked through coefficient n_limit-1.
template <class Ring>
struct Agreement {
  bool ok = true;
  std::size_t index = 0;
  typename Ring::value_type lhs{};
  typename Ring::value_type rhs{};
};

template <class Ring>
Agreement<Ring> agree_to(const Series<Ring>& a, const Series<Ring>& b, std::size_t n_limit) {
  if (!(a.ring() == b.ring()))
    throw std::domain_error("ring mismatch: " + a.ring().describe() + " vs " +
                            b.ring().describe());
  if (n_limit > a.order() || n_limit > b.order())
    throw std::invalid_argument("agreement bound " + std::to_string(n_limit) +
                                " exceeds a series order (" + std::to_string(a.order()) + ", " +
                                std::to_string(b.order()) + ")");
  for (std::size_t i = 0; i < n_limit; i++)
    if (!(a[i] == b[i])) return {false, i, a[i], b[i]};
  return {};
}

// Push exact integer coefficients down to residues mod m.
inline Series<ModRing> reduce_mod(const Series<IntegerRing>& a, std::uint64_t m) {
  ModRing ring(m);
  std::vector<ModRing::value_type> c(a.order());
  for (std::size_t i = 0; i < a.order(); i++) c[i] = ring.canon_big(a[i]);
  return Series<ModRing>(ring, std::move(c));
}

}  // namespace qcert
