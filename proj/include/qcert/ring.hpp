#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcert {

using BigInt = boost::multiprecision::cpp_int;

/* Coefficient rings for truncated series.  A ring supplies the value type,
 * canonicalization, the four arithmetic maps, and unit handling.  Two series
 * are compatible only if their rings compare equal. */

// The rational integers, arbitrary precision.  Only +-1 are units.
struct IntegerRing {
  using value_type = BigInt;
  static constexpr bool modular = false;

  value_type canon(value_type v) const { return v; }
  value_type canon_int(long long v) const { return BigInt(v); }
  value_type canon_big(const BigInt& v) const { return v; }

  value_type zero() const { return BigInt(0); }
  value_type one() const { return BigInt(1); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }

  bool is_zero(const value_type& v) const { return v.is_zero(); }
  bool is_unit(const value_type& v) const { return v == 1 || v == -1; }

  // +-1 are their own inverses; anything else has none.
  value_type unit_inverse(const value_type& v) const {
    if (!is_unit(v))
      throw std::domain_error("integer coefficient " + v.str() + " is not invertible");
    return v;
  }

  std::string describe() const { return "Integers"; }

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

// Integers modulo m with canonical representatives in [0, m).  The bound on m
// keeps a*b inside 64 bits, so products never need wide intermediates.
class ModRing {
public:
  using value_type = std::uint64_t;
  static constexpr bool modular = true;

  static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 31;

  explicit ModRing(std::uint64_t m) : m_(m) {
    if (m < 2 || m > max_modulus)
      throw std::invalid_argument("modulus must lie in [2, 2^31], got " + std::to_string(m));
  }

  std::uint64_t modulus() const { return m_; }

  value_type canon(value_type v) const { return v % m_; }
  value_type canon_int(long long v) const {
    long long r = v % static_cast<long long>(m_);
    if (r < 0) r += static_cast<long long>(m_);
    return static_cast<value_type>(r);
  }
  value_type canon_big(const BigInt& v) const {
    BigInt r = v % m_;
    if (r < 0) r += m_;
    return r.convert_to<value_type>();
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % m_; }

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (m_ - b); }
  value_type mul(value_type a, value_type b) const { return (a * b) % m_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : m_ - a; }

  bool is_zero(value_type v) const { return v == 0; }
  bool is_unit(value_type v) const { return std::gcd(v, m_) == 1; }

  // Extended Euclid; requires gcd(v, m) = 1.
  value_type unit_inverse(value_type v) const {
    if (v == 0 || !is_unit(v))
      throw std::domain_error("residue " + std::to_string(v) + " is not invertible mod " +
                              std::to_string(m_));
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(m_), nr = static_cast<long long>(v);
    while (nr != 0) {
      long long q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return canon_int(t);
  }

  std::string describe() const { return "IntegersMod(" + std::to_string(m_) + ")"; }

  friend bool operator==(const ModRing& a, const ModRing& b) { return a.m_ == b.m_; }

private:
  std::uint64_t m_;
};

}  // namespace qcert
