#pragma once

#include "series.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace qcert {

/* Classical infinite products and the generating functions built from them,
 * truncated to a requested order. */

// Describes prod_{j>=0} (1 + sign * q^{first + j*step}).
struct ProductSpec {
  std::uint64_t first = 1;
  std::uint64_t step = 1;
  int sign = -1;
};

// Multiply the factors in one in-place sweep per factor: (1 + s q^e) sends
// c[i] to c[i] + s c[i-e], walking i downward so the source is still the old
// value.  Factors with e >= order cannot touch the window and stop the loop.
template <class Ring>
Series<Ring> pochhammer(const ProductSpec& spec, Ring ring, std::size_t order) {
  if (spec.first < 1 || spec.step < 1 || (spec.sign != 1 && spec.sign != -1))
    throw std::invalid_argument("pochhammer needs first >= 1, step >= 1, sign = +-1");
  if (order == 0) throw std::invalid_argument("series order must be at least 1");
  std::vector<typename Ring::value_type> c(order);
  c[0] = ring.one();
  for (std::uint64_t e = spec.first; e < order; e += spec.step) {
    if (spec.sign > 0)
      for (std::size_t i = order; i-- > e;) c[i] = ring.add(c[i], c[i - e]);
    else
      for (std::size_t i = order; i-- > e;) c[i] = ring.sub(c[i], c[i - e]);
  }
  return Series<Ring>(std::move(ring), std::move(c));
}

// psi(q) = sum_{j>=0} q^{j(j+1)/2}: 1 at every triangular number.  This sum
// is the defining construction; the product form below is a cross-check only.
template <class Ring>
Series<Ring> psi_series(Ring ring, std::size_t order) {
  if (order == 0) throw std::invalid_argument("series order must be at least 1");
  std::vector<typename Ring::value_type> c(order);
  for (std::uint64_t j = 0; j * (j + 1) / 2 < order; j++) c[j * (j + 1) / 2] = ring.one();
  return Series<Ring>(std::move(ring), std::move(c));
}

// psi(q) written as (q^2;q^2)^2 / (q;q).
template <class Ring>
Series<Ring> psi_product_form(Ring ring, std::size_t order) {
  Series<Ring> even2 = pochhammer({2, 2, -1}, ring, order);
  Series<Ring> all = pochhammer({1, 1, -1}, ring, order);
  return even2 * even2 * all.inverse();
}

// The progression-0 component of psi's 3-dissection:
//   A(q) = (q^2;q^2)(q^3;q^3)^2 / ((q;q)(q^6;q^6)),
// so that psi(q) = A(q^3) + q psi(q^9).
template <class Ring>
Series<Ring> a_series(Ring ring, std::size_t order) {
  Series<Ring> num = pochhammer({2, 2, -1}, ring, order) *
                     pochhammer({3, 3, -1}, ring, order).pow(2);
  Series<Ring> den = pochhammer({1, 1, -1}, ring, order) * pochhammer({6, 6, -1}, ring, order);
  return num * den.inverse();
}

// Generating function of k-component tuples with odd parts distinct in each
// component: sum pod_k(n) q^n = 1 / psi(-q)^k.  psi(-q)^k is assembled by
// sparse factor multiplications, so the single dense step is the inversion.
template <class Ring>
Series<Ring> pod_gen(std::uint64_t k, Ring ring, std::size_t order) {
  if (k < 1) throw std::invalid_argument("pod_gen requires k >= 1");
  return psi_series(ring, order).substitute_negate().pow(k).inverse();
}

// The (-1)^n-signed companion: sum (-1)^n pod_k(n) q^n = 1 / psi(q)^k.
template <class Ring>
Series<Ring> signed_pod_gen(std::uint64_t k, Ring ring, std::size_t order) {
  if (k < 1) throw std::invalid_argument("signed_pod_gen requires k >= 1");
  return psi_series(ring, order).pow(k).inverse();
}

// s = A(q^3) and t = psi(q^9) as series in q, both to the same order; these
// are the two halves of psi's 3-dissection.
template <class Ring>
std::pair<Series<Ring>, Series<Ring>> s_t_components(Ring ring, std::size_t order) {
  if (order == 0) throw std::invalid_argument("series order must be at least 1");
  Series<Ring> s = a_series(ring, (order + 2) / 3).substitute_power(3).truncated(order);
  Series<Ring> t = psi_series(ring, (order + 8) / 9).substitute_power(9).truncated(order);
  return {std::move(s), std::move(t)};
}

}  // namespace qcert
