#pragma once

#include "expr.hpp"
#include "oracles.hpp"
#include "products.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qcert {

/* Congruence claims and their verifiers.  A claim is data; verification
 * produces a certificate recording what was checked, to what bound, and the
 * first counterexample if one exists.  A failing certificate is a result,
 * not an error. */

enum class Backend { Series, Oracle };

struct SequenceRef {
  SeqKind kind = SeqKind::Pod;
  std::uint64_t k = 1;
  std::optional<Backend> backend;  // absent: series for pod, oracle otherwise

  Backend effective_backend() const {
    if (backend) return *backend;
    return kind == SeqKind::Pod ? Backend::Series : Backend::Oracle;
  }
};

// Indices step*n + offset, n = 0, 1, 2, ...
struct Progression {
  std::uint64_t step = 1;
  std::uint64_t offset = 0;

  std::uint64_t at(std::uint64_t n) const { return step * n + offset; }
};

// Skip the n with n mod `mod` listed in `residues` (hypothesis exclusions).
struct SkipRule {
  std::uint64_t mod = 1;
  std::vector<std::uint64_t> residues;

  bool excludes(std::uint64_t n) const {
    const std::uint64_t r = n % mod;
    return std::find(residues.begin(), residues.end(), r) != residues.end();
  }
};

// seq(step*n + offset) == 0 (mod modulus) for all admissible n.
struct VanishingClaim {
  SequenceRef seq;
  Progression ap;
  std::uint64_t modulus = 2;
  std::optional<SkipRule> skip;
};

// left(n) == coeff * (-1)^(sign_parity * n) * right(n) (mod modulus), with
// each side read along its own progression.  Absent modulus: exact equality.
struct RelationClaim {
  SequenceRef left_seq;
  Progression left;
  SequenceRef right_seq;
  Progression right;
  BigInt coeff = 1;
  int sign_parity = 0;
  std::optional<std::uint64_t> modulus;
  std::optional<SkipRule> skip;
};

// lhs == rhs as truncated series mod modulus (absent: over the integers),
// compared cross-multiplied through coefficient order-1.
struct SeriesClaim {
  ExprPtr lhs;
  ExprPtr rhs;
  std::optional<std::uint64_t> modulus;
  std::uint64_t order = 1;
};

using CongruenceClaim = std::variant<VanishingClaim, RelationClaim, SeriesClaim>;

struct FailureWitness {
  std::uint64_t n = 0;  // sequence index n, or coefficient index for series claims
  BigInt lhs;
  BigInt rhs;
};

struct Certificate {
  CongruenceClaim claim;
  std::uint64_t n_max = 0;  // largest n (or coefficient index) checked
  bool pass = false;
  std::optional<FailureWitness> first_failure;
  double elapsed_ms = 0.0;
  bool empirical = false;  // set on scanner output
};

struct Limits {
  std::uint64_t order_ceiling = 300000;
};

namespace detail {

inline void check_ceiling(std::uint64_t needed, const Limits& limits, const std::string& what) {
  if (needed > limits.order_ceiling)
    throw std::invalid_argument(what + " needs order " + std::to_string(needed) +
                                ", above the ceiling " + std::to_string(limits.order_ceiling) +
                                " (raise --order-ceiling)");
}

class Stopwatch {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

}  // namespace detail

/* Sequence values at the given indices.  The series backend builds the
 * generating function once (natively modular when a modulus is given); the
 * oracle backend fills the combinatorial table.  Representation-count and
 * triangular-count sequences only exist on the oracle side. */
inline std::vector<BigInt> evaluate_sequence(const SequenceRef& seq,
                                             const std::vector<std::uint64_t>& indices,
                                             std::optional<std::uint64_t> modulus,
                                             const Limits& limits) {
  if (indices.empty()) return {};
  const std::uint64_t max_index = *std::max_element(indices.begin(), indices.end());
  detail::check_ceiling(max_index + 1, limits,
                        seq_kind_name(seq.kind) + "_" + std::to_string(seq.k));
  const std::size_t length = static_cast<std::size_t>(max_index) + 1;

  std::vector<BigInt> out;
  out.reserve(indices.size());
  const Backend backend = seq.effective_backend();

  if (backend == Backend::Series) {
    if (seq.kind != SeqKind::Pod)
      throw std::invalid_argument("sequence " + seq_kind_name(seq.kind) +
                                  " has no series backend; use the oracle");
    if (modulus) {
      const Series<ModRing> s = pod_gen(seq.k, ModRing(*modulus), length);
      for (std::uint64_t i : indices) out.emplace_back(s[static_cast<std::size_t>(i)]);
    } else {
      const Series<IntegerRing> s = pod_gen(seq.k, IntegerRing{}, length);
      for (std::uint64_t i : indices) out.push_back(s[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  SequenceTable table;
  switch (seq.kind) {
    case SeqKind::Pod: table = pod_table(seq.k, length); break;
    case SeqKind::Rsq: table = square_table(seq.k, length); break;
    case SeqKind::Tri: table = tri_table(seq.k, length); break;
  }
  for (std::uint64_t i : indices) {
    BigInt v = table.values[static_cast<std::size_t>(i)];
    if (modulus) {
      v %= *modulus;
      if (v < 0) v += *modulus;
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline Certificate verify_vanishing(const VanishingClaim& claim, std::uint64_t n_max,
                                    const Limits& limits) {
  detail::Stopwatch timer;
  std::vector<std::uint64_t> ns, indices;
  for (std::uint64_t n = 0; n <= n_max; n++) {
    if (claim.skip && claim.skip->excludes(n)) continue;
    ns.push_back(n);
    indices.push_back(claim.ap.at(n));
  }
  const std::vector<BigInt> values =
      evaluate_sequence(claim.seq, indices, claim.modulus, limits);
  Certificate cert{claim, n_max, true, std::nullopt, 0.0, false};
  for (std::size_t i = 0; i < values.size(); i++) {
    if (!values[i].is_zero()) {
      cert.pass = false;
      cert.first_failure = FailureWitness{ns[i], values[i], BigInt(0)};
      break;
    }
  }
  cert.elapsed_ms = timer.ms();
  return cert;
}

inline Certificate verify_relation(const RelationClaim& claim, std::uint64_t n_max,
                                   const Limits& limits) {
  detail::Stopwatch timer;
  std::vector<std::uint64_t> ns, left_idx, right_idx;
  for (std::uint64_t n = 0; n <= n_max; n++) {
    if (claim.skip && claim.skip->excludes(n)) continue;
    ns.push_back(n);
    left_idx.push_back(claim.left.at(n));
    right_idx.push_back(claim.right.at(n));
  }
  const std::vector<BigInt> lhs =
      evaluate_sequence(claim.left_seq, left_idx, claim.modulus, limits);
  const std::vector<BigInt> rhs =
      evaluate_sequence(claim.right_seq, right_idx, claim.modulus, limits);

  Certificate cert{claim, n_max, true, std::nullopt, 0.0, false};
  for (std::size_t i = 0; i < ns.size(); i++) {
    BigInt expect = claim.coeff * rhs[i];
    if (claim.sign_parity != 0 && ns[i] % 2 == 1) expect = -expect;
    BigInt got = lhs[i];
    if (claim.modulus) {
      expect %= *claim.modulus;
      if (expect < 0) expect += *claim.modulus;
    }
    if (got != expect) {
      cert.pass = false;
      cert.first_failure = FailureWitness{ns[i], std::move(got), std::move(expect)};
      break;
    }
  }
  cert.elapsed_ms = timer.ms();
  return cert;
}

inline Certificate verify_series(const SeriesClaim& claim, const Limits& limits) {
  detail::Stopwatch timer;
  if (claim.order < 1) throw std::invalid_argument("series claim needs order >= 1");
  const std::size_t order = static_cast<std::size_t>(claim.order);
  const std::size_t deepest =
      std::max(max_required_order(claim.lhs, order), max_required_order(claim.rhs, order));
  detail::check_ceiling(deepest, limits, "series claim");

  Certificate cert{claim, claim.order - 1, true, std::nullopt, 0.0, false};
  auto finish = [&](const auto& agreement, const auto& ring) {
    if (!agreement.ok) {
      cert.pass = false;
      cert.first_failure =
          FailureWitness{agreement.index, BigInt(agreement.lhs), BigInt(agreement.rhs)};
    }
    (void)ring;
  };
  if (claim.modulus) {
    const ModRing ring(*claim.modulus);
    finish(expr_sides_agree(claim.lhs, claim.rhs, ring, order), ring);
  } else {
    const IntegerRing ring{};
    finish(expr_sides_agree(claim.lhs, claim.rhs, ring, order), ring);
  }
  cert.elapsed_ms = timer.ms();
  return cert;
}

// n_max applies to the sequence-indexed variants; series claims carry their
// own order.
inline Certificate verify(const CongruenceClaim& claim, std::uint64_t n_max,
                          const Limits& limits) {
  if (const auto* v = std::get_if<VanishingClaim>(&claim)) return verify_vanishing(*v, n_max, limits);
  if (const auto* r = std::get_if<RelationClaim>(&claim)) return verify_relation(*r, n_max, limits);
  return verify_series(std::get<SeriesClaim>(claim), limits);
}

/* Sign bookkeeping for progressions pulled out of (-1)^n-signed series.  For
 * odd step A, the coefficient of q^{An+B} in sum (-1)^n f(n) q^n carries
 * (-1)^{An+B} = (-1)^B (-1)^n, so
 *   sum (-1)^n f(An+B) q^n = (-1)^B * extract(signed series, B, A).           */
inline ExprPtr signed_pod_progression_expr(std::uint64_t k, const Progression& ap) {
  if (ap.step % 2 == 0)
    throw std::invalid_argument("signed progression extraction needs an odd step");
  ExprPtr e = ex::extract(ex::pod(k, true), ap.offset, ap.step);
  return ap.offset % 2 == 1 ? ex::neg(std::move(e)) : e;
}

// The same series computed concretely: sum_n (-1)^n pod_k(step n + offset) q^n.
template <class Ring>
Series<Ring> signed_pod_progression_series(std::uint64_t k, const Progression& ap, Ring ring,
                                           std::size_t order) {
  if (ap.step % 2 == 0)
    throw std::invalid_argument("signed progression extraction needs an odd step");
  const std::size_t need = static_cast<std::size_t>(ap.step) * (order - 1) + ap.offset + 1;
  Series<Ring> base = signed_pod_gen(k, ring, need);
  Series<Ring> got = base.extract_progression(ap.offset, ap.step).truncated(order);
  return ap.offset % 2 == 1 ? -got : got;
}

/* Dual-route check of "sum (-1)^n pod_k(An+B) q^n == rhs (mod M)": once as a
 * series identity through the extraction machinery, once coefficientwise
 * against sequence values read off directly.  The two routes share no sign or
 * reindexing logic, so a bookkeeping slip in either one shows up as a
 * disagreement.  Both must pass. */
inline Certificate verify_progression_congruence(std::uint64_t k, const Progression& ap,
                                                 const ExprPtr& rhs, std::uint64_t modulus,
                                                 std::uint64_t order, const Limits& limits) {
  detail::Stopwatch timer;
  SeriesClaim claim{signed_pod_progression_expr(k, ap), rhs, modulus, order};
  Certificate cert = verify_series(claim, limits);

  if (cert.pass) {
    // coefficientwise route
    const ModRing ring(modulus);
    const std::size_t n = static_cast<std::size_t>(order);
    const Series<ModRing> rhs_series = eval_expr(rhs, ring, n).collapsed();
    std::vector<std::uint64_t> ns(n);
    for (std::size_t i = 0; i < n; i++) ns[i] = ap.at(i);
    const std::vector<BigInt> pod_values =
        evaluate_sequence({SeqKind::Pod, k, Backend::Series}, ns, modulus, limits);
    for (std::size_t i = 0; i < n; i++) {
      BigInt expect = pod_values[i];
      if (i % 2 == 1) expect = (modulus - expect % modulus) % modulus;  // (-1)^n
      if (BigInt(rhs_series[i]) != expect) {
        cert.pass = false;
        cert.first_failure = FailureWitness{i, BigInt(rhs_series[i]), std::move(expect)};
        break;
      }
    }
  }
  cert.elapsed_ms = timer.ms();
  return cert;
}

/* ---- Family instantiation ------------------------------------------------
 * Each family bakes a hypothesis check into claim construction: a parameter
 * set that fails the hypotheses is rejected with a diagnostic rather than
 * silently producing a wrong claim. */

using FamilyParams = std::map<std::string, std::uint64_t>;

namespace detail {

inline std::uint64_t need_param(const FamilyParams& params, const std::string& name,
                                const std::string& family) {
  auto it = params.find(name);
  if (it == params.end())
    throw std::invalid_argument("family " + family + ": missing parameter '" + name + "'");
  return it->second;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; d++)
    if (p % d == 0) return false;
  return true;
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < exp; i++) r *= base;
  return r;
}

// (num + add) / 8 with exactness and uint64 range enforced.
inline std::uint64_t exact_offset_div8(const BigInt& numerator, const std::string& family) {
  if (numerator % 8 != 0)
    throw std::invalid_argument("family " + family + ": offset numerator " + numerator.str() +
                                " is not divisible by 8");
  const BigInt off = numerator / 8;
  if (off < 0 || off > BigInt((std::numeric_limits<std::uint64_t>::max)() >> 1))
    throw std::invalid_argument("family " + family + ": offset " + off.str() +
                                " is outside the verifiable range");
  return off.convert_to<std::uint64_t>();
}

inline std::uint64_t narrow_step(const BigInt& step, const std::string& family) {
  if (step < 1 || step > BigInt((std::numeric_limits<std::uint64_t>::max)() >> 1))
    throw std::invalid_argument("family " + family + ": step " + step.str() +
                                " is outside the verifiable range");
  return step.convert_to<std::uint64_t>();
}

}  // namespace detail

/* Families:
 *   pod3-mod9-powers   alpha >= 1: pod_3(3^{2a+2} n + (23*3^{2a+1}+3)/8) == 0 (mod 9)
 *   pod3-mod7-powers   alpha >= 1: pod_3(7^{2a+2} n + (c*7^{2a+1}+3)/8) == 0 (mod 7), c in {3,19,27}
 *   pod3-mod7-cubic    prime p == 6 (mod 7): pod_3(7p^3 n' + ...) == 0 (mod 7) along the
 *                      progression N = 8n + r0 with p-divisible N skipped
 *   pod3-mod7-deep     prime p, alpha: exponent 14a+13 when p == 1 (mod 7), 12a+11 otherwise
 *   pod3-mod11-powers  prime p, r, a, alpha with pr == 7 (mod 8), p not dividing 8a+r
 *   pod-mod3-powers    alpha >= 0: pod(3^{2a+3} n + (23*3^{2a+2}+1)/8) == 0 (mod 3)    */
inline std::vector<CongruenceClaim> instantiate_family(const std::string& family,
                                                       const FamilyParams& params) {
  using detail::big_pow;
  using detail::exact_offset_div8;
  using detail::narrow_step;
  using detail::need_param;

  if (family == "pod3-mod9-powers") {
    const std::uint64_t alpha = need_param(params, "alpha", family);
    if (alpha < 1) throw std::invalid_argument("family " + family + ": alpha must be >= 1");
    const BigInt step = big_pow(3, 2 * alpha + 2);
    const std::uint64_t offset = exact_offset_div8(23 * big_pow(3, 2 * alpha + 1) + 3, family);
    return {VanishingClaim{{SeqKind::Pod, 3, std::nullopt},
                           {narrow_step(step, family), offset},
                           9,
                           std::nullopt}};
  }

  if (family == "pod3-mod7-powers") {
    const std::uint64_t alpha = need_param(params, "alpha", family);
    if (alpha < 1) throw std::invalid_argument("family " + family + ": alpha must be >= 1");
    std::vector<CongruenceClaim> claims;
    for (std::uint64_t c : {3, 19, 27}) {
      const BigInt step = big_pow(7, 2 * alpha + 2);
      const std::uint64_t offset = exact_offset_div8(c * big_pow(7, 2 * alpha + 1) + 3, family);
      claims.push_back(VanishingClaim{{SeqKind::Pod, 3, std::nullopt},
                                      {narrow_step(step, family), offset},
                                      7,
                                      std::nullopt});
    }
    return claims;
  }

  if (family == "pod3-mod7-cubic") {
    const std::uint64_t p = need_param(params, "p", family);
    if (!detail::is_prime(p))
      throw std::invalid_argument("family " + family + ": p = " + std::to_string(p) +
                                  " is not prime");
    if (p % 7 != 6)
      throw std::invalid_argument("family " + family + ": p = " + std::to_string(p) + " is " +
                                  std::to_string(p % 7) + " (mod 7), need 6");
    // Walk N through 8n + r0 with p^3 N == 3 (mod 8), i.e. r0 = 3p mod 8 (p^2 == 1 mod 8),
    // and skip the n that make N divisible by p.
    const std::uint64_t r0 = (3 * p) % 8;
    const BigInt p3 = big_pow(p, 3);
    const std::uint64_t step = narrow_step(7 * p3, family);
    const std::uint64_t offset = exact_offset_div8(7 * p3 * r0 + 3, family);
    // N = 8n + r0 == 0 (mod p)  <=>  n == -r0 * 8^{-1} (mod p)
    std::uint64_t skip_res = 0;
    for (std::uint64_t n = 0; n < p; n++)
      if ((8 * n + r0) % p == 0) skip_res = n;
    return {VanishingClaim{{SeqKind::Pod, 3, std::nullopt},
                           {step, offset},
                           7,
                           SkipRule{p, {skip_res}}}};
  }

  if (family == "pod3-mod7-deep") {
    const std::uint64_t p = need_param(params, "p", family);
    const std::uint64_t alpha = need_param(params, "alpha", family);
    if (!detail::is_prime(p) || p < 3)
      throw std::invalid_argument("family " + family + ": p = " + std::to_string(p) +
                                  " is not an odd prime");
    if (p % 7 == 0)
      throw std::invalid_argument("family " + family + ": p must not be 7");
    const std::uint64_t exponent = (p % 7 == 1) ? 14 * alpha + 13 : 12 * alpha + 11;
    const std::uint64_t r0 = (3 * p) % 8;  // pN == 3 (mod 8) with N = 8n + r0
    const BigInt pe = big_pow(p, exponent);
    const std::uint64_t step = narrow_step(7 * pe, family);
    const std::uint64_t offset = exact_offset_div8(7 * pe * r0 + 3, family);
    std::uint64_t skip_res = 0;
    for (std::uint64_t n = 0; n < p; n++)
      if ((8 * n + r0) % p == 0) skip_res = n;
    return {VanishingClaim{{SeqKind::Pod, 3, std::nullopt},
                           {step, offset},
                           7,
                           SkipRule{p, {skip_res}}}};
  }

  if (family == "pod3-mod11-powers") {
    const std::uint64_t p = need_param(params, "p", family);
    const std::uint64_t alpha = need_param(params, "alpha", family);
    const std::uint64_t r = need_param(params, "r", family);
    const std::uint64_t a = need_param(params, "a", family);
    if (!detail::is_prime(p) || p < 3)
      throw std::invalid_argument("family " + family + ": p = " + std::to_string(p) +
                                  " is not an odd prime");
    if (p % 11 == 0) throw std::invalid_argument("family " + family + ": p must not be 11");
    if (r < 1 || r > 7)
      throw std::invalid_argument("family " + family + ": r = " + std::to_string(r) +
                                  " must lie in 1..7");
    if ((p * r) % 8 != 7)
      throw std::invalid_argument("family " + family + ": pr = " + std::to_string(p * r) +
                                  " is " + std::to_string((p * r) % 8) + " (mod 8), need 7");
    if (a >= p)
      throw std::invalid_argument("family " + family + ": a = " + std::to_string(a) +
                                  " must lie in 0..p-1");
    if ((8 * a + r) % p == 0)
      throw std::invalid_argument("family " + family + ": p divides 8a + r = " +
                                  std::to_string(8 * a + r));
    // p^5 == 1 (mod 11) exactly when p is an 11th-power residue pattern
    // {1,3,4,5,9}; those primes need the tall exponent.
    const std::uint64_t pm = p % 11;
    const bool fifth_power_one = pm == 1 || pm == 3 || pm == 4 || pm == 5 || pm == 9;
    const std::uint64_t exponent = fifth_power_one ? 22 * alpha + 21 : 4 * alpha + 3;
    const BigInt pe = big_pow(p, exponent);
    const std::uint64_t step = narrow_step(11 * pe * p, family);
    const std::uint64_t offset = exact_offset_div8((88 * a + 11 * r) * pe + 3, family);
    return {VanishingClaim{{SeqKind::Pod, 3, std::nullopt}, {step, offset}, 11, std::nullopt}};
  }

  if (family == "pod-mod3-powers") {
    const std::uint64_t alpha = need_param(params, "alpha", family);
    const BigInt step = big_pow(3, 2 * alpha + 3);
    const std::uint64_t offset = exact_offset_div8(23 * big_pow(3, 2 * alpha + 2) + 1, family);
    return {VanishingClaim{{SeqKind::Pod, 1, std::nullopt},
                           {narrow_step(step, family), offset},
                           3,
                           std::nullopt}};
  }

  throw std::invalid_argument("unknown family '" + family + "'");
}

/* ---- Scanner ---------------------------------------------------------------
 * Exhaustive sweep over progressions (A, B), A <= step_max, 0 <= B < A,
 * reporting those with seq(An+B) == 0 (mod modulus) for every n <= n_max.
 * Results are marked empirical -- a scan hit is a candidate, not a theorem.
 * A passing (A, B) makes every refinement (kA, B + jA) pass trivially, so
 * refinements are suppressed unless requested. */
inline std::vector<Certificate> scan_vanishing(const SequenceRef& seq, std::uint64_t modulus,
                                               std::uint64_t step_max, std::uint64_t n_max,
                                               const Limits& limits,
                                               bool keep_refinements = false) {
  if (step_max < 1) throw std::invalid_argument("scan needs step_max >= 1");
  const std::uint64_t max_index = step_max * n_max + (step_max - 1);
  std::vector<std::uint64_t> all(static_cast<std::size_t>(max_index) + 1);
  for (std::size_t i = 0; i < all.size(); i++) all[i] = i;
  const std::vector<BigInt> values = evaluate_sequence(seq, all, modulus, limits);
  std::vector<bool> zero(values.size());
  for (std::size_t i = 0; i < values.size(); i++) zero[i] = values[i].is_zero();

  std::set<std::pair<std::uint64_t, std::uint64_t>> passing;
  for (std::uint64_t A = 1; A <= step_max; A++)
    for (std::uint64_t B = 0; B < A; B++) {
      bool ok = true;
      for (std::uint64_t n = 0; n <= n_max; n++)
        if (!zero[static_cast<std::size_t>(A * n + B)]) {
          ok = false;
          break;
        }
      if (ok) passing.insert({A, B});
    }

  std::vector<Certificate> out;
  for (const auto& [A, B] : passing) {
    if (!keep_refinements) {
      bool refinement = false;
      for (std::uint64_t d = 1; d < A && !refinement; d++)
        if (A % d == 0 && passing.count({d, B % d})) refinement = true;
      if (refinement) continue;
    }
    Certificate cert{VanishingClaim{seq, {A, B}, modulus, std::nullopt},
                     n_max,
                     true,
                     std::nullopt,
                     0.0,
                     true};
    out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace qcert
