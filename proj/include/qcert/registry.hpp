#pragma once

#include "claims.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qcert {

/* The built-in catalogue of verified statements.  Each item reproduces one
 * identity, congruence, or sanity bound end to end and reports certificates
 * (claim-shaped results) plus plain checks (named boolean facts that are not
 * claim-shaped, e.g. density bounds).  Items marked slow need tens of seconds
 * and only run when asked. */

struct PlainCheck {
  std::string what;
  bool pass = false;
  std::string detail;
};

struct ItemResult {
  std::vector<Certificate> certificates;
  std::vector<PlainCheck> checks;

  bool all_pass() const {
    for (const auto& c : certificates)
      if (!c.pass) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct RegistryItem {
  std::string id;
  std::string statement;
  bool slow = false;
  std::function<ItemResult(const Limits&)> run;
};

namespace detail {

inline ItemResult one_cert(Certificate cert) {
  ItemResult res;
  res.certificates.push_back(std::move(cert));
  return res;
}

inline VanishingClaim vanishing(std::uint64_t k, std::uint64_t step, std::uint64_t offset,
                                std::uint64_t modulus) {
  return VanishingClaim{{SeqKind::Pod, k, std::nullopt}, {step, offset}, modulus, std::nullopt};
}

inline RelationClaim pod_relation(std::uint64_t lk, Progression left, std::uint64_t rk,
                                  Progression right, BigInt coeff, std::uint64_t modulus) {
  return RelationClaim{{SeqKind::Pod, lk, std::nullopt}, left,
                       {SeqKind::Pod, rk, std::nullopt}, right,
                       std::move(coeff),              0,
                       modulus,                       std::nullopt};
}

// Count of indices n < length with pod_k(n) == 0 (mod modulus).
inline std::uint64_t divisible_count(std::uint64_t k, std::uint64_t modulus,
                                     std::size_t length) {
  const Series<ModRing> s = pod_gen(k, ModRing(modulus), length);
  std::uint64_t count = 0;
  for (std::size_t n = 0; n < length; n++)
    if (s[n] == 0) count++;
  return count;
}

}  // namespace detail

inline std::vector<RegistryItem> builtin_registry() {
  using detail::one_cert;
  using detail::pod_relation;
  using detail::vanishing;

  std::vector<RegistryItem> items;
  auto add = [&](std::string id, std::string statement, bool slow,
                 std::function<ItemResult(const Limits&)> run) {
    items.push_back({std::move(id), std::move(statement), slow, std::move(run)});
  };

  // Shared building blocks: s = A(q^3), t = psi(q^9).
  const ExprPtr s = ex::theta_a_at(3);
  const ExprPtr t = ex::psi_at(9);

  // ---- exact theta-quotient identities ------------------------------------

  add("exact.psi-dissection", "psi(q) = A(q^3) + q psi(q^9)", false, [=](const Limits& limits) {
    SeriesClaim claim{ex::psi(), ex::add({s, ex::mul({ex::qpow(1), t})}), std::nullopt, 2000};
    return one_cert(verify_series(claim, limits));
  });

  add("exact.st-cube-identity",
      "(A(q^3)^3 + q^3 psi(q^9)^3) psi(q^9) = psi(q^3)^4", false, [=](const Limits& limits) {
        ExprPtr lhs = ex::mul(
            {ex::add({ex::pow(s, 3), ex::mul({ex::qpow(3), ex::pow(t, 3)})}), t});
        SeriesClaim claim{lhs, ex::pow(ex::psi_at(3), 4), std::nullopt, 2000};
        return one_cert(verify_series(claim, limits));
      });

  add("exact.psi-reciprocal-identity",
      "psi(q) psi(q^9) (A(q^3)^2 - q A(q^3) psi(q^9) + q^2 psi(q^9)^2) = psi(q^3)^4", false,
      [=](const Limits& limits) {
        ExprPtr quad = ex::sub(
            ex::add({ex::pow(s, 2), ex::mul({ex::qpow(2), ex::pow(t, 2)})}),
            ex::mul({ex::qpow(1), s, t}));
        ExprPtr lhs = ex::mul({ex::psi(), t, quad});
        SeriesClaim claim{lhs, ex::pow(ex::psi_at(3), 4), std::nullopt, 2000};
        return one_cert(verify_series(claim, limits));
      });

  add("exact.pod-3n2-theta",
      "sum (-1)^n pod(3n+2) q^n = psi(q^3)^3 / psi(q)^4", false, [](const Limits& limits) {
        ExprPtr rhs = ex::mul({ex::pow(ex::psi_at(3), 3), ex::inv(ex::pow(ex::psi(), 4))});
        SeriesClaim claim{signed_pod_progression_expr(1, {3, 2}), rhs, std::nullopt, 2000};
        ItemResult res = one_cert(verify_series(claim, limits));

        // Same series coefficientwise against the partition-counting oracle.
        const std::size_t upto = 300;
        const SequenceTable table = pod_table(1, 3 * (upto - 1) + 3);
        const Series<IntegerRing> lhs =
            signed_pod_progression_series(1, {3, 2}, IntegerRing{}, upto);
        bool ok = true;
        std::string detail = "n < " + std::to_string(upto);
        for (std::size_t n = 0; n < upto; n++) {
          BigInt expect = table.values[3 * n + 2];
          if (n % 2 == 1) expect = -expect;
          if (lhs[n] != expect) {
            ok = false;
            detail = "mismatch at n = " + std::to_string(n);
            break;
          }
        }
        res.checks.push_back({"series route matches the direct partition count", ok, detail});
        return res;
      });

  add("exact.pod-backends-agree",
      "pod_k series coefficients match the partition-counting table and pod_k = pod_1^k",
      false, [](const Limits& limits) {
        (void)limits;
        ItemResult res;
        for (std::uint64_t k : {1, 2, 3}) {
          const std::size_t upto = 400;
          const Series<IntegerRing> series = pod_gen(k, IntegerRing{}, upto);
          const SequenceTable table = pod_table(k, upto);
          bool ok = true;
          std::string detail = "n < " + std::to_string(upto);
          for (std::size_t n = 0; n < upto; n++)
            if (series[n] != table.values[n]) {
              ok = false;
              detail = "mismatch at n = " + std::to_string(n);
              break;
            }
          res.checks.push_back(
              {"pod_" + std::to_string(k) + " series matches its table", ok, detail});
        }
        const std::size_t order = 500;
        const Series<IntegerRing> base = pod_gen(1, IntegerRing{}, order);
        bool power_ok = pod_gen(2, IntegerRing{}, order) == base.pow(2) &&
                        pod_gen(3, IntegerRing{}, order) == base.pow(3);
        res.checks.push_back({"pod_k generating function is the k-th power of pod_1's",
                              power_ok, "orders up to " + std::to_string(order)});
        return res;
      });

  // ---- prime-power product congruences ------------------------------------

  for (std::uint64_t p : {3, 5, 7}) {
    for (std::uint64_t alpha : {1, 2}) {
      std::uint64_t mod = 1;
      for (std::uint64_t i = 0; i < alpha; i++) mod *= p;
      const std::uint64_t inner = mod / p;
      add("poch-power.p" + std::to_string(p) + ".a" + std::to_string(alpha),
          "(q;q)^" + std::to_string(mod) + " == (q^" + std::to_string(p) + ";q^" +
              std::to_string(p) + ")^" + std::to_string(inner) + " (mod " +
              std::to_string(mod) + ")",
          false, [=](const Limits& limits) {
            ExprPtr lhs = ex::pow(ex::poch(1, 1, -1), mod);
            ExprPtr rhs = inner == 1
                              ? ex::subst_power(ex::poch(1, 1, -1), p)
                              : ex::pow(ex::subst_power(ex::poch(1, 1, -1), p), inner);
            return one_cert(verify_series({lhs, rhs, mod, 300}, limits));
          });
    }
  }

  // ---- signed pod_3 progressions mod 9 ------------------------------------

  add("mod9.pod3.3n", "sum (-1)^n pod_3(3n) q^n == psi(q^3)/psi(q)^4 (mod 9)", false,
      [](const Limits& limits) {
        ExprPtr rhs = ex::mul({ex::psi_at(3), ex::inv(ex::pow(ex::psi(), 4))});
        return one_cert(verify_progression_congruence(3, {3, 0}, rhs, 9, 1000, limits));
      });

  add("mod9.pod3.3n1", "sum (-1)^n pod_3(3n+1) q^n == 3 psi(q) A(q)^2 (mod 9)", false,
      [](const Limits& limits) {
        ExprPtr rhs = ex::mul({ex::constant(3), ex::psi(), ex::pow(ex::theta_a(), 2)});
        return one_cert(verify_progression_congruence(3, {3, 1}, rhs, 9, 1000, limits));
      });

  add("mod9.pod3.3n2", "sum (-1)^n pod_3(3n+2) q^n == -3 psi(q^3) psi(q) A(q) (mod 9)", false,
      [](const Limits& limits) {
        ExprPtr rhs = ex::neg(
            ex::mul({ex::constant(3), ex::psi_at(3), ex::psi(), ex::theta_a()}));
        return one_cert(verify_progression_congruence(3, {3, 2}, rhs, 9, 1000, limits));
      });

  // ---- iterated 3-dissections mod 9 ----------------------------------------

  add("mod9.pod3.9n6", "sum (-1)^n pod_3(9n+6) q^n == psi(q^3)^4/psi(q)^7 (mod 9)", false,
      [](const Limits& limits) {
        ExprPtr rhs = ex::mul({ex::pow(ex::psi_at(3), 4), ex::inv(ex::pow(ex::psi(), 7))});
        return one_cert(verify_progression_congruence(3, {9, 6}, rhs, 9, 600, limits));
      });

  add("mod9.pod3.27n24", "sum (-1)^n pod_3(27n+24) q^n == psi(q^3)^5/psi(q)^8 (mod 9)", false,
      [](const Limits& limits) {
        ExprPtr rhs = ex::mul({ex::pow(ex::psi_at(3), 5), ex::inv(ex::pow(ex::psi(), 8))});
        return one_cert(verify_progression_congruence(3, {27, 24}, rhs, 9, 600, limits));
      });

  add("mod9.pod3.81n51", "sum (-1)^n pod_3(81n+51) q^n == -psi(q^3)^4/psi(q)^7 (mod 9)", false,
      [](const Limits& limits) {
        ExprPtr rhs = ex::neg(
            ex::mul({ex::pow(ex::psi_at(3), 4), ex::inv(ex::pow(ex::psi(), 7))}));
        return one_cert(verify_progression_congruence(3, {81, 51}, rhs, 9, 600, limits));
      });

  add("mod9.pod3.243n213", "sum (-1)^n pod_3(243n+213) q^n == -psi(q^3)^5/psi(q)^8 (mod 9)",
      false, [](const Limits& limits) {
        ExprPtr rhs = ex::neg(
            ex::mul({ex::pow(ex::psi_at(3), 5), ex::inv(ex::pow(ex::psi(), 8))}));
        return one_cert(verify_progression_congruence(3, {243, 213}, rhs, 9, 600, limits));
      });

  add("mod9.pod8-progression", "coefficient of q^(3n+2) in 1/psi(q)^8 is divisible by 9",
      false, [](const Limits& limits) {
        ExprPtr lhs = ex::extract(ex::inv(ex::pow(ex::psi(), 8)), 2, 3);
        return one_cert(verify_series({lhs, ex::constant(0), 9, 500}, limits));
      });

  add("mod9.pod3.family.81n78", "pod_3(81n+78) == 0 (mod 9)", false,
      [](const Limits& limits) {
        const auto claims = instantiate_family("pod3-mod9-powers", {{"alpha", 1}});
        return one_cert(verify(claims.at(0), 399, limits));
      });

  add("mod9.pod3.family.729n699", "pod_3(729n+699) == 0 (mod 9)", false,
      [](const Limits& limits) {
        const auto claims = instantiate_family("pod3-mod9-powers", {{"alpha", 2}});
        return one_cert(verify(claims.at(0), 49, limits));
      });

  add("mod9.pod3.reflect.81-9", "pod_3(81n+51) == -pod_3(9n+6) (mod 9)", false,
      [](const Limits& limits) {
        return one_cert(verify_relation(
            pod_relation(3, {81, 51}, 3, {9, 6}, BigInt(-1), 9), 149, limits));
      });

  add("mod9.pod3.reflect.27-243", "pod_3(27n+24) == -pod_3(243n+213) (mod 9)", false,
      [](const Limits& limits) {
        return one_cert(verify_relation(
            pod_relation(3, {27, 24}, 3, {243, 213}, BigInt(-1), 9), 149, limits));
      });

  // ---- signed pod progressions mod 9 ---------------------------------------

  add("mod9.pod.9n2", "sum (-1)^n pod(9n+2) q^n == A(q)^2 psi(q^3)^2/psi(q)^5 (mod 9)", false,
      [](const Limits& limits) {
        ExprPtr rhs = ex::mul({ex::pow(ex::theta_a(), 2), ex::pow(ex::psi_at(3), 2),
                               ex::inv(ex::pow(ex::psi(), 5))});
        return one_cert(verify_progression_congruence(1, {9, 2}, rhs, 9, 800, limits));
      });

  add("mod9.pod.9n5", "sum (-1)^n pod(9n+5) q^n == 4 A(q) psi(q^3)^3/psi(q)^5 (mod 9)", false,
      [](const Limits& limits) {
        ExprPtr rhs = ex::mul({ex::constant(4), ex::theta_a(), ex::pow(ex::psi_at(3), 3),
                               ex::inv(ex::pow(ex::psi(), 5))});
        return one_cert(verify_progression_congruence(1, {9, 5}, rhs, 9, 800, limits));
      });

  add("mod9.pod.9n8", "sum (-1)^n pod(9n+8) q^n == psi(q^3)^4/psi(q)^5 (mod 9)", false,
      [](const Limits& limits) {
        ExprPtr rhs = ex::mul({ex::pow(ex::psi_at(3), 4), ex::inv(ex::pow(ex::psi(), 5))});
        return one_cert(verify_progression_congruence(1, {9, 8}, rhs, 9, 800, limits));
      });

  // ---- pod_3 versus pod ------------------------------------------------------

  add("mod9.pod3-vs-pod.6x", "pod_3(3n+2) == 6 pod(9n+5) (mod 9)", false,
      [](const Limits& limits) {
        return one_cert(verify_relation(
            pod_relation(3, {3, 2}, 1, {9, 5}, BigInt(6), 9), 999, limits));
      });

  add("mod18.pod3-vs-pod.3x", "pod_3(3n+1) == 3 pod(9n+2) (mod 18)", false,
      [](const Limits& limits) {
        return one_cert(verify_relation(
            pod_relation(3, {3, 1}, 1, {9, 2}, BigInt(3), 18), 999, limits));
      });

  // ---- triangular-number progressions --------------------------------------

  add("tri4.progression-shift", "t_4(pn + (p-1)/2) == t_4(n) (mod p) for p in {3,5,7,11,13}",
      false, [](const Limits& limits) {
        ItemResult res;
        for (std::uint64_t p : {3, 5, 7, 11, 13}) {
          RelationClaim claim{{SeqKind::Tri, 4, std::nullopt}, {p, (p - 1) / 2},
                              {SeqKind::Tri, 4, std::nullopt}, {1, 0},
                              BigInt(1),                       0,
                              p,                               std::nullopt};
          res.certificates.push_back(verify_relation(claim, 299, limits));
        }
        return res;
      });

  add("tri8.progression-shift", "t_8(pn + p - 1) == t_8(n) (mod p) for p in {3,5,7,11,13}",
      false, [](const Limits& limits) {
        ItemResult res;
        for (std::uint64_t p : {3, 5, 7, 11, 13}) {
          RelationClaim claim{{SeqKind::Tri, 8, std::nullopt}, {p, p - 1},
                              {SeqKind::Tri, 8, std::nullopt}, {1, 0},
                              BigInt(1),                       0,
                              p,                               std::nullopt};
          res.certificates.push_back(verify_relation(claim, 299, limits));
        }
        return res;
      });

  add("squares-from-triangles",
      "r_k(8n+k) is a fixed multiple of t_k(n) for k = 1..7", false,
      [](const Limits& limits) {
        ItemResult res;
        for (std::uint64_t k = 1; k <= 7; k++) {
          RelationClaim claim{{SeqKind::Rsq, k, std::nullopt}, {8, k},
                              {SeqKind::Tri, k, std::nullopt}, {1, 0},
                              rk_tk_factor(k),                 0,
                              std::nullopt,                    std::nullopt};
          res.certificates.push_back(verify_relation(claim, 299, limits));
        }
        return res;
      });

  // ---- sums-of-squares scaling under p^2 ------------------------------------

  add("r3.prime-power-scaling",
      "r_3(p^2 n) scales by an explicit factor split by the residue of n", false,
      [](const Limits& limits) {
        ItemResult res;
        // Constant-factor instances: chi is fixed on each residue class.
        struct Instance {
          std::uint64_t lstep, loff, rstep, roff;
          long coeff;
        };
        // r_3(9(3m+1)) = 5 r_3(3m+1) and r_3(9(3m+2)) = 3 r_3(3m+2);
        // one more 9-scaling on top when 3 exactly divides the argument.
        const Instance r3_instances[] = {
            {27, 9, 3, 1, 5},    {27, 18, 3, 2, 3},   {81, 27, 9, 3, 4},
            {81, 54, 9, 6, 4},   {125, 25, 5, 1, 5},  {125, 50, 5, 2, 7},
            {125, 75, 5, 3, 7},  {125, 100, 5, 4, 5}, {625, 125, 25, 5, 6},
        };
        for (const auto& ins : r3_instances) {
          RelationClaim claim{{SeqKind::Rsq, 3, std::nullopt}, {ins.lstep, ins.loff},
                              {SeqKind::Rsq, 3, std::nullopt}, {ins.rstep, ins.roff},
                              BigInt(ins.coeff),               0,
                              std::nullopt,                    std::nullopt};
          res.certificates.push_back(verify_relation(claim, 59, limits));
        }
        // Full formula, recursion term included, against the table.
        const SequenceTable table = square_table(3, 80 * 625 + 1);
        bool ok = true;
        std::string detail = "p in {3,5}, exponents 1..2, n < 80";
        for (std::uint64_t p : {3, 5}) {
          for (std::uint64_t alpha : {1, 2}) {
            const std::uint64_t p2a = alpha == 1 ? p * p : p * p * p * p;
            for (std::uint64_t n = 1; n < 80 && ok; n++) {
              if (r3_scaling_formula(p, alpha, n, table) !=
                  table.values[static_cast<std::size_t>(p2a * n)]) {
                ok = false;
                detail = "mismatch at p = " + std::to_string(p) +
                         ", exponent " + std::to_string(alpha) + ", n = " + std::to_string(n);
              }
            }
          }
        }
        res.checks.push_back({"scaling formula matches the representation table", ok, detail});
        return res;
      });

  add("r7.prime-power-scaling",
      "r_7(p^2 n) scales by an explicit factor split by the residue of n", false,
      [](const Limits& limits) {
        ItemResult res;
        struct Instance {
          std::uint64_t lstep, loff, rstep, roff;
          long coeff;
        };
        const Instance r7_instances[] = {
            {27, 9, 3, 1, 253},    {27, 18, 3, 2, 235},   {81, 27, 9, 3, 244},
            {81, 54, 9, 6, 244},   {125, 25, 5, 1, 3101}, {125, 50, 5, 2, 3151},
            {125, 75, 5, 3, 3151}, {125, 100, 5, 4, 3101},
        };
        for (const auto& ins : r7_instances) {
          RelationClaim claim{{SeqKind::Rsq, 7, std::nullopt}, {ins.lstep, ins.loff},
                              {SeqKind::Rsq, 7, std::nullopt}, {ins.rstep, ins.roff},
                              BigInt(ins.coeff),               0,
                              std::nullopt,                    std::nullopt};
          res.certificates.push_back(verify_relation(claim, 59, limits));
        }
        const SequenceTable table = square_table(7, 80 * 25 + 1);
        bool ok = true;
        std::string detail = "p in {3,5}, exponent 1, n < 80 with p^2 not dividing n";
        for (std::uint64_t p : {3, 5}) {
          for (std::uint64_t n = 1; n < 80 && ok; n++) {
            if (n % (p * p) == 0) continue;
            if (r7_scaling_formula(p, 1, n, table) !=
                table.values[static_cast<std::size_t>(p * p * n)]) {
              ok = false;
              detail = "mismatch at p = " + std::to_string(p) + ", n = " + std::to_string(n);
            }
          }
        }
        res.checks.push_back({"scaling formula matches the representation table", ok, detail});
        return res;
      });

  // ---- pod_3 against representation counts ----------------------------------

  add("mod7.pod3-vs-r3", "pod_3(7n+3) == (-1)^(n+1) r_3(8n+3) (mod 7)", false,
      [](const Limits& limits) {
        RelationClaim claim{{SeqKind::Pod, 3, std::nullopt}, {7, 3},
                            {SeqKind::Rsq, 3, std::nullopt}, {8, 3},
                            BigInt(-1),                      1,
                            7,                               std::nullopt};
        return one_cert(verify_relation(claim, 799, limits));
      });

  add("mod11.pod3-vs-r7", "pod_3(11n+10) == 4 (-1)^n r_7(8n+7) (mod 11)", false,
      [](const Limits& limits) {
        RelationClaim claim{{SeqKind::Pod, 3, std::nullopt}, {11, 10},
                            {SeqKind::Rsq, 7, std::nullopt}, {8, 7},
                            BigInt(4),                       1,
                            11,                              std::nullopt};
        return one_cert(verify_relation(claim, 399, limits));
      });

  // ---- vanishing families mod 7 and 11 --------------------------------------

  add("mod7.pod3.family.2401", "pod_3(2401n + b) == 0 (mod 7) for b in {129, 815, 1158}",
      false, [](const Limits& limits) {
        ItemResult res;
        for (const auto& claim : instantiate_family("pod3-mod7-powers", {{"alpha", 1}}))
          res.certificates.push_back(verify(claim, 14, limits));
        return res;
      });

  add("mod7.pod3.cubic.p13", "pod_3(15379n + 13457) == 0 (mod 7) unless 13 divides 8n+7",
      false, [](const Limits& limits) {
        const auto claims = instantiate_family("pod3-mod7-cubic", {{"p", 13}});
        return one_cert(verify(claims.at(0), 2, limits));
      });

  add("mod7.pod3.deep.155004", "pod_3(1240029n + 155004) == 0 (mod 7) unless 3 divides 8n+1",
      true, [](const Limits& limits) {
        const auto claims = instantiate_family("pod3-mod7-deep", {{"p", 3}, {"alpha", 0}});
        return one_cert(verify(claims.at(0), 0, limits));
      });

  add("mod11.pod3.deep.26411", "pod_3(26411n + 472) == 0 (mod 11)", true,
      [](const Limits& limits) {
        const auto claims = instantiate_family(
            "pod3-mod11-powers", {{"p", 7}, {"alpha", 0}, {"r", 1}, {"a", 0}});
        return one_cert(verify(claims.at(0), 1, limits));
      });

  // ---- density lower bounds ---------------------------------------------------

  add("density.mod9", "at least 1/72 of pod_3 values below 30000 are divisible by 9", false,
      [](const Limits& limits) {
        (void)limits;
        ItemResult res;
        const std::uint64_t count = detail::divisible_count(3, 9, 30000);
        res.checks.push_back({"count of multiples of 9 among pod_3(n), n < 30000",
                              count >= 417,
                              std::to_string(count) + " found, bound needs >= 417"});
        return res;
      });

  add("density.mod7", "at least 1/784 of pod_3 values below 30000 are divisible by 7", false,
      [](const Limits& limits) {
        (void)limits;
        ItemResult res;
        const std::uint64_t count = detail::divisible_count(3, 7, 30000);
        res.checks.push_back({"count of multiples of 7 among pod_3(n), n < 30000",
                              count >= 39,
                              std::to_string(count) + " found, bound needs >= 39"});
        return res;
      });

  add("density.mod11", "at least 1/4400 of pod_3 values below 60000 are divisible by 11",
      false, [](const Limits& limits) {
        (void)limits;
        ItemResult res;
        const std::uint64_t count = detail::divisible_count(3, 11, 60000);
        res.checks.push_back({"count of multiples of 11 among pod_3(n), n < 60000",
                              count >= 14,
                              std::to_string(count) + " found, bound needs >= 14"});
        return res;
      });

  // ---- single-partition pod congruences ---------------------------------------

  add("mod3.pod.family.27n26", "pod(27n+26) == 0 (mod 3)", false, [](const Limits& limits) {
    const auto claims = instantiate_family("pod-mod3-powers", {{"alpha", 0}});
    return one_cert(verify(claims.at(0), 499, limits));
  });

  add("mod27.pod.reflect.81n17", "pod(81n+17) == 5 pod(9n+2) (mod 27)", false,
      [](const Limits& limits) {
        return one_cert(verify_relation(
            pod_relation(1, {81, 17}, 1, {9, 2}, BigInt(5), 27), 499, limits));
      });

  add("mod5.pod.135n", "pod(135n + b) == 0 (mod 5) for b in {8, 107, 116}", false,
      [](const Limits& limits) {
        ItemResult res;
        for (std::uint64_t b : {8, 107, 116})
          res.certificates.push_back(verify_vanishing(vanishing(1, 135, b, 5), 299, limits));
        return res;
      });

  add("mod7.pod.567n", "pod(567n + b) == 0 (mod 7) for b in {260, 449}", false,
      [](const Limits& limits) {
        ItemResult res;
        for (std::uint64_t b : {260, 449})
          res.certificates.push_back(verify_vanishing(vanishing(1, 567, b, 7), 79, limits));
        return res;
      });

  return items;
}

}  // namespace qcert
