#pragma once

#include "products.hpp"
#include "series.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcert {

/* Small expression trees describing how a q-series is assembled from theta
 * blocks and ring operations.  Claims carry these trees; the evaluator turns
 * one into a numerator/denominator pair so that identities with denominators
 * are checked cross-multiplied -- no coefficient is ever divided. */

enum class ExprOp {
  Psi,          // psi(q)
  ThetaA,       // A(q), the 3-dissection component
  Poch,         // an infinite product, see ProductSpec
  Pod,          // sum pod_k(n) q^n, optionally (-1)^n-signed
  QPow,         // the monomial q^e
  Const,        // an integer constant
  Neg,
  Inv,
  Pow,          // arg^k
  SubstPower,   // q -> q^k
  SubstNegate,  // q -> -q
  Extract,      // coefficients at indices r mod m, reindexed
  ShiftDown,    // divide by q^j
  Mul,
  Add,
  Sub,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprOp op;
  std::vector<ExprPtr> args;
  std::uint64_t k = 0;      // Pow / SubstPower exponent, Pod component count
  std::uint64_t r = 0;      // Extract residue
  std::uint64_t m = 0;      // Extract modulus
  std::uint64_t j = 0;      // ShiftDown amount
  std::uint64_t e = 0;      // QPow exponent
  bool signed_pod = false;  // Pod flavor
  ProductSpec poch;         // Poch parameters
  BigInt value;             // Const value
};

// Builders.  These are the only way expressions are created, so every node is
// shaped correctly by construction.
namespace ex {

inline ExprPtr psi() {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::Psi;
  return e;
}

inline ExprPtr theta_a() {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::ThetaA;
  return e;
}

inline ExprPtr poch(std::uint64_t first, std::uint64_t step, int sign) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::Poch;
  e->poch = {first, step, sign};
  return e;
}

inline ExprPtr pod(std::uint64_t k, bool signed_flavor) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::Pod;
  e->k = k;
  e->signed_pod = signed_flavor;
  return e;
}

inline ExprPtr qpow(std::uint64_t exponent) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::QPow;
  e->e = exponent;
  return e;
}

inline ExprPtr constant(BigInt v) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::Const;
  e->value = std::move(v);
  return e;
}

inline ExprPtr neg(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::Neg;
  e->args = {std::move(a)};
  return e;
}

inline ExprPtr inv(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::Inv;
  e->args = {std::move(a)};
  return e;
}

inline ExprPtr pow(ExprPtr a, std::uint64_t k) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::Pow;
  e->args = {std::move(a)};
  e->k = k;
  return e;
}

inline ExprPtr subst_power(ExprPtr a, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("subst_power needs k >= 1");
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::SubstPower;
  e->args = {std::move(a)};
  e->k = k;
  return e;
}

inline ExprPtr subst_negate(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::SubstNegate;
  e->args = {std::move(a)};
  return e;
}

inline ExprPtr extract(ExprPtr a, std::uint64_t r, std::uint64_t m) {
  if (m == 0 || r >= m) throw std::invalid_argument("extract needs 0 <= r < m");
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::Extract;
  e->args = {std::move(a)};
  e->r = r;
  e->m = m;
  return e;
}

inline ExprPtr shift_down(ExprPtr a, std::uint64_t j) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::ShiftDown;
  e->args = {std::move(a)};
  e->j = j;
  return e;
}

inline ExprPtr mul(std::vector<ExprPtr> args) {
  if (args.empty()) throw std::invalid_argument("mul needs at least one factor");
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::Mul;
  e->args = std::move(args);
  return e;
}

inline ExprPtr add(std::vector<ExprPtr> args) {
  if (args.empty()) throw std::invalid_argument("add needs at least one term");
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::Add;
  e->args = std::move(args);
  return e;
}

inline ExprPtr sub(ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->op = ExprOp::Sub;
  e->args = {std::move(a), std::move(b)};
  return e;
}

// psi(q^s) and A(q^s), spelled out often enough to deserve shorthands.
inline ExprPtr psi_at(std::uint64_t s) { return s == 1 ? psi() : subst_power(psi(), s); }
inline ExprPtr theta_a_at(std::uint64_t s) {
  return s == 1 ? theta_a() : subst_power(theta_a(), s);
}

}  // namespace ex

// A series with an optional pending denominator.  Absent denominator means 1.
// The denominator is only ever a product of theta blocks with unit constant
// term, so collapsing (when an extraction or shift forces it) stays exact.
template <class Ring>
struct FracSeries {
  Series<Ring> num;
  std::optional<Series<Ring>> den;

  Series<Ring> collapsed() const { return den ? num * den->inverse() : num; }
};

namespace detail {

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace detail

/* Evaluate an expression to the requested order.  The required order is
 * propagated top-down: extraction needs m*(order-1)+r+1 source coefficients,
 * a power substitution only ceil(order/k), everything else passes order
 * through unchanged. */
template <class Ring>
FracSeries<Ring> eval_expr(const ExprPtr& node, const Ring& ring, std::size_t order) {
  if (!node) throw std::invalid_argument("empty expression");
  if (order == 0) throw std::invalid_argument("expression order must be at least 1");
  using S = Series<Ring>;
  switch (node->op) {
    case ExprOp::Psi:
      return {psi_series(ring, order), std::nullopt};
    case ExprOp::ThetaA:
      return {a_series(ring, order), std::nullopt};
    case ExprOp::Poch:
      return {pochhammer(node->poch, ring, order), std::nullopt};
    case ExprOp::Pod:
      return {node->signed_pod ? signed_pod_gen(node->k, ring, order)
                               : pod_gen(node->k, ring, order),
              std::nullopt};
    case ExprOp::QPow:
      return {S::monomial(ring, node->e, order), std::nullopt};
    case ExprOp::Const:
      return {S::one(ring, order).scaled(ring.canon_big(node->value)), std::nullopt};
    case ExprOp::Neg: {
      auto a = eval_expr(node->args[0], ring, order);
      return {-a.num, std::move(a.den)};
    }
    case ExprOp::Inv: {
      auto a = eval_expr(node->args[0], ring, order);
      if (!ring.is_unit(a.num[0]))
        throw std::domain_error("inverse of a series whose constant term is not a unit");
      if (!a.den) return {S::one(ring, order), std::move(a.num)};
      return {*std::move(a.den), std::move(a.num)};
    }
    case ExprOp::Pow: {
      auto a = eval_expr(node->args[0], ring, order);
      return {a.num.pow(node->k),
              a.den ? std::optional<S>(a.den->pow(node->k)) : std::nullopt};
    }
    case ExprOp::SubstPower: {
      const std::size_t inner = detail::ceil_div(order, node->k);
      auto a = eval_expr(node->args[0], ring, inner);
      auto up = [&](const S& s) { return s.substitute_power(node->k).truncated(order); };
      return {up(a.num), a.den ? std::optional<S>(up(*a.den)) : std::nullopt};
    }
    case ExprOp::SubstNegate: {
      auto a = eval_expr(node->args[0], ring, order);
      return {a.num.substitute_negate(),
              a.den ? std::optional<S>(a.den->substitute_negate()) : std::nullopt};
    }
    case ExprOp::Extract: {
      const std::size_t inner = node->m * (order - 1) + node->r + 1;
      auto a = eval_expr(node->args[0], ring, inner);
      return {a.collapsed().extract_progression(node->r, node->m).truncated(order), std::nullopt};
    }
    case ExprOp::ShiftDown: {
      auto a = eval_expr(node->args[0], ring, order + node->j);
      return {a.collapsed().shift_down(node->j), std::nullopt};
    }
    case ExprOp::Mul: {
      auto acc = eval_expr(node->args[0], ring, order);
      for (std::size_t i = 1; i < node->args.size(); i++) {
        auto b = eval_expr(node->args[i], ring, order);
        acc.num = acc.num * b.num;
        if (b.den) acc.den = acc.den ? *acc.den * *b.den : *std::move(b.den);
      }
      return acc;
    }
    case ExprOp::Add:
    case ExprOp::Sub: {
      auto acc = eval_expr(node->args[0], ring, order);
      for (std::size_t i = 1; i < node->args.size(); i++) {
        auto b = eval_expr(node->args[i], ring, order);
        const bool subtract = node->op == ExprOp::Sub;
        // a/c + b/d = (a d + b c) / (c d)
        S left = b.den ? acc.num * *b.den : acc.num;
        S right = acc.den ? b.num * *acc.den : b.num;
        acc.num = subtract ? left - right : left + right;
        if (b.den) acc.den = acc.den ? *acc.den * *b.den : *std::move(b.den);
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable expression op");
}

// The deepest truncation order any node needs when the root is evaluated to
// `order`.  Used to refuse infeasible claims before any work happens.
inline std::size_t max_required_order(const ExprPtr& node, std::size_t order) {
  if (!node) throw std::invalid_argument("empty expression");
  std::size_t deepest = order;
  std::size_t child_order = order;
  switch (node->op) {
    case ExprOp::SubstPower: child_order = detail::ceil_div(order, node->k); break;
    case ExprOp::Extract: child_order = node->m * (order - 1) + node->r + 1; break;
    case ExprOp::ShiftDown: child_order = order + node->j; break;
    default: break;
  }
  for (const auto& a : node->args)
    deepest = std::max(deepest, max_required_order(a, child_order));
  return deepest;
}

// Decide whether lhs == rhs as truncated series, comparing the fractions
// cross-multiplied: a/c == b/d iff a d == b c.
template <class Ring>
Agreement<Ring> expr_sides_agree(const ExprPtr& lhs, const ExprPtr& rhs, const Ring& ring,
                                 std::size_t order) {
  auto l = eval_expr(lhs, ring, order);
  auto r = eval_expr(rhs, ring, order);
  Series<Ring> ln = r.den ? l.num * *r.den : l.num;
  Series<Ring> rn = l.den ? r.num * *l.den : r.num;
  return agree_to(ln, rn, order);
}

}  // namespace qcert
