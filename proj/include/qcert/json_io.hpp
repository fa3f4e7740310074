#pragma once

#include "claims.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcert {

/* JSON encoding of claims, expressions, and certificates.  Keys are emitted
 * in insertion order so serialized output is stable across runs; exact values
 * travel as decimal strings to avoid any 53-bit precision cliff. */

using Json = nlohmann::ordered_json;

inline Json to_json(const BigInt& v) { return v.str(); }

inline BigInt bigint_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw std::invalid_argument(where + ": expected an integer or decimal string");
}

// ---- sequences -------------------------------------------------------------

inline Json to_json(const SequenceRef& seq) {
  Json j;
  j["kind"] = seq_kind_name(seq.kind);
  j["k"] = seq.k;
  if (seq.backend)
    j["backend"] = *seq.backend == Backend::Series ? "series" : "oracle";
  return j;
}

inline SequenceRef sequence_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("k"))
    throw std::invalid_argument(where + ": sequence needs 'kind' and 'k'");
  SequenceRef seq;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "pod") seq.kind = SeqKind::Pod;
  else if (kind == "r") seq.kind = SeqKind::Rsq;
  else if (kind == "t") seq.kind = SeqKind::Tri;
  else throw std::invalid_argument(where + ": unknown sequence kind '" + kind + "'");
  seq.k = j.at("k").get<std::uint64_t>();
  if (seq.k < 1) throw std::invalid_argument(where + ": k must be >= 1");
  if (j.contains("backend")) {
    const std::string b = j.at("backend").get<std::string>();
    if (b == "series") seq.backend = Backend::Series;
    else if (b == "oracle") seq.backend = Backend::Oracle;
    else throw std::invalid_argument(where + ": unknown backend '" + b + "'");
  }
  return seq;
}

inline Json to_json(const SkipRule& skip) {
  Json j;
  j["mod"] = skip.mod;
  j["residues"] = skip.residues;
  return j;
}

inline SkipRule skip_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("mod") || !j.contains("residues"))
    throw std::invalid_argument(where + ": skip rule needs 'mod' and 'residues'");
  SkipRule skip;
  skip.mod = j.at("mod").get<std::uint64_t>();
  if (skip.mod < 1) throw std::invalid_argument(where + ": skip mod must be >= 1");
  for (const auto& r : j.at("residues")) skip.residues.push_back(r.get<std::uint64_t>());
  return skip;
}

// ---- expressions -----------------------------------------------------------

inline Json to_json(const ExprPtr& node) {
  Json j;
  switch (node->op) {
    case ExprOp::Psi: j["op"] = "psi"; break;
    case ExprOp::ThetaA: j["op"] = "a"; break;
    case ExprOp::Poch:
      j["op"] = "poch";
      j["first"] = node->poch.first;
      j["step"] = node->poch.step;
      j["sign"] = node->poch.sign;
      break;
    case ExprOp::Pod:
      j["op"] = "pod";
      j["k"] = node->k;
      j["signed"] = node->signed_pod;
      break;
    case ExprOp::QPow:
      j["op"] = "q";
      j["e"] = node->e;
      break;
    case ExprOp::Const:
      j["op"] = "int";
      j["value"] = to_json(node->value);
      break;
    case ExprOp::Neg:
      j["op"] = "neg";
      j["arg"] = to_json(node->args[0]);
      break;
    case ExprOp::Inv:
      j["op"] = "inv";
      j["arg"] = to_json(node->args[0]);
      break;
    case ExprOp::Pow:
      j["op"] = "pow";
      j["arg"] = to_json(node->args[0]);
      j["k"] = node->k;
      break;
    case ExprOp::SubstPower:
      j["op"] = "subst_power";
      j["arg"] = to_json(node->args[0]);
      j["k"] = node->k;
      break;
    case ExprOp::SubstNegate:
      j["op"] = "subst_negate";
      j["arg"] = to_json(node->args[0]);
      break;
    case ExprOp::Extract:
      j["op"] = "extract";
      j["arg"] = to_json(node->args[0]);
      j["r"] = node->r;
      j["m"] = node->m;
      break;
    case ExprOp::ShiftDown:
      j["op"] = "shift_down";
      j["arg"] = to_json(node->args[0]);
      j["j"] = node->j;
      break;
    case ExprOp::Mul:
    case ExprOp::Add: {
      j["op"] = node->op == ExprOp::Mul ? "mul" : "add";
      Json parts = Json::array();
      for (const auto& a : node->args) parts.push_back(to_json(a));
      j["args"] = parts;
      break;
    }
    case ExprOp::Sub:
      j["op"] = "sub";
      j["a"] = to_json(node->args[0]);
      j["b"] = to_json(node->args[1]);
      break;
  }
  return j;
}

inline ExprPtr expr_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("op"))
    throw std::invalid_argument(where + ": expression needs an 'op'");
  const std::string op = j.at("op").get<std::string>();
  auto arg = [&](const char* key) { return expr_from_json(j.at(key), where); };
  auto need = [&](const char* key) {
    if (!j.contains(key))
      throw std::invalid_argument(where + ": op '" + op + "' needs '" + key + "'");
  };

  if (op == "psi") return ex::psi();
  if (op == "a") return ex::theta_a();
  if (op == "poch") {
    need("first"); need("step"); need("sign");
    return ex::poch(j.at("first").get<std::uint64_t>(), j.at("step").get<std::uint64_t>(),
                    j.at("sign").get<int>());
  }
  if (op == "pod") {
    need("k");
    const bool sgn = j.value("signed", false);
    return ex::pod(j.at("k").get<std::uint64_t>(), sgn);
  }
  if (op == "q") {
    need("e");
    return ex::qpow(j.at("e").get<std::uint64_t>());
  }
  if (op == "int") {
    need("value");
    return ex::constant(bigint_from_json(j.at("value"), where));
  }
  if (op == "neg") { need("arg"); return ex::neg(arg("arg")); }
  if (op == "inv") { need("arg"); return ex::inv(arg("arg")); }
  if (op == "pow") {
    need("arg"); need("k");
    return ex::pow(arg("arg"), j.at("k").get<std::uint64_t>());
  }
  if (op == "subst_power") {
    need("arg"); need("k");
    return ex::subst_power(arg("arg"), j.at("k").get<std::uint64_t>());
  }
  if (op == "subst_negate") { need("arg"); return ex::subst_negate(arg("arg")); }
  if (op == "extract") {
    need("arg"); need("r"); need("m");
    return ex::extract(arg("arg"), j.at("r").get<std::uint64_t>(),
                       j.at("m").get<std::uint64_t>());
  }
  if (op == "shift_down") {
    need("arg"); need("j");
    return ex::shift_down(arg("arg"), j.at("j").get<std::uint64_t>());
  }
  if (op == "mul" || op == "add") {
    need("args");
    std::vector<ExprPtr> parts;
    for (const auto& a : j.at("args")) parts.push_back(expr_from_json(a, where));
    return op == "mul" ? ex::mul(std::move(parts)) : ex::add(std::move(parts));
  }
  if (op == "sub") {
    need("a"); need("b");
    return ex::sub(arg("a"), arg("b"));
  }
  throw std::invalid_argument(where + ": unknown expression op '" + op + "'");
}

// ---- claims ----------------------------------------------------------------

inline Json to_json(const CongruenceClaim& claim) {
  Json j;
  if (const auto* v = std::get_if<VanishingClaim>(&claim)) {
    j["type"] = "vanishing";
    j["seq"] = to_json(v->seq);
    j["step"] = v->ap.step;
    j["offset"] = v->ap.offset;
    j["modulus"] = v->modulus;
    if (v->skip) j["skip"] = to_json(*v->skip);
  } else if (const auto* r = std::get_if<RelationClaim>(&claim)) {
    j["type"] = "relation";
    Json left, right;
    left["seq"] = to_json(r->left_seq);
    left["step"] = r->left.step;
    left["offset"] = r->left.offset;
    right["seq"] = to_json(r->right_seq);
    right["step"] = r->right.step;
    right["offset"] = r->right.offset;
    j["left"] = left;
    j["right"] = right;
    j["coeff"] = to_json(r->coeff);
    j["sign_parity"] = r->sign_parity;
    if (r->modulus) j["modulus"] = *r->modulus;
    if (r->skip) j["skip"] = to_json(*r->skip);
  } else {
    const auto& s = std::get<SeriesClaim>(claim);
    j["type"] = "series";
    j["lhs"] = to_json(s.lhs);
    j["rhs"] = to_json(s.rhs);
    if (s.modulus) j["modulus"] = *s.modulus;
    j["order"] = s.order;
  }
  return j;
}

inline CongruenceClaim claim_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument(where + ": claim needs a 'type'");
  const std::string type = j.at("type").get<std::string>();

  if (type == "vanishing") {
    for (const char* key : {"seq", "step", "offset", "modulus"})
      if (!j.contains(key))
        throw std::invalid_argument(where + ": vanishing claim needs '" + std::string(key) + "'");
    VanishingClaim v;
    v.seq = sequence_from_json(j.at("seq"), where);
    v.ap = {j.at("step").get<std::uint64_t>(), j.at("offset").get<std::uint64_t>()};
    if (v.ap.step < 1) throw std::invalid_argument(where + ": step must be >= 1");
    v.modulus = j.at("modulus").get<std::uint64_t>();
    if (v.modulus < 2) throw std::invalid_argument(where + ": modulus must be >= 2");
    if (j.contains("skip")) v.skip = skip_from_json(j.at("skip"), where);
    return v;
  }

  if (type == "relation") {
    for (const char* key : {"left", "right", "coeff"})
      if (!j.contains(key))
        throw std::invalid_argument(where + ": relation claim needs '" + std::string(key) + "'");
    auto side = [&](const Json& s, SequenceRef& seq, Progression& ap) {
      if (!s.is_object() || !s.contains("seq") || !s.contains("step") || !s.contains("offset"))
        throw std::invalid_argument(where + ": relation side needs 'seq', 'step', 'offset'");
      seq = sequence_from_json(s.at("seq"), where);
      ap = {s.at("step").get<std::uint64_t>(), s.at("offset").get<std::uint64_t>()};
      if (ap.step < 1) throw std::invalid_argument(where + ": step must be >= 1");
    };
    RelationClaim r;
    side(j.at("left"), r.left_seq, r.left);
    side(j.at("right"), r.right_seq, r.right);
    r.coeff = bigint_from_json(j.at("coeff"), where);
    r.sign_parity = j.value("sign_parity", 0);
    if (r.sign_parity != 0 && r.sign_parity != 1)
      throw std::invalid_argument(where + ": sign_parity must be 0 or 1");
    if (j.contains("modulus")) {
      r.modulus = j.at("modulus").get<std::uint64_t>();
      if (*r.modulus < 2) throw std::invalid_argument(where + ": modulus must be >= 2");
    }
    if (j.contains("skip")) r.skip = skip_from_json(j.at("skip"), where);
    return r;
  }

  if (type == "series") {
    for (const char* key : {"lhs", "rhs", "order"})
      if (!j.contains(key))
        throw std::invalid_argument(where + ": series claim needs '" + std::string(key) + "'");
    SeriesClaim s;
    s.lhs = expr_from_json(j.at("lhs"), where);
    s.rhs = expr_from_json(j.at("rhs"), where);
    s.order = j.at("order").get<std::uint64_t>();
    if (s.order < 1) throw std::invalid_argument(where + ": order must be >= 1");
    if (j.contains("modulus")) {
      s.modulus = j.at("modulus").get<std::uint64_t>();
      if (*s.modulus < 2) throw std::invalid_argument(where + ": modulus must be >= 2");
    }
    return s;
  }

  throw std::invalid_argument(where + ": unknown claim type '" + type + "'");
}

// Claim file: {"schema": 1, "claims": [{...claim..., "n_max": 100}, ...]}
struct ClaimEntry {
  CongruenceClaim claim;
  std::optional<std::uint64_t> n_max;
};

inline std::vector<ClaimEntry> claims_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("claims") || !doc.at("claims").is_array())
    throw std::invalid_argument("claim file: expected {\"schema\": 1, \"claims\": [...]}");
  if (doc.value("schema", 0) != 1)
    throw std::invalid_argument("claim file: unsupported schema (expected 1)");
  std::vector<ClaimEntry> out;
  std::size_t index = 0;
  for (const auto& cj : doc.at("claims")) {
    const std::string where = "claims[" + std::to_string(index) + "]";
    ClaimEntry entry;
    entry.claim = claim_from_json(cj, where);
    if (cj.contains("n_max")) entry.n_max = cj.at("n_max").get<std::uint64_t>();
    out.push_back(std::move(entry));
    index++;
  }
  return out;
}

// ---- certificates ----------------------------------------------------------

inline Json to_json(const Certificate& cert) {
  Json j;
  j["claim"] = to_json(cert.claim);
  j["n_max"] = cert.n_max;
  j["status"] = cert.pass ? "pass" : "fail";
  if (cert.first_failure) {
    Json f;
    f["n"] = cert.first_failure->n;
    f["lhs"] = to_json(cert.first_failure->lhs);
    f["rhs"] = to_json(cert.first_failure->rhs);
    j["first_failure"] = f;
  } else {
    j["first_failure"] = nullptr;
  }
  if (cert.empirical) j["empirical"] = true;
  return j;
}

}  // namespace qcert
