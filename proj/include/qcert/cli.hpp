#pragma once

#include "json_io.hpp"
#include "registry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qcert {

/* Command-line surface.  cli_main is the whole program; the binary entry
 * point only forwards argv, so tests can drive every path in-process.
 * Exit codes: 0 all pass, 1 some check failed, 2 configuration error. */

namespace cli_detail {

inline std::string render_expr(const ExprPtr& node);

inline std::string parenthesized(const ExprPtr& node) {
  switch (node->op) {
    case ExprOp::Psi:
    case ExprOp::ThetaA:
    case ExprOp::Poch:
    case ExprOp::QPow:
    case ExprOp::Const:
    case ExprOp::SubstPower:
    case ExprOp::SubstNegate:
      return render_expr(node);
    default:
      return "(" + render_expr(node) + ")";
  }
}

inline std::string render_expr(const ExprPtr& node) {
  auto power_suffix = [](std::uint64_t k) {
    return k == 1 ? std::string("q") : "q^" + std::to_string(k);
  };
  switch (node->op) {
    case ExprOp::Psi: return "psi(q)";
    case ExprOp::ThetaA: return "A(q)";
    case ExprOp::Poch: {
      const std::string head = (node->poch.sign < 0 ? "q^" : "-q^") +
                               std::to_string(node->poch.first);
      return "(" + head + ";q^" + std::to_string(node->poch.step) + ")";
    }
    case ExprOp::Pod:
      return std::string("1/psi(") + (node->signed_pod ? "q" : "-q") + ")^" +
             std::to_string(node->k);
    case ExprOp::QPow: return power_suffix(node->e);
    case ExprOp::Const: return node->value.str();
    case ExprOp::Neg: return "-" + parenthesized(node->args[0]);
    case ExprOp::Inv: return "1/" + parenthesized(node->args[0]);
    case ExprOp::Pow:
      return parenthesized(node->args[0]) + "^" + std::to_string(node->k);
    case ExprOp::SubstPower: {
      const ExprPtr& inner = node->args[0];
      if (inner->op == ExprOp::Psi) return "psi(" + power_suffix(node->k) + ")";
      if (inner->op == ExprOp::ThetaA) return "A(" + power_suffix(node->k) + ")";
      return parenthesized(inner) + "[q -> " + power_suffix(node->k) + "]";
    }
    case ExprOp::SubstNegate: {
      const ExprPtr& inner = node->args[0];
      if (inner->op == ExprOp::Psi) return "psi(-q)";
      if (inner->op == ExprOp::ThetaA) return "A(-q)";
      return parenthesized(inner) + "[q -> -q]";
    }
    case ExprOp::Extract:
      return "[q^(" + std::to_string(node->m) + "n+" + std::to_string(node->r) + ")] " +
             parenthesized(node->args[0]);
    case ExprOp::ShiftDown:
      return parenthesized(node->args[0]) + "/q^" + std::to_string(node->j);
    case ExprOp::Mul:
    case ExprOp::Add: {
      const char* sep = node->op == ExprOp::Mul ? " * " : " + ";
      std::string text;
      for (std::size_t i = 0; i < node->args.size(); i++) {
        if (i) text += sep;
        text += node->op == ExprOp::Mul ? parenthesized(node->args[i])
                                        : render_expr(node->args[i]);
      }
      return text;
    }
    case ExprOp::Sub:
      return render_expr(node->args[0]) + " - " + parenthesized(node->args[1]);
  }
  return "?";
}

inline std::string seq_display(const SequenceRef& seq) {
  if (seq.kind == SeqKind::Pod && seq.k == 1) return "pod";
  return seq_kind_name(seq.kind) + "_" + std::to_string(seq.k);
}

inline std::string progression_display(const SequenceRef& seq, const Progression& ap) {
  std::string inner = std::to_string(ap.step) + "n";
  if (ap.offset) inner += "+" + std::to_string(ap.offset);
  if (ap.step == 1 && ap.offset == 0) inner = "n";
  return seq_display(seq) + "(" + inner + ")";
}

inline std::string describe_claim(const CongruenceClaim& claim) {
  if (const auto* v = std::get_if<VanishingClaim>(&claim)) {
    std::string text = progression_display(v->seq, v->ap) + " == 0 (mod " +
                       std::to_string(v->modulus) + ")";
    if (v->skip) {
      text += ", skipping n == ";
      for (std::size_t i = 0; i < v->skip->residues.size(); i++)
        text += (i ? ", " : "") + std::to_string(v->skip->residues[i]);
      text += " (mod " + std::to_string(v->skip->mod) + ")";
    }
    return text;
  }
  if (const auto* r = std::get_if<RelationClaim>(&claim)) {
    std::string rhs;
    if (r->coeff != 1 || r->sign_parity) rhs += r->coeff.str() + " * ";
    if (r->sign_parity) rhs += "(-1)^n * ";
    rhs += progression_display(r->right_seq, r->right);
    std::string text = progression_display(r->left_seq, r->left) + " == " + rhs;
    text += r->modulus ? " (mod " + std::to_string(*r->modulus) + ")" : " (exact)";
    if (r->skip) text += ", with exclusions";
    return text;
  }
  const auto& s = std::get<SeriesClaim>(claim);
  std::string text = render_expr(s.lhs) + " == " + render_expr(s.rhs);
  text += s.modulus ? " (mod " + std::to_string(*s.modulus) + ", " : " (exact, ";
  text += "order " + std::to_string(s.order) + ")";
  return text;
}

struct SeqSpec {
  SeqKind kind;
  std::uint64_t k;
};

inline SeqSpec parse_seq_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
    throw std::invalid_argument("--seq wants KIND:K, e.g. pod:3 or r:7 (got '" + text + "')");
  const std::string kind = text.substr(0, colon);
  SeqSpec spec{};
  if (kind == "pod") spec.kind = SeqKind::Pod;
  else if (kind == "r") spec.kind = SeqKind::Rsq;
  else if (kind == "t") spec.kind = SeqKind::Tri;
  else throw std::invalid_argument("--seq kind must be pod, r, or t (got '" + kind + "')");
  try {
    std::size_t used = 0;
    const std::string digits = text.substr(colon + 1);
    const unsigned long long k = std::stoull(digits, &used);
    if (used != digits.size() || k < 1) throw std::invalid_argument("");
    spec.k = k;
  } catch (const std::exception&) {
    throw std::invalid_argument("--seq component count must be a positive integer (got '" +
                                text.substr(colon + 1) + "')");
  }
  return spec;
}

inline void deliver_json(const Json& doc, bool to_stdout, const std::string& out_path,
                         std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    file << text;
    if (!file.good())
      throw std::invalid_argument("failed writing output file '" + out_path + "'");
  }
  if (to_stdout) out << text;
}

}  // namespace cli_detail

inline int cli_main(const std::vector<std::string>& args, std::ostream& out,
                    std::ostream& err) {
  using cli_detail::deliver_json;
  using cli_detail::describe_claim;

  CLI::App app{"exact q-series and combinatorial congruence certificates"};
  app.name("qcert");
  app.require_subcommand(1);

  // compute ------------------------------------------------------------------
  auto* compute = app.add_subcommand("compute", "evaluate a sequence");
  std::string c_seq;
  std::optional<std::uint64_t> c_mod, c_upto, c_at;
  bool c_json = false;
  std::string c_out;
  std::uint64_t c_ceiling = Limits{}.order_ceiling;
  compute->add_option("--seq", c_seq, "sequence KIND:K (pod:3, r:7, t:4)")->required();
  compute->add_option("--mod", c_mod, "report residues modulo this");
  compute->add_option("--upto", c_upto, "evaluate n = 0..N inclusive");
  compute->add_option("--at", c_at, "evaluate a single index");
  compute->add_flag("--json", c_json, "emit JSON on stdout");
  compute->add_option("--out", c_out, "write JSON to a file");
  compute->add_option("--order-ceiling", c_ceiling, "largest series order allowed");

  // verify -------------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "check a claim file");
  std::string v_claims, v_out;
  std::uint64_t v_upto = 200, v_ceiling = Limits{}.order_ceiling;
  bool v_json = false;
  verify_cmd->add_option("--claims", v_claims, "claim file (JSON)")->required();
  verify_cmd->add_option("--upto", v_upto, "default n bound for claims without one");
  verify_cmd->add_flag("--json", v_json, "emit JSON on stdout");
  verify_cmd->add_option("--out", v_out, "write JSON to a file");
  verify_cmd->add_option("--order-ceiling", v_ceiling, "largest series order allowed");

  // reproduce ------------------------------------------------------------------
  auto* reproduce = app.add_subcommand("reproduce", "run the built-in statement catalogue");
  bool r_slow = false, r_json = false;
  std::vector<std::string> r_only;
  std::string r_out;
  std::uint64_t r_ceiling = Limits{}.order_ceiling;
  reproduce->add_flag("--slow", r_slow, "include the slow items");
  reproduce->add_option("--only", r_only, "run only these item ids (repeatable)");
  reproduce->add_flag("--json", r_json, "emit JSON on stdout");
  reproduce->add_option("--out", r_out, "write JSON to a file");
  reproduce->add_option("--order-ceiling", r_ceiling, "largest series order allowed");

  // scan -----------------------------------------------------------------------
  auto* scan = app.add_subcommand("scan", "sweep progressions for empirical congruences");
  std::string s_seq, s_out;
  std::uint64_t s_mod = 0, s_steps = 0, s_upto = 0;
  std::uint64_t s_ceiling = Limits{}.order_ceiling;
  bool s_json = false, s_keep = false;
  scan->add_option("--seq", s_seq, "sequence KIND:K")->required();
  scan->add_option("--mod", s_mod, "modulus")->required();
  scan->add_option("--steps", s_steps, "largest progression step to try")->required();
  scan->add_option("--upto", s_upto, "check indices n = 0..N on each progression")->required();
  scan->add_flag("--keep-refinements", s_keep, "keep progressions implied by coarser hits");
  scan->add_flag("--json", s_json, "emit JSON on stdout");
  scan->add_option("--out", s_out, "write JSON to a file");
  scan->add_option("--order-ceiling", s_ceiling, "largest series order allowed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      const auto spec = cli_detail::parse_seq_spec(c_seq);
      if (c_upto.has_value() == c_at.has_value())
        throw std::invalid_argument("compute wants exactly one of --upto or --at");
      std::vector<std::uint64_t> indices;
      if (c_at) indices.push_back(*c_at);
      else
        for (std::uint64_t n = 0; n <= *c_upto; n++) indices.push_back(n);
      const Limits limits{c_ceiling};
      const SequenceRef seq{spec.kind, spec.k, std::nullopt};
      const std::vector<BigInt> values = evaluate_sequence(seq, indices, c_mod, limits);

      if (c_json || !c_out.empty()) {
        Json doc;
        doc["schema"] = 1;
        doc["sequence"] = to_json(seq);
        doc["modulus"] = c_mod ? Json(*c_mod) : Json(nullptr);
        Json rows = Json::array();
        for (std::size_t i = 0; i < indices.size(); i++) {
          Json row;
          row["n"] = indices[i];
          row["value"] = to_json(values[i]);
          rows.push_back(std::move(row));
        }
        doc["values"] = rows;
        deliver_json(doc, c_json, c_out, out);
      }
      if (!c_json)
        for (std::size_t i = 0; i < indices.size(); i++)
          out << indices[i] << " " << values[i].str() << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::ifstream file(v_claims);
      if (!file) throw std::invalid_argument("cannot open claim file '" + v_claims + "'");
      Json doc;
      try {
        doc = Json::parse(file);
      } catch (const Json::exception& e) {
        throw std::invalid_argument("claim file '" + v_claims + "': " + e.what());
      }
      const std::vector<ClaimEntry> entries = claims_from_json(doc);
      const Limits limits{v_ceiling};

      std::vector<Certificate> certs;
      bool all_pass = true;
      for (const auto& entry : entries) {
        Certificate cert = verify(entry.claim, entry.n_max.value_or(v_upto), limits);
        all_pass = all_pass && cert.pass;
        certs.push_back(std::move(cert));
      }

      if (v_json || !v_out.empty()) {
        Json report;
        report["schema"] = 1;
        Json list = Json::array();
        Json elapsed = Json::array();
        for (const auto& cert : certs) {
          list.push_back(to_json(cert));
          elapsed.push_back(cert.elapsed_ms);
        }
        report["certificates"] = list;
        report["elapsed_ms"] = elapsed;
        deliver_json(report, v_json, v_out, out);
      }
      if (!v_json) {
        std::size_t passed = 0;
        for (const auto& cert : certs) {
          out << (cert.pass ? "[pass] " : "[FAIL] ") << describe_claim(cert.claim)
              << ", n <= " << cert.n_max << "\n";
          if (!cert.pass && cert.first_failure)
            out << "       first failure at n = " << cert.first_failure->n << ": lhs = "
                << cert.first_failure->lhs.str() << ", rhs = " << cert.first_failure->rhs.str()
                << "\n";
          if (cert.pass) passed++;
        }
        out << passed << "/" << certs.size() << " claims pass\n";
      }
      return all_pass ? 0 : 1;
    }

    if (reproduce->parsed()) {
      const std::vector<RegistryItem> registry = builtin_registry();
      std::vector<const RegistryItem*> chosen;
      if (!r_only.empty()) {
        for (const auto& id : r_only) {
          const auto it = std::find_if(registry.begin(), registry.end(),
                                       [&](const RegistryItem& item) { return item.id == id; });
          if (it == registry.end())
            throw std::invalid_argument("no catalogue item with id '" + id + "'");
          chosen.push_back(&*it);
        }
      } else {
        for (const auto& item : registry)
          if (r_slow || !item.slow) chosen.push_back(&item);
      }

      const Limits limits{r_ceiling};
      bool all_pass = true;
      Json report_rows = Json::array();
      Json elapsed = Json::array();
      for (const RegistryItem* item : chosen) {
        detail::Stopwatch timer;
        const ItemResult result = item->run(limits);
        const double ms = timer.ms();
        const bool ok = result.all_pass();
        all_pass = all_pass && ok;

        if (!r_json) {
          out << (ok ? "[pass] " : "[FAIL] ") << item->id << " -- " << item->statement << "\n";
          for (const auto& cert : result.certificates)
            if (!cert.pass) {
              out << "       " << describe_claim(cert.claim);
              if (cert.first_failure)
                out << ": first failure at n = " << cert.first_failure->n << ", lhs = "
                    << cert.first_failure->lhs.str() << ", rhs = "
                    << cert.first_failure->rhs.str();
              out << "\n";
            }
          for (const auto& check : result.checks)
            if (!check.pass)
              out << "       check failed: " << check.what << " (" << check.detail << ")\n";
        }

        Json row;
        row["id"] = item->id;
        row["statement"] = item->statement;
        row["slow"] = item->slow;
        Json certs = Json::array();
        for (const auto& cert : result.certificates) certs.push_back(to_json(cert));
        row["certificates"] = certs;
        Json checks = Json::array();
        for (const auto& check : result.checks) {
          Json cj;
          cj["what"] = check.what;
          cj["pass"] = check.pass;
          cj["detail"] = check.detail;
          checks.push_back(std::move(cj));
        }
        row["checks"] = checks;
        report_rows.push_back(std::move(row));
        elapsed.push_back(ms);
      }

      if (r_json || !r_out.empty()) {
        Json doc;
        doc["schema"] = 1;
        doc["report"] = report_rows;
        doc["elapsed_ms"] = elapsed;
        deliver_json(doc, r_json, r_out, out);
      }
      if (!r_json)
        out << (all_pass ? "all " : "FAILURES among ") << chosen.size() << " items"
            << (all_pass ? " pass\n" : "\n");
      return all_pass ? 0 : 1;
    }

    // scan
    const auto spec = cli_detail::parse_seq_spec(s_seq);
    if (s_mod < 2) throw std::invalid_argument("--mod must be at least 2");
    const Limits limits{s_ceiling};
    const SequenceRef seq{spec.kind, spec.k, std::nullopt};
    const std::vector<Certificate> found =
        scan_vanishing(seq, s_mod, s_steps, s_upto, limits, s_keep);

    if (s_json || !s_out.empty()) {
      Json doc;
      doc["schema"] = 1;
      Json sj;
      sj["seq"] = to_json(seq);
      sj["modulus"] = s_mod;
      sj["step_max"] = s_steps;
      sj["n_max"] = s_upto;
      sj["keep_refinements"] = s_keep;
      doc["scan"] = sj;
      Json list = Json::array();
      for (const auto& cert : found) list.push_back(to_json(cert));
      doc["candidates"] = list;
      deliver_json(doc, s_json, s_out, out);
    }
    if (!s_json) {
      for (const auto& cert : found)
        out << describe_claim(cert.claim) << ", empirical for n <= " << cert.n_max << "\n";
      out << found.size() << " candidate progression" << (found.size() == 1 ? "" : "s")
          << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qcert
