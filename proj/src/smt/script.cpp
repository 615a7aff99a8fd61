// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/smt/script.hpp"

#include <sstream>

#include "tct/common/error.hpp"

namespace tct::smt {

using trace::Term;
using K = Term::Kind;

namespace {

const BigInt kTwo160 = BigInt(1) << 160;
const BigInt kTwo255 = BigInt(1) << 255;
const BigInt kTwo256 = BigInt(1) << 256;

bool simple_symbol(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) continue;
    if (std::string_view("~!@$%^&*_-+=<>.?/").find(c) == std::string_view::npos) return false;
  }
  return true;
}

std::string sym(const std::string& s) { return simple_symbol(s) ? s : "|" + s + "|"; }

std::string sort_text(trace::Sort s) {
  switch (s) {
    case trace::Sort::Int: return "Int";
    case trace::Sort::Bool: return "Bool";
    case trace::Sort::Map: return "(Array Int Int)";
  }
  return "Int";
}

const char* op_text(K k) {
  switch (k) {
    case K::Not: return "not";
    case K::And: return "and";
    case K::Or: return "or";
    case K::Implies: return "=>";
    case K::Ite: return "ite";
    case K::Eq: return "=";
    case K::Lt: return "<";
    case K::Le: return "<=";
    case K::Gt: return ">";
    case K::Ge: return ">=";
    case K::Add: return "+";
    case K::Sub: return "-";
    case K::Mul: return "*";
    case K::Div: return "div";
    case K::Mod: return "mod";
    case K::Select: return "select";
    case K::Store: return "store";
    case K::Sum: return "sum";
    default: return nullptr;
  }
}

void emit(std::ostream& os, const Term& e) {
  switch (e.kind) {
    case K::Num:
      if (e.num == kTwo160) os << "TwoE160";
      else if (e.num == kTwo255) os << "TwoE255";
      else if (e.num == kTwo256) os << "TwoE256";
      else if (e.num < 0) os << "(- " << BigInt(-e.num).str() << ')';
      else os << e.num.str();
      return;
    case K::BoolConst: os << (e.bval ? "true" : "false"); return;
    case K::Var: os << sym(e.name); return;
    case K::App:
      os << '(' << e.name << ' ';
      emit(os, *e.args[0]);
      os << ' ';
      emit(os, *e.args[1]);
      os << ')';
      return;
    case K::Ne:
      os << "(not (= ";
      emit(os, *e.args[0]);
      os << ' ';
      emit(os, *e.args[1]);
      os << "))";
      return;
    case K::Forall:
      os << "(forall ((" << sym(e.name) << " Int)) ";
      emit(os, *e.args[0]);
      os << ')';
      return;
    default: {
      const char* op = op_text(e.kind);
      if (!op) throw Error(Errc::UnsupportedExpr, "no SMT form for '" + trace::to_text(e) + "'");
      os << '(' << op;
      for (const auto& a : e.args) {
        os << ' ';
        emit(os, *a);
      }
      os << ')';
      return;
    }
  }
}

}  // namespace

std::string smt_term(const Term& e) {
  std::ostringstream os;
  emit(os, e);
  return os.str();
}

Script emit_script(const vcgen::VerificationCondition& vc, const std::vector<Pin>& pins) {
  Script out;
  out.logic = vc.nonlinear ? "AUFNIA" : "AUFLIA";
  std::ostringstream os;
  os << "; " << (vc.is_deployment ? "deployment " : "") << vc.contract << "::" << vc.function << " code "
     << vc.code.short_hex() << '\n';
  os << "(set-logic " << out.logic << ")\n";
  os << "(set-option :produce-models true)\n";
  os << "(define-fun TwoE160 () Int " << kTwo160.str() << ")\n";
  os << "(define-fun TwoE255 () Int " << kTwo255.str() << ")\n";
  os << "(define-fun TwoE256 () Int " << kTwo256.str() << ")\n";
  // operands are always words, so one correction step is exact
  os << "(define-fun add ((a Int) (b Int)) Int (ite (< (+ a b) TwoE256) (+ a b) (- (+ a b) TwoE256)))\n";
  os << "(define-fun sub ((a Int) (b Int)) Int (ite (>= a b) (- a b) (+ (- a b) TwoE256)))\n";
  os << "(define-fun mul ((a Int) (b Int)) Int (mod (* a b) TwoE256))\n";
  os << "(declare-fun sum ((Array Int Int)) Int)\n";
  for (const auto& d : vc.decls) os << "(declare-const " << sym(d.name) << ' ' << sort_text(d.sort) << ")\n";
  for (const auto& g : vc.goals) {
    // the goals are negated, so a fresh constant stands for a top-level bound variable
    if (!g.skolem.empty()) os << "(declare-const " << sym(g.skolem) << " Int)\n";
  }
  for (const auto& d : vc.defs) {
    os << "(define-fun " << sym(d.name) << " () " << sort_text(d.sort) << ' ' << smt_term(*d.term) << ")\n";
  }
  std::size_t n = 0;
  for (const auto& a : vc.assumptions) {
    os << "; " << vcgen::kind_name(a.kind) << (a.label.empty() ? "" : ": " + a.label) << '\n';
    os << "(assert (! " << smt_term(*a.term) << " :named A" << n++ << "))\n";
  }
  for (const auto& p : pins) {
    os << "(assert (! (= " << sym(p.name) << ' ' << smt_term(*trace::t::num(p.value)) << ") :named P" << n++
       << "))\n";
  }
  for (std::size_t i = 0; i < vc.goals.size(); ++i) {
    const auto& g = vc.goals[i];
    const trace::TermPtr& body = g.body ? g.body : g.term;
    if (!g.skolem.empty()) out.skolems.push_back(g.skolem);
    std::string name = "G" + std::to_string(i);
    out.goal_names.push_back(name);
    os << "; goal " << trace::origin_name(g.origin) << (g.label.empty() ? "" : ": " + g.label) << '\n';
    os << "(define-fun " << name << " () Bool " << smt_term(*body) << ")\n";
  }
  os << "(assert (! (not ";
  if (out.goal_names.empty()) {
    os << "true";
  } else if (out.goal_names.size() == 1) {
    os << out.goal_names[0];
  } else {
    os << "(and";
    for (const auto& g : out.goal_names) os << ' ' << g;
    os << ')';
  }
  os << ") :named goals))\n";
  os << "(check-sat)\n";
  os << "(get-info :reason-unknown)\n";

  std::vector<std::string> wanted;
  for (const auto& d : vc.decls) wanted.push_back(sym(d.name));
  for (const auto& d : vc.defs) {
    if (d.sort != trace::Sort::Map) wanted.push_back(sym(d.name));
  }
  for (const auto& s : out.skolems) wanted.push_back(s);
  for (const auto& g : out.goal_names) wanted.push_back(g);
  for (const auto& m : vc.maps) wanted.push_back("(sum " + sym(m) + ")");
  os << "(get-value (";
  for (std::size_t i = 0; i < wanted.size(); ++i) os << (i ? " " : "") << wanted[i];
  os << "))\n";
  out.text = os.str();
  return out;
}

}  // namespace tct::smt
