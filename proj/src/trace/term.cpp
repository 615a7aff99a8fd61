// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/trace/term.hpp"

#include <algorithm>
#include <sstream>

namespace tct::trace {

std::string_view sort_name(Sort s) {
  switch (s) {
    case Sort::Int: return "int";
    case Sort::Bool: return "bool";
    case Sort::Map: return "[int]int";
  }
  return "?";
}

namespace t {

namespace {
std::shared_ptr<Term> mk(Term::Kind k) {
  auto e = std::make_shared<Term>();
  e->kind = k;
  return e;
}
}  // namespace

TermPtr num(BigInt v) {
  auto e = mk(Term::Kind::Num);
  e->num = std::move(v);
  return e;
}

TermPtr boolean(bool v) {
  auto e = mk(Term::Kind::BoolConst);
  e->bval = v;
  return e;
}

TermPtr var(std::string name) {
  auto e = mk(Term::Kind::Var);
  e->name = std::move(name);
  return e;
}

TermPtr select(TermPtr m, TermPtr i) {
  auto e = mk(Term::Kind::Select);
  e->args = {std::move(m), std::move(i)};
  return e;
}

TermPtr store(TermPtr m, TermPtr i, TermPtr v) {
  auto e = mk(Term::Kind::Store);
  e->args = {std::move(m), std::move(i), std::move(v)};
  return e;
}

TermPtr sum(TermPtr m) {
  auto e = mk(Term::Kind::Sum);
  e->args = {std::move(m)};
  return e;
}

TermPtr app(std::string fn, TermPtr a, TermPtr b) {
  auto e = mk(Term::Kind::App);
  e->name = std::move(fn);
  e->args = {std::move(a), std::move(b)};
  return e;
}

TermPtr neg(TermPtr a) {
  auto e = mk(Term::Kind::Not);
  e->args = {std::move(a)};
  return e;
}

TermPtr bin(Term::Kind k, TermPtr a, TermPtr b) {
  auto e = mk(k);
  e->args = {std::move(a), std::move(b)};
  return e;
}

TermPtr ite(TermPtr c, TermPtr a, TermPtr b) {
  auto e = mk(Term::Kind::Ite);
  e->args = {std::move(c), std::move(a), std::move(b)};
  return e;
}

TermPtr forall(std::string v, TermPtr body) {
  auto e = mk(Term::Kind::Forall);
  e->name = std::move(v);
  e->args = {std::move(body)};
  return e;
}

TermPtr conj(const std::vector<TermPtr>& parts) {
  if (parts.empty()) return boolean(true);
  TermPtr out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = bin(Term::Kind::And, out, parts[i]);
  return out;
}

TermPtr disj(const std::vector<TermPtr>& parts) {
  if (parts.empty()) return boolean(false);
  TermPtr out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = bin(Term::Kind::Or, out, parts[i]);
  return out;
}

}  // namespace t

bool term_equal(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.num != b.num || a.bval != b.bval || a.name != b.name ||
      a.args.size() != b.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!term_equal(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

namespace {

constexpr int kAtom = 100;

std::string num_text(const BigInt& v) {
  static const BigInt e160 = BigInt(1) << 160;
  static const BigInt e255 = BigInt(1) << 255;
  static const BigInt e256 = BigInt(1) << 256;
  if (v == e160) return "TwoE160";
  if (v == e255) return "TwoE255";
  if (v == e256) return "TwoE256";
  return v.str();
}

int prec(const Term& e) {
  switch (e.kind) {
    case Term::Kind::Implies: return 1;
    case Term::Kind::Or: return 2;
    case Term::Kind::And: return 3;
    case Term::Kind::Eq:
    case Term::Kind::Ne: return 4;
    case Term::Kind::Lt:
    case Term::Kind::Le:
    case Term::Kind::Gt:
    case Term::Kind::Ge: return 5;
    case Term::Kind::Add:
    case Term::Kind::Sub: return 6;
    case Term::Kind::Mul:
    case Term::Kind::Div:
    case Term::Kind::Mod: return 7;
    case Term::Kind::Not: return 9;
    default: return kAtom;
  }
}

const char* infix(Term::Kind k) {
  switch (k) {
    case Term::Kind::Implies: return "==>";
    case Term::Kind::Or: return "||";
    case Term::Kind::And: return "&&";
    case Term::Kind::Eq: return "==";
    case Term::Kind::Ne: return "!=";
    case Term::Kind::Lt: return "<";
    case Term::Kind::Le: return "<=";
    case Term::Kind::Gt: return ">";
    case Term::Kind::Ge: return ">=";
    case Term::Kind::Add: return "+";
    case Term::Kind::Sub: return "-";
    case Term::Kind::Mul: return "*";
    case Term::Kind::Div: return "div";
    case Term::Kind::Mod: return "mod";
    default: return "?";
  }
}

void emit(std::ostream& os, const Term& e);

void operand(std::ostream& os, const Term& e, bool parens) {
  if (parens) os << '(';
  emit(os, e);
  if (parens) os << ')';
}

void emit(std::ostream& os, const Term& e) {
  switch (e.kind) {
    case Term::Kind::Num: os << num_text(e.num); return;
    case Term::Kind::BoolConst: os << (e.bval ? "true" : "false"); return;
    case Term::Kind::Var: os << e.name; return;
    case Term::Kind::Select:
      operand(os, *e.args[0], prec(*e.args[0]) < kAtom);
      os << '[';
      emit(os, *e.args[1]);
      os << ']';
      return;
    case Term::Kind::Store:
      operand(os, *e.args[0], prec(*e.args[0]) < kAtom);
      os << '[';
      emit(os, *e.args[1]);
      os << " := ";
      emit(os, *e.args[2]);
      os << ']';
      return;
    case Term::Kind::Sum:
      os << "sum(";
      emit(os, *e.args[0]);
      os << ')';
      return;
    case Term::Kind::App:
      os << e.name << '(';
      emit(os, *e.args[0]);
      os << ", ";
      emit(os, *e.args[1]);
      os << ')';
      return;
    case Term::Kind::Not:
      os << '!';
      operand(os, *e.args[0], prec(*e.args[0]) < prec(e));
      return;
    case Term::Kind::Ite:
      os << "(if ";
      emit(os, *e.args[0]);
      os << " then ";
      emit(os, *e.args[1]);
      os << " else ";
      emit(os, *e.args[2]);
      os << ')';
      return;
    case Term::Kind::Forall:
      os << "(forall " << e.name << " :: ";
      emit(os, *e.args[0]);
      os << ')';
      return;
    default: {
      int p = prec(e);
      bool right = e.kind == Term::Kind::Implies;
      const Term& l = *e.args[0];
      const Term& r = *e.args[1];
      operand(os, l, right ? prec(l) <= p : prec(l) < p);
      os << ' ' << infix(e.kind) << ' ';
      operand(os, r, right ? prec(r) < p : prec(r) <= p);
      return;
    }
  }
}

void collect(const Term& e, std::vector<std::string>& bound, std::vector<std::string>& out) {
  if (e.kind == Term::Kind::Var) {
    if (std::find(bound.begin(), bound.end(), e.name) == bound.end() &&
        std::find(out.begin(), out.end(), e.name) == out.end()) {
      out.push_back(e.name);
    }
    return;
  }
  if (e.kind == Term::Kind::Forall) bound.push_back(e.name);
  for (const auto& a : e.args) collect(*a, bound, out);
  if (e.kind == Term::Kind::Forall) bound.pop_back();
}

}  // namespace

std::string to_text(const Term& e) {
  std::ostringstream os;
  emit(os, e);
  return os.str();
}

std::vector<std::string> free_vars(const Term& e) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  collect(e, bound, out);
  return out;
}

TermPtr substitute(const TermPtr& e, const std::vector<std::pair<std::string, TermPtr>>& sub) {
  if (e->kind == Term::Kind::Var) {
    for (const auto& [n, r] : sub) {
      if (n == e->name) return r;
    }
    return e;
  }
  if (e->args.empty()) return e;
  std::vector<std::pair<std::string, TermPtr>> inner;
  const auto* use = &sub;
  if (e->kind == Term::Kind::Forall) {
    for (const auto& p : sub) {
      if (p.first != e->name) inner.push_back(p);
    }
    use = &inner;
  }
  auto out = std::make_shared<Term>(*e);
  bool changed = false;
  for (auto& a : out->args) {
    TermPtr n = substitute(a, *use);
    changed |= n != a;
    a = n;
  }
  return changed ? out : e;
}

}  // namespace tct::trace
