// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/trace/symbolic.hpp"

#include "tct/common/error.hpp"
#include "tct/lang/printer.hpp"

namespace tct::trace {

using lang::BinOp;
using lang::Expr;
using K = Term::Kind;

std::string bound_name(const std::string& var) { return "?" + var; }

TermPtr as_word(const TermPtr& value, bool is_bool) {
  if (!is_bool) return value;
  return t::ite(value, t::num(1), t::num(0));
}

namespace {

BigInt fold_pow(const Expr& e) {
  if (e.kind == Expr::Kind::IntLit) return e.int_value;
  if (e.kind == Expr::Kind::Binary && e.op == BinOp::Pow) {
    BigInt x = fold_pow(*e.kids[1]);
    if (x > 1024) throw Error(Errc::UnsupportedExpr, "exponent too large in '" + lang::print(e) + "'");
    return boost::multiprecision::pow(fold_pow(*e.kids[0]), static_cast<unsigned>(x));
  }
  throw Error(Errc::UnsupportedExpr, "'^' needs literal operands: '" + lang::print(e) + "'");
}

class Translator {
 public:
  explicit Translator(const SymScope& s) : s_(s) {}

  TermPtr go(const Expr& e, bool strict) {
    switch (e.kind) {
      case Expr::Kind::IntLit: return t::num(s_.wrapping ? Word256::from_big(e.int_value).to_big() : e.int_value);
      case Expr::Kind::BoolLit: return t::boolean(e.bool_value);
      case Expr::Kind::Name: {
        for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
          if (*it == e.name) return t::var(bound_name(e.name));
        }
        if (s_.local) {
          if (TermPtr l = s_.local(e.name)) return l;
        }
        TermPtr v = storage(e.name, e);
        if (slot_is_bool(e.name)) return t::bin(K::Ne, v, t::num(0));
        return v;
      }
      case Expr::Kind::MapRead: {
        TermPtr idx = go(*e.kids[0], strict);
        return t::select(storage(e.name, e), idx);
      }
      case Expr::Kind::MsgSender:
        if (!s_.sender) throw Error(Errc::UnboundSymbol, "msg.sender has no binding here");
        return s_.sender;
      case Expr::Kind::This:
        if (!s_.self) throw Error(Errc::UnboundSymbol, "this has no binding here");
        return s_.self;
      case Expr::Kind::Not: return t::neg(go(*e.kids[0], strict));
      case Expr::Kind::Binary: return binary(e, strict);
      case Expr::Kind::Sum: return t::sum(storage(e.name, e));
      case Expr::Kind::Forall: {
        bound_.push_back(e.name);
        TermPtr body = go(*e.kids[0], false);
        bound_.pop_back();
        // bound variables range over addresses
        TermPtr x = t::var(bound_name(e.name));
        TermPtr in_range = t::bin(K::And, t::bin(K::Le, t::num(0), x), t::bin(K::Lt, x, t::num(BigInt(1) << 160)));
        return t::forall(bound_name(e.name), t::bin(K::Implies, in_range, body));
      }
      case Expr::Kind::Old: {
        if (!s_.old) throw Error(Errc::UnsupportedExpr, "old(...) has no pre-state here");
        Translator inner(*s_.old);
        inner.bound_ = bound_;
        return inner.go(*e.kids[0], false);
      }
    }
    throw Error(Errc::UnsupportedExpr, "'" + lang::print(e) + "'");
  }

 private:
  TermPtr storage(const std::string& slot, const Expr& at) {
    if (!s_.storage) throw Error(Errc::UnboundSymbol, "no storage in scope for '" + lang::print(at) + "'");
    TermPtr v = s_.storage(slot);
    if (!v) throw Error(Errc::UnboundSymbol, "'" + slot + "' has no symbol in '" + lang::print(at) + "'");
    return v;
  }

  bool slot_is_bool(const std::string& slot) const {
    if (!s_.contract) return false;
    for (const auto& d : s_.contract->storage) {
      if (d.name == slot) return d.type == lang::TypeTag::Bool;
    }
    return false;
  }

  TermPtr binary(const Expr& e, bool strict) {
    if (e.op == BinOp::Pow) {
      BigInt v = fold_pow(e);
      return t::num(s_.wrapping ? Word256::from_big(v).to_big() : v);
    }
    bool lazy_rhs = e.op == BinOp::And || e.op == BinOp::Or || e.op == BinOp::Implies;
    TermPtr l = go(*e.kids[0], strict);
    TermPtr r = go(*e.kids[1], strict && !lazy_rhs);
    switch (e.op) {
      case BinOp::Add: return s_.wrapping ? t::app("add", l, r) : t::bin(K::Add, l, r);
      case BinOp::Sub: return s_.wrapping ? t::app("sub", l, r) : t::bin(K::Sub, l, r);
      case BinOp::Mul: return s_.wrapping ? t::app("mul", l, r) : t::bin(K::Mul, l, r);
      case BinOp::Div:
      case BinOp::Mod:
        if (strict && s_.div_guards) s_.div_guards->push_back(r);
        return t::bin(e.op == BinOp::Div ? K::Div : K::Mod, l, r);
      case BinOp::Eq: return t::bin(K::Eq, l, r);
      case BinOp::Ne: return t::bin(K::Ne, l, r);
      case BinOp::Lt: return t::bin(K::Lt, l, r);
      case BinOp::Le: return t::bin(K::Le, l, r);
      case BinOp::Gt: return t::bin(K::Gt, l, r);
      case BinOp::Ge: return t::bin(K::Ge, l, r);
      case BinOp::And: return t::bin(K::And, l, r);
      case BinOp::Or: return t::bin(K::Or, l, r);
      case BinOp::Implies: return t::bin(K::Implies, l, r);
      case BinOp::Pow: break;
    }
    throw Error(Errc::UnsupportedExpr, "'" + lang::print(e) + "'");
  }

  const SymScope& s_;
  std::vector<std::string> bound_;
};

}  // namespace

TermPtr to_term(const Expr& e, const SymScope& scope) { return Translator(scope).go(e, true); }

}  // namespace tct::trace
