// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/vm/eval.hpp"

#include <set>

#include "tct/common/error.hpp"
#include "tct/lang/printer.hpp"

namespace tct::vm {

using lang::BinOp;
using lang::Expr;

namespace {

BigInt const_pow(const Expr& e) {
  auto v = [](const Expr& x, auto& self) -> BigInt {
    if (x.kind == Expr::Kind::IntLit) return x.int_value;
    if (x.kind == Expr::Kind::Binary && x.op == BinOp::Pow) {
      BigInt exp = self(*x.kids[1], self);
      if (exp > 1024) throw Error(Errc::UnsupportedExpr, "exponent too large in '" + lang::print(x) + "'");
      return boost::multiprecision::pow(self(*x.kids[0], self), static_cast<unsigned>(exp));
    }
    throw Error(Errc::UnsupportedExpr, "'^' needs literal operands: '" + lang::print(x) + "'");
  };
  return v(e, v);
}

}  // namespace

Value eval_word(const Expr& e, WordContext& ctx) {
  switch (e.kind) {
    case Expr::Kind::IntLit: return Value::word(Word256::from_big(e.int_value));
    case Expr::Kind::BoolLit: return Value::boolean(e.bool_value);
    case Expr::Kind::Name: {
      auto v = ctx.lookup(e.name);
      if (v) return *v;
      return ctx.read(e.name, std::nullopt);
    }
    case Expr::Kind::MapRead: {
      Value idx = eval_word(*e.kids[0], ctx);
      return ctx.read(e.name, Address(idx.w));
    }
    case Expr::Kind::MsgSender: return Value::word(ctx.sender().word());
    case Expr::Kind::This: return Value::word(ctx.self().word());
    case Expr::Kind::Not: return Value::boolean(!eval_word(*e.kids[0], ctx).b);
    case Expr::Kind::Binary: {
      switch (e.op) {
        case BinOp::And: {
          if (!eval_word(*e.kids[0], ctx).b) return Value::boolean(false);
          return Value::boolean(eval_word(*e.kids[1], ctx).b);
        }
        case BinOp::Or: {
          if (eval_word(*e.kids[0], ctx).b) return Value::boolean(true);
          return Value::boolean(eval_word(*e.kids[1], ctx).b);
        }
        case BinOp::Implies: {
          if (!eval_word(*e.kids[0], ctx).b) return Value::boolean(true);
          return Value::boolean(eval_word(*e.kids[1], ctx).b);
        }
        case BinOp::Pow: return Value::word(Word256::from_big(const_pow(e)));
        default: break;
      }
      Value l = eval_word(*e.kids[0], ctx);
      Value r = eval_word(*e.kids[1], ctx);
      switch (e.op) {
        case BinOp::Add: return Value::word(l.w + r.w);
        case BinOp::Sub: return Value::word(l.w - r.w);
        case BinOp::Mul: return Value::word(l.w * r.w);
        case BinOp::Div:
        case BinOp::Mod:
          if (r.w.is_zero()) throw Error(Errc::DivisionByZero, "in '" + lang::print(e) + "'");
          return Value::word(e.op == BinOp::Div ? l.w / r.w : l.w % r.w);
        case BinOp::Eq: return Value::boolean(l == r);
        case BinOp::Ne: return Value::boolean(!(l == r));
        case BinOp::Lt: return Value::boolean(l.w < r.w);
        case BinOp::Le: return Value::boolean(l.w <= r.w);
        case BinOp::Gt: return Value::boolean(l.w > r.w);
        case BinOp::Ge: return Value::boolean(l.w >= r.w);
        default: break;
      }
      break;
    }
    case Expr::Kind::Sum:
    case Expr::Kind::Forall:
    case Expr::Kind::Old: break;
  }
  throw Error(Errc::UnsupportedExpr, "'" + lang::print(e) + "' is not executable");
}

namespace {

class WorldContext : public WordContext {
 public:
  explicit WorldContext(const ConcreteEnv& env) : env_(env) {}
  std::optional<Value> lookup(const std::string& name) const override {
    auto it = env_.bindings.find(name);
    if (it == env_.bindings.end()) return std::nullopt;
    return it->second;
  }
  Value read(const std::string& slot, std::optional<Address> key) override {
    if (!env_.world) throw Error(Errc::UnknownName, "no state to read '" + slot + "' from");
    Word256 w = env_.world->read(SlotKey{env_.self, slot, key});
    if (is_bool_slot(*env_.world, env_.self, slot)) return Value::boolean(!w.is_zero());
    return Value::word(w);
  }
  Address sender() const override { return env_.sender; }
  Address self() const override { return env_.self; }

 private:
  const ConcreteEnv& env_;
};

class PropertyEval {
 public:
  explicit PropertyEval(const PropertyEnv& env) : env_(env) {}

  PValue eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::IntLit: return num(e.int_value);
      case Expr::Kind::BoolLit: return boolean(e.bool_value);
      case Expr::Kind::Name: {
        for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
          if (it->first == e.name) return num(it->second);
        }
        auto b = env_.bindings.find(e.name);
        if (b != env_.bindings.end()) return b->second;
        Word256 w = state().read(SlotKey{env_.self, e.name, std::nullopt});
        if (is_bool_slot(state(), env_.self, e.name)) return boolean(!w.is_zero());
        return num(w.to_big());
      }
      case Expr::Kind::MapRead: {
        BigInt idx = eval(*e.kids[0]).n;
        if (idx < 0 || !Address::fits(idx)) return num(0);
        return num(state().read(SlotKey{env_.self, e.name, Address(Word256::from_big(idx))}).to_big());
      }
      case Expr::Kind::MsgSender:
        if (!env_.sender) throw Error(Errc::UnknownName, "msg.sender is unbound here");
        return num(env_.sender->word().to_big());
      case Expr::Kind::This: return num(env_.self.word().to_big());
      case Expr::Kind::Not: return boolean(!eval(*e.kids[0]).b);
      case Expr::Kind::Binary: return binary(e);
      case Expr::Kind::Sum: {
        BigInt total = 0;
        const Account* acc = state().find(env_.self);
        if (acc) {
          auto m = acc->maps.find(e.name);
          if (m != acc->maps.end()) {
            for (const auto& [k, v] : m->second) total += v.to_big();
          }
        }
        return num(total);
      }
      case Expr::Kind::Forall: {
        for (const auto& a : candidates()) {
          bound_.emplace_back(e.name, a);
          bool ok = eval(*e.kids[0]).b;
          bound_.pop_back();
          if (!ok) return boolean(false);
        }
        return boolean(true);
      }
      case Expr::Kind::Old: {
        if (!env_.old_world) throw Error(Errc::UnsupportedExpr, "old(...) without a pre-state");
        bool saved = in_old_;
        in_old_ = true;
        PValue v = eval(*e.kids[0]);
        in_old_ = saved;
        return v;
      }
    }
    throw Error(Errc::UnsupportedExpr, "'" + lang::print(e) + "'");
  }

 private:
  static PValue num(BigInt v) { return PValue::num(std::move(v)); }
  static PValue boolean(bool v) { return PValue::boolean(v); }

  const WorldState& state() const {
    const WorldState* w = in_old_ ? env_.old_world : env_.world;
    if (!w) throw Error(Errc::UnknownName, "no state for storage reads");
    return *w;
  }

  std::vector<BigInt> candidates() const {
    std::set<BigInt> out;
    auto add_world = [&](const WorldState* w) {
      if (!w) return;
      for (const auto& [addr, acc] : w->accounts()) {
        out.insert(addr.word().to_big());
        for (const auto& [n, m] : acc.maps) {
          for (const auto& [k, v] : m) out.insert(k.word().to_big());
        }
      }
    };
    add_world(env_.world);
    add_world(env_.old_world);
    for (const auto& [n, v] : env_.bindings) {
      if (!v.is_bool && v.n >= 0 && Address::fits(v.n)) out.insert(v.n);
    }
    if (env_.sender) out.insert(env_.sender->word().to_big());
    out.insert(env_.self.word().to_big());
    out.insert(0);
    // One address that nothing above mentions.
    BigInt fresh = pow2(160) - 1;
    while (out.count(fresh)) --fresh;
    out.insert(fresh);
    return {out.begin(), out.end()};
  }

  PValue binary(const Expr& e) {
    switch (e.op) {
      case BinOp::And: return boolean(eval(*e.kids[0]).b && eval(*e.kids[1]).b);
      case BinOp::Or: return boolean(eval(*e.kids[0]).b || eval(*e.kids[1]).b);
      case BinOp::Implies: return boolean(!eval(*e.kids[0]).b || eval(*e.kids[1]).b);
      case BinOp::Pow: return num(const_pow(e));
      default: break;
    }
    PValue l = eval(*e.kids[0]);
    PValue r = eval(*e.kids[1]);
    switch (e.op) {
      case BinOp::Add: return num(l.n + r.n);
      case BinOp::Sub: return num(l.n - r.n);
      case BinOp::Mul: return num(l.n * r.n);
      case BinOp::Div:
      case BinOp::Mod:
        if (r.n == 0) throw Error(Errc::DivisionByZero, "in '" + lang::print(e) + "'");
        return num(e.op == BinOp::Div ? euclid_div(l.n, r.n) : euclid_mod(l.n, r.n));
      case BinOp::Eq: return boolean(l.is_bool ? l.b == r.b : l.n == r.n);
      case BinOp::Ne: return boolean(l.is_bool ? l.b != r.b : l.n != r.n);
      case BinOp::Lt: return boolean(l.n < r.n);
      case BinOp::Le: return boolean(l.n <= r.n);
      case BinOp::Gt: return boolean(l.n > r.n);
      case BinOp::Ge: return boolean(l.n >= r.n);
      default: break;
    }
    throw Error(Errc::UnsupportedExpr, "'" + lang::print(e) + "'");
  }

  const PropertyEnv& env_;
  std::vector<std::pair<std::string, BigInt>> bound_;
  bool in_old_ = false;
};

}  // namespace

bool is_bool_slot(const WorldState& world, const Address& account, const std::string& slot) {
  const Account* acc = world.find(account);
  if (!acc) return false;
  const lang::ResolvedContract* rc = world.code(acc->code_hash);
  if (!rc) return false;
  const lang::StorageDecl* d = rc->find_storage(slot);
  return d && d->type == lang::TypeTag::Bool;
}

Value eval_concrete(const Expr& e, const ConcreteEnv& env) {
  WorldContext ctx(env);
  return eval_word(e, ctx);
}

PValue eval_property(const Expr& e, const PropertyEnv& env) { return PropertyEval(env).eval(e); }

bool eval_hypothesis(const Expr& hyp, const lang::FunctionDef& fn, const std::vector<Word256>& args,
                     const Address& sender, const Address& self, const WorldState& world) {
  if (args.size() != fn.params.size()) {
    throw Error(Errc::ArityMismatch, "'" + fn.name + "' takes " + std::to_string(fn.params.size()) +
                                         " arguments, got " + std::to_string(args.size()));
  }
  PropertyEnv env;
  for (std::size_t i = 0; i < args.size(); ++i) {
    env.bindings[fn.params[i].name] = fn.params[i].type == lang::TypeTag::Bool
                                          ? PValue::boolean(!args[i].is_zero())
                                          : PValue::num(args[i].to_big());
  }
  env.sender = sender;
  env.self = self;
  env.world = &world;
  try {
    return eval_property(hyp, env).b;
  } catch (const Error& err) {
    if (err.code() == Errc::DivisionByZero) throw Error(Errc::HypothesisEvalError, err.what());
    throw;
  }
}

}  // namespace tct::vm
