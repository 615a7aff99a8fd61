// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/lang/resolve.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tct/common/error.hpp"
#include "tct/lang/parser.hpp"
#include "tct/lang/printer.hpp"

namespace tct::lang {

const FunctionDef* ResolvedContract::find_function(std::string_view name) const {
  for (const auto& f : def.functions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const StorageDecl* ResolvedContract::find_storage(std::string_view name) const {
  for (const auto& s : def.storage) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const ResolvedContract* ResolvedProgram::find(std::string_view name) const {
  for (const auto& c : contracts) {
    if (c.def.name == name) return &c;
  }
  return nullptr;
}

const ResolvedContract* ResolvedProgram::find_by_hash(const Hash32& h) const {
  for (const auto& c : contracts) {
    if (c.code_hash == h) return &c;
  }
  return nullptr;
}

void ResolvedProgram::merge(const ResolvedProgram& other) {
  for (const auto& c : other.contracts) {
    if (const auto* existing = find(c.def.name)) {
      if (existing->code_hash == c.code_hash) continue;
      throw Error(Errc::DuplicateName, "contract '" + c.def.name + "' already loaded with different code");
    }
    contracts.push_back(c);
  }
}

namespace {

std::string at(SourcePos p) { return std::to_string(p.line) + ":" + std::to_string(p.column) + ": "; }

// ---- type checking ----

enum class Ctx { Code, Invariant, Pre, Post, Hypothesis, ModIndex };

const char* ctx_name(Ctx c) {
  switch (c) {
    case Ctx::Code: return "executable code";
    case Ctx::Invariant: return "an invariant";
    case Ctx::Pre: return "a precondition";
    case Ctx::Post: return "a postcondition";
    case Ctx::Hypothesis: return "a hypothesis";
    case Ctx::ModIndex: return "a modifies index";
  }
  return "?";
}

bool is_property(Ctx c) { return c == Ctx::Invariant || c == Ctx::Pre || c == Ctx::Post; }

std::optional<BigInt> const_value(const Expr& e) {
  if (e.kind == Expr::Kind::IntLit) return e.int_value;
  if (e.kind == Expr::Kind::Binary && e.op == BinOp::Pow) {
    auto b = const_value(*e.kids[0]);
    auto x = const_value(*e.kids[1]);
    if (!b || !x || *x > 1024) return std::nullopt;
    return boost::multiprecision::pow(*b, static_cast<unsigned>(*x));
  }
  return std::nullopt;
}

class Checker {
 public:
  Checker(const ContractDef& c, const FunctionDef* f, Ctx ctx) : c_(c), f_(f), ctx_(ctx) {}

  void function_body() {
    if (!f_->body) return;
    for (const auto& p : f_->params) {
      if (find_storage(p.name)) {
        throw Error(Errc::DuplicateName, at(p.pos) + "parameter '" + p.name + "' shadows storage");
      }
    }
    stmt(*f_->body);
  }

  void expect_bool(const Expr& e) { expect(e, TypeTag::Bool); }

  void expect(const Expr& e, TypeTag t) {
    TypeTag got = type_of(e);
    if (!compatible(t, e, got)) {
      throw Error(Errc::TypeError, at(e.pos) + "expected " + std::string(type_name(t)) + ", got " +
                                       std::string(type_name(got)) + " in '" + print(e) + "'");
    }
  }

  TypeTag type_of(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::IntLit:
        if (ctx_ == Ctx::Code && e.int_value >= pow2(256)) {
          throw Error(Errc::TypeError, at(e.pos) + "literal does not fit in uint256");
        }
        return TypeTag::Uint256;
      case Expr::Kind::BoolLit: return TypeTag::Bool;
      case Expr::Kind::Name: {
        TypeTag t = lookup(e.name, e.pos);
        if (t == TypeTag::Map) throw Error(Errc::TypeError, at(e.pos) + "map '" + e.name + "' used as a value");
        return t;
      }
      case Expr::Kind::MapRead: {
        const StorageDecl* s = find_storage(e.name);
        if (!s) throw Error(Errc::UnknownName, at(e.pos) + "unknown map '" + e.name + "'");
        if (s->type != TypeTag::Map) throw Error(Errc::TypeError, at(e.pos) + "'" + e.name + "' is not a map");
        expect(*e.kids[0], TypeTag::Address);
        return TypeTag::Uint256;
      }
      case Expr::Kind::MsgSender:
        if (ctx_ == Ctx::Invariant) throw Error(Errc::TypeError, at(e.pos) + "msg.sender in an invariant");
        return TypeTag::Address;
      case Expr::Kind::This: return TypeTag::Address;
      case Expr::Kind::Not: expect_bool(*e.kids[0]); return TypeTag::Bool;
      case Expr::Kind::Binary: return binary(e);
      case Expr::Kind::Sum: {
        if (!is_property(ctx_)) {
          throw Error(Errc::TypeError, at(e.pos) + "sum(...) is not allowed in " + ctx_name(ctx_));
        }
        const StorageDecl* s = find_storage(e.name);
        if (!s) throw Error(Errc::UnknownName, at(e.pos) + "unknown map '" + e.name + "'");
        if (s->type != TypeTag::Map) throw Error(Errc::TypeError, at(e.pos) + "'" + e.name + "' is not a map");
        return TypeTag::Uint256;
      }
      case Expr::Kind::Forall: {
        if (!is_property(ctx_)) {
          throw Error(Errc::TypeError, at(e.pos) + "forall is not allowed in " + ctx_name(ctx_));
        }
        if (is_declared(e.name)) {
          throw Error(Errc::DuplicateName, at(e.pos) + "bound variable '" + e.name + "' shadows a declaration");
        }
        bound_.push_back(e.name);
        expect_bool(*e.kids[0]);
        bound_.pop_back();
        return TypeTag::Bool;
      }
      case Expr::Kind::Old: {
        if (ctx_ != Ctx::Post || in_old_) {
          throw Error(Errc::TypeError, at(e.pos) + "old(...) is only allowed, unnested, in postconditions");
        }
        in_old_ = true;
        TypeTag t = type_of(*e.kids[0]);
        in_old_ = false;
        return t;
      }
    }
    return TypeTag::Bool;
  }

 private:
  const StorageDecl* find_storage(std::string_view n) const {
    for (const auto& s : c_.storage) {
      if (s.name == n) return &s;
    }
    return nullptr;
  }

  bool is_declared(const std::string& n) const {
    if (find_storage(n)) return true;
    if (f_ && f_->find_param(n)) return true;
    if (all_locals_.count(n)) return true;
    return std::find(bound_.begin(), bound_.end(), n) != bound_.end();
  }

  TypeTag lookup(const std::string& n, SourcePos pos) const {
    if (std::find(bound_.begin(), bound_.end(), n) != bound_.end()) return TypeTag::Address;
    if (ctx_ == Ctx::Code) {
      for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
        if (auto f = it->find(n); f != it->end()) return f->second;
      }
    }
    if (f_ && ctx_ != Ctx::Invariant) {
      if (const Param* p = f_->find_param(n)) return p->type;
    }
    if (const StorageDecl* s = find_storage(n)) return s->type;
    throw Error(Errc::UnknownName, at(pos) + "unknown name '" + n + "' in " + ctx_name(ctx_));
  }

  static bool compatible(TypeTag want, const Expr& e, TypeTag got) {
    if (want == got) return true;
    if (want == TypeTag::Address && got == TypeTag::Uint256) {
      auto v = const_value(e);
      return v && Address::fits(*v);
    }
    return false;
  }

  TypeTag binary(const Expr& e) {
    const Expr& l = *e.kids[0];
    const Expr& r = *e.kids[1];
    if (e.op == BinOp::Pow) {
      auto v = const_value(e);
      if (!v) throw Error(Errc::TypeError, at(e.pos) + "'^' needs literal operands (exponent <= 1024)");
      if (ctx_ == Ctx::Code && *v >= pow2(256)) {
        throw Error(Errc::TypeError, at(e.pos) + "constant does not fit in uint256");
      }
      return TypeTag::Uint256;
    }
    if (is_arith(e.op)) {
      expect(l, TypeTag::Uint256);
      expect(r, TypeTag::Uint256);
      return TypeTag::Uint256;
    }
    if (is_logical(e.op)) {
      expect_bool(l);
      expect_bool(r);
      return TypeTag::Bool;
    }
    TypeTag lt = type_of(l);
    TypeTag rt = type_of(r);
    bool ok = compatible(lt, r, rt) || compatible(rt, l, lt);
    if (ok && e.op != BinOp::Eq && e.op != BinOp::Ne) ok = lt != TypeTag::Bool && rt != TypeTag::Bool;
    if (!ok) {
      throw Error(Errc::TypeError, at(e.pos) + "cannot compare " + std::string(type_name(lt)) + " with " +
                                       std::string(type_name(rt)) + " in '" + print(e) + "'");
    }
    return TypeTag::Bool;
  }

  void stmt(const Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::Block:
        scopes_.emplace_back();
        for (const auto& k : s.body) stmt(*k);
        scopes_.pop_back();
        return;
      case Stmt::Kind::LocalDecl:
        if (is_declared(s.name)) {
          throw Error(Errc::DuplicateName, at(s.pos) + "local '" + s.name + "' redeclares an existing name");
        }
        if (s.expr) expect(*s.expr, s.decl_type);
        all_locals_.insert(s.name);
        scopes_.back()[s.name] = s.decl_type;
        return;
      case Stmt::Kind::Assign: {
        TypeTag target;
        bool is_local = false;
        for (auto it = scopes_.rbegin(); it != scopes_.rend() && !is_local; ++it) {
          if (auto f = it->find(s.name); f != it->end()) {
            target = f->second;
            is_local = true;
          }
        }
        if (!is_local) {
          if (f_->find_param(s.name)) {
            throw Error(Errc::TypeError, at(s.pos) + "parameter '" + s.name + "' is read-only");
          }
          const StorageDecl* d = find_storage(s.name);
          if (!d) throw Error(Errc::UnknownName, at(s.pos) + "unknown assignment target '" + s.name + "'");
          target = d->type;
        }
        if (target == TypeTag::Map) {
          if (!s.index) throw Error(Errc::TypeError, at(s.pos) + "map '" + s.name + "' assigned without index");
          expect(*s.index, TypeTag::Address);
          target = TypeTag::Uint256;
        } else if (s.index) {
          throw Error(Errc::TypeError, at(s.pos) + "'" + s.name + "' is not a map");
        }
        if (s.assign_op != AssignOp::Set && target != TypeTag::Uint256) {
          throw Error(Errc::TypeError, at(s.pos) + "compound assignment needs a uint256 target");
        }
        expect(*s.expr, target);
        return;
      }
      case Stmt::Kind::Require:
      case Stmt::Kind::Assert: expect_bool(*s.expr); return;
      case Stmt::Kind::If:
        expect_bool(*s.expr);
        stmt(*s.then_branch);
        if (s.else_branch) stmt(*s.else_branch);
        return;
      case Stmt::Kind::Call:
        expect(*s.expr, TypeTag::Address);
        for (const auto& a : s.args) {
          TypeTag t = type_of(*a);
          (void)t;
        }
        return;
      case Stmt::Kind::Return:
        if (s.expr) {
          if (!f_->returns) throw Error(Errc::TypeError, at(s.pos) + "function '" + f_->name + "' returns nothing");
          expect(*s.expr, *f_->returns);
        }
        return;
    }
  }

  const ContractDef& c_;
  const FunctionDef* f_;
  Ctx ctx_;
  bool in_old_ = false;
  std::vector<std::string> bound_;
  std::vector<std::map<std::string, TypeTag>> scopes_;
  std::set<std::string> all_locals_;
};

void check_modifies(const ContractDef& c, const FunctionDef& f) {
  if (!f.modifies) return;
  for (const auto& m : *f.modifies) {
    const StorageDecl* d = nullptr;
    for (const auto& s : c.storage) {
      if (s.name == m.slot) d = &s;
    }
    if (!d) {
      throw Error(Errc::UnknownName, "#modifies of '" + f.name + "' names unknown storage '" + m.slot + "'");
    }
    if (m.index) {
      if (d->type != TypeTag::Map) {
        throw Error(Errc::TypeError, "#modifies of '" + f.name + "' indexes scalar '" + m.slot + "'");
      }
      Checker(c, &f, Ctx::ModIndex).expect(*m.index, TypeTag::Address);
    }
  }
}

void typecheck(const ContractDef& c) {
  for (const auto& inv : c.invariants) Checker(c, nullptr, Ctx::Invariant).expect_bool(*inv);
  auto check_fn = [&](const FunctionDef& f) {
    for (const auto& p : f.pre) Checker(c, &f, Ctx::Pre).expect_bool(*p);
    for (const auto& p : f.post) Checker(c, &f, Ctx::Post).expect_bool(*p);
    check_modifies(c, f);
    Checker(c, &f, Ctx::Code).function_body();
  };
  if (c.constructor) check_fn(*c.constructor);
  for (const auto& f : c.functions) check_fn(f);
}

// ---- inheritance ----

bool modifies_covers(const std::vector<ModifiesEntry>& base, const ModifiesEntry& e) {
  for (const auto& b : base) {
    if (b.slot != e.slot) continue;
    if (!b.index) return true;
    if (e.index && print(*b.index) == print(*e.index)) return true;
  }
  return false;
}

FunctionDef merge_override(const FunctionDef& base, const FunctionDef& over, const std::string& contract) {
  bool same_sig = base.params.size() == over.params.size() && base.returns == over.returns;
  for (std::size_t i = 0; same_sig && i < base.params.size(); ++i) {
    same_sig = base.params[i].type == over.params[i].type;
  }
  if (!same_sig) {
    throw Error(Errc::TypeError, "override of '" + over.name + "' in '" + contract + "' changes the signature");
  }
  FunctionDef out = over;
  if (!out.body) {
    out.body = base.body;
    out.stmt_count = base.stmt_count;
    out.params = base.params;
  }
  out.pre = base.pre;
  out.pre.insert(out.pre.end(), over.pre.begin(), over.pre.end());
  out.post = base.post;
  out.post.insert(out.post.end(), over.post.begin(), over.post.end());
  if (base.modifies) {
    if (over.modifies) {
      for (const auto& e : *over.modifies) {
        if (!modifies_covers(*base.modifies, e)) {
          throw Error(Errc::OverrideWeakensSpec, "override of '" + over.name + "' in '" + contract +
                                                     "' adds '" + e.slot +
                                                     (e.index ? "[" + print(*e.index) + "]" : "") +
                                                     "' to the inherited #modifies set");
        }
      }
    } else {
      out.modifies = base.modifies;
    }
  }
  return out;
}

class Resolver {
 public:
  explicit Resolver(const SourceUnit& u) : unit_(u) {
    for (std::size_t i = 0; i < u.contracts.size(); ++i) index_[u.contracts[i].name] = i;
  }

  ResolvedProgram run() {
    for (const auto& c : unit_.contracts) {
      std::set<std::string> visiting;
      check_cycles(c.name, visiting);
    }
    for (std::size_t i = 0; i < unit_.contracts.size(); ++i) {
      for (const auto& b : unit_.contracts[i].bases) {
        if (index_.at(b) >= i) {
          throw Error(Errc::UnknownName, "base '" + b + "' of '" + unit_.contracts[i].name +
                                             "' must be declared before it");
        }
      }
    }
    ResolvedProgram out;
    for (const auto& c : unit_.contracts) out.contracts.push_back(flatten(c));
    return out;
  }

 private:
  void check_cycles(const std::string& name, std::set<std::string>& visiting) {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(Errc::UnknownName, "unknown base contract '" + name + "'");
    if (!visiting.insert(name).second) {
      throw Error(Errc::CyclicInheritance, "inheritance cycle through '" + name + "'");
    }
    for (const auto& b : unit_.contracts[it->second].bases) check_cycles(b, visiting);
    visiting.erase(name);
  }

  void linearize(const std::string& name, std::vector<std::string>& out) {
    const ContractDef& c = unit_.contracts[index_.at(name)];
    for (const auto& b : c.bases) linearize(b, out);
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }

  ResolvedContract flatten(const ContractDef& own) {
    ResolvedContract rc;
    linearize(own.name, rc.lineage);
    ContractDef& d = rc.def;
    d.name = own.name;
    d.is_abstract = own.is_abstract;
    d.pos = own.pos;
    for (const auto& anc_name : rc.lineage) {
      const ContractDef& anc = unit_.contracts[index_.at(anc_name)];
      for (const auto& s : anc.storage) {
        for (const auto& existing : d.storage) {
          if (existing.name == s.name) {
            throw Error(Errc::StorageRedeclaration, "'" + s.name + "' in '" + anc.name +
                                                        "' redeclares inherited storage");
          }
        }
        d.storage.push_back(s);
      }
      d.invariants.insert(d.invariants.end(), anc.invariants.begin(), anc.invariants.end());
      for (const auto& f : anc.functions) {
        auto it = std::find_if(d.functions.begin(), d.functions.end(),
                               [&](const FunctionDef& g) { return g.name == f.name; });
        if (it == d.functions.end()) {
          d.functions.push_back(f);
        } else {
          *it = merge_override(*it, f, anc.name);
        }
      }
      if (anc.constructor) d.constructor = anc.constructor;
    }
    for (const auto& f : d.functions) {
      for (const auto& s : d.storage) {
        if (s.name == f.name) {
          throw Error(Errc::DuplicateName, "function '" + f.name + "' collides with storage in '" + d.name + "'");
        }
      }
    }
    if (!d.is_abstract) {
      for (const auto& f : d.functions) {
        if (!f.body) {
          throw Error(Errc::AbstractContract, "contract '" + d.name + "' leaves '" + f.name +
                                                  "' unimplemented; declare it abstract");
        }
      }
    }
    typecheck(d);
    rc.text = print(d);
    rc.code_hash = sha256(rc.text);
    return rc;
  }

  const SourceUnit& unit_;
  std::map<std::string, std::size_t> index_;
};

// ---- hypothesis grammar ----

void hypothesis_walk(const Expr& e, const ResolvedContract& c, const FunctionDef& f) {
  auto reject = [&](const Expr& bad, const std::string& why) {
    throw Error(Errc::HypothesisNotConcrete, "'" + print(bad) + "' " + why);
  };
  switch (e.kind) {
    case Expr::Kind::Sum: reject(e, "uses sum, which has no concrete value"); break;
    case Expr::Kind::Forall: reject(e, "quantifies over all addresses"); break;
    case Expr::Kind::Old: reject(e, "refers to a previous state"); break;
    case Expr::Kind::Name:
      if (!f.find_param(e.name) && !c.find_storage(e.name)) {
        reject(e, "is neither a parameter nor contract storage");
      }
      break;
    case Expr::Kind::MapRead: {
      const Expr& idx = *e.kids[0];
      bool ok = idx.kind == Expr::Kind::IntLit || idx.kind == Expr::Kind::MsgSender ||
                idx.kind == Expr::Kind::This || (idx.kind == Expr::Kind::Name && f.find_param(idx.name));
      if (!ok) reject(e, "indexes a map by something other than a literal, parameter, msg.sender or this");
      break;
    }
    default: break;
  }
  for (const auto& k : e.kids) hypothesis_walk(*k, c, f);
}

}  // namespace

ResolvedProgram resolve_inheritance(const SourceUnit& unit) { return Resolver(unit).run(); }

SourceUnit flatten_to_unit(const ResolvedProgram& program) {
  SourceUnit u;
  for (const auto& c : program.contracts) u.contracts.push_back(c.def);
  u.source_hash = sha256(print(u));
  return u;
}

ResolvedProgram load_program(std::string_view source) { return resolve_inheritance(parse_source(source)); }

void check_hypothesis_grammar(const Expr& hyp, const ResolvedContract& contract, const FunctionDef& entry) {
  hypothesis_walk(hyp, contract, entry);
  Checker(contract.def, &entry, Ctx::Hypothesis).expect_bool(hyp);
}

std::vector<std::string> referenced_storage(const Expr& e, const ContractDef& c) {
  std::vector<std::string> out;
  walk(e, [&](const Expr& x) {
    bool candidate = x.kind == Expr::Kind::Name || x.kind == Expr::Kind::MapRead || x.kind == Expr::Kind::Sum;
    if (!candidate) return;
    for (const auto& s : c.storage) {
      if (s.name == x.name && std::find(out.begin(), out.end(), x.name) == out.end()) out.push_back(x.name);
    }
  });
  return out;
}

}  // namespace tct::lang
