// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/trace/ssa.hpp"

#include <set>
#include <sstream>

#include "tct/common/error.hpp"
#include "tct/lang/printer.hpp"
#include "tct/trace/symbolic.hpp"

namespace tct::trace {

using lang::Stmt;
using K = Term::Kind;

std::string_view origin_name(GoalOrigin o) {
  switch (o) {
    case GoalOrigin::InlineAssert: return "assert";
    case GoalOrigin::CalleePost: return "callee-post";
    case GoalOrigin::Modifies: return "modifies";
    case GoalOrigin::Invariant: return "invariant";
    case GoalOrigin::Postcondition: return "post";
  }
  return "?";
}

std::string storage_symbol(const std::string& prefix, const std::string& slot, int version) {
  return prefix + slot + "@" + std::to_string(version);
}

namespace {

Sort storage_sort(lang::TypeTag t) { return t == lang::TypeTag::Map ? Sort::Map : Sort::Int; }

Range storage_range(lang::TypeTag t) {
  switch (t) {
    case lang::TypeTag::Uint256: return Range::Word;
    case lang::TypeTag::Address: return Range::Address;
    case lang::TypeTag::Bool: return Range::Bool;
    case lang::TypeTag::Map: return Range::WordMap;
  }
  return Range::None;
}

void index_stmts(const Stmt& s, std::map<std::uint32_t, const Stmt*>& out) {
  out[s.id] = &s;
  for (const auto& b : s.body) index_stmts(*b, out);
  if (s.then_branch) index_stmts(*s.then_branch, out);
  if (s.else_branch) index_stmts(*s.else_branch, out);
}

std::string sid_text(const vm::StatementId& s) { return s.code.short_hex() + ":" + s.function + "#" + std::to_string(s.index); }

class Extractor {
 public:
  Extractor(const vm::Trace& tr, const lang::ResolvedProgram& prog) : tr_(tr), prog_(prog) {}

  SsaProgram run() {
    if (tr_.reverted()) throw Error(Errc::RevertedTrace, "trace of " + tr_.entry_function + " reverted");
    if (!tr_.completed()) throw Error(Errc::IncompleteTrace, "trace of " + tr_.entry_function + " is incomplete");
    const lang::ResolvedContract* rc = prog_.find_by_hash(tr_.entry_code);
    if (!rc) throw Error(Errc::NotFound, "no code for entry hash " + tr_.entry_code.short_hex());
    const lang::FunctionDef* fn = nullptr;
    if (tr_.is_deployment) {
      if (rc->def.constructor) fn = &*rc->def.constructor;
    } else {
      fn = rc->find_function(tr_.entry_function);
      if (!fn) throw Error(Errc::UnknownFunction, "'" + tr_.entry_function + "' not in " + rc->def.name);
    }
    out_.entry_code = tr_.entry_code;
    out_.entry_contract = rc->def.name;
    out_.entry_function = tr_.entry_function;
    out_.is_deployment = tr_.is_deployment;

    Frame root;
    root.acct = 0;
    root.rc = rc;
    root.fn = fn;
    root.fname = tr_.entry_function;
    if (fn) {
      for (const auto& p : fn->params) {
        define(p.name, p.type == lang::TypeTag::Bool ? Sort::Bool : Sort::Int,
               p.type == lang::TypeTag::Bool ? Range::None : storage_range(p.type), "param");
        root.params[p.name] = t::var(p.name);
      }
    }
    define("msg.sender", Sort::Int, Range::Address, "sender");
    define("this", Sort::Int, Range::Address, "self");
    root.sender = t::var("msg.sender");
    root.self = t::var("this");
    accts_.push_back(Acct{rc, "", root.self, {}, {}});
    ordinal_[tr_.entry_account] = 0;
    open_frame(std::move(root), 0);

    for (std::size_t i = 0; i + 1 < tr_.events.size(); ++i) step(tr_.events[i]);
    if (stack_.size() != 1) throw Error(Errc::IncompleteTrace, "trace ends inside a call");
    out_.frames[0].exit_pos = body_.size();

    // Defines go first, so shift every body position.
    std::size_t shift = defines_.size();
    for (auto& f : out_.frames) {
      f.enter_pos += shift;
      f.exit_pos += shift;
    }
    for (auto& w : out_.writes) w.pos += shift;
    out_.stmts = std::move(defines_);
    for (auto& s : body_) out_.stmts.push_back(std::move(s));
    for (const auto& a : accts_) {
      out_.accounts.push_back(AccountInfo{a.prefix, a.rc->def.name, a.rc->code_hash, a.self, a.initial, a.current});
    }
    return std::move(out_);
  }

 private:
  struct Acct {
    const lang::ResolvedContract* rc;
    std::string prefix;
    TermPtr self;
    std::map<std::string, std::string> initial;
    std::map<std::string, std::string> current;
  };

  struct Frame {
    std::size_t info = 0;
    std::size_t acct = 0;
    const lang::ResolvedContract* rc = nullptr;
    const lang::FunctionDef* fn = nullptr;
    std::string fname;
    std::map<std::uint32_t, const Stmt*> stmts;
    std::string lprefix;
    std::map<std::string, TermPtr> params;
    std::map<std::string, std::string> locals;
    TermPtr sender;
    TermPtr self;
    const Stmt* pending_call = nullptr;
  };

  void define(const std::string& name, Sort sort, Range range, std::string note) {
    if (!out_.symbols.emplace(name, sort).second) throw Error(Errc::DuplicateName, "symbol '" + name + "' defined twice");
    SsaStmt s;
    s.kind = SsaStmt::Kind::Define;
    s.name = name;
    s.sort = sort;
    s.range = range;
    s.note = std::move(note);
    defines_.push_back(std::move(s));
  }

  void open_frame(Frame f, std::size_t parent) {
    f.info = out_.frames.size();
    f.lprefix = f.info == 0 ? "" : "f" + std::to_string(f.info) + ".";
    if (f.fn && f.fn->body) index_stmts(*f.fn->body, f.stmts);
    FrameInfo info;
    info.account = f.acct;
    info.parent = parent;
    info.contract = f.rc->def.name;
    info.function = f.fname;
    info.enter_pos = body_.size();
    info.self = f.self;
    info.sender = f.sender;
    if (f.fn) {
      for (const auto& p : f.fn->params) info.params.emplace_back(p.name, f.params.at(p.name));
    }
    info.at_enter = versions(f.acct);
    out_.frames.push_back(std::move(info));
    stack_.push_back(std::move(f));
  }

  std::map<std::string, std::string> versions(std::size_t acct) {
    // Every declared slot gets an entry, so later lookups never miss.
    std::map<std::string, std::string> v;
    for (const auto& d : accts_[acct].rc->def.storage) v[d.name] = current_symbol(acct, d.name);
    return v;
  }

  std::string current_symbol(std::size_t acct, const std::string& slot) {
    Acct& a = accts_[acct];
    auto it = a.current.find(slot);
    if (it != a.current.end()) return it->second;
    const lang::StorageDecl* d = a.rc->find_storage(slot);
    if (!d) throw Error(Errc::UnknownName, "no storage '" + slot + "' in " + a.rc->def.name);
    std::string sym = storage_symbol(a.prefix, slot, 0);
    define(sym, storage_sort(d->type), storage_range(d->type), "initial " + a.rc->def.name + "." + slot);
    a.initial[slot] = sym;
    a.current[slot] = sym;
    return sym;
  }

  std::string next_version(const std::string& base) {
    int& n = counter_[base];
    ++n;
    return base + "@" + std::to_string(n);
  }

  SymScope scope(Frame& f, std::vector<TermPtr>* guards) {
    SymScope s;
    s.local = [&f](const std::string& n) -> TermPtr {
      if (auto it = f.locals.find(n); it != f.locals.end()) return t::var(it->second);
      if (auto it = f.params.find(n); it != f.params.end()) return it->second;
      return nullptr;
    };
    s.storage = [this, &f](const std::string& slot) -> TermPtr {
      if (!accts_[f.acct].rc->find_storage(slot)) return nullptr;
      return t::var(current_symbol(f.acct, slot));
    };
    s.contract = &f.rc->def;
    s.sender = f.sender;
    s.self = f.self;
    s.wrapping = true;
    s.div_guards = guards;
    return s;
  }

  TermPtr code_term(Frame& f, const lang::Expr& e, std::vector<TermPtr>& guards) {
    SymScope s = scope(f, &guards);
    return to_term(e, s);
  }

  void flush_guards(std::vector<TermPtr>& guards) {
    for (const auto& d : guards) push_assume(t::bin(K::Ne, d, t::num(0)), "divisor");
    guards.clear();
  }

  void push_assume(TermPtr c, std::string note) {
    SsaStmt s;
    s.kind = SsaStmt::Kind::Assume;
    s.term = std::move(c);
    s.note = std::move(note);
    body_.push_back(std::move(s));
  }

  const Stmt& stmt_at(Frame& f, const vm::StatementId& at) {
    if (at.code != f.rc->code_hash || at.function != f.fname) {
      throw Error(Errc::UnsupportedExpr, "event at " + sid_text(at) + " outside the current frame " +
                                             f.rc->def.name + "::" + f.fname);
    }
    auto it = f.stmts.find(at.index);
    if (it == f.stmts.end()) throw Error(Errc::UnsupportedExpr, "no statement " + sid_text(at));
    return *it->second;
  }

  bool is_bool_local(Frame& f, const std::string& name) {
    for (const auto& [id, s] : f.stmts) {
      if (s->kind == Stmt::Kind::LocalDecl && s->name == name) return s->decl_type == lang::TypeTag::Bool;
    }
    return false;
  }

  TermPtr rhs_value(Frame& f, const Stmt& s, TermPtr current, std::vector<TermPtr>& guards) {
    TermPtr v = code_term(f, *s.expr, guards);
    switch (s.assign_op) {
      case lang::AssignOp::Set: return v;
      case lang::AssignOp::AddAssign: return t::app("add", current, v);
      case lang::AssignOp::SubAssign: return t::app("sub", current, v);
    }
    return v;
  }

  void on_assign(const vm::ev::Assign& e) {
    Frame& f = stack_.back();
    const Stmt& s = stmt_at(f, e.at);
    std::vector<TermPtr> guards;
    TermPtr value;
    if (s.kind == Stmt::Kind::LocalDecl) {
      if (s.expr) {
        value = code_term(f, *s.expr, guards);
      } else {
        value = s.decl_type == lang::TypeTag::Bool ? t::boolean(false) : t::num(0);
      }
    } else if (s.kind == Stmt::Kind::Assign && !s.index) {
      auto it = f.locals.find(s.name);
      if (it == f.locals.end()) throw Error(Errc::UnsupportedExpr, "assignment to undeclared local at " + sid_text(e.at));
      value = rhs_value(f, s, t::var(it->second), guards);
    } else {
      throw Error(Errc::UnsupportedExpr, "Assign event on a non-local statement " + sid_text(e.at));
    }
    flush_guards(guards);
    bool is_bool = is_bool_local(f, s.name);
    std::string sym = next_version(f.lprefix + s.name);
    out_.symbols[sym] = is_bool ? Sort::Bool : Sort::Int;
    SsaStmt a;
    a.kind = SsaStmt::Kind::Assign;
    a.name = sym;
    a.term = value;
    body_.push_back(std::move(a));
    f.locals[s.name] = sym;
  }

  void on_write(const vm::ev::StorageWrite& e) {
    Frame& f = stack_.back();
    const Stmt& s = stmt_at(f, e.at);
    if (s.kind != Stmt::Kind::Assign || s.name != e.slot) {
      throw Error(Errc::UnsupportedExpr, "StorageWrite event does not match " + sid_text(e.at));
    }
    auto found = ordinal_.find(e.account);
    if (found == ordinal_.end() || found->second != f.acct) {
      throw Error(Errc::UnsupportedExpr, "storage write outside the executing account at " + sid_text(e.at));
    }
    const lang::StorageDecl* d = f.rc->find_storage(s.name);
    if (!d) throw Error(Errc::UnknownName, "no storage '" + s.name + "'");
    std::vector<TermPtr> guards;
    WriteInfo w;
    w.frame = stack_.back().info;
    w.account = f.acct;
    w.slot = s.name;
    w.before = versions(f.acct);
    std::string cur = current_symbol(f.acct, s.name);
    SsaStmt a;
    if (s.index) {
      TermPtr idx = code_term(f, *s.index, guards);
      TermPtr value = rhs_value(f, s, t::select(t::var(cur), idx), guards);
      w.index = idx;
      a.kind = SsaStmt::Kind::MapStore;
      a.term = t::store(t::var(cur), idx, value);
    } else {
      TermPtr old_value = t::var(cur);
      TermPtr value = rhs_value(f, s, old_value, guards);
      a.kind = SsaStmt::Kind::Assign;
      a.term = as_word(value, d->type == lang::TypeTag::Bool);
    }
    flush_guards(guards);
    std::string sym = next_version(accts_[f.acct].prefix + s.name);
    out_.symbols[sym] = storage_sort(d->type);
    a.name = sym;
    w.pos = body_.size();
    body_.push_back(std::move(a));
    accts_[f.acct].current[s.name] = sym;
    out_.writes.push_back(std::move(w));
  }

  void on_branch(const vm::ev::Branch& e) {
    Frame& f = stack_.back();
    const Stmt& s = stmt_at(f, e.at);
    if (s.kind != Stmt::Kind::If) throw Error(Errc::UnsupportedExpr, "Branch event on a non-if " + sid_text(e.at));
    std::vector<TermPtr> guards;
    TermPtr c = code_term(f, *s.expr, guards);
    flush_guards(guards);
    push_assume(e.taken ? c : t::neg(c), e.taken ? "branch taken" : "branch not taken");
  }

  void on_require(const vm::ev::RequirePass& e) {
    Frame& f = stack_.back();
    const Stmt& s = stmt_at(f, e.at);
    if (s.kind != Stmt::Kind::Require) throw Error(Errc::UnsupportedExpr, "RequirePass on a non-require " + sid_text(e.at));
    std::vector<TermPtr> guards;
    TermPtr c = code_term(f, *s.expr, guards);
    flush_guards(guards);
    push_assume(c, "require");
  }

  void on_assert(const vm::ev::AssertSite& e) {
    Frame& f = stack_.back();
    const Stmt& s = stmt_at(f, e.at);
    if (s.kind != Stmt::Kind::Assert) throw Error(Errc::UnsupportedExpr, "AssertSite on a non-assert " + sid_text(e.at));
    // asserts are not executed, so their divisors are not guarded
    TermPtr c = to_term(*s.expr, scope(f, nullptr));
    SsaStmt g;
    g.kind = SsaStmt::Kind::Goal;
    g.term = c;
    g.origin = GoalOrigin::InlineAssert;
    g.note = f.rc->def.name + "::" + f.fname + " " + lang::print(*s.expr);
    body_.push_back(std::move(g));
  }

  void on_enter(const vm::ev::CallEnter& e) {
    Frame& f = stack_.back();
    const Stmt& s = stmt_at(f, e.at);
    if (s.kind != Stmt::Kind::Call || s.name != e.function) {
      throw Error(Errc::UnsupportedExpr, "CallEnter does not match " + sid_text(e.at));
    }
    std::vector<TermPtr> guards;
    TermPtr target = code_term(f, *s.expr, guards);
    std::vector<TermPtr> args;
    for (const auto& a : s.args) args.push_back(code_term(f, *a, guards));
    flush_guards(guards);

    const lang::ResolvedContract* rc = prog_.find_by_hash(e.callee_code);
    if (!rc) throw Error(Errc::NotFound, "no code for callee hash " + e.callee_code.short_hex());
    const lang::FunctionDef* fn = rc->find_function(e.function);
    if (!fn || fn->params.size() != args.size()) {
      throw Error(Errc::UnsupportedExpr, "callee " + rc->def.name + "::" + e.function + " does not fit the call");
    }

    std::size_t k;
    auto it = ordinal_.find(e.callee);
    if (it == ordinal_.end()) {
      k = accts_.size();
      ordinal_[e.callee] = k;
      accts_.push_back(Acct{rc, "a" + std::to_string(k) + ".", target, {}, {}});
      for (std::size_t j = 0; j < k; ++j) push_assume(t::bin(K::Ne, target, accts_[j].self), "distinct accounts");
    } else {
      k = it->second;
      if (accts_[k].rc != rc) throw Error(Errc::UnsupportedExpr, "account changes code inside one trace");
      if (!term_equal(target, accts_[k].self)) push_assume(t::bin(K::Eq, target, accts_[k].self), "same account");
    }

    Frame callee;
    callee.acct = k;
    callee.rc = rc;
    callee.fn = fn;
    callee.fname = e.function;
    for (std::size_t i = 0; i < args.size(); ++i) callee.params[fn->params[i].name] = args[i];
    callee.sender = f.self;
    callee.self = accts_[k].self;
    f.pending_call = &s;
    open_frame(std::move(callee), f.info);
  }

  void on_exit(const vm::ev::CallExit& e) {
    if (stack_.size() < 2) throw Error(Errc::UnsupportedExpr, "CallExit without a call");
    Frame& callee = stack_.back();
    FrameInfo& info = out_.frames[callee.info];
    info.exit_pos = body_.size();
    info.at_exit = versions(callee.acct);
    stack_.pop_back();
    Frame& f = stack_.back();
    const Stmt& s = stmt_at(f, e.at);
    if (&s != f.pending_call) throw Error(Errc::UnsupportedExpr, "CallExit does not match its CallEnter");
    f.pending_call = nullptr;
  }

  void step(const vm::TraceEvent& ev) {
    std::visit(
        [&](const auto& e) {
          using E = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<E, vm::ev::Assign>) {
            on_assign(e);
          } else if constexpr (std::is_same_v<E, vm::ev::StorageWrite>) {
            on_write(e);
          } else if constexpr (std::is_same_v<E, vm::ev::StorageRead>) {
            stmt_at(stack_.back(), e.at);  // reads are symbolic over current versions
          } else if constexpr (std::is_same_v<E, vm::ev::Branch>) {
            on_branch(e);
          } else if constexpr (std::is_same_v<E, vm::ev::RequirePass>) {
            on_require(e);
          } else if constexpr (std::is_same_v<E, vm::ev::AssertSite>) {
            on_assert(e);
          } else if constexpr (std::is_same_v<E, vm::ev::CallEnter>) {
            on_enter(e);
          } else if constexpr (std::is_same_v<E, vm::ev::CallExit>) {
            on_exit(e);
          } else {
            throw Error(Errc::UnsupportedExpr, "terminal event in the middle of a trace");
          }
        },
        ev);
  }

  const vm::Trace& tr_;
  const lang::ResolvedProgram& prog_;
  SsaProgram out_;
  std::vector<SsaStmt> defines_;
  std::vector<SsaStmt> body_;
  std::vector<Acct> accts_;
  std::map<Address, std::size_t> ordinal_;
  std::vector<Frame> stack_;
  std::map<std::string, int> counter_;
};

}  // namespace

std::string SsaProgram::version_of(std::size_t account, const std::map<std::string, std::string>& versions,
                                   const std::string& slot, const lang::ResolvedProgram& program) {
  if (auto it = versions.find(slot); it != versions.end()) return it->second;
  AccountInfo& a = accounts.at(account);
  if (auto it = a.initial.find(slot); it != a.initial.end()) return it->second;
  const lang::ResolvedContract* rc = program.find_by_hash(a.code);
  const lang::StorageDecl* d = rc ? rc->find_storage(slot) : nullptr;
  if (!d) throw Error(Errc::UnknownName, "no storage '" + slot + "' in " + a.contract);
  std::string sym = storage_symbol(a.prefix, slot, 0);
  SsaStmt s;
  s.kind = SsaStmt::Kind::Define;
  s.name = sym;
  s.sort = storage_sort(d->type);
  s.range = storage_range(d->type);
  s.note = "initial " + a.contract + "." + slot;
  std::size_t at = 0;
  while (at < stmts.size() && stmts[at].kind == SsaStmt::Kind::Define) ++at;
  stmts.insert(stmts.begin() + static_cast<std::ptrdiff_t>(at), std::move(s));
  for (auto& f : frames) {
    f.enter_pos += f.enter_pos >= at ? 1 : 0;
    f.exit_pos += f.exit_pos >= at ? 1 : 0;
  }
  for (auto& w : writes) w.pos += w.pos >= at ? 1 : 0;
  symbols[sym] = storage_sort(d->type);
  a.initial[slot] = sym;
  if (!a.current.count(slot)) a.current[slot] = sym;
  return sym;
}

SsaProgram extract_straightline(const vm::Trace& trace, const lang::ResolvedProgram& program) {
  return Extractor(trace, program).run();
}

namespace {

std::string range_text(Range r) {
  switch (r) {
    case Range::None: return "";
    case Range::Word: return "word";
    case Range::Address: return "address";
    case Range::Bool: return "bool-word";
    case Range::WordMap: return "word-map";
  }
  return "";
}

}  // namespace

std::string dump_ssa(const SsaProgram& p) {
  std::ostringstream os;
  os << "// " << (p.is_deployment ? "deployment of " : "") << p.entry_contract << "::" << p.entry_function
     << " code " << p.entry_code.short_hex() << '\n';
  for (std::size_t i = 0; i < p.accounts.size(); ++i) {
    os << "// account " << i << " " << p.accounts[i].contract << " self=" << to_text(p.accounts[i].self) << '\n';
  }
  for (const auto& s : p.stmts) {
    switch (s.kind) {
      case SsaStmt::Kind::Define:
        os << "var " << s.name << ": " << sort_name(s.sort) << ";";
        if (s.range != Range::None) os << "  // " << range_text(s.range) << ", " << s.note;
        break;
      case SsaStmt::Kind::Assume:
        os << "assume " << to_text(s.term) << ";";
        if (!s.note.empty()) os << "  // " << s.note;
        break;
      case SsaStmt::Kind::Assign:
      case SsaStmt::Kind::MapStore:
        os << s.name << " := " << to_text(s.term) << ";";
        break;
      case SsaStmt::Kind::Goal:
        os << "assert " << to_text(s.term) << ";  // " << origin_name(s.origin);
        if (!s.note.empty()) os << ": " << s.note;
        break;
    }
    os << '\n';
  }
  return os.str();
}

namespace {

Sort sort_rec(const Term& e, const std::map<std::string, Sort>& symbols, std::vector<std::string>& bound) {
  auto need = [&](const Term& a, Sort s) {
    Sort got = sort_rec(a, symbols, bound);
    if (got != s) {
      throw Error(Errc::SortMismatch, "'" + to_text(a) + "' has sort " + std::string(sort_name(got)) + ", expected " +
                                          std::string(sort_name(s)) + " in '" + to_text(e) + "'");
    }
  };
  switch (e.kind) {
    case K::Num: return Sort::Int;
    case K::BoolConst: return Sort::Bool;
    case K::Var: {
      for (const auto& b : bound) {
        if (b == e.name) return Sort::Int;
      }
      auto it = symbols.find(e.name);
      if (it == symbols.end()) throw Error(Errc::UnboundSymbol, "'" + e.name + "' is not defined");
      return it->second;
    }
    case K::Select:
      need(*e.args[0], Sort::Map);
      need(*e.args[1], Sort::Int);
      return Sort::Int;
    case K::Store:
      need(*e.args[0], Sort::Map);
      need(*e.args[1], Sort::Int);
      need(*e.args[2], Sort::Int);
      return Sort::Map;
    case K::Sum: need(*e.args[0], Sort::Map); return Sort::Int;
    case K::Not: need(*e.args[0], Sort::Bool); return Sort::Bool;
    case K::And:
    case K::Or:
    case K::Implies:
      need(*e.args[0], Sort::Bool);
      need(*e.args[1], Sort::Bool);
      return Sort::Bool;
    case K::Ite: {
      need(*e.args[0], Sort::Bool);
      Sort s = sort_rec(*e.args[1], symbols, bound);
      need(*e.args[2], s);
      return s;
    }
    case K::Eq:
    case K::Ne: {
      Sort s = sort_rec(*e.args[0], symbols, bound);
      if (s == Sort::Map) throw Error(Errc::SortMismatch, "map equality in '" + to_text(e) + "'");
      need(*e.args[1], s);
      return Sort::Bool;
    }
    case K::Lt:
    case K::Le:
    case K::Gt:
    case K::Ge:
      need(*e.args[0], Sort::Int);
      need(*e.args[1], Sort::Int);
      return Sort::Bool;
    case K::App:
    case K::Add:
    case K::Sub:
    case K::Mul:
    case K::Div:
    case K::Mod:
      need(*e.args[0], Sort::Int);
      need(*e.args[1], Sort::Int);
      return Sort::Int;
    case K::Forall: {
      bound.push_back(e.name);
      need(*e.args[0], Sort::Bool);
      bound.pop_back();
      return Sort::Bool;
    }
  }
  throw Error(Errc::SortMismatch, "unknown term kind");
}

}  // namespace

Sort sort_of(const Term& e, const std::map<std::string, Sort>& symbols) {
  std::vector<std::string> bound;
  return sort_rec(e, symbols, bound);
}

void check_well_formed(const SsaProgram& p) {
  std::map<std::string, Sort> seen;
  for (const auto& s : p.stmts) {
    switch (s.kind) {
      case SsaStmt::Kind::Define:
        if (!seen.emplace(s.name, s.sort).second) throw Error(Errc::DuplicateName, "'" + s.name + "' defined twice");
        break;
      case SsaStmt::Kind::Assume:
      case SsaStmt::Kind::Goal:
        if (sort_of(*s.term, seen) != Sort::Bool) {
          throw Error(Errc::SortMismatch, "condition '" + to_text(s.term) + "' is not boolean");
        }
        break;
      case SsaStmt::Kind::Assign:
      case SsaStmt::Kind::MapStore: {
        Sort got = sort_of(*s.term, seen);
        auto declared = p.symbols.find(s.name);
        if (declared != p.symbols.end() && declared->second != got) {
          throw Error(Errc::SortMismatch, "'" + s.name + "' assigned a " + std::string(sort_name(got)));
        }
        if (s.kind == SsaStmt::Kind::MapStore && got != Sort::Map) {
          throw Error(Errc::SortMismatch, "map store into '" + s.name + "' is not a map");
        }
        if (!seen.emplace(s.name, got).second) throw Error(Errc::DuplicateName, "'" + s.name + "' assigned twice");
        break;
      }
    }
  }
}

}  // namespace tct::trace
