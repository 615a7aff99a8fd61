// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/vm/interpreter.hpp"

#include <map>

#include "tct/common/error.hpp"
#include "tct/vm/eval.hpp"

namespace tct::vm {

using lang::Stmt;

std::string_view status_name(ExecStatus s) {
  switch (s) {
    case ExecStatus::Committed: return "Committed";
    case ExecStatus::Reverted: return "Reverted";
    case ExecStatus::StepLimitExceeded: return "StepLimitExceeded";
  }
  return "?";
}

namespace {

struct RevertSignal {
  StatementId at;
  std::string reason;
};
struct StepLimitSignal {};
struct ReturnSignal {
  std::optional<Value> value;
};

struct Frame {
  Address self;
  Address sender;
  const lang::ResolvedContract* code = nullptr;
  const lang::FunctionDef* fn = nullptr;
  std::map<std::string, Value> vars;
  int depth = 0;
};

Value default_value(lang::TypeTag t) { return t == lang::TypeTag::Bool ? Value::boolean(false) : Value::word(0); }

std::map<std::string, Value> bind_params(const lang::FunctionDef& fn, const std::vector<Word256>& args) {
  std::map<std::string, Value> vars;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& p = fn.params[i];
    if (p.type == lang::TypeTag::Bool) {
      if (args[i] > Word256(1)) {
        throw Error(Errc::TypeError, "argument '" + p.name + "' of '" + fn.name + "' must be 0 or 1");
      }
      vars[p.name] = Value::boolean(!args[i].is_zero());
    } else {
      if (p.type == lang::TypeTag::Address && !Address::fits(args[i].to_big())) {
        throw Error(Errc::TypeError, "argument '" + p.name + "' of '" + fn.name + "' is not an address");
      }
      vars[p.name] = Value::word(args[i]);
    }
  }
  return vars;
}

class Machine : public WordContext {
 public:
  Machine(const WorldState& world, const ExecOptions& opts) : world_(world), opts_(opts) {
    next_address_ = world.next_address();
  }

  ExecutionResult run_entry(Trace header, const lang::ResolvedContract& code, const lang::FunctionDef* fn,
                            const std::vector<Word256>& args, std::optional<Creation> creation) {
    ExecutionResult res;
    res.trace = std::move(header);
    trace_ = &res.trace;
    if (creation) {
      created_.push_back(*creation);
      res.created = creation->address;
    }
    try {
      if (fn && fn->body) {
        Frame f;
        f.self = res.trace.entry_account;
        f.sender = res.trace.origin;
        f.code = &code;
        f.fn = fn;
        f.vars = bind_params(*fn, args);
        if (auto v = run_function(f)) res.return_value = v->is_bool ? Word256(v->b ? 1 : 0) : v->w;
      }
      emit(ev::Complete{});
      res.status = ExecStatus::Committed;
      res.delta = finish();
    } catch (const RevertSignal& r) {
      res.trace.events.push_back(ev::Revert{r.at, r.reason});
      res.status = ExecStatus::Reverted;
      res.revert_reason = r.reason;
      res.created.reset();
      res.return_value.reset();
    } catch (const StepLimitSignal&) {
      res.status = ExecStatus::StepLimitExceeded;
      res.revert_reason = "step limit exceeded";
      res.created.reset();
      res.return_value.reset();
    }
    return res;
  }

  Address allocate() { return Address::from_u64(next_address_++); }

  // WordContext
  std::optional<Value> lookup(const std::string& name) const override {
    auto it = frame_->vars.find(name);
    if (it == frame_->vars.end()) return std::nullopt;
    return it->second;
  }
  Value read(const std::string& slot, std::optional<Address> key) override {
    SlotKey k{frame_->self, slot, key};
    if (recording_) emit(ev::StorageRead{at_, frame_->self, slot, key});
    auto it = writes_.find(k);
    Word256 w = it != writes_.end() ? it->second : world_.read(k);
    const lang::StorageDecl* d = frame_->code->find_storage(slot);
    if (d && d->type == lang::TypeTag::Bool) return Value::boolean(!w.is_zero());
    return Value::word(w);
  }
  Address sender() const override { return frame_->sender; }
  Address self() const override { return frame_->self; }

 private:
  void emit(TraceEvent e) {
    if (trace_->events.size() >= opts_.step_limit) throw StepLimitSignal{};
    trace_->events.push_back(std::move(e));
  }

  StatementId sid(const Stmt& s) const { return StatementId{frame_->code->code_hash, frame_->fn->name, s.id}; }

  [[noreturn]] void revert(std::string reason) { throw RevertSignal{at_, std::move(reason)}; }

  Value eval(const lang::Expr& e) {
    try {
      return eval_word(e, *this);
    } catch (const Error& err) {
      if (err.code() == Errc::DivisionByZero) revert("division by zero");
      throw;
    }
  }

  std::optional<Value> run_function(Frame& f) {
    Frame* saved = frame_;
    frame_ = &f;
    std::optional<Value> out;
    try {
      exec(*f.fn->body);
    } catch (const ReturnSignal& r) {
      out = r.value;
    } catch (...) {
      frame_ = saved;
      throw;
    }
    frame_ = saved;
    return out;
  }

  const lang::ResolvedContract* code_at(const Address& a) const {
    for (const auto& c : created_) {
      if (c.address == a) return world_.code(c.code_hash);
    }
    const Account* acc = world_.find(a);
    return acc ? world_.code(acc->code_hash) : nullptr;
  }

  void exec(const Stmt& s) {
    at_ = sid(s);
    switch (s.kind) {
      case Stmt::Kind::Block:
        for (const auto& k : s.body) exec(*k);
        return;
      case Stmt::Kind::LocalDecl: {
        Value v = s.expr ? eval(*s.expr) : default_value(s.decl_type);
        at_ = sid(s);
        frame_->vars[s.name] = v;
        emit(ev::Assign{at_, s.name});
        return;
      }
      case Stmt::Kind::Assign: assign(s); return;
      case Stmt::Kind::Require: {
        bool ok = eval(*s.expr).b;
        at_ = sid(s);
        if (!ok) revert(s.message.empty() ? "require failed" : "require failed: " + s.message);
        emit(ev::RequirePass{at_});
        return;
      }
      case Stmt::Kind::Assert: {
        emit(ev::AssertSite{at_});
        if (opts_.debug_asserts) {
          recording_ = false;
          bool ok = false;
          try {
            ok = eval(*s.expr).b;
          } catch (...) {
            recording_ = true;
            throw;
          }
          recording_ = true;
          if (!ok) revert("AssertFailed");
        }
        return;
      }
      case Stmt::Kind::If: {
        bool taken = eval(*s.expr).b;
        at_ = sid(s);
        emit(ev::Branch{at_, taken});
        if (taken) {
          exec(*s.then_branch);
        } else if (s.else_branch) {
          exec(*s.else_branch);
        }
        return;
      }
      case Stmt::Kind::Call: call(s); return;
      case Stmt::Kind::Return: {
        std::optional<Value> v;
        if (s.expr) v = eval(*s.expr);
        throw ReturnSignal{v};
      }
    }
  }

  void assign(const Stmt& s) {
    std::optional<Address> key;
    if (s.index) key = Address(eval(*s.index).w);
    bool is_local = frame_->vars.count(s.name) > 0;
    Value rhs = eval(*s.expr);
    if (s.assign_op != lang::AssignOp::Set) {
      Word256 cur = is_local ? frame_->vars[s.name].w : read(s.name, key).w;
      rhs = Value::word(s.assign_op == lang::AssignOp::AddAssign ? cur + rhs.w : cur - rhs.w);
    }
    at_ = sid(s);
    if (is_local) {
      frame_->vars[s.name] = rhs;
      emit(ev::Assign{at_, s.name});
      return;
    }
    // Storage holds words; booleans are stored as 0/1.
    Word256 w = rhs.is_bool ? Word256(rhs.b ? 1 : 0) : rhs.w;
    writes_[SlotKey{frame_->self, s.name, key}] = w;
    emit(ev::StorageWrite{at_, frame_->self, s.name, key});
  }

  void call(const Stmt& s) {
    Address target(eval(*s.expr).w);
    std::vector<Word256> args;
    for (const auto& a : s.args) {
      Value v = eval(*a);
      args.push_back(v.is_bool ? Word256(v.b ? 1 : 0) : v.w);
    }
    at_ = sid(s);
    const lang::ResolvedContract* code = code_at(target);
    if (!code) revert("call to non-contract address " + target.to_hex());
    const lang::FunctionDef* fn = code->find_function(s.name);
    if (!fn || !fn->body) revert("callee " + code->def.name + " has no function '" + s.name + "'");
    if (fn->params.size() != args.size()) revert("arity mismatch calling '" + s.name + "'");
    if (frame_->depth + 1 > kMaxCallDepth) revert("call depth limit exceeded");
    Frame callee;
    callee.self = target;
    callee.sender = frame_->self;
    callee.code = code;
    callee.fn = fn;
    callee.depth = frame_->depth + 1;
    try {
      callee.vars = bind_params(*fn, args);
    } catch (const Error& err) {
      revert(err.what());
    }
    StatementId call_site = at_;
    emit(ev::CallEnter{call_site, frame_->self, target, code->code_hash, fn->name});
    run_function(callee);
    at_ = call_site;
    emit(ev::CallExit{call_site});
  }

  StateDelta finish() const {
    StateDelta d;
    d.created = created_;
    for (const auto& [k, after] : writes_) {
      Word256 before = world_.read(k);
      if (before != after) d.changes.push_back(SlotChange{k, before, after});
    }
    if (next_address_ != world_.next_address()) d.next_address = next_address_;
    return d;
  }

  const WorldState& world_;
  const ExecOptions& opts_;
  Trace* trace_ = nullptr;
  Frame* frame_ = nullptr;
  StatementId at_;
  bool recording_ = true;
  std::map<SlotKey, Word256> writes_;
  std::vector<Creation> created_;
  std::uint64_t next_address_ = 0;
};

}  // namespace

ExecutionResult execute(const WorldState& world, const Transaction& tx, const ExecOptions& opts) {
  const Account* acc = world.find(tx.target);
  if (!acc) throw Error(Errc::UnknownAccount, "no contract at " + tx.target.to_hex());
  const lang::ResolvedContract* code = world.code(acc->code_hash);
  if (!code) throw Error(Errc::NotFound, "no code registered for " + acc->code_hash.hex());
  const lang::FunctionDef* fn = code->find_function(tx.function);
  if (!fn || !fn->body) throw Error(Errc::UnknownFunction, code->def.name + " has no function '" + tx.function + "'");
  if (fn->params.size() != tx.args.size()) {
    throw Error(Errc::ArityMismatch, "'" + tx.function + "' takes " + std::to_string(fn->params.size()) +
                                         " arguments, got " + std::to_string(tx.args.size()));
  }
  bind_params(*fn, tx.args);  // validates argument types
  Trace header;
  header.entry_code = code->code_hash;
  header.entry_function = fn->name;
  header.entry_account = tx.target;
  header.origin = tx.origin;
  Machine m(world, opts);
  return m.run_entry(std::move(header), *code, fn, tx.args, std::nullopt);
}

ExecutionResult deploy(const WorldState& world, const lang::ResolvedContract& contract,
                       const std::vector<Word256>& args, const Address& sender, const ExecOptions& opts) {
  if (contract.def.is_abstract) {
    throw Error(Errc::AbstractContract, "cannot deploy abstract contract '" + contract.def.name + "'");
  }
  if (!world.code(contract.code_hash)) {
    throw Error(Errc::NotFound, "code of '" + contract.def.name + "' is not registered");
  }
  const lang::FunctionDef* ctor = contract.def.constructor ? &*contract.def.constructor : nullptr;
  std::size_t arity = ctor ? ctor->params.size() : 0;
  if (arity != args.size()) {
    throw Error(Errc::ArityMismatch, "constructor of '" + contract.def.name + "' takes " + std::to_string(arity) +
                                         " arguments, got " + std::to_string(args.size()));
  }
  if (ctor) bind_params(*ctor, args);
  Machine m(world, opts);
  Address addr = m.allocate();
  Trace header;
  header.entry_code = contract.code_hash;
  header.entry_function = "constructor";
  header.entry_account = addr;
  header.origin = sender;
  header.is_deployment = true;
  return m.run_entry(std::move(header), contract, ctor, args, Creation{addr, contract.code_hash});
}

}  // namespace tct::vm
