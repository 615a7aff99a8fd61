// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/protocol/protocol.hpp"

#include <sstream>

#include "json.hpp"

#include "tct/common/error.hpp"
#include "tct/lang/parser.hpp"
#include "tct/lang/printer.hpp"
#include "tct/trace/path.hpp"
#include "tct/vm/eval.hpp"

namespace tct::protocol {

using json = nlohmann::ordered_json;

std::string_view reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::NoTheorem: return "NoTheorem";
    case RejectReason::HypothesisFalse: return "HypothesisFalse";
    case RejectReason::PathMismatch: return "PathMismatch";
    case RejectReason::Reverted: return "Reverted";
    case RejectReason::StepLimit: return "StepLimit";
    case RejectReason::InvalidTheorem: return "InvalidTheorem";
    case RejectReason::UnknownTarget: return "UnknownTarget";
  }
  return "?";
}

std::optional<RejectReason> parse_reason(std::string_view s) {
  for (auto r : {RejectReason::NoTheorem, RejectReason::HypothesisFalse, RejectReason::PathMismatch,
                 RejectReason::Reverted, RejectReason::StepLimit, RejectReason::InvalidTheorem,
                 RejectReason::UnknownTarget}) {
    if (reason_name(r) == s) return r;
  }
  return std::nullopt;
}

std::string_view status_name(Outcome::Status s) {
  switch (s) {
    case Outcome::Status::Committed: return "Committed";
    case Outcome::Status::Rejected: return "Rejected";
    case Outcome::Status::Accepted: return "Accepted";
  }
  return "?";
}

namespace {

Outcome rejected(RejectReason r, std::string detail = {}) {
  Outcome o;
  o.status = Outcome::Status::Rejected;
  o.reason = r;
  o.detail = std::move(detail);
  return o;
}

json args_json(const std::vector<Word256>& args) {
  json a = json::array();
  for (const auto& w : args) a.push_back(w.to_dec());
  return a;
}

const lang::FunctionDef* entry_of(const lang::ResolvedContract& rc, const std::string& fn) {
  if (fn == "constructor") return rc.def.constructor ? &*rc.def.constructor : nullptr;
  return rc.find_function(fn);
}

}  // namespace

std::vector<smt::Pin> input_pins(const lang::FunctionDef* fn, const std::vector<Word256>& args, const Address& sender,
                                 const Address& self) {
  std::vector<smt::Pin> pins;
  if (fn) {
    for (std::size_t i = 0; i < fn->params.size() && i < args.size(); ++i) {
      if (fn->params[i].type == lang::TypeTag::Bool) continue;
      pins.push_back({fn->params[i].name, args[i].to_big()});
    }
  }
  pins.push_back({"msg.sender", sender.word().to_big()});
  pins.push_back({"this", self.word().to_big()});
  return pins;
}

std::vector<std::string> violated_invariants(const vm::WorldState& world, const Address& account) {
  std::vector<std::string> out;
  const vm::Account* a = world.find(account);
  if (!a) return out;
  const lang::ResolvedContract* rc = world.code(a->code_hash);
  if (!rc) return out;
  vm::PropertyEnv env;
  env.self = account;
  env.world = &world;
  for (const auto& inv : rc->def.invariants) {
    if (!vm::eval_property(*inv, env).b) out.push_back(lang::print(*inv));
  }
  return out;
}

// ---- Node ----

void Node::load(const lang::ResolvedProgram& program) {
  program_.merge(program);
  world_.register_program(program);
}

void Node::import_theorem(const repo::Theorem& t) { repo_.add(t); }

std::string Node::log_text() const {
  json j;
  j["blocks"] = json::array();
  for (const auto& l : log_) j["blocks"].push_back(json::parse(l));
  return j.dump(2) + "\n";
}

Outcome Node::handle(const Message& m) {
  Outcome o;
  switch (m.kind) {
    case Message::Kind::Deploy: o = deploy(m); break;
    case Message::Kind::Call: o = call(m); break;
    case Message::Kind::Publish: o = publish(m); break;
  }
  record(m, o);
  return o;
}

Outcome Node::deploy(const Message& m) {
  const lang::ResolvedContract* rc = program_.find(m.contract);
  if (!rc) return rejected(RejectReason::UnknownTarget, "no contract '" + m.contract + "'");
  vm::ExecutionResult r;
  try {
    r = vm::deploy(world_, *rc, m.args, m.sender, cfg_.exec);
  } catch (const Error& e) {
    return rejected(RejectReason::UnknownTarget, e.what());
  }
  Outcome o;
  o.trace = r.trace;
  if (r.status == vm::ExecStatus::StepLimitExceeded) return rejected(RejectReason::StepLimit);
  if (r.status == vm::ExecStatus::Reverted) {
    o = rejected(RejectReason::Reverted, r.revert_reason);
    o.trace = r.trace;
    return o;
  }
  world_.apply(r.delta);
  o.status = Outcome::Status::Committed;
  o.created = r.created;
  return o;
}

bool Node::hypothesis_holds(const repo::Theorem& t, const lang::FunctionDef& fn, const vm::Transaction& tx) const {
  try {
    if (t.hypothesis != "true") {
      lang::ExprPtr h = lang::parse_expression(t.hypothesis);
      if (!vm::eval_hypothesis(*h, fn, tx.args, tx.origin, tx.target, world_)) return false;
    }
    for (const auto& p : fn.pre) {
      if (!vm::eval_hypothesis(*p, fn, tx.args, tx.origin, tx.target, world_)) return false;
    }
  } catch (const Error& e) {
    if (e.code() == Errc::HypothesisEvalError) return false;
    throw;
  }
  return true;
}

std::optional<std::string> Node::admit(const TheoremBundle& b, std::uint64_t at) {
  const repo::Theorem& t = b.theorem;
  if (repo_.find(t.id)) return std::nullopt;
  if (repo::theorem_id(t.code, t.function, t.hypothesis, t.path) != t.id) return "theorem id does not match";
  const vm::Account* acct = world_.find(b.witness.target);
  if (!acct || acct->code_hash != t.code || b.witness.function != t.function) {
    return "witness does not call the theorem's function";
  }
  vm::ExecutionResult r;
  try {
    r = vm::execute(world_, b.witness, cfg_.exec);
  } catch (const Error& e) {
    return std::string("witness failed: ") + e.what();
  }
  if (r.status != vm::ExecStatus::Committed) return "witness did not complete";
  if (trace::path_hash(r.trace) != t.path) return "witness follows another path";
  ProofAttempt a;
  try {
    lang::ExprPtr hyp = t.hypothesis == "true" ? nullptr : lang::parse_expression(t.hypothesis);
    a = prove_trace(r.trace, program_, hyp.get(), cfg_.solver, {}, t.origin_tx);
  } catch (const Error& e) {
    return std::string("cannot check theorem: ") + e.what();
  }
  solver_calls_ += a.solver_calls;
  if (a.verdict != smt::Verdict::Proven) return "theorem not proven here: " + std::string(smt::verdict_name(a.verdict));
  repo::Theorem stored = t;
  stored.goals = static_cast<std::uint32_t>(a.goals);
  stored.added_at = at;
  repo_.add(stored);
  return std::nullopt;
}

Outcome Node::call(const Message& m) {
  const vm::Transaction& tx = m.tx;
  const vm::Account* acct = world_.find(tx.target);
  if (!acct) return rejected(RejectReason::UnknownTarget, "no contract at " + tx.target.to_hex());
  const lang::ResolvedContract* rc = program_.find_by_hash(acct->code_hash);
  const lang::FunctionDef* fn = rc ? rc->find_function(tx.function) : nullptr;
  if (!fn || !fn->body) return rejected(RejectReason::UnknownTarget, "no function '" + tx.function + "'");
  if (fn->params.size() != tx.args.size()) return rejected(RejectReason::UnknownTarget, "wrong number of arguments");

  if (m.bundle) {
    if (auto err = admit(*m.bundle, m.timestamp)) return rejected(RejectReason::InvalidTheorem, *err);
  }
  auto candidates = repo_.about(acct->code_hash, tx.function);
  if (candidates.empty()) return rejected(RejectReason::NoTheorem);
  std::vector<const repo::Theorem*> holding;
  for (const auto* t : candidates) {
    if (hypothesis_holds(*t, *fn, tx)) holding.push_back(t);
  }
  if (holding.empty()) return rejected(RejectReason::HypothesisFalse);

  vm::ExecutionResult r;
  try {
    r = vm::execute(world_, tx, cfg_.exec);
  } catch (const Error& e) {
    return rejected(RejectReason::UnknownTarget, e.what());
  }
  if (r.status == vm::ExecStatus::StepLimitExceeded) return rejected(RejectReason::StepLimit);
  if (r.status == vm::ExecStatus::Reverted) {
    Outcome o = rejected(RejectReason::Reverted, r.revert_reason);
    o.trace = r.trace;
    return o;
  }
  Hash32 ph = trace::path_hash(r.trace);
  const repo::Theorem* match = nullptr;
  for (const auto* t : holding) {
    if (t->path == ph) {
      match = t;
      break;
    }
  }
  if (!match) {
    Outcome o = rejected(RejectReason::PathMismatch);
    o.trace = r.trace;
    return o;
  }
  world_.apply(r.delta);
  Outcome o;
  o.status = Outcome::Status::Committed;
  o.theorem = match->id;
  o.return_value = r.return_value;
  o.trace = r.trace;
  return o;
}

Outcome Node::publish(const Message& m) {
  if (!m.bundle) return rejected(RejectReason::InvalidTheorem, "no theorem");
  if (auto err = admit(*m.bundle, m.timestamp)) return rejected(RejectReason::InvalidTheorem, *err);
  Outcome o;
  o.status = Outcome::Status::Accepted;
  o.theorem = m.bundle->theorem.id;
  return o;
}

void Node::record(const Message& m, const Outcome& o) {
  if (o.status != Outcome::Status::Committed) return;
  json e;
  e["t"] = m.timestamp;
  if (m.kind == Message::Kind::Deploy) {
    e["kind"] = "deploy";
    e["id"] = m.id;
    e["contract"] = m.contract;
    e["sender"] = m.sender.to_hex();
    e["args"] = args_json(m.args);
    e["created"] = o.created ? o.created->to_hex() : "";
  } else {
    e["kind"] = "call";
    e["id"] = m.tx.id;
    e["target"] = m.tx.target.to_hex();
    e["function"] = m.tx.function;
    e["sender"] = m.tx.origin.to_hex();
    e["args"] = args_json(m.tx.args);
    e["theorem"] = o.theorem ? o.theorem->hex() : "";
    e["return"] = o.return_value ? o.return_value->to_dec() : "";
  }
  log_.push_back(e.dump());
}

// ---- Network ----

Network::Network(std::size_t nodes, const NodeConfig& cfg) {
  if (nodes == 0) throw Error(Errc::Usage, "a network needs at least one node");
  for (std::size_t i = 0; i < nodes; ++i) nodes_.emplace_back(cfg);
}

void Network::load(const lang::ResolvedProgram& program) {
  program_.merge(program);
  for (auto& n : nodes_) n.load(program);
}

std::vector<Outcome> Network::broadcast(Message m) {
  m.timestamp = ++clock_;
  std::vector<Outcome> out;
  for (auto& n : nodes_) out.push_back(n.handle(m));
  return out;
}

void Network::import_theorem(const repo::Theorem& t) {
  for (auto& n : nodes_) n.import_theorem(t);
}

std::uint64_t Network::node_solver_calls() const {
  std::uint64_t s = 0;
  for (const auto& n : nodes_) s += n.solver_calls();
  return s;
}

// ---- Issuer ----

Issuer::Proof Issuer::prove(const vm::Transaction& tx, const lang::Expr* hyp) {
  const Node& pre = net_.pre_exec();
  Proof p;
  p.exec = vm::execute(pre.world(), tx);
  if (p.exec.status != vm::ExecStatus::Committed) {
    p.error = "pre-execution " + std::string(vm::status_name(p.exec.status)) +
              (p.exec.revert_reason.empty() ? "" : ": " + p.exec.revert_reason);
    p.error_code = Errc::RevertedTrace;
    return p;
  }
  const vm::Account* acct = pre.world().find(tx.target);
  const lang::ResolvedContract* rc = pre.program().find_by_hash(acct->code_hash);
  auto pins = input_pins(entry_of(*rc, tx.function), tx.args, tx.origin, tx.target);
  try {
    p.attempt = prove_trace(p.exec.trace, pre.program(), hyp, solver_, pins, tx.id);
    solver_calls_ += p.attempt->solver_calls;
  } catch (const Error& e) {
    p.error = e.what();
    p.error_code = e.code();
  }
  return p;
}

Issuer::Proof Issuer::prove_deploy(const std::string& contract, const std::vector<Word256>& args,
                                   const Address& sender, const lang::Expr* hyp) {
  const Node& pre = net_.pre_exec();
  const lang::ResolvedContract* rc = pre.program().find(contract);
  if (!rc) throw Error(Errc::NotFound, "no contract '" + contract + "'");
  Proof p;
  p.exec = vm::deploy(pre.world(), *rc, args, sender);
  if (p.exec.status != vm::ExecStatus::Committed) {
    p.error = "pre-execution " + std::string(vm::status_name(p.exec.status)) +
              (p.exec.revert_reason.empty() ? "" : ": " + p.exec.revert_reason);
    p.error_code = Errc::RevertedTrace;
    return p;
  }
  auto pins = input_pins(entry_of(*rc, "constructor"), args, sender, *p.exec.created);
  try {
    p.attempt = prove_trace(p.exec.trace, pre.program(), hyp, solver_, pins, "deploy " + contract);
    solver_calls_ += p.attempt->solver_calls;
  } catch (const Error& e) {
    p.error = e.what();
    p.error_code = e.code();
  }
  return p;
}

std::pair<Issuer::Proof, std::vector<Outcome>> Issuer::submit_proven(const vm::Transaction& tx, const lang::Expr* hyp) {
  Proof p = prove(tx, hyp);
  Message m;
  m.kind = Message::Kind::Call;
  m.tx = tx;
  if (p.attempt && p.attempt->theorem) m.bundle = TheoremBundle{*p.attempt->theorem, tx};
  return {std::move(p), net_.broadcast(std::move(m))};
}

std::vector<Outcome> Issuer::submit(const vm::Transaction& tx) {
  Message m;
  m.kind = Message::Kind::Call;
  m.tx = tx;
  return net_.broadcast(std::move(m));
}

std::pair<Issuer::Proof, std::vector<Outcome>> Issuer::publish(const vm::Transaction& sample, const lang::Expr* hyp) {
  Proof p = prove(sample, hyp);
  std::vector<Outcome> out;
  if (p.attempt && p.attempt->theorem) {
    Message m;
    m.kind = Message::Kind::Publish;
    m.bundle = TheoremBundle{*p.attempt->theorem, sample};
    out = net_.broadcast(std::move(m));
  }
  return {std::move(p), std::move(out)};
}

std::vector<Outcome> Issuer::deploy(const std::string& id, const std::string& contract,
                                    const std::vector<Word256>& args, const Address& sender) {
  Message m;
  m.kind = Message::Kind::Deploy;
  m.id = id;
  m.contract = contract;
  m.args = args;
  m.sender = sender;
  return net_.broadcast(std::move(m));
}

}  // namespace tct::protocol
