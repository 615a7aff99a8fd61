// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tct/common/error.hpp"
#include "tct/protocol/prover.hpp"
#include "tct/repo/repo.hpp"
#include "tct/vm/interpreter.hpp"
#include "tct/vm/world.hpp"

namespace tct::protocol {

enum class RejectReason { NoTheorem, HypothesisFalse, PathMismatch, Reverted, StepLimit, InvalidTheorem, UnknownTarget };

std::string_view reason_name(RejectReason r);
std::optional<RejectReason> parse_reason(std::string_view s);

/// A theorem plus a transaction whose execution follows its path; a node
/// that does not know the theorem re-derives and re-proves it from the
/// witness before storing it.
struct TheoremBundle {
  repo::Theorem theorem;
  vm::Transaction witness;
};

struct Message {
  enum class Kind { Deploy, Call, Publish };
  Kind kind = Kind::Call;
  std::uint64_t timestamp = 0;
  // Deploy
  std::string id;
  std::string contract;
  std::vector<Word256> args;
  Address sender;
  // Call
  vm::Transaction tx;
  // Call (optional) / Publish
  std::optional<TheoremBundle> bundle;
};

struct Outcome {
  enum class Status { Committed, Rejected, Accepted };
  Status status = Status::Rejected;
  std::optional<RejectReason> reason;
  std::string detail;
  std::optional<Hash32> theorem;
  std::optional<Address> created;
  std::optional<Word256> return_value;
  vm::Trace trace;
};

std::string_view status_name(Outcome::Status s);

struct NodeConfig {
  smt::SolverConfig solver;
  vm::ExecOptions exec;
};

class Node {
 public:
  explicit Node(NodeConfig cfg) : cfg_(std::move(cfg)) {}

  void load(const lang::ResolvedProgram& program);
  Outcome handle(const Message& m);
  /// Trusted import (node setup), no proof check.
  void import_theorem(const repo::Theorem& t);

  const vm::WorldState& world() const { return world_; }
  const repo::TheoremRepo& repo() const { return repo_; }
  const lang::ResolvedProgram& program() const { return program_; }
  /// Block log: one canonical JSON object per committed deploy or call.
  const std::vector<std::string>& log() const { return log_; }
  std::string log_text() const;
  std::uint64_t solver_calls() const { return solver_calls_; }

 private:
  Outcome deploy(const Message& m);
  Outcome call(const Message& m);
  Outcome publish(const Message& m);
  /// Verifies and stores a bundled theorem unless already known.
  std::optional<std::string> admit(const TheoremBundle& b, std::uint64_t at);
  bool hypothesis_holds(const repo::Theorem& t, const lang::FunctionDef& fn, const vm::Transaction& tx) const;
  void record(const Message& m, const Outcome& o);

  NodeConfig cfg_;
  lang::ResolvedProgram program_;
  vm::WorldState world_;
  repo::TheoremRepo repo_;
  std::vector<std::string> log_;
  std::uint64_t solver_calls_ = 0;
};

/// Nodes plus an in-order broadcast bus with a logical clock.
class Network {
 public:
  Network(std::size_t nodes, const NodeConfig& cfg);

  void load(const lang::ResolvedProgram& program);
  /// Stamps the message and delivers it to every node in index order.
  std::vector<Outcome> broadcast(Message m);
  void import_theorem(const repo::Theorem& t);

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  /// The pre-execution service issuers simulate against.
  const Node& pre_exec() const { return nodes_.front(); }
  std::uint64_t clock() const { return clock_; }
  std::uint64_t node_solver_calls() const;
  const lang::ResolvedProgram& program() const { return program_; }

 private:
  std::vector<Node> nodes_;
  lang::ResolvedProgram program_;
  std::uint64_t clock_ = 0;
};

/// Client side: pre-executes against the pre-execution service, proves,
/// and submits.
class Issuer {
 public:
  Issuer(Network& net, smt::SolverConfig solver) : net_(net), solver_(std::move(solver)) {}

  struct Proof {
    vm::ExecutionResult exec;
    std::optional<ProofAttempt> attempt;  // absent when the pre-execution reverted
    std::string error;                    // vcgen / trace error, if any
    std::optional<Errc> error_code;
  };

  Proof prove(const vm::Transaction& tx, const lang::Expr* hyp);
  Proof prove_deploy(const std::string& contract, const std::vector<Word256>& args, const Address& sender,
                     const lang::Expr* hyp);

  /// Workflow A: prove, then submit with the theorem attached when proven.
  std::pair<Proof, std::vector<Outcome>> submit_proven(const vm::Transaction& tx, const lang::Expr* hyp);
  /// Workflow B: submit and rely on the nodes' repositories.
  std::vector<Outcome> submit(const vm::Transaction& tx);
  /// Workflow C: prove on a sample transaction and publish the theorem only.
  std::pair<Proof, std::vector<Outcome>> publish(const vm::Transaction& sample, const lang::Expr* hyp);
  std::vector<Outcome> deploy(const std::string& id, const std::string& contract, const std::vector<Word256>& args,
                              const Address& sender);

  std::uint64_t solver_calls() const { return solver_calls_; }

 private:
  Network& net_;
  smt::SolverConfig solver_;
  std::uint64_t solver_calls_ = 0;
};

/// Invariants of `account` that do not hold in `world` (printed form).
std::vector<std::string> violated_invariants(const vm::WorldState& world, const Address& account);

/// Concrete input pins for a transaction (entry params, msg.sender, this).
std::vector<smt::Pin> input_pins(const lang::FunctionDef* fn, const std::vector<Word256>& args, const Address& sender,
                                 const Address& self);

}  // namespace tct::protocol
