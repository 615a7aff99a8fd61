// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tct/protocol/protocol.hpp"

namespace tct::cli {

struct RunConfig {
  std::size_t nodes = 3;
  smt::SolverConfig solver;
  bool debug_asserts = false;
  std::string dump_dir;  // empty: no dumps
  bool timestamps = false;
};

/// Reads {"nodes":N,"solver":"path","timeout_ms":T,"debug_asserts":b} into `cfg`.
void load_config_file(const std::string& path, RunConfig& cfg);

/// A call written as `target.fn(arg, ...)` or, for deployments, `Contract(arg, ...)`.
struct CallSpec {
  std::string target;  // empty for deployments
  std::string function;
  std::vector<std::string> args;
};

CallSpec parse_call(const std::string& text);

struct ScenarioOutcome {
  std::vector<std::string> report;
  bool ok = true;
  std::string failure;  // first failed expectation
  std::uint64_t commits = 0;
  std::uint64_t rejects = 0;
  std::uint64_t accepts = 0;
  std::uint64_t node_solver_calls = 0;
  std::uint64_t issuer_solver_calls = 0;
  std::size_t theorems = 0;
  bool solver_failure = false;  // some proof could not run the solver

  std::string report_text() const;
};

/// One network plus the issuer, the name bindings and the results of the
/// most recent directive. Scenario files and the CLI verbs both drive it.
class Session {
 public:
  explicit Session(RunConfig cfg);

  /// Runs one directive line. Returns false when an expectation failed.
  bool run_line(const std::string& line, const std::filesystem::path& base);
  /// Runs a whole file; stops at the first failed expectation.
  void run_file(const std::filesystem::path& path);

  void load_source(const std::filesystem::path& file);
  Address resolve_address(const std::string& name) const;
  Word256 resolve_value(const std::string& text) const;
  vm::Transaction make_tx(const std::string& id, const CallSpec& call, const std::string& from) const;
  lang::ExprPtr parse_hypothesis(const std::string& text) const;

  /// Writes world/repo/log of every node under dump_dir/<label>.
  void snapshot(const std::string& label);
  /// True when every node serializes to the same world, repo and log.
  bool nodes_agree() const;

  protocol::Network& net() { return *net_; }
  protocol::Issuer& issuer() { return *issuer_; }
  const ScenarioOutcome& outcome() const { return out_; }
  ScenarioOutcome& outcome() { return out_; }
  const std::optional<protocol::Issuer::Proof>& last_proof() const { return last_proof_; }
  const std::vector<protocol::Outcome>& last_outcomes() const { return last_outcomes_; }
  const RunConfig& config() const { return cfg_; }

  /// Prints a proof attempt (theorem tuple or counterexample).
  std::string describe_proof(const protocol::Issuer::Proof& p) const;
  void dump_proof(const std::string& name, const protocol::Issuer::Proof& p) const;

 private:
  void note(const std::string& line);
  bool fail(const std::string& why);
  std::string summarize(const std::vector<protocol::Outcome>& outs);

  RunConfig cfg_;
  std::unique_ptr<protocol::Network> net_;
  std::unique_ptr<protocol::Issuer> issuer_;
  std::map<std::string, Address> names_;
  std::optional<protocol::Issuer::Proof> last_proof_;
  std::vector<protocol::Outcome> last_outcomes_;
  std::uint64_t solver_mark_ = 0;
  std::uint64_t step_ = 0;
  ScenarioOutcome out_;
};

/// Theorem file: the theorem plus its witness transaction.
void save_theorem_file(const std::string& path, const repo::Theorem& t, const vm::Transaction& witness);
protocol::TheoremBundle load_theorem_file(const std::string& path);

}  // namespace tct::cli
