// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tct/repo/repo.hpp"
#include "tct/smt/solver.hpp"
#include "tct/trace/ssa.hpp"
#include "tct/vcgen/vcgen.hpp"
#include "tct/vm/trace.hpp"

namespace tct::protocol {

struct Counterexample {
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> values;  // locals, storage versions, sums
  std::vector<std::string> refuted;                         // labels of goals false in the model
  bool pinned = false;  // model agrees with the transaction's own inputs
  smt::Model model;

  std::string text() const;
};

struct ProofAttempt {
  smt::Verdict verdict = smt::Verdict::Unknown;
  std::optional<repo::Theorem> theorem;
  std::optional<Counterexample> counterexample;
  std::string reason;  // solver reason for Unknown
  std::string ssa_text;
  std::string vc_text;
  std::string script;
  std::size_t goals = 0;
  std::vector<smt::Verdict> goal_verdicts;
  std::vector<std::string> goal_labels;
  std::uint64_t solver_calls = 0;
  vcgen::VerificationCondition vc;
};

/// Canonical hypothesis text ("true" for none).
std::string hypothesis_text(const lang::Expr* hyp);

/// Proves the VC of a completed trace under `hyp`. `pins` are the concrete
/// inputs of the transaction: when the first query is refuted, a second one
/// with the inputs fixed looks for a counterexample matching them. Throws
/// the vcgen / trace errors (RevertedTrace, ModifiesViolation, ...).
ProofAttempt prove_trace(const vm::Trace& trace, const lang::ResolvedProgram& program, const lang::Expr* hyp,
                         const smt::SolverConfig& solver, const std::vector<smt::Pin>& pins,
                         const std::string& origin_tx);

}  // namespace tct::protocol
