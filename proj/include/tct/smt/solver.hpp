// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tct/smt/model.hpp"
#include "tct/smt/script.hpp"

namespace tct::smt {

inline constexpr int kDefaultTimeoutMs = 5000;
inline constexpr int kNonlinearTimeoutMs = 30000;

struct SolverConfig {
  std::string path = "z3";
  /// Unset: 5 s, or 30 s for nonlinear queries. Zero: never run the solver.
  std::optional<int> timeout_ms;
};

enum class SatStatus { Sat, Unsat, Unknown };

struct SolverAnswer {
  SatStatus status = SatStatus::Unknown;
  std::string reason;
  bool has_model = false;
  Model model;
  std::string output;
};

/// Runs the solver on a script in a child process. Throws SolverFailure
/// when the binary cannot be started or answers with an error.
SolverAnswer run_solver(const std::string& script, const std::string& path, int timeout_ms);

enum class Verdict { Proven, Refuted, Unknown };

std::string_view verdict_name(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<Verdict> goals;  // per goal; Unknown unless decided
  Model model;
  bool has_model = false;
  std::string reason;
  Script script;
  bool solver_ran = false;
};

/// Checks every goal of a VC in one query.
CheckResult check_vc(const vcgen::VerificationCondition& vc, const SolverConfig& cfg,
                     const std::vector<Pin>& pins = {});

}  // namespace tct::smt
