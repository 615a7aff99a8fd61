// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tct/lang/resolve.hpp"
#include "tct/vm/trace.hpp"
#include "tct/vm/world.hpp"

namespace tct::vm {

struct Transaction {
  std::string id;
  Address origin;
  Address target;
  std::string function;
  std::vector<Word256> args;
};

struct ExecOptions {
  std::uint64_t step_limit = 1'000'000;
  bool debug_asserts = false;
};

inline constexpr int kMaxCallDepth = 1024;

enum class ExecStatus { Committed, Reverted, StepLimitExceeded };

std::string_view status_name(ExecStatus s);

struct ExecutionResult {
  ExecStatus status = ExecStatus::Committed;
  Trace trace;
  StateDelta delta;  // empty unless Committed
  std::optional<Word256> return_value;
  std::string revert_reason;
  std::optional<Address> created;  // deployments only
};

/// Runs `tx` against `world` without modifying it; commit with
/// WorldState::apply(result.delta). Throws UnknownAccount / UnknownFunction /
/// ArityMismatch / TypeError for malformed transactions.
ExecutionResult execute(const WorldState& world, const Transaction& tx, const ExecOptions& opts = {});

/// Runs the constructor of `contract` at a fresh address. The contract's code
/// must be registered in `world`.
ExecutionResult deploy(const WorldState& world, const lang::ResolvedContract& contract,
                       const std::vector<Word256>& args, const Address& sender, const ExecOptions& opts = {});

}  // namespace tct::vm
