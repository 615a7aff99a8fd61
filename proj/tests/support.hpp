// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <string>

#include "tct/lang/resolve.hpp"
#include "tct/smt/solver.hpp"

namespace tct::testing {

std::string source_dir();
std::string read_text(const std::string& path);
/// Loads and merges corpus files by base name, e.g. {"multi_vuln_token"}.
lang::ResolvedProgram corpus(std::initializer_list<const char*> names);
smt::SolverConfig solver();

/// Compares `text` with tests/golden/<name>. With TCT_UPDATE_GOLDEN set the
/// file is rewritten instead. On mismatch `why` names the first differing line.
bool golden_matches(const std::string& name, const std::string& text, std::string* why = nullptr);

/// The transferProxy hypothesis with every input below 2^255.
inline constexpr const char* kTransferHypothesis =
    "0 <= totalSupply && totalSupply < 2^255 && 0 <= _value && _value < 2^255 && 0 <= _fee && _fee < 2^255";
inline constexpr const char* kDeployHypothesis = "0 <= initialSupply && initialSupply < 2^255";
inline constexpr const char* kSwapHypothesis =
    "feeNum == 0 && dx < 2^100 && feeDen < 2^100 && reserveX < 2^100 && reserveY < 2^100 && "
    "(reserveY * dx) % (reserveX + dx) == 0";

}  // namespace tct::testing
