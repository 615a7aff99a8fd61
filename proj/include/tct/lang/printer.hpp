// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "tct/lang/ast.hpp"

namespace tct::lang {

/// Canonical single-line rendering with minimal parentheses. Reparsing the
/// output yields a structurally equal tree.
std::string print(const Expr& e);
std::string print(const ExprPtr& e);

std::string print(const ContractDef& c);
std::string print(const SourceUnit& u);

}  // namespace tct::lang
