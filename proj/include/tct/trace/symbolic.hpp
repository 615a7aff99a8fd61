// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tct/lang/ast.hpp"
#include "tct/trace/term.hpp"

namespace tct::trace {

/// How names in an expression map to symbolic terms.
struct SymScope {
  /// Parameters and locals; return null when the name is not one.
  std::function<TermPtr(const std::string&)> local;
  /// Current symbol (a Var) of a storage slot; scalars and maps alike.
  std::function<TermPtr(const std::string&)> storage;
  /// Declared storage types, for bool slots held as 0/1 words.
  const lang::ContractDef* contract = nullptr;
  TermPtr sender;
  TermPtr self;
  /// Scope used inside old(...), when allowed.
  const SymScope* old = nullptr;
  /// Executable code: + - * become add/sub/mul and literals are words.
  bool wrapping = true;
  /// When set, receives the divisor of every division that is always
  /// evaluated (not under the right operand of && || ==>).
  std::vector<TermPtr>* div_guards = nullptr;
};

/// Name of the SMT-level variable standing for a bound address variable.
std::string bound_name(const std::string& var);

TermPtr to_term(const lang::Expr& e, const SymScope& scope);

/// Integer view of a value term: booleans become 0/1.
TermPtr as_word(const TermPtr& value, bool is_bool);

}  // namespace tct::trace
