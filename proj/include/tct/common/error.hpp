// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tct {

enum class Errc {
  SyntaxError,
  DuplicateName,
  UnknownType,
  UnknownName,
  TypeError,
  CyclicInheritance,
  StorageRedeclaration,
  OverrideWeakensSpec,
  AbstractContract,
  HypothesisNotConcrete,
  HypothesisEvalError,
  DivisionByZero,
  UnknownFunction,
  UnknownAccount,
  ArityMismatch,
  IncompleteTrace,
  RevertedTrace,
  UnboundSymbol,
  SortMismatch,
  ModifiesViolation,
  UnsupportedExpr,
  SolverFailure,
  IncompleteEvidence,
  PersistenceFailure,
  NotFound,
  Usage,
};

std::string_view errc_name(Errc code);

/// Single exception type for the whole library; `code()` carries the
/// contract-level error kind so callers can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tct
