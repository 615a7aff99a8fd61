// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/common/error.hpp"

namespace tct {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::UnknownType: return "UnknownType";
    case Errc::UnknownName: return "UnknownName";
    case Errc::TypeError: return "TypeError";
    case Errc::CyclicInheritance: return "CyclicInheritance";
    case Errc::StorageRedeclaration: return "StorageRedeclaration";
    case Errc::OverrideWeakensSpec: return "OverrideWeakensSpec";
    case Errc::AbstractContract: return "AbstractContract";
    case Errc::HypothesisNotConcrete: return "HypothesisNotConcrete";
    case Errc::HypothesisEvalError: return "HypothesisEvalError";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::UnknownFunction: return "UnknownFunction";
    case Errc::UnknownAccount: return "UnknownAccount";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::IncompleteTrace: return "IncompleteTrace";
    case Errc::RevertedTrace: return "RevertedTrace";
    case Errc::UnboundSymbol: return "UnboundSymbol";
    case Errc::SortMismatch: return "SortMismatch";
    case Errc::ModifiesViolation: return "ModifiesViolation";
    case Errc::UnsupportedExpr: return "UnsupportedExpr";
    case Errc::SolverFailure: return "SolverFailure";
    case Errc::IncompleteEvidence: return "IncompleteEvidence";
    case Errc::PersistenceFailure: return "PersistenceFailure";
    case Errc::NotFound: return "NotFound";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace tct
