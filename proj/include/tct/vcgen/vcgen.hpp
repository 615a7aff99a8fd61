// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tct/lang/resolve.hpp"
#include "tct/trace/ssa.hpp"

namespace tct::vcgen {

using trace::GoalOrigin;
using trace::Sort;
using trace::TermPtr;

enum class AssumptionKind { Range, Hypothesis, Invariant, FreshStorage, Precondition, Path, Axiom };

std::string_view kind_name(AssumptionKind k);

struct Decl {
  std::string name;
  Sort sort = Sort::Int;
};

struct Def {
  std::string name;
  Sort sort = Sort::Int;
  TermPtr term;
};

struct Assumption {
  AssumptionKind kind = AssumptionKind::Path;
  TermPtr term;
  std::string label;
};

struct Goal {
  GoalOrigin origin = GoalOrigin::InlineAssert;
  TermPtr term;
  std::string label;
  /// `term` with a top-level forall replaced by a fresh constant (the goal
  /// is refuted by a witness); equal to `term` otherwise.
  TermPtr body;
  std::string skolem;
};

struct VerificationCondition {
  std::string contract;
  std::string function;
  Hash32 code;
  bool is_deployment = false;
  std::vector<Decl> decls;
  std::vector<Def> defs;
  std::vector<Assumption> assumptions;
  std::vector<Goal> goals;
  /// Transaction inputs in order: entry params, then msg.sender and this.
  std::vector<std::string> inputs;
  /// Map-sorted symbols, declared or defined.
  std::vector<std::string> maps;
  /// Index terms the map axioms are instantiated at.
  std::vector<TermPtr> indices;
  bool nonlinear = false;

  std::size_t count(AssumptionKind k) const;
};

/// Builds the VC of a straight-line program. `hypothesis` may be null
/// (meaning true); it is type- and grammar-checked here. Throws
/// ModifiesViolation when a write hits a slot its function does not list.
VerificationCondition build_vc(trace::SsaProgram ssa, const lang::ResolvedProgram& program,
                               const lang::Expr* hypothesis);

std::string dump_vc(const VerificationCondition& vc);

/// True when some product, division or modulus has no constant operand.
bool is_nonlinear(const trace::Term& e);

}  // namespace tct::vcgen
