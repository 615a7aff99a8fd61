// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tct/common/hash.hpp"
#include "tct/lang/ast.hpp"

namespace tct::lang {

/// A contract after inheritance flattening. `def.bases` is empty; storage,
/// invariants and functions include everything inherited.
struct ResolvedContract {
  ContractDef def;
  /// Linearized ancestors, most basic first, ending with the contract itself.
  std::vector<std::string> lineage;
  /// Canonical text of `def`; the code hash is its SHA-256.
  std::string text;
  Hash32 code_hash;

  const FunctionDef* find_function(std::string_view name) const;
  const StorageDecl* find_storage(std::string_view name) const;
};

struct ResolvedProgram {
  std::vector<ResolvedContract> contracts;

  const ResolvedContract* find(std::string_view name) const;
  const ResolvedContract* find_by_hash(const Hash32& h) const;
  /// Appends the contracts of `other`; names must not collide.
  void merge(const ResolvedProgram& other);
};

/// Flattens inheritance and type-checks every contract.
ResolvedProgram resolve_inheritance(const SourceUnit& unit);

/// Re-expresses a resolved program as a source unit (no bases).
SourceUnit flatten_to_unit(const ResolvedProgram& program);

/// Parses, resolves and type-checks in one go.
ResolvedProgram load_program(std::string_view source);

/// Type-checks `hyp` as a boolean over the entry function's parameters and
/// the contract's scalar storage, then checks the hypothesis grammar. Throws
/// HypothesisNotConcrete naming the offending sub-expression.
void check_hypothesis_grammar(const Expr& hyp, const ResolvedContract& contract,
                              const FunctionDef& entry);

/// Names of storage slots referenced anywhere in `e`.
std::vector<std::string> referenced_storage(const Expr& e, const ContractDef& c);

}  // namespace tct::lang
