// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tct/lang/resolve.hpp"
#include "tct/trace/term.hpp"
#include "tct/vm/trace.hpp"

namespace tct::trace {

enum class GoalOrigin { InlineAssert, CalleePost, Modifies, Invariant, Postcondition };

std::string_view origin_name(GoalOrigin o);

/// Range assumption attached to a declared symbol.
enum class Range { None, Word, Address, Bool, WordMap };

struct SsaStmt {
  enum class Kind { Define, Assume, Assign, MapStore, Goal };

  Kind kind = Kind::Assume;
  std::string name;  // Define / Assign / MapStore target
  Sort sort = Sort::Int;
  Range range = Range::None;
  TermPtr term;  // Assume / Goal condition, Assign / MapStore value
  GoalOrigin origin = GoalOrigin::InlineAssert;
  std::string note;
};

struct AccountInfo {
  std::string prefix;  // "" for the entry account, "a1." and so on for callees
  std::string contract;
  Hash32 code;
  TermPtr self;
  std::map<std::string, std::string> initial;  // slot -> @0 symbol, for slots the path touches
  std::map<std::string, std::string> current;  // slot -> symbol at the end of the path
};

struct FrameInfo {
  std::size_t account = 0;
  std::size_t parent = 0;
  std::string contract;
  std::string function;
  std::size_t enter_pos = 0;  // first statement of the frame
  std::size_t exit_pos = 0;   // one past the last statement of the frame
  TermPtr self;
  TermPtr sender;
  std::vector<std::pair<std::string, TermPtr>> params;
  std::map<std::string, std::string> at_enter;  // callee storage versions
  std::map<std::string, std::string> at_exit;
};

struct WriteInfo {
  std::size_t pos = 0;
  std::size_t frame = 0;
  std::size_t account = 0;
  std::string slot;
  TermPtr index;  // null for scalars
  std::map<std::string, std::string> before;  // versions of the account right before
};

/// Straight-line SSA form of one complete trace. Defines come first.
struct SsaProgram {
  Hash32 entry_code;
  std::string entry_contract;
  std::string entry_function;
  bool is_deployment = false;
  std::vector<SsaStmt> stmts;
  std::map<std::string, Sort> symbols;
  std::vector<AccountInfo> accounts;
  std::vector<FrameInfo> frames;  // frames[0] is the entry frame
  std::vector<WriteInfo> writes;

  /// Version of a storage slot in a version map, defining the @0 symbol
  /// (as a Define at the front) when the path never touched it.
  std::string version_of(std::size_t account, const std::map<std::string, std::string>& versions,
                         const std::string& slot, const lang::ResolvedProgram& program);
};

std::string storage_symbol(const std::string& prefix, const std::string& slot, int version);

/// Throws IncompleteTrace / RevertedTrace for traces that cannot carry a
/// theorem, and UnsupportedExpr when the trace does not fit the program.
SsaProgram extract_straightline(const vm::Trace& trace, const lang::ResolvedProgram& program);

std::string dump_ssa(const SsaProgram& p);

/// Sort of a term; throws SortMismatch / UnboundSymbol.
Sort sort_of(const Term& e, const std::map<std::string, Sort>& symbols);

/// Every symbol defined once before use, every statement well-sorted.
void check_well_formed(const SsaProgram& p);

}  // namespace tct::trace
