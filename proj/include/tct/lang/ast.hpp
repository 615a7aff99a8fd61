// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tct/common/hash.hpp"
#include "tct/common/word256.hpp"

namespace tct::lang {

struct SourcePos {
  int line = 0;
  int column = 0;
};

enum class TypeTag { Uint256, Address, Bool, Map };

std::string_view type_name(TypeTag t);

enum class BinOp { Add, Sub, Mul, Div, Mod, Pow, Eq, Ne, Lt, Le, Gt, Ge, And, Or, Implies };

std::string_view binop_text(BinOp op);
bool is_arith(BinOp op);
bool is_comparison(BinOp op);
bool is_logical(BinOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression node. Executable code uses the subset without Sum, Forall,
/// Old and Pow; annotations (invariants, pre/post, hypotheses) may use all.
struct Expr {
  enum class Kind { IntLit, BoolLit, Name, MapRead, MsgSender, This, Not, Binary, Sum, Forall, Old };

  Kind kind = Kind::IntLit;
  SourcePos pos;
  BigInt int_value;
  bool bool_value = false;
  // Name: identifier; MapRead / Sum: map name; Forall: bound variable.
  std::string name;
  BinOp op = BinOp::Add;
  // MapRead: [index]; Not: [operand]; Binary: [lhs, rhs]; Forall: [body]; Old: [inner].
  std::vector<ExprPtr> kids;
};

ExprPtr make_int(BigInt v, SourcePos pos = {});
ExprPtr make_bool(bool v, SourcePos pos = {});
ExprPtr make_name(std::string name, SourcePos pos = {});
ExprPtr make_map_read(std::string map, ExprPtr index, SourcePos pos = {});
ExprPtr make_msg_sender(SourcePos pos = {});
ExprPtr make_this(SourcePos pos = {});
ExprPtr make_not(ExprPtr e, SourcePos pos = {});
ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, SourcePos pos = {});
ExprPtr make_sum(std::string map, SourcePos pos = {});
ExprPtr make_forall(std::string var, ExprPtr body, SourcePos pos = {});
ExprPtr make_old(ExprPtr inner, SourcePos pos = {});

enum class AssignOp { Set, AddAssign, SubAssign };

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
  enum class Kind { Block, LocalDecl, Assign, Require, Assert, If, Call, Return };

  Kind kind = Kind::Block;
  SourcePos pos;
  /// Pre-order index within the enclosing function body (root block is 0).
  std::uint32_t id = 0;
  TypeTag decl_type = TypeTag::Uint256;  // LocalDecl
  std::string name;                      // LocalDecl / Assign target / Call function
  AssignOp assign_op = AssignOp::Set;
  ExprPtr index;                         // Assign to a map entry
  ExprPtr expr;                          // initializer / rhs / condition / return value / call target
  std::vector<ExprPtr> args;             // Call
  std::string message;                   // Require
  std::vector<StmtPtr> body;             // Block
  StmtPtr then_branch;                   // If
  StmtPtr else_branch;                   // If, optional
};

struct Param {
  std::string name;
  TypeTag type = TypeTag::Uint256;
  SourcePos pos;
};

struct StorageDecl {
  std::string name;
  TypeTag type = TypeTag::Uint256;
  SourcePos pos;
};

struct ModifiesEntry {
  std::string slot;
  ExprPtr index;  // null for a whole slot
};

struct FunctionDef {
  std::string name;
  std::vector<Param> params;
  std::optional<TypeTag> returns;
  StmtPtr body;  // null for an abstract declaration
  std::vector<ExprPtr> pre;
  std::vector<ExprPtr> post;
  std::optional<std::vector<ModifiesEntry>> modifies;
  bool is_constructor = false;
  SourcePos pos;
  std::uint32_t stmt_count = 0;

  const Param* find_param(std::string_view n) const;
};

struct ContractDef {
  std::string name;
  bool is_abstract = false;
  std::vector<std::string> bases;
  std::vector<StorageDecl> storage;
  std::vector<FunctionDef> functions;
  std::optional<FunctionDef> constructor;
  std::vector<ExprPtr> invariants;
  SourcePos pos;
};

struct SourceUnit {
  std::vector<ContractDef> contracts;
  Hash32 source_hash;

  const ContractDef* find(std::string_view name) const;
};

/// Structural equality ignoring source positions.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const FunctionDef& a, const FunctionDef& b);
bool structurally_equal(const ContractDef& a, const ContractDef& b);
bool structurally_equal(const SourceUnit& a, const SourceUnit& b);

/// Visits every sub-expression in pre-order.
template <typename F>
void walk(const Expr& e, F&& f) {
  f(e);
  for (const auto& k : e.kids) walk(*k, f);
}

}  // namespace tct::lang
