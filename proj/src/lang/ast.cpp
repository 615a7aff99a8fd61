// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/lang/ast.hpp"

namespace tct::lang {

std::string_view type_name(TypeTag t) {
  switch (t) {
    case TypeTag::Uint256: return "uint256";
    case TypeTag::Address: return "address";
    case TypeTag::Bool: return "bool";
    case TypeTag::Map: return "mapping(address => uint256)";
  }
  return "?";
}

std::string_view binop_text(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Mod: return "%";
    case BinOp::Pow: return "^";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::And: return "&&";
    case BinOp::Or: return "||";
    case BinOp::Implies: return "==>";
  }
  return "?";
}

bool is_arith(BinOp op) {
  return op == BinOp::Add || op == BinOp::Sub || op == BinOp::Mul || op == BinOp::Div ||
         op == BinOp::Mod || op == BinOp::Pow;
}

bool is_comparison(BinOp op) {
  return op == BinOp::Eq || op == BinOp::Ne || op == BinOp::Lt || op == BinOp::Le ||
         op == BinOp::Gt || op == BinOp::Ge;
}

bool is_logical(BinOp op) { return op == BinOp::And || op == BinOp::Or || op == BinOp::Implies; }

namespace {
std::shared_ptr<Expr> node(Expr::Kind k, SourcePos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->pos = pos;
  return e;
}
}  // namespace

ExprPtr make_int(BigInt v, SourcePos pos) {
  auto e = node(Expr::Kind::IntLit, pos);
  e->int_value = std::move(v);
  return e;
}

ExprPtr make_bool(bool v, SourcePos pos) {
  auto e = node(Expr::Kind::BoolLit, pos);
  e->bool_value = v;
  return e;
}

ExprPtr make_name(std::string name, SourcePos pos) {
  auto e = node(Expr::Kind::Name, pos);
  e->name = std::move(name);
  return e;
}

ExprPtr make_map_read(std::string map, ExprPtr index, SourcePos pos) {
  auto e = node(Expr::Kind::MapRead, pos);
  e->name = std::move(map);
  e->kids.push_back(std::move(index));
  return e;
}

ExprPtr make_msg_sender(SourcePos pos) { return node(Expr::Kind::MsgSender, pos); }
ExprPtr make_this(SourcePos pos) { return node(Expr::Kind::This, pos); }

ExprPtr make_not(ExprPtr operand, SourcePos pos) {
  auto e = node(Expr::Kind::Not, pos);
  e->kids.push_back(std::move(operand));
  return e;
}

ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, SourcePos pos) {
  auto e = node(Expr::Kind::Binary, pos);
  e->op = op;
  e->kids.push_back(std::move(lhs));
  e->kids.push_back(std::move(rhs));
  return e;
}

ExprPtr make_sum(std::string map, SourcePos pos) {
  auto e = node(Expr::Kind::Sum, pos);
  e->name = std::move(map);
  return e;
}

ExprPtr make_forall(std::string var, ExprPtr body, SourcePos pos) {
  auto e = node(Expr::Kind::Forall, pos);
  e->name = std::move(var);
  e->kids.push_back(std::move(body));
  return e;
}

ExprPtr make_old(ExprPtr inner, SourcePos pos) {
  auto e = node(Expr::Kind::Old, pos);
  e->kids.push_back(std::move(inner));
  return e;
}

const Param* FunctionDef::find_param(std::string_view n) const {
  for (const auto& p : params) {
    if (p.name == n) return &p;
  }
  return nullptr;
}

const ContractDef* SourceUnit::find(std::string_view name) const {
  for (const auto& c : contracts) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

bool eq_ptr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return structurally_equal(*a, *b);
}

bool eq_ptr(const StmtPtr& a, const StmtPtr& b) {
  if (!a || !b) return !a && !b;
  return structurally_equal(*a, *b);
}

template <typename T>
bool eq_list(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!eq_ptr(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.int_value == b.int_value && a.bool_value == b.bool_value &&
         a.name == b.name && a.op == b.op && eq_list(a.kids, b.kids);
}

bool structurally_equal(const Stmt& a, const Stmt& b) {
  return a.kind == b.kind && a.id == b.id && a.decl_type == b.decl_type && a.name == b.name &&
         a.assign_op == b.assign_op && eq_ptr(a.index, b.index) && eq_ptr(a.expr, b.expr) &&
         eq_list(a.args, b.args) && a.message == b.message && eq_list(a.body, b.body) &&
         eq_ptr(a.then_branch, b.then_branch) && eq_ptr(a.else_branch, b.else_branch);
}

bool structurally_equal(const FunctionDef& a, const FunctionDef& b) {
  if (a.name != b.name || a.returns != b.returns || a.is_constructor != b.is_constructor ||
      a.params.size() != b.params.size() || !eq_ptr(a.body, b.body) || !eq_list(a.pre, b.pre) ||
      !eq_list(a.post, b.post) || a.modifies.has_value() != b.modifies.has_value()) {
    return false;
  }
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (a.params[i].name != b.params[i].name || a.params[i].type != b.params[i].type) return false;
  }
  if (a.modifies) {
    if (a.modifies->size() != b.modifies->size()) return false;
    for (std::size_t i = 0; i < a.modifies->size(); ++i) {
      if ((*a.modifies)[i].slot != (*b.modifies)[i].slot ||
          !eq_ptr((*a.modifies)[i].index, (*b.modifies)[i].index)) {
        return false;
      }
    }
  }
  return true;
}

bool structurally_equal(const ContractDef& a, const ContractDef& b) {
  if (a.name != b.name || a.is_abstract != b.is_abstract || a.bases != b.bases ||
      a.storage.size() != b.storage.size() || a.functions.size() != b.functions.size() ||
      a.constructor.has_value() != b.constructor.has_value() ||
      !eq_list(a.invariants, b.invariants)) {
    return false;
  }
  for (std::size_t i = 0; i < a.storage.size(); ++i) {
    if (a.storage[i].name != b.storage[i].name || a.storage[i].type != b.storage[i].type) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.functions.size(); ++i) {
    if (!structurally_equal(a.functions[i], b.functions[i])) return false;
  }
  return !a.constructor || structurally_equal(*a.constructor, *b.constructor);
}

bool structurally_equal(const SourceUnit& a, const SourceUnit& b) {
  if (a.contracts.size() != b.contracts.size()) return false;
  for (std::size_t i = 0; i < a.contracts.size(); ++i) {
    if (!structurally_equal(a.contracts[i], b.contracts[i])) return false;
  }
  return true;
}

}  // namespace tct::lang
