// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/lang/printer.hpp"

#include <sstream>

namespace tct::lang {

namespace {

constexpr int kPrimary = 100;

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Forall: return 0;
    case Expr::Kind::Not: return 9;
    case Expr::Kind::Binary:
      switch (e.op) {
        case BinOp::Implies: return 1;
        case BinOp::Or: return 2;
        case BinOp::And: return 3;
        case BinOp::Eq:
        case BinOp::Ne: return 4;
        case BinOp::Lt:
        case BinOp::Le:
        case BinOp::Gt:
        case BinOp::Ge: return 5;
        case BinOp::Add:
        case BinOp::Sub: return 6;
        case BinOp::Mul:
        case BinOp::Div:
        case BinOp::Mod: return 7;
        case BinOp::Pow: return 8;
      }
      return kPrimary;
    default: return kPrimary;
  }
}

bool right_assoc(BinOp op) { return op == BinOp::Implies || op == BinOp::Pow; }

void emit(std::ostream& os, const Expr& e);

void emit_operand(std::ostream& os, const Expr& e, bool parens) {
  if (parens) os << '(';
  emit(os, e);
  if (parens) os << ')';
}

void emit(std::ostream& os, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::IntLit: os << e.int_value.str(); return;
    case Expr::Kind::BoolLit: os << (e.bool_value ? "true" : "false"); return;
    case Expr::Kind::Name: os << e.name; return;
    case Expr::Kind::MapRead:
      os << e.name << '[';
      emit(os, *e.kids[0]);
      os << ']';
      return;
    case Expr::Kind::MsgSender: os << "msg.sender"; return;
    case Expr::Kind::This: os << "this"; return;
    case Expr::Kind::Not:
      os << '!';
      emit_operand(os, *e.kids[0], precedence(*e.kids[0]) < precedence(e));
      return;
    case Expr::Kind::Binary: {
      int p = precedence(e);
      const Expr& l = *e.kids[0];
      const Expr& r = *e.kids[1];
      bool ra = right_assoc(e.op);
      bool lp = l.kind == Expr::Kind::Forall || (ra ? precedence(l) <= p : precedence(l) < p);
      bool rp = r.kind == Expr::Kind::Forall || (ra ? precedence(r) < p : precedence(r) <= p);
      emit_operand(os, l, lp);
      os << ' ' << binop_text(e.op) << ' ';
      emit_operand(os, r, rp);
      return;
    }
    case Expr::Kind::Sum: os << "sum(" << e.name << ')'; return;
    case Expr::Kind::Forall:
      os << "forall " << e.name << ": address :: ";
      emit(os, *e.kids[0]);
      return;
    case Expr::Kind::Old:
      os << "old(";
      emit(os, *e.kids[0]);
      os << ')';
      return;
  }
}

class UnitPrinter {
 public:
  std::string contract(const ContractDef& c) {
    os_.str("");
    for (const auto& inv : c.invariants) os_ << "#invariant " << print(inv) << '\n';
    if (c.is_abstract) os_ << "abstract ";
    os_ << "contract " << c.name;
    for (std::size_t i = 0; i < c.bases.size(); ++i) os_ << (i == 0 ? " is " : ", ") << c.bases[i];
    os_ << " {\n";
    for (const auto& s : c.storage) os_ << "  " << type_name(s.type) << ' ' << s.name << ";\n";
    if (c.constructor) function(*c.constructor);
    for (const auto& f : c.functions) function(f);
    os_ << "}\n";
    return os_.str();
  }

 private:
  void indent(int depth) {
    for (int i = 0; i < depth; ++i) os_ << "  ";
  }

  void function(const FunctionDef& f) {
    for (const auto& p : f.pre) os_ << "  #pre " << print(p) << '\n';
    for (const auto& p : f.post) os_ << "  #post " << print(p) << '\n';
    if (f.modifies) {
      os_ << "  #modifies";
      for (std::size_t i = 0; i < f.modifies->size(); ++i) {
        const auto& m = (*f.modifies)[i];
        os_ << (i == 0 ? " " : ", ") << m.slot;
        if (m.index) os_ << '[' << print(m.index) << ']';
      }
      os_ << '\n';
    }
    os_ << "  " << (f.is_constructor ? "constructor" : "function " + f.name) << '(';
    for (std::size_t i = 0; i < f.params.size(); ++i) {
      if (i) os_ << ", ";
      os_ << type_name(f.params[i].type) << ' ' << f.params[i].name;
    }
    os_ << ')';
    if (f.returns) os_ << " returns (" << type_name(*f.returns) << ')';
    if (!f.body) {
      os_ << ";\n";
      return;
    }
    os_ << ' ';
    block(*f.body, 1);
    os_ << '\n';
  }

  void block(const Stmt& b, int depth) {
    os_ << "{\n";
    for (const auto& s : b.body) {
      indent(depth + 1);
      stmt(*s, depth + 1);
      os_ << '\n';
    }
    indent(depth);
    os_ << '}';
  }

  void stmt(const Stmt& s, int depth) {
    switch (s.kind) {
      case Stmt::Kind::Block: block(s, depth); return;
      case Stmt::Kind::LocalDecl:
        os_ << type_name(s.decl_type) << ' ' << s.name;
        if (s.expr) os_ << " = " << print(s.expr);
        os_ << ';';
        return;
      case Stmt::Kind::Assign:
        os_ << s.name;
        if (s.index) os_ << '[' << print(s.index) << ']';
        os_ << (s.assign_op == AssignOp::Set ? " = " : s.assign_op == AssignOp::AddAssign ? " += " : " -= ")
            << print(s.expr) << ';';
        return;
      case Stmt::Kind::Require:
        os_ << "require(" << print(s.expr);
        if (!s.message.empty()) os_ << ", \"" << escape(s.message) << '"';
        os_ << ");";
        return;
      case Stmt::Kind::Assert: os_ << "assert(" << print(s.expr) << ");"; return;
      case Stmt::Kind::If:
        os_ << "if (" << print(s.expr) << ") ";
        block(*s.then_branch, depth);
        if (s.else_branch) {
          os_ << " else ";
          if (s.else_branch->kind == Stmt::Kind::If) {
            stmt(*s.else_branch, depth);
          } else {
            block(*s.else_branch, depth);
          }
        }
        return;
      case Stmt::Kind::Call: {
        const Expr& t = *s.expr;
        bool simple = t.kind == Expr::Kind::Name || t.kind == Expr::Kind::MapRead ||
                      t.kind == Expr::Kind::MsgSender || t.kind == Expr::Kind::This;
        os_ << "call " << (simple ? print(t) : "(" + print(t) + ")") << '.' << s.name << '(';
        for (std::size_t i = 0; i < s.args.size(); ++i) {
          if (i) os_ << ", ";
          os_ << print(s.args[i]);
        }
        os_ << ");";
        return;
      }
      case Stmt::Kind::Return:
        os_ << "return";
        if (s.expr) os_ << ' ' << print(s.expr);
        os_ << ';';
        return;
    }
  }

  static std::string escape(const std::string& m) {
    std::string out;
    for (char c : m) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    return out;
  }

  std::ostringstream os_;
};

}  // namespace

std::string print(const Expr& e) {
  std::ostringstream os;
  emit(os, e);
  return os.str();
}

std::string print(const ExprPtr& e) { return e ? print(*e) : std::string("<null>"); }

std::string print(const ContractDef& c) { return UnitPrinter().contract(c); }

std::string print(const SourceUnit& u) {
  std::string out;
  for (std::size_t i = 0; i < u.contracts.size(); ++i) {
    if (i) out += '\n';
    out += print(u.contracts[i]);
  }
  return out;
}

}  // namespace tct::lang
