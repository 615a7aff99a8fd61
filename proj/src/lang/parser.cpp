// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/lang/parser.hpp"

#include <array>
#include <cctype>
#include <set>

namespace tct::lang {

ParseError::ParseError(SourcePos pos, std::string expected, std::string found)
    : Error(Errc::SyntaxError, std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                                   ": expected " + expected + ", found " + found),
      pos_(pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

constexpr std::array kKeywords = {
    "contract", "abstract", "is",   "function", "constructor", "returns", "return",
    "if",       "else",     "require", "assert", "call",       "uint256", "address",
    "bool",     "mapping",  "true", "false",    "msg",         "this",    "forall",
    "sum",      "old",
};

constexpr std::array kReserved = {
    "add", "sub", "mul", "TwoE160", "TwoE255", "TwoE256", "and", "or", "not", "ite",
    "select", "store", "div", "mod", "distinct", "let", "exists", "Int", "Bool", "Array", "abs",
};

bool is_keyword(std::string_view s) {
  for (auto k : kKeywords) {
    if (s == k) return true;
  }
  return false;
}

enum class Tok { End, Ident, Keyword, Number, String, Punct, Annotation };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::String: return "string literal";
    case Tok::Annotation: return "'#" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src) {
  static constexpr std::array kPuncts = {"==>", "==", "!=", "<=", ">=", "&&", "||", "+=", "-=",
                                         "=>",  "::", "+",  "-",  "*",  "/",  "%",  "^",  "<",
                                         ">",   "!",  "=",  "(",  ")",  "{",  "}",  "[",  "]",
                                         ",",   ";",  ".",  ":"};
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "//") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (src.substr(i, 2) == "/*") {
      SourcePos start{line, col};
      advance(2);
      while (i < src.size() && src.substr(i, 2) != "*/") advance(1);
      if (i >= src.size()) throw ParseError(start, "'*/'", "end of input");
      advance(2);
      continue;
    }
    SourcePos pos{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string word(src.substr(i, j - i));
      advance(j - i);
      out.push_back({is_keyword(word) ? Tok::Keyword : Tok::Ident, std::move(word), pos});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      if (src.substr(i, 2) == "0x" || src.substr(i, 2) == "0X") {
        j += 2;
        while (j < src.size() && std::isxdigit(static_cast<unsigned char>(src[j]))) ++j;
      } else {
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      if (j < src.size() && (std::isalpha(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        throw ParseError(pos, "number", "'" + std::string(src.substr(i, j - i + 1)) + "'");
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::string text;
      advance(1);
      while (i < src.size() && src[i] != '"' && src[i] != '\n') {
        if (src[i] == '\\' && i + 1 < src.size()) advance(1);
        text.push_back(src[i]);
        advance(1);
      }
      if (i >= src.size() || src[i] != '"') throw ParseError(pos, "closing '\"'", "end of line");
      advance(1);
      out.push_back({Tok::String, std::move(text), pos});
      continue;
    }
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) ++j;
      std::string word(src.substr(i + 1, j - i - 1));
      if (word != "invariant" && word != "pre" && word != "post" && word != "modifies") {
        throw ParseError(pos, "annotation (#invariant, #pre, #post, #modifies)", "'#" + word + "'");
      }
      advance(j - i);
      out.push_back({Tok::Annotation, std::move(word), pos});
      continue;
    }
    bool matched = false;
    for (auto p : kPuncts) {
      std::string_view pv(p);
      if (src.substr(i, pv.size()) == pv) {
        out.push_back({Tok::Punct, std::string(pv), pos});
        advance(pv.size());
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(pos, "token", "'" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

struct PendingSpecs {
  std::vector<ExprPtr> pre;
  std::vector<ExprPtr> post;
  std::optional<std::vector<ModifiesEntry>> modifies;
  bool any = false;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SourceUnit unit() {
    SourceUnit u;
    std::set<std::string> names;
    while (!at_end()) {
      std::vector<ExprPtr> invariants;
      while (peek().kind == Tok::Annotation) {
        const Token& a = next();
        if (a.text != "invariant") {
          throw ParseError(a.pos, "'#invariant' or 'contract'", describe(a));
        }
        invariants.push_back(expression());
      }
      ContractDef c = contract();
      c.invariants.insert(c.invariants.begin(), invariants.begin(), invariants.end());
      if (!names.insert(c.name).second) {
        throw Error(Errc::DuplicateName, "contract '" + c.name + "' declared twice");
      }
      u.contracts.push_back(std::move(c));
    }
    return u;
  }

  ExprPtr standalone_expression() {
    ExprPtr e = expression();
    if (!at_end()) throw ParseError(peek().pos, "end of expression", describe(peek()));
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::End; }

  bool is(Tok kind, std::string_view text) const {
    return peek().kind == kind && peek().text == text;
  }
  bool is_punct(std::string_view p) const { return is(Tok::Punct, p); }
  bool is_kw(std::string_view k) const { return is(Tok::Keyword, k); }

  bool accept_punct(std::string_view p) {
    if (!is_punct(p)) return false;
    next();
    return true;
  }
  bool accept_kw(std::string_view k) {
    if (!is_kw(k)) return false;
    next();
    return true;
  }
  const Token& expect_punct(std::string_view p) {
    if (!is_punct(p)) throw ParseError(peek().pos, "'" + std::string(p) + "'", describe(peek()));
    return next();
  }
  const Token& expect_kw(std::string_view k) {
    if (!is_kw(k)) throw ParseError(peek().pos, "'" + std::string(k) + "'", describe(peek()));
    return next();
  }
  const Token& expect_ident(std::string_view what = "identifier") {
    if (peek().kind != Tok::Ident) throw ParseError(peek().pos, std::string(what), describe(peek()));
    const Token& t = next();
    if (is_reserved_identifier(t.text)) {
      throw ParseError(t.pos, "non-reserved identifier", "reserved name '" + t.text + "'");
    }
    return t;
  }

  bool at_value_type() const { return is_kw("uint256") || is_kw("address") || is_kw("bool"); }

  TypeTag value_type() {
    const Token& t = peek();
    if (accept_kw("uint256")) return TypeTag::Uint256;
    if (accept_kw("address")) return TypeTag::Address;
    if (accept_kw("bool")) return TypeTag::Bool;
    if (t.kind == Tok::Ident) {
      throw Error(Errc::UnknownType, std::to_string(t.pos.line) + ":" + std::to_string(t.pos.column) +
                                         ": unknown type '" + t.text + "'");
    }
    throw ParseError(t.pos, "type", describe(t));
  }

  TypeTag map_type() {
    expect_kw("mapping");
    expect_punct("(");
    SourcePos p = peek().pos;
    if (!accept_kw("address")) {
      throw Error(Errc::UnknownType, std::to_string(p.line) + ":" + std::to_string(p.column) +
                                         ": only mapping(address => uint256) is supported");
    }
    expect_punct("=>");
    p = peek().pos;
    if (!accept_kw("uint256")) {
      throw Error(Errc::UnknownType, std::to_string(p.line) + ":" + std::to_string(p.column) +
                                         ": only mapping(address => uint256) is supported");
    }
    expect_punct(")");
    return TypeTag::Map;
  }

  ContractDef contract() {
    ContractDef c;
    c.pos = peek().pos;
    c.is_abstract = accept_kw("abstract");
    expect_kw("contract");
    c.name = expect_ident("contract name").text;
    if (accept_kw("is")) {
      do {
        c.bases.push_back(expect_ident("base contract name").text);
      } while (accept_punct(","));
    }
    expect_punct("{");
    PendingSpecs pending;
    std::set<std::string> member_names;
    auto claim = [&](const std::string& n, SourcePos p) {
      if (!member_names.insert(n).second) {
        throw Error(Errc::DuplicateName, std::to_string(p.line) + ":" + std::to_string(p.column) +
                                             ": '" + n + "' declared twice in contract '" + c.name + "'");
      }
    };
    while (!accept_punct("}")) {
      const Token& t = peek();
      if (t.kind == Tok::Annotation) {
        next();
        if (t.text == "invariant") {
          c.invariants.push_back(expression());
        } else {
          annotation(t, pending);
        }
        continue;
      }
      if (is_kw("function")) {
        FunctionDef f = function(std::move(pending));
        pending = {};
        claim(f.name, f.pos);
        c.functions.push_back(std::move(f));
        continue;
      }
      if (is_kw("constructor")) {
        if (c.constructor) throw Error(Errc::DuplicateName, "second constructor in '" + c.name + "'");
        c.constructor = constructor(std::move(pending));
        pending = {};
        continue;
      }
      if (pending.any) throw ParseError(t.pos, "'function' or 'constructor' after annotations", describe(t));
      if (t.kind == Tok::End) throw ParseError(t.pos, "'}'", describe(t));
      StorageDecl d;
      d.pos = t.pos;
      d.type = is_kw("mapping") ? map_type() : value_type();
      d.name = expect_ident("storage name").text;
      expect_punct(";");
      claim(d.name, d.pos);
      c.storage.push_back(std::move(d));
    }
    if (pending.any) throw ParseError(peek().pos, "'function' after annotations", describe(peek()));
    return c;
  }

  void annotation(const Token& a, PendingSpecs& pending) {
    pending.any = true;
    if (a.text == "pre") {
      pending.pre.push_back(expression());
    } else if (a.text == "post") {
      pending.post.push_back(expression());
    } else {
      if (pending.modifies) throw Error(Errc::DuplicateName, "second #modifies for the same function");
      std::vector<ModifiesEntry> entries;
      // An empty #modifies line declares that nothing may be written.
      if (peek().kind == Tok::Ident && peek().pos.line == a.pos.line) {
        do {
          ModifiesEntry m;
          m.slot = expect_ident("storage name").text;
          if (accept_punct("[")) {
            m.index = expression();
            expect_punct("]");
          }
          entries.push_back(std::move(m));
        } while (accept_punct(","));
      }
      pending.modifies = std::move(entries);
    }
  }

  std::vector<Param> params() {
    std::vector<Param> ps;
    expect_punct("(");
    std::set<std::string> seen;
    if (!is_punct(")")) {
      do {
        Param p;
        p.pos = peek().pos;
        p.type = value_type();
        p.name = expect_ident("parameter name").text;
        if (!seen.insert(p.name).second) {
          throw Error(Errc::DuplicateName, "parameter '" + p.name + "' declared twice");
        }
        ps.push_back(std::move(p));
      } while (accept_punct(","));
    }
    expect_punct(")");
    return ps;
  }

  void attach(FunctionDef& f, PendingSpecs&& pending) {
    f.pre = std::move(pending.pre);
    f.post = std::move(pending.post);
    f.modifies = std::move(pending.modifies);
  }

  FunctionDef function(PendingSpecs&& pending) {
    FunctionDef f;
    f.pos = peek().pos;
    expect_kw("function");
    f.name = expect_ident("function name").text;
    f.params = params();
    if (accept_kw("returns")) {
      expect_punct("(");
      f.returns = value_type();
      if (peek().kind == Tok::Ident) next();  // optional name of the return value
      expect_punct(")");
    }
    attach(f, std::move(pending));
    if (accept_punct(";")) return f;
    next_id_ = 0;
    f.body = block();
    f.stmt_count = next_id_;
    return f;
  }

  FunctionDef constructor(PendingSpecs&& pending) {
    FunctionDef f;
    f.pos = peek().pos;
    expect_kw("constructor");
    f.name = "constructor";
    f.is_constructor = true;
    f.params = params();
    attach(f, std::move(pending));
    next_id_ = 0;
    f.body = block();
    f.stmt_count = next_id_;
    return f;
  }

  std::shared_ptr<Stmt> new_stmt(Stmt::Kind kind) {
    auto s = std::make_shared<Stmt>();
    s->kind = kind;
    s->pos = peek().pos;
    s->id = next_id_++;
    return s;
  }

  StmtPtr block() {
    auto s = new_stmt(Stmt::Kind::Block);
    expect_punct("{");
    while (!accept_punct("}")) {
      if (at_end()) throw ParseError(peek().pos, "'}'", describe(peek()));
      s->body.push_back(statement());
    }
    return s;
  }

  StmtPtr statement() {
    if (is_punct("{")) return block();
    if (at_value_type()) {
      auto s = new_stmt(Stmt::Kind::LocalDecl);
      s->decl_type = value_type();
      s->name = expect_ident("local variable name").text;
      if (accept_punct("=")) s->expr = expression();
      expect_punct(";");
      return s;
    }
    if (is_kw("require")) {
      auto s = new_stmt(Stmt::Kind::Require);
      next();
      expect_punct("(");
      s->expr = expression();
      if (accept_punct(",")) {
        if (peek().kind != Tok::String) throw ParseError(peek().pos, "string literal", describe(peek()));
        s->message = next().text;
      }
      expect_punct(")");
      expect_punct(";");
      return s;
    }
    if (is_kw("assert")) {
      auto s = new_stmt(Stmt::Kind::Assert);
      next();
      expect_punct("(");
      s->expr = expression();
      expect_punct(")");
      expect_punct(";");
      return s;
    }
    if (is_kw("if")) return if_statement();
    if (is_kw("call")) {
      auto s = new_stmt(Stmt::Kind::Call);
      next();
      s->expr = call_target();
      expect_punct(".");
      s->name = expect_ident("function name").text;
      expect_punct("(");
      if (!is_punct(")")) {
        do {
          s->args.push_back(expression());
        } while (accept_punct(","));
      }
      expect_punct(")");
      expect_punct(";");
      return s;
    }
    if (is_kw("return")) {
      auto s = new_stmt(Stmt::Kind::Return);
      next();
      if (!is_punct(";")) s->expr = expression();
      expect_punct(";");
      return s;
    }
    if (peek().kind == Tok::Ident) {
      auto s = new_stmt(Stmt::Kind::Assign);
      s->name = expect_ident().text;
      if (accept_punct("[")) {
        s->index = expression();
        expect_punct("]");
      }
      if (accept_punct("=")) {
        s->assign_op = AssignOp::Set;
      } else if (accept_punct("+=")) {
        s->assign_op = AssignOp::AddAssign;
      } else if (accept_punct("-=")) {
        s->assign_op = AssignOp::SubAssign;
      } else {
        throw ParseError(peek().pos, "'=', '+=' or '-='", describe(peek()));
      }
      s->expr = expression();
      expect_punct(";");
      return s;
    }
    throw ParseError(peek().pos, "statement", describe(peek()));
  }

  StmtPtr if_statement() {
    auto s = new_stmt(Stmt::Kind::If);
    expect_kw("if");
    expect_punct("(");
    s->expr = expression();
    expect_punct(")");
    s->then_branch = block();
    if (accept_kw("else")) {
      s->else_branch = is_kw("if") ? if_statement() : block();
    }
    return s;
  }

  ExprPtr call_target() {
    SourcePos p = peek().pos;
    if (accept_kw("msg")) {
      expect_punct(".");
      if (peek().kind != Tok::Ident || peek().text != "sender") {
        throw ParseError(peek().pos, "'sender'", describe(peek()));
      }
      next();
      return make_msg_sender(p);
    }
    if (accept_kw("this")) return make_this(p);
    if (accept_punct("(")) {
      ExprPtr e = expression();
      expect_punct(")");
      return e;
    }
    std::string n = expect_ident("call target").text;
    if (accept_punct("[")) {
      ExprPtr idx = expression();
      expect_punct("]");
      return make_map_read(std::move(n), std::move(idx), p);
    }
    return make_name(std::move(n), p);
  }

  // ---- expressions (lowest to highest precedence) ----

  ExprPtr expression() { return implies(); }

  ExprPtr implies() {
    ExprPtr lhs = disjunction();
    SourcePos p = peek().pos;
    if (accept_punct("==>")) return make_binary(BinOp::Implies, lhs, implies(), p);
    return lhs;
  }

  template <typename Next>
  ExprPtr left_assoc(Next sub, std::initializer_list<std::pair<const char*, BinOp>> ops) {
    ExprPtr lhs = (this->*sub)();
    for (;;) {
      bool matched = false;
      for (const auto& [text, op] : ops) {
        SourcePos p = peek().pos;
        if (accept_punct(text)) {
          lhs = make_binary(op, lhs, (this->*sub)(), p);
          matched = true;
          break;
        }
      }
      if (!matched) return lhs;
    }
  }

  ExprPtr disjunction() { return left_assoc(&Parser::conjunction, {{"||", BinOp::Or}}); }
  ExprPtr conjunction() { return left_assoc(&Parser::equality, {{"&&", BinOp::And}}); }
  ExprPtr equality() {
    return left_assoc(&Parser::relational, {{"==", BinOp::Eq}, {"!=", BinOp::Ne}});
  }
  ExprPtr relational() {
    return left_assoc(&Parser::additive,
                      {{"<=", BinOp::Le}, {">=", BinOp::Ge}, {"<", BinOp::Lt}, {">", BinOp::Gt}});
  }
  ExprPtr additive() {
    return left_assoc(&Parser::multiplicative, {{"+", BinOp::Add}, {"-", BinOp::Sub}});
  }
  ExprPtr multiplicative() {
    return left_assoc(&Parser::power, {{"*", BinOp::Mul}, {"/", BinOp::Div}, {"%", BinOp::Mod}});
  }

  ExprPtr power() {
    ExprPtr base = unary();
    SourcePos p = peek().pos;
    if (accept_punct("^")) return make_binary(BinOp::Pow, base, power(), p);
    return base;
  }

  ExprPtr unary() {
    SourcePos p = peek().pos;
    if (accept_punct("!")) return make_not(unary(), p);
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    SourcePos p = t.pos;
    if (t.kind == Tok::Number) {
      auto v = parse_bigint(t.text);
      if (!v) throw ParseError(p, "number", describe(t));
      next();
      return make_int(*v, p);
    }
    if (accept_kw("true")) return make_bool(true, p);
    if (accept_kw("false")) return make_bool(false, p);
    if (accept_punct("(")) {
      ExprPtr e = expression();
      expect_punct(")");
      return e;
    }
    if (is_kw("msg") || is_kw("this")) return call_target();
    if (accept_kw("sum")) {
      expect_punct("(");
      std::string m = expect_ident("map name").text;
      expect_punct(")");
      return make_sum(std::move(m), p);
    }
    if (accept_kw("old")) {
      expect_punct("(");
      ExprPtr e = expression();
      expect_punct(")");
      return make_old(std::move(e), p);
    }
    if (accept_kw("forall")) {
      std::string var = expect_ident("bound variable").text;
      expect_punct(":");
      expect_kw("address");
      expect_punct("::");
      return make_forall(std::move(var), expression(), p);
    }
    if (t.kind == Tok::Ident) {
      std::string n = expect_ident().text;
      if (accept_punct("[")) {
        ExprPtr idx = expression();
        expect_punct("]");
        return make_map_read(std::move(n), std::move(idx), p);
      }
      return make_name(std::move(n), p);
    }
    throw ParseError(p, "expression", describe(t));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::uint32_t next_id_ = 0;
};

}  // namespace

bool is_reserved_identifier(std::string_view name) {
  for (auto r : kReserved) {
    if (name == r) return true;
  }
  return false;
}

SourceUnit parse_source(std::string_view text) {
  Parser p(lex(text));
  SourceUnit u = p.unit();
  u.source_hash = sha256(text);
  return u;
}

ExprPtr parse_expression(std::string_view text) {
  Parser p(lex(text));
  return p.standalone_expression();
}

}  // namespace tct::lang
