// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/smt/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tct/common/error.hpp"

namespace tct::smt {

using Env = std::map<std::string, ModelValue>;

struct ArrayNode {
  enum class Kind { Const, Store, Lambda };
  Kind kind = Kind::Const;
  BigInt value;  // Const default, Store value
  BigInt key;
  ArrayValue base;
  std::string param;
  SExpr body;
  Env env;
};

namespace {

[[noreturn]] void bad(const SExpr& e, const std::string& what) {
  throw Error(Errc::SolverFailure, what + " in model term " + to_string(e));
}

ModelValue mk_int(BigInt n) {
  ModelValue v;
  v.kind = ModelValue::Kind::Int;
  v.n = std::move(n);
  return v;
}

ModelValue mk_bool(bool b) {
  ModelValue v;
  v.kind = ModelValue::Kind::Bool;
  v.b = b;
  return v;
}

ModelValue mk_arr(ArrayValue a) {
  ModelValue v;
  v.kind = ModelValue::Kind::Array;
  v.arr = std::move(a);
  return v;
}

bool is_numeral(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  // SMT-LIB div: a = b*q + r with 0 <= r < |b|
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (r < 0) q += b > 0 ? -1 : 1;
  return q;
}

ModelValue eval(const SExpr& e, const Env& env);

const BigInt& as_int(const SExpr& e, const ModelValue& v) {
  if (v.kind != ModelValue::Kind::Int) bad(e, "expected an integer");
  return v.n;
}

bool as_bool(const SExpr& e, const ModelValue& v) {
  if (v.kind != ModelValue::Kind::Bool) bad(e, "expected a boolean");
  return v.b;
}

ModelValue eval(const SExpr& e, const Env& env) {
  if (e.is_atom) {
    if (is_numeral(e.atom)) return mk_int(BigInt(e.atom));
    if (e.atom == "true") return mk_bool(true);
    if (e.atom == "false") return mk_bool(false);
    auto it = env.find(e.atom);
    if (it == env.end()) bad(e, "unbound symbol '" + e.atom + "'");
    return it->second;
  }
  if (e.list.empty()) bad(e, "empty application");
  const SExpr& head = e.list[0];
  auto arg = [&](std::size_t i) -> ModelValue {
    if (i >= e.list.size()) bad(e, "missing operand");
    return eval(e.list[i], env);
  };
  if (!head.is_atom) {
    // ((as const (Array Int Int)) d)
    if (head.list.size() == 3 && head.list[0].is("as") && head.list[1].is("const")) {
      return mk_arr(ArrayValue::constant(as_int(e, arg(1))));
    }
    bad(e, "unsupported application");
  }
  const std::string& op = head.atom;
  std::size_t n = e.list.size() - 1;
  if (op == "let") {
    if (n != 2 || e.list[1].is_atom) bad(e, "malformed let");
    Env inner = env;
    for (const auto& b : e.list[1].list) {
      if (b.is_atom || b.list.size() != 2 || !b.list[0].is_atom) bad(e, "malformed let binding");
      inner[b.list[0].atom] = eval(b.list[1], env);
    }
    return eval(e.list[2], inner);
  }
  if (op == "lambda") {
    if (n != 2 || e.list[1].is_atom || e.list[1].list.size() != 1 || e.list[1].list[0].is_atom ||
        e.list[1].list[0].list.empty()) {
      bad(e, "malformed lambda");
    }
    auto node = std::make_shared<ArrayNode>();
    node->kind = ArrayNode::Kind::Lambda;
    node->param = e.list[1].list[0].list[0].atom;
    node->body = e.list[2];
    node->env = env;
    return mk_arr(ArrayValue(node));
  }
  if (op == "ite") {
    if (n != 3) bad(e, "malformed ite");
    return as_bool(e, arg(1)) ? arg(2) : arg(3);
  }
  if (op == "and" || op == "or") {
    bool is_and = op == "and";
    for (std::size_t i = 1; i <= n; ++i) {
      bool b = as_bool(e, arg(i));
      if (is_and && !b) return mk_bool(false);
      if (!is_and && b) return mk_bool(true);
    }
    return mk_bool(is_and);
  }
  if (op == "not") return mk_bool(!as_bool(e, arg(1)));
  if (op == "=>") return mk_bool(!as_bool(e, arg(1)) || as_bool(e, arg(2)));
  if (op == "=" || op == "distinct") {
    ModelValue a = arg(1);
    ModelValue b = arg(2);
    bool eq;
    if (a.kind == ModelValue::Kind::Bool) {
      eq = as_bool(e, a) == as_bool(e, b);
    } else {
      eq = as_int(e, a) == as_int(e, b);
    }
    return mk_bool(op == "=" ? eq : !eq);
  }
  if (op == "<=" || op == "<" || op == ">=" || op == ">") {
    BigInt a = as_int(e, arg(1));
    BigInt b = as_int(e, arg(2));
    if (op == "<=") return mk_bool(a <= b);
    if (op == "<") return mk_bool(a < b);
    if (op == ">=") return mk_bool(a >= b);
    return mk_bool(a > b);
  }
  if (op == "-" && n == 1) return mk_int(-as_int(e, arg(1)));
  if (op == "+" || op == "-" || op == "*") {
    BigInt acc = as_int(e, arg(1));
    for (std::size_t i = 2; i <= n; ++i) {
      BigInt x = as_int(e, arg(i));
      if (op == "+") acc += x;
      else if (op == "-") acc -= x;
      else acc *= x;
    }
    return mk_int(acc);
  }
  if (op == "div" || op == "mod") {
    BigInt a = as_int(e, arg(1));
    BigInt b = as_int(e, arg(2));
    if (b == 0) bad(e, "division by zero");
    BigInt q = floor_div(a, b);
    return mk_int(op == "div" ? q : a - b * q);
  }
  if (op == "abs") {
    BigInt a = as_int(e, arg(1));
    return mk_int(a < 0 ? BigInt(-a) : a);
  }
  if (op == "select") {
    ModelValue a = arg(1);
    if (a.kind != ModelValue::Kind::Array) bad(e, "select on a non-array");
    return mk_int(a.arr.at(as_int(e, arg(2))));
  }
  if (op == "store") {
    ModelValue a = arg(1);
    if (a.kind != ModelValue::Kind::Array) bad(e, "store on a non-array");
    return mk_arr(a.arr.store(as_int(e, arg(2)), as_int(e, arg(3))));
  }
  bad(e, "unsupported operator '" + op + "'");
}

void numerals(const SExpr& e, std::set<BigInt>& out) {
  if (e.is_atom) {
    if (is_numeral(e.atom)) out.insert(BigInt(e.atom));
    return;
  }
  for (const auto& k : e.list) numerals(k, out);
}

}  // namespace

ArrayValue ArrayValue::constant(BigInt d) {
  auto node = std::make_shared<ArrayNode>();
  node->kind = ArrayNode::Kind::Const;
  node->value = std::move(d);
  return ArrayValue(node);
}

ArrayValue ArrayValue::store(BigInt key, BigInt value) const {
  auto node = std::make_shared<ArrayNode>();
  node->kind = ArrayNode::Kind::Store;
  node->base = *this;
  node->key = std::move(key);
  node->value = std::move(value);
  return ArrayValue(node);
}

BigInt ArrayValue::at(const BigInt& key) const {
  const ArrayNode* n = node_.get();
  while (n) {
    switch (n->kind) {
      case ArrayNode::Kind::Const: return n->value;
      case ArrayNode::Kind::Store:
        if (n->key == key) return n->value;
        n = n->base.node_.get();
        break;
      case ArrayNode::Kind::Lambda: {
        Env env = n->env;
        env[n->param] = mk_int(key);
        ModelValue v = eval(n->body, env);
        if (v.kind != ModelValue::Kind::Int) bad(n->body, "array body is not an integer");
        return v.n;
      }
    }
  }
  return 0;
}

std::vector<BigInt> ArrayValue::mentioned_keys() const {
  std::set<BigInt> keys;
  const ArrayNode* n = node_.get();
  while (n) {
    if (n->kind == ArrayNode::Kind::Store) {
      keys.insert(n->key);
      n = n->base.node_.get();
    } else {
      if (n->kind == ArrayNode::Kind::Lambda) numerals(n->body, keys);
      break;
    }
  }
  return {keys.begin(), keys.end()};
}

std::string ModelValue::text() const {
  switch (kind) {
    case Kind::Int: return n.str();
    case Kind::Bool: return b ? "true" : "false";
    case Kind::Array: {
      std::string s = "{";
      bool first = true;
      for (const auto& k : arr.mentioned_keys()) {
        if (k < 0) continue;
        s += (first ? "" : ", ") + k.str() + ": " + arr.at(k).str();
        first = false;
      }
      return s + "}";
    }
  }
  return "?";
}

ModelValue eval_model_term(const SExpr& e) { return eval(e, {}); }

const ModelValue* Model::find(const std::string& name) const {
  auto it = values.find(name);
  return it == values.end() ? nullptr : &it->second;
}

std::optional<BigInt> Model::int_of(const std::string& name) const {
  const ModelValue* v = find(name);
  if (!v || v->kind != ModelValue::Kind::Int) return std::nullopt;
  return v->n;
}

Model parse_model(const SExpr& answer) {
  if (answer.is_atom) throw Error(Errc::SolverFailure, "model answer is not a list: " + to_string(answer));
  Model m;
  for (const auto& pair : answer.list) {
    if (pair.is_atom || pair.list.size() != 2) {
      throw Error(Errc::SolverFailure, "malformed model entry " + to_string(pair));
    }
    const SExpr& key = pair.list[0];
    ModelValue v = eval_model_term(pair.list[1]);
    if (key.is_atom) {
      m.values[key.atom] = v;
    } else if (key.list.size() == 2 && key.list[0].is("sum") && key.list[1].is_atom && v.kind == ModelValue::Kind::Int) {
      m.sums[key.list[1].atom] = v.n;
    } else {
      m.values[to_string(key)] = v;
    }
  }
  return m;
}

}  // namespace tct::smt
