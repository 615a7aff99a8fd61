// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tct/common/word256.hpp"
#include "tct/lang/ast.hpp"
#include "tct/vm/world.hpp"

namespace tct::vm {

/// Runtime value of executable code: a 256-bit word or a boolean.
struct Value {
  bool is_bool = false;
  bool b = false;
  Word256 w;

  static Value word(Word256 v) { return {false, false, v}; }
  static Value boolean(bool v) { return {true, v, Word256()}; }
  friend bool operator==(const Value&, const Value&) = default;
};

/// Name and storage resolution for the executable evaluator.
class WordContext {
 public:
  virtual ~WordContext() = default;
  virtual std::optional<Value> lookup(const std::string& name) const = 0;
  /// Storage read; booleans are stored as 0/1 and come back as booleans.
  virtual Value read(const std::string& slot, std::optional<Address> key) = 0;
  virtual Address sender() const = 0;
  virtual Address self() const = 0;
};

/// Executable semantics: + - * wrap mod 2^256, / and % are Euclidean and
/// throw DivisionByZero on a zero divisor, connectives short-circuit.
Value eval_word(const lang::Expr& e, WordContext& ctx);

/// True when `slot` of the contract at `account` is declared bool.
bool is_bool_slot(const WorldState& world, const Address& account, const std::string& slot);

/// eval_word over a plain world and explicit bindings.
struct ConcreteEnv {
  std::map<std::string, Value> bindings;
  Address sender;
  Address self;
  const WorldState* world = nullptr;
};
Value eval_concrete(const lang::Expr& e, const ConcreteEnv& env);

/// Value of an annotation: unbounded integer or boolean.
struct PValue {
  bool is_bool = false;
  bool b = false;
  BigInt n;

  static PValue num(BigInt v) { return {false, false, std::move(v)}; }
  static PValue boolean(bool v) { return {true, v, 0}; }
};

/// Annotation semantics over mathematical integers, with sum, forall and old.
/// Storage names resolve against `self` in `world` (or `old_world` under old).
/// forall ranges over every address the environment mentions plus one
/// address mentioned nowhere, which stands for all the others.
struct PropertyEnv {
  std::map<std::string, PValue> bindings;
  std::optional<Address> sender;
  Address self;
  const WorldState* world = nullptr;
  const WorldState* old_world = nullptr;
};
PValue eval_property(const lang::Expr& e, const PropertyEnv& env);

/// Evaluates a hypothesis for a call of `fn` with `args`. Division by zero is
/// reported as HypothesisEvalError.
bool eval_hypothesis(const lang::Expr& hyp, const lang::FunctionDef& fn, const std::vector<Word256>& args,
                     const Address& sender, const Address& self, const WorldState& world);

}  // namespace tct::vm
