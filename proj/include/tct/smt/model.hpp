// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "tct/common/word256.hpp"
#include "tct/smt/sexpr.hpp"

namespace tct::smt {

struct ArrayNode;

/// Int -> Int function as printed by the solver (const / store / lambda).
class ArrayValue {
 public:
  ArrayValue() = default;
  explicit ArrayValue(std::shared_ptr<const ArrayNode> n) : node_(std::move(n)) {}
  static ArrayValue constant(BigInt d);
  ArrayValue store(BigInt key, BigInt value) const;

  BigInt at(const BigInt& key) const;
  /// Keys the definition mentions explicitly (store keys, numerals compared
  /// against the bound variable). Useful for showing a counterexample.
  std::vector<BigInt> mentioned_keys() const;

 private:
  std::shared_ptr<const ArrayNode> node_;
};

struct ModelValue {
  enum class Kind { Int, Bool, Array };
  Kind kind = Kind::Int;
  BigInt n;
  bool b = false;
  ArrayValue arr;

  std::string text() const;
};

/// Evaluates a closed solver term (numerals, let, ite, arithmetic, arrays).
ModelValue eval_model_term(const SExpr& e);

struct Model {
  std::map<std::string, ModelValue> values;
  /// Value of (sum m) per map symbol.
  std::map<std::string, BigInt> sums;

  const ModelValue* find(const std::string& name) const;
  std::optional<BigInt> int_of(const std::string& name) const;
};

/// Reads a get-value answer: ((key value) ...). Keys of the form (sum m)
/// go to `sums`.
Model parse_model(const SExpr& answer);

}  // namespace tct::smt
