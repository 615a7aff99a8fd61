// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tct/common/word256.hpp"

namespace tct::trace {

enum class Sort { Int, Bool, Map };

std::string_view sort_name(Sort s);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Symbolic expression over unbounded integers, booleans and int-indexed
/// int arrays. Wrapping arithmetic appears only as App("add"|"sub"|"mul").
struct Term {
  enum class Kind {
    Num,
    BoolConst,
    Var,
    Select,   // args: map, index
    Store,    // args: map, index, value
    Sum,      // args: map
    App,      // name: add | sub | mul; args: a, b
    Not,
    And,
    Or,
    Implies,
    Ite,      // args: cond, then, else
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    Add,      // mathematical
    Sub,
    Mul,
    Div,      // Euclidean
    Mod,
    Forall,   // name: bound variable; args: body
  };

  Kind kind = Kind::Num;
  BigInt num;
  bool bval = false;
  std::string name;
  std::vector<TermPtr> args;
};

namespace t {
TermPtr num(BigInt v);
TermPtr boolean(bool v);
TermPtr var(std::string name);
TermPtr select(TermPtr m, TermPtr i);
TermPtr store(TermPtr m, TermPtr i, TermPtr v);
TermPtr sum(TermPtr m);
TermPtr app(std::string fn, TermPtr a, TermPtr b);
TermPtr neg(TermPtr a);
TermPtr bin(Term::Kind k, TermPtr a, TermPtr b);
TermPtr ite(TermPtr c, TermPtr a, TermPtr b);
TermPtr forall(std::string var, TermPtr body);
TermPtr conj(const std::vector<TermPtr>& parts);
TermPtr disj(const std::vector<TermPtr>& parts);
}  // namespace t

bool term_equal(const Term& a, const Term& b);
inline bool term_equal(const TermPtr& a, const TermPtr& b) { return term_equal(*a, *b); }

/// Boogie-like infix rendering used by the SSA and VC dumps.
std::string to_text(const Term& e);
inline std::string to_text(const TermPtr& e) { return to_text(*e); }

/// Free variable names in first-occurrence order (bound variables excluded).
std::vector<std::string> free_vars(const Term& e);

/// Replaces free variables by name.
TermPtr substitute(const TermPtr& e, const std::vector<std::pair<std::string, TermPtr>>& sub);

}  // namespace tct::trace
