// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tct::smt {

struct SExpr {
  bool is_atom = true;
  bool is_string = false;  // "..." literal
  std::string atom;
  std::vector<SExpr> list;

  bool is(std::string_view a) const { return is_atom && !is_string && atom == a; }
};

/// Parses a sequence of s-expressions (solver output). Throws SolverFailure.
std::vector<SExpr> parse_sexprs(std::string_view text);

std::string to_string(const SExpr& e);

}  // namespace tct::smt
