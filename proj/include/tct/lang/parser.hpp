// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "tct/common/error.hpp"
#include "tct/lang/ast.hpp"

namespace tct::lang {

class ParseError : public Error {
 public:
  ParseError(SourcePos pos, std::string expected, std::string found);

  SourcePos pos() const { return pos_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourcePos pos_;
  std::string expected_;
  std::string found_;
};

/// Parses a MiniSol compilation unit. The grammar is documented in
/// docs/minisol.ebnf. Throws ParseError on malformed input and Error with
/// DuplicateName / UnknownType for the structural checks done at parse time.
SourceUnit parse_source(std::string_view text);

/// Parses a standalone expression (hypotheses, scenario arguments).
ExprPtr parse_expression(std::string_view text);

/// Identifiers that collide with solver-level names and are rejected.
bool is_reserved_identifier(std::string_view name);

}  // namespace tct::lang
