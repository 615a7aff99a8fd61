// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/smt/sexpr.hpp"

#include <cctype>

#include "tct/common/error.hpp"

namespace tct::smt {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  bool done() {
    skip();
    return i_ >= s_.size();
  }

  SExpr read() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of solver output");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      SExpr e;
      e.is_atom = false;
      for (;;) {
        skip();
        if (i_ >= s_.size()) fail("unbalanced '(' in solver output");
        if (s_[i_] == ')') {
          ++i_;
          return e;
        }
        e.list.push_back(read());
      }
    }
    if (c == ')') fail("unexpected ')' in solver output");
    SExpr e;
    if (c == '"') {
      e.is_string = true;
      ++i_;
      while (i_ < s_.size()) {
        if (s_[i_] == '"') {
          if (i_ + 1 < s_.size() && s_[i_ + 1] == '"') {
            e.atom += '"';
            i_ += 2;
            continue;
          }
          ++i_;
          return e;
        }
        e.atom += s_[i_++];
      }
      fail("unterminated string in solver output");
    }
    if (c == '|') {
      ++i_;
      while (i_ < s_.size() && s_[i_] != '|') e.atom += s_[i_++];
      if (i_ >= s_.size()) fail("unterminated |symbol| in solver output");
      ++i_;
      return e;
    }
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' && s_[i_] != ')') {
      e.atom += s_[i_++];
    }
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_[i_] == ';') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) { throw Error(Errc::SolverFailure, what); }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) {
  Reader r(text);
  std::vector<SExpr> out;
  while (!r.done()) out.push_back(r.read());
  return out;
}

std::string to_string(const SExpr& e) {
  if (e.is_atom) return e.is_string ? "\"" + e.atom + "\"" : e.atom;
  std::string s = "(";
  for (std::size_t i = 0; i < e.list.size(); ++i) {
    if (i) s += ' ';
    s += to_string(e.list[i]);
  }
  return s + ")";
}

}  // namespace tct::smt
