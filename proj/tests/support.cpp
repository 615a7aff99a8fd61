// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tct/common/error.hpp"

namespace tct::testing {

std::string source_dir() { return TCT_SOURCE_DIR; }

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::NotFound, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

lang::ResolvedProgram corpus(std::initializer_list<const char*> names) {
  lang::ResolvedProgram all;
  for (const char* n : names) {
    all.merge(lang::load_program(read_text(source_dir() + "/corpus/" + n + ".msol")));
  }
  return all;
}

smt::SolverConfig solver() {
  smt::SolverConfig c;
  c.path = TCT_TEST_SOLVER;
  return c;
}

bool golden_matches(const std::string& name, const std::string& text, std::string* why) {
  std::string path = source_dir() + "/tests/golden/" + name;
  if (std::getenv("TCT_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary | std::ios::trunc) << text;
    return true;
  }
  std::string want;
  try {
    want = read_text(path);
  } catch (const Error&) {
    if (why) *why = "missing golden file " + path;
    return false;
  }
  if (want == text) return true;
  if (why) {
    std::istringstream a(want), b(text);
    std::string la, lb;
    for (int n = 1;; ++n) {
      bool ga = static_cast<bool>(std::getline(a, la));
      bool gb = static_cast<bool>(std::getline(b, lb));
      if (!ga && !gb) break;
      if (!ga || !gb || la != lb) {
        *why = name + ":" + std::to_string(n) + ": expected '" + (ga ? la : "<eof>") + "', got '" +
               (gb ? lb : "<eof>") + "'";
        break;
      }
    }
  }
  return false;
}

}  // namespace tct::testing
