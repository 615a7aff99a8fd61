// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "tct/vcgen/vcgen.hpp"

namespace tct::smt {

struct Pin {
  std::string name;
  BigInt value;
};

struct Script {
  std::string text;
  std::vector<std::string> goal_names;  // G0, G1, ... in goal order
  std::vector<std::string> skolems;
  std::string logic;
};

/// SMT-LIB 2 text of a VC: declarations, definitions, named assumptions,
/// one Bool constant per goal, and the negated conjunction of the goals.
/// `pins` fix some inputs to concrete values.
Script emit_script(const vcgen::VerificationCondition& vc, const std::vector<Pin>& pins = {});

/// SMT-LIB rendering of a single term (no declarations).
std::string smt_term(const trace::Term& e);

}  // namespace tct::smt
