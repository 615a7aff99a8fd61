// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support.hpp"
#include "tct/common/error.hpp"
#include "tct/lang/parser.hpp"
#include "tct/lang/printer.hpp"
#include "tct/lang/resolve.hpp"

namespace tct::lang {
namespace {

Errc load_error(const std::string& src) {
  try {
    load_program(src);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error for:\n" << src;
  return Errc::Usage;
}

TEST(Lang, CorpusLoads) {
  for (const char* f : {"multi_vuln_token", "attacks", "simple_erc20", "wallet_like", "constant_product_pair"}) {
    SCOPED_TRACE(f);
    auto p = load_program(testing::read_text(testing::source_dir() + "/corpus/" + f + ".msol"));
    EXPECT_FALSE(p.contracts.empty());
  }
}

TEST(Lang, InheritedInvariantsAndStorage) {
  auto p = testing::corpus({"multi_vuln_token"});
  const auto* t = p.find("MultiVulnToken");
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->def.invariants.size(), 2u);
  EXPECT_NE(t->find_storage("balances"), nullptr);
  EXPECT_NE(t->find_storage("totalSupply"), nullptr);
  EXPECT_NE(t->find_function("balanceOf"), nullptr);
  ASSERT_GE(t->lineage.size(), 2u);
  EXPECT_EQ(t->lineage.back(), "MultiVulnToken");
}

TEST(Lang, CodeHashIgnoresFormatting) {
  auto a = load_program("contract C { uint256 x; function f() { x = 1; } }");
  auto b = load_program("contract C {\n  uint256 x;\n\n  // set\n  function f() {\n    x = 1;\n  }\n}\n");
  auto c = load_program("contract C { uint256 x; function f() { x = 2; } }");
  EXPECT_EQ(a.contracts[0].code_hash, b.contracts[0].code_hash);
  EXPECT_NE(a.contracts[0].code_hash, c.contracts[0].code_hash);
}

TEST(Lang, SyntaxErrorCarriesPosition) {
  try {
    parse_source("contract C {\n  uint256 x\n}");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), Errc::SyntaxError);
    EXPECT_EQ(e.pos().line, 3);
  }
}

TEST(Lang, ResolutionErrors) {
  EXPECT_EQ(load_error("contract A is B {} contract B is A {}"), Errc::CyclicInheritance);
  EXPECT_EQ(load_error("contract A {} contract A {}"), Errc::DuplicateName);
  EXPECT_EQ(load_error("contract A { foo x; }"), Errc::UnknownType);
  EXPECT_EQ(load_error("contract A is Missing {}"), Errc::UnknownName);
  EXPECT_EQ(load_error("contract A { uint256 x; } contract B is A { uint256 x; }"), Errc::StorageRedeclaration);
  EXPECT_EQ(load_error("contract A { function f(); }"), Errc::AbstractContract);
  EXPECT_EQ(load_error("contract A { function f() { y = 1; } }"), Errc::UnknownName);
  EXPECT_EQ(load_error("contract A { uint256 x; function f() { x = true; } }"), Errc::TypeError);
  EXPECT_EQ(load_error("abstract contract A { uint256 x; uint256 y;\n #modifies x\n function f(); }\n"
                       "contract B is A {\n #modifies y\n function f() { y = 1; } }"),
            Errc::OverrideWeakensSpec);
}

TEST(Lang, HypothesisPrintRoundTrip) {
  auto e = parse_expression(testing::kTransferHypothesis);
  std::string once = print(*e);
  EXPECT_EQ(print(*parse_expression(once)), once);
  EXPECT_EQ(once, "0 <= totalSupply && totalSupply < 2 ^ 255 && 0 <= _value && _value < 2 ^ 255 && 0 <= _fee && "
                  "_fee < 2 ^ 255");
}

TEST(Lang, HypothesisGrammarRejectsLocals) {
  auto p = testing::corpus({"multi_vuln_token"});
  const auto* t = p.find("MultiVulnToken");
  const auto* clear = t->find_function("clear");
  EXPECT_NO_THROW(check_hypothesis_grammar(*parse_expression("balances[msg.sender] < 100"), *t, *clear));
  try {
    check_hypothesis_grammar(*parse_expression("bal < 100"), *t, *clear);
    FAIL() << "local accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HypothesisNotConcrete) << e.what();
  }
}

}  // namespace
}  // namespace tct::lang
