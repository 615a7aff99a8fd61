// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support.hpp"
#include "tct/common/error.hpp"
#include "tct/lang/parser.hpp"
#include "tct/smt/model.hpp"
#include "tct/smt/script.hpp"
#include "tct/smt/sexpr.hpp"
#include "tct/smt/solver.hpp"
#include "tct/trace/ssa.hpp"
#include "tct/vm/interpreter.hpp"

namespace tct::smt {
namespace {

const Address kDeployer = Address::from_u64(0xd0);

vcgen::VerificationCondition transfer_vc(const char* hyp) {
  static auto p = testing::corpus({"multi_vuln_token"});
  vm::WorldState w;
  w.register_program(p);
  auto d = vm::deploy(w, *p.find("MultiVulnToken"), {Word256(1000)}, kDeployer);
  w.apply(d.delta);
  auto r = vm::execute(w, {"t", kDeployer, *d.created, "transferProxy",
                           {kDeployer.word(), Address::from_u64(1).word(), Word256(10), Word256(1)}});
  lang::ExprPtr h = hyp ? lang::parse_expression(hyp) : nullptr;
  return vcgen::build_vc(trace::extract_straightline(r.trace, p), p, h.get());
}

TEST(SExpr, ParsesAtomsListsAndStrings) {
  auto v = parse_sexprs("sat (a (b 12) \"x y\") |quoted sym| ; comment\n()");
  ASSERT_EQ(v.size(), 4u);
  EXPECT_TRUE(v[0].is("sat"));
  EXPECT_EQ(to_string(v[1]), "(a (b 12) \"x y\")");
  EXPECT_TRUE(v[1].list[2].is_string);
  EXPECT_EQ(v[2].atom, "quoted sym");
  EXPECT_TRUE(v[3].list.empty());
  EXPECT_THROW(parse_sexprs("(a (b)"), Error);
}

TEST(Model, ParsesGetValueAnswer) {
  auto v = parse_sexprs(
      "((|x@1| 5) (y (- 3)) (flag true) (m ((as const (Array Int Int)) 0)) "
      "(n (store ((as const (Array Int Int)) 7) 2 9)) "
      "(l (lambda ((k Int)) (ite (= k 4) 1 0))) ((sum m) 11))");
  ASSERT_EQ(v.size(), 1u);
  Model m = parse_model(v[0]);
  EXPECT_EQ(m.int_of("x@1"), BigInt(5));
  EXPECT_EQ(m.int_of("y"), BigInt(-3));
  ASSERT_NE(m.find("flag"), nullptr);
  EXPECT_TRUE(m.find("flag")->b);
  EXPECT_EQ(m.find("n")->arr.at(2), BigInt(9));
  EXPECT_EQ(m.find("n")->arr.at(3), BigInt(7));
  EXPECT_EQ(m.find("l")->arr.at(4), BigInt(1));
  EXPECT_EQ(m.find("l")->arr.at(5), BigInt(0));
  EXPECT_EQ(m.sums.at("m"), BigInt(11));
}

TEST(Model, EvaluatesArithmetic) {
  auto e = parse_sexprs("(let ((a 7) (b 2)) (ite (> a b) (+ (div a b) (mod (- a) b) (* a b)) 0))");
  EXPECT_EQ(eval_model_term(e[0]).n, BigInt(3 + 1 + 14));
}

TEST(Script, HeaderAndGoals) {
  auto vc = transfer_vc(testing::kTransferHypothesis);
  Script s = emit_script(vc, {});
  EXPECT_EQ(s.text.find("\n(set-logic AUFLIA)\n"), s.text.find('\n')) << s.text.substr(0, 80);
  EXPECT_NE(s.text.find("(declare-fun sum ((Array Int Int)) Int)"), std::string::npos);
  EXPECT_NE(s.text.find("(check-sat)"), std::string::npos);
  EXPECT_EQ(s.goal_names.size(), vc.goals.size());
  Script pinned = emit_script(vc, {{"_value", 10}});
  EXPECT_NE(pinned.text.find("_value"), std::string::npos);
  EXPECT_NE(pinned.text, s.text);
}

TEST(Solver, TimeoutZeroIsUnknownWithoutRunning) {
  auto vc = transfer_vc(testing::kTransferHypothesis);
  SolverConfig cfg = testing::solver();
  cfg.timeout_ms = 0;
  CheckResult r = check_vc(vc, cfg);
  EXPECT_EQ(r.verdict, Verdict::Unknown);
  EXPECT_FALSE(r.solver_ran);
}

TEST(Solver, MissingExecutableIsSolverFailure) {
  auto vc = transfer_vc(nullptr);
  SolverConfig cfg;
  cfg.path = "/nonexistent/solver";
  try {
    check_vc(vc, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SolverFailure);
  }
}

TEST(Solver, TheoremOneProvenAndOverflowRefuted) {
  auto proven = check_vc(transfer_vc(testing::kTransferHypothesis), testing::solver());
  EXPECT_EQ(proven.verdict, Verdict::Proven) << proven.reason;
  ASSERT_EQ(proven.goals.size(), 2u);
  for (auto g : proven.goals) EXPECT_EQ(g, Verdict::Proven);

  auto refuted = check_vc(transfer_vc(nullptr), testing::solver());
  ASSERT_EQ(refuted.verdict, Verdict::Refuted);
  ASSERT_TRUE(refuted.has_model);
  auto value = refuted.model.int_of("_value");
  auto fee = refuted.model.int_of("_fee");
  ASSERT_TRUE(value && fee);
  EXPECT_GE(*value + *fee, pow2(256)) << "model must overflow";
}

TEST(Solver, SwapScriptGolden) {
  auto p = testing::corpus({"constant_product_pair"});
  vm::WorldState w;
  w.register_program(p);
  auto d = vm::deploy(w, *p.find("ConstantProductPair"), {Word256(1000), Word256(1000), Word256(10000)}, kDeployer);
  w.apply(d.delta);
  auto r = vm::execute(w, {"s", kDeployer, *d.created, "swap", {Word256(250), Word256(0), Word256(1)}});
  auto h = lang::parse_expression(testing::kSwapHypothesis);
  auto vc = vcgen::build_vc(trace::extract_straightline(r.trace, p), p, h.get());
  Script s = emit_script(vc, {});
  EXPECT_EQ(s.logic, "AUFNIA");
  std::string why;
  EXPECT_TRUE(testing::golden_matches("swap.smt2", s.text, &why)) << why;
}

}  // namespace
}  // namespace tct::smt
