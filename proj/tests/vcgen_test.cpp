// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support.hpp"
#include "tct/common/error.hpp"
#include "tct/lang/parser.hpp"
#include "tct/trace/ssa.hpp"
#include "tct/vcgen/vcgen.hpp"
#include "tct/vm/interpreter.hpp"

namespace tct::vcgen {
namespace {

const Address kDeployer = Address::from_u64(0xd0);

VerificationCondition vc_of(const vm::Trace& tr, const lang::ResolvedProgram& p, const char* hyp) {
  lang::ExprPtr h = hyp ? lang::parse_expression(hyp) : nullptr;
  return build_vc(trace::extract_straightline(tr, p), p, h.get());
}

TEST(Vcgen, DeploymentHasNoInvariantAssumptions) {
  auto p = testing::corpus({"multi_vuln_token"});
  vm::WorldState w;
  w.register_program(p);
  auto r = vm::deploy(w, *p.find("MultiVulnToken"), {Word256(1000)}, kDeployer);
  auto vc = vc_of(r.trace, p, testing::kDeployHypothesis);
  EXPECT_TRUE(vc.is_deployment);
  EXPECT_EQ(vc.count(AssumptionKind::Invariant), 0u);
  EXPECT_GT(vc.count(AssumptionKind::FreshStorage), 0u);
  EXPECT_EQ(vc.count(AssumptionKind::Hypothesis), 1u);
  EXPECT_EQ(vc.goals.size(), 2u);
  std::string dump = dump_vc(vc);
  EXPECT_EQ(dump.find("assume[invariant]"), std::string::npos);
  std::string why;
  EXPECT_TRUE(testing::golden_matches("deploy_multivulntoken.vc", dump, &why)) << why;
}

TEST(Vcgen, CallAssumesInvariantsAndChecksThem) {
  auto p = testing::corpus({"multi_vuln_token"});
  vm::WorldState w;
  w.register_program(p);
  auto d = vm::deploy(w, *p.find("MultiVulnToken"), {Word256(1000)}, kDeployer);
  w.apply(d.delta);
  auto r = vm::execute(w, {"t", kDeployer, *d.created, "transferProxy",
                           {kDeployer.word(), Address::from_u64(1).word(), Word256(10), Word256(1)}});
  auto vc = vc_of(r.trace, p, testing::kTransferHypothesis);
  EXPECT_FALSE(vc.is_deployment);
  EXPECT_EQ(vc.count(AssumptionKind::Invariant), 2u);
  EXPECT_EQ(vc.count(AssumptionKind::Path), 3u);
  ASSERT_EQ(vc.goals.size(), 2u);
  for (const auto& g : vc.goals) EXPECT_EQ(g.origin, trace::GoalOrigin::Invariant);
  // the quantified invariant goal is skolemized
  EXPECT_TRUE(vc.goals[0].skolem.empty());
  EXPECT_FALSE(vc.goals[1].skolem.empty());
  EXPECT_FALSE(vc.nonlinear);
  // the order is fixed: range, hypothesis, invariants, pre, path, axioms
  int last = -1;
  for (const auto& a : vc.assumptions) {
    EXPECT_GE(static_cast<int>(a.kind), last);
    last = static_cast<int>(a.kind);
  }
}

TEST(Vcgen, EmptyModifiesRejectsOwnerWrite) {
  auto p = testing::corpus({"wallet_like"});
  vm::WorldState w;
  w.register_program(p);
  auto d = vm::deploy(w, *p.find("WalletLike"), {}, kDeployer);
  w.apply(d.delta);
  auto hijack = vm::execute(w, {"h", Address::from_u64(0x66), *d.created, "fallback", {Word256(7), Word256(0x66)}});
  ASSERT_TRUE(hijack.trace.completed());
  try {
    vc_of(hijack.trace, p, nullptr);
    FAIL() << "no ModifiesViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ModifiesViolation);
  }
  auto other = vm::execute(w, {"o", Address::from_u64(0x66), *d.created, "fallback", {Word256(1), Word256(0x66)}});
  EXPECT_NO_THROW(vc_of(other.trace, p, nullptr));
}

TEST(Vcgen, IndexedModifiesBecomesGoal) {
  auto p = testing::corpus({"wallet_like"});
  vm::WorldState w;
  w.register_program(p);
  auto d = vm::deploy(w, *p.find("WalletLike"), {}, kDeployer);
  w.apply(d.delta);
  auto r = vm::execute(w, {"d", kDeployer, *d.created, "deposit", {Word256(3)}});
  auto vc = vc_of(r.trace, p, nullptr);
  int modifies = 0;
  for (const auto& g : vc.goals) modifies += g.origin == trace::GoalOrigin::Modifies ? 1 : 0;
  EXPECT_EQ(modifies, 1);
}

TEST(Vcgen, SwapIsNonlinearWithPostcondition) {
  auto p = testing::corpus({"constant_product_pair"});
  vm::WorldState w;
  w.register_program(p);
  auto d = vm::deploy(w, *p.find("ConstantProductPair"), {Word256(1000), Word256(1000), Word256(10000)}, kDeployer);
  w.apply(d.delta);
  auto r = vm::execute(w, {"s", kDeployer, *d.created, "swap", {Word256(250), Word256(0), Word256(1)}});
  auto vc = vc_of(r.trace, p, testing::kSwapHypothesis);
  EXPECT_TRUE(vc.nonlinear);
  ASSERT_FALSE(vc.goals.empty());
  EXPECT_EQ(vc.goals.back().origin, trace::GoalOrigin::Postcondition);
  EXPECT_GT(vc.count(AssumptionKind::Path), 0u);
}

TEST(Vcgen, HypothesisMustBeConcrete) {
  auto p = testing::corpus({"multi_vuln_token"});
  vm::WorldState w;
  w.register_program(p);
  auto d = vm::deploy(w, *p.find("MultiVulnToken"), {Word256(1000)}, kDeployer);
  w.apply(d.delta);
  auto r = vm::execute(w, {"t", kDeployer, *d.created, "transferProxy",
                           {kDeployer.word(), Address::from_u64(1).word(), Word256(10), Word256(1)}});
  for (const char* bad : {"sum(balances) > 0", "balances[_to + 1] == 0", "old(totalSupply) == 1"}) {
    try {
      vc_of(r.trace, p, bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::HypothesisNotConcrete) << bad << ": " << e.what();
    }
  }
  EXPECT_NO_THROW(vc_of(r.trace, p, "balances[_from] > _value && balances[msg.sender] < 2^200"));
}

}  // namespace
}  // namespace tct::vcgen
