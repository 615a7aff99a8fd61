// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support.hpp"
#include "tct/lang/parser.hpp"
#include "tct/protocol/protocol.hpp"
#include "tct/trace/path.hpp"

namespace tct::protocol {
namespace {

const Address kDeployer = Address::from_u64(0xd0);
const Address kAlice = Address::from_u64(0xa11ce);
const Address kBob = Address::from_u64(0xb0b);

struct Net {
  Network net;
  Issuer issuer;
  Address token;
  lang::ExprPtr hyp = lang::parse_expression(testing::kTransferHypothesis);

  explicit Net(std::size_t n = 3) : net(n, config()), issuer(net, testing::solver()) {
    net.load(testing::corpus({"multi_vuln_token", "attacks"}));
    token = *issuer.deploy("d", "MultiVulnToken", {Word256(1000)}, kDeployer).front().created;
  }
  static NodeConfig config() {
    NodeConfig c;
    c.solver = testing::solver();
    return c;
  }
  vm::Transaction transfer(const std::string& id, Address from, Address to, std::uint64_t v, std::uint64_t fee,
                           Address sender) const {
    return {id, sender, token, "transferProxy", {from.word(), to.word(), Word256(v), Word256(fee)}};
  }
  bool agree() const {
    for (std::size_t i = 1; i < net.size(); ++i) {
      if (net.node(i).world().snapshot_json() != net.node(0).world().snapshot_json() ||
          net.node(i).repo().to_json() != net.node(0).repo().to_json() ||
          net.node(i).log_text() != net.node(0).log_text()) {
        return false;
      }
    }
    return true;
  }
};

void expect_all(const std::vector<Outcome>& outs, Outcome::Status s, std::optional<RejectReason> r = std::nullopt) {
  ASSERT_FALSE(outs.empty());
  for (const auto& o : outs) {
    EXPECT_EQ(o.status, s) << o.detail;
    if (r) EXPECT_EQ(o.reason, r) << o.detail;
  }
}

TEST(Protocol, WorkflowBWithoutTheoremIsRejected) {
  Net n;
  expect_all(n.issuer.submit(n.transfer("t", kDeployer, kAlice, 10, 1, kDeployer)), Outcome::Status::Rejected,
             RejectReason::NoTheorem);
  EXPECT_EQ(n.net.node(0).world().read({n.token, "balances", kAlice}), Word256(0));
  EXPECT_EQ(n.net.node(0).log().size(), 1u);  // only the deployment
}

TEST(Protocol, WorkflowAProvesStoresAndCommits) {
  Net n;
  auto [proof, outs] = n.issuer.submit_proven(n.transfer("t", kDeployer, kAlice, 10, 1, kDeployer), n.hyp.get());
  ASSERT_TRUE(proof.attempt.has_value());
  EXPECT_EQ(proof.attempt->verdict, smt::Verdict::Proven);
  expect_all(outs, Outcome::Status::Committed);
  EXPECT_EQ(n.net.node(2).repo().size(), 1u);
  EXPECT_EQ(n.net.node(1).world().read({n.token, "balances", kAlice}), Word256(10));
  EXPECT_EQ(n.net.node_solver_calls(), 3u);
  EXPECT_TRUE(n.agree());
}

TEST(Protocol, WorkflowCChangesOnlyRepositories) {
  Net n;
  std::string world = n.net.node(0).world().snapshot_json();
  std::string log = n.net.node(0).log_text();
  auto [proof, outs] = n.issuer.publish(n.transfer("s", kDeployer, kAlice, 10, 1, kDeployer), n.hyp.get());
  expect_all(outs, Outcome::Status::Accepted);
  for (std::size_t i = 0; i < n.net.size(); ++i) {
    EXPECT_EQ(n.net.node(i).world().snapshot_json(), world);
    EXPECT_EQ(n.net.node(i).log_text(), log);
    EXPECT_EQ(n.net.node(i).repo().size(), 1u);
  }
  // republishing is free
  std::uint64_t calls = n.net.node_solver_calls();
  n.issuer.publish(n.transfer("s2", kDeployer, kBob, 3, 0, kDeployer), n.hyp.get());
  EXPECT_EQ(n.net.node_solver_calls(), calls);
}

TEST(Protocol, TamperedPathIsInvalid) {
  Net n;
  auto proof = n.issuer.prove(n.transfer("s", kDeployer, kAlice, 10, 1, kDeployer), n.hyp.get());
  ASSERT_TRUE(proof.attempt && proof.attempt->theorem);
  repo::Theorem t = *proof.attempt->theorem;
  t.path = sha256("elsewhere");
  t.id = repo::theorem_id(t.code, t.function, t.hypothesis, t.path);
  Message m;
  m.kind = Message::Kind::Publish;
  m.bundle = TheoremBundle{t, n.transfer("s", kDeployer, kAlice, 10, 1, kDeployer)};
  expect_all(n.net.broadcast(m), Outcome::Status::Rejected, RejectReason::InvalidTheorem);
  EXPECT_EQ(n.net.node(0).repo().size(), 0u);

  // a weaker hypothesis than the one proven does not verify either
  repo::Theorem weak = *proof.attempt->theorem;
  weak.hypothesis = "true";
  weak.id = repo::theorem_id(weak.code, weak.function, weak.hypothesis, weak.path);
  m.bundle = TheoremBundle{weak, n.transfer("s", kDeployer, kAlice, 10, 1, kDeployer)};
  expect_all(n.net.broadcast(m), Outcome::Status::Rejected, RejectReason::InvalidTheorem);
  EXPECT_EQ(n.net.node(0).repo().size(), 0u);
}

TEST(Protocol, CheckOrderReasons) {
  Net n;
  n.issuer.publish(n.transfer("s", kDeployer, kAlice, 10, 1, kDeployer), n.hyp.get());
  // hypothesis false: value too large
  auto big = n.transfer("b", kDeployer, kAlice, 0, 0, kDeployer);
  big.args[2] = Word256::from_big(pow2(255));
  expect_all(n.issuer.submit(big), Outcome::Status::Rejected, RejectReason::HypothesisFalse);
  // reverts at the first require
  expect_all(n.issuer.submit(n.transfer("r", kBob, kAlice, 10, 1, kBob)), Outcome::Status::Rejected,
             RejectReason::Reverted);
  // unknown account
  vm::Transaction nowhere{"u", kDeployer, Address::from_u64(0x4242), "transferProxy", {}};
  expect_all(n.issuer.submit(nowhere), Outcome::Status::Rejected, RejectReason::UnknownTarget);
  // no block entries for rejections
  EXPECT_EQ(n.net.node(0).log().size(), 1u);
  EXPECT_TRUE(n.agree());
}

TEST(Protocol, PathMismatch) {
  Network net(1, Net::config());
  Issuer issuer(net, testing::solver());
  net.load(testing::corpus({"simple_erc20"}));
  Address tok = *issuer.deploy("d", "SimpleERC20", {Word256(100)}, kAlice).front().created;
  vm::Transaction pay{"p", kAlice, tok, "transfer", {kBob.word(), Word256(5)}};
  auto [proof, outs] = issuer.submit_proven(pay, nullptr);
  expect_all(outs, Outcome::Status::Committed);
  vm::Transaction self{"q", kAlice, tok, "transfer", {kAlice.word(), Word256(5)}};
  expect_all(issuer.submit(self), Outcome::Status::Rejected, RejectReason::PathMismatch);
}

TEST(Protocol, DivergentNodeRejectsWithHypothesisFalse) {
  // node states differ: only node 1 has seen a large transfer, so the
  // hypothesis on totalSupply is false there
  NodeConfig cfg = Net::config();
  Node a(cfg), b(cfg);
  auto prog = testing::corpus({"multi_vuln_token"});
  a.load(prog);
  b.load(prog);
  Message dep;
  dep.kind = Message::Kind::Deploy;
  dep.contract = "MultiVulnToken";
  dep.sender = kDeployer;
  dep.args = {Word256(1000)};
  dep.timestamp = 1;
  Address tok = *a.handle(dep).created;
  dep.args = {Word256::from_big(pow2(255))};
  b.handle(dep);
  auto h = lang::parse_expression(testing::kTransferHypothesis);
  Network scratch(1, cfg);
  scratch.load(prog);
  Issuer is(scratch, cfg.solver);
  is.deploy("d", "MultiVulnToken", {Word256(1000)}, kDeployer);
  vm::Transaction tx{"t", kDeployer, tok, "transferProxy", {kDeployer.word(), kAlice.word(), Word256(1), Word256(0)}};
  auto proof = is.prove(tx, h.get());
  ASSERT_TRUE(proof.attempt && proof.attempt->theorem);
  a.import_theorem(*proof.attempt->theorem);
  b.import_theorem(*proof.attempt->theorem);
  Message call;
  call.kind = Message::Kind::Call;
  call.tx = tx;
  call.timestamp = 2;
  EXPECT_EQ(a.handle(call).status, Outcome::Status::Committed);
  Outcome ob = b.handle(call);
  EXPECT_EQ(ob.status, Outcome::Status::Rejected);
  EXPECT_EQ(ob.reason, RejectReason::HypothesisFalse);
}

TEST(Protocol, ViolatedInvariantsAndPins) {
  Net n;
  EXPECT_TRUE(violated_invariants(n.net.node(0).world(), n.token).empty());
  const auto* fn = n.net.program().find("MultiVulnToken")->find_function("transferProxy");
  auto pins = input_pins(fn, {Word256(1), Word256(2), Word256(3), Word256(4)}, kDeployer, n.token);
  ASSERT_EQ(pins.size(), 6u);
  EXPECT_EQ(pins[2].name, "_value");
  EXPECT_EQ(pins[4].name, "msg.sender");
  EXPECT_EQ(pins[4].value, BigInt(0xd0));
}

}  // namespace
}  // namespace tct::protocol
