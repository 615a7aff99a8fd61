// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Runs the ten acceptance criteria end to end and prints one PASS/FAIL line
// per criterion. Exit status is 0 only if all of them pass.

#include <gmpxx.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "support.hpp"
#include "tct/cli/scenario.hpp"
#include "tct/common/error.hpp"
#include "tct/lang/parser.hpp"
#include "tct/protocol/protocol.hpp"
#include "tct/smt/model.hpp"
#include "tct/smt/sexpr.hpp"
#include "tct/trace/path.hpp"
#include "tct/vm/eval.hpp"

namespace {

using namespace tct;
using protocol::Outcome;
using protocol::RejectReason;

struct Failed {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

const Address kDeployer = Address::from_u64(0xd0);
const Address kAttacker = Address::from_u64(0xa1);
const Address kRelay = Address::from_u64(0xa2);
const Address kCollector = Address::from_u64(0xc1);
const Address kAlice = Address::from_u64(0xa11ce);
const Address kBob = Address::from_u64(0xb0b);

mpz_class mpz(const BigInt& v) { return mpz_class(v.str()); }
mpz_class mpz(const Word256& w) { return mpz_class(w.to_dec()); }

const mpz_class& two256() {
  static const mpz_class m = [] {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, 256);
    return r;
  }();
  return m;
}

mpz_class wrap(const mpz_class& v) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), two256().get_mpz_t());
  return r;
}

protocol::NodeConfig node_config() {
  protocol::NodeConfig c;
  c.solver = testing::solver();
  return c;
}

void all_rejected(const std::vector<Outcome>& outs, std::optional<RejectReason> r, const std::string& what) {
  require(!outs.empty(), what + ": no outcome");
  for (const auto& o : outs) {
    require(o.status == Outcome::Status::Rejected, what + ": status " + std::string(protocol::status_name(o.status)));
    if (r) require(o.reason == r, what + ": reason " + (o.reason ? std::string(protocol::reason_name(*o.reason)) : "-"));
  }
}

void all_status(const std::vector<Outcome>& outs, Outcome::Status s, const std::string& what) {
  require(!outs.empty(), what + ": no outcome");
  for (const auto& o : outs) {
    require(o.status == s, what + ": " + std::string(protocol::status_name(o.status)) + " " +
                               (o.reason ? std::string(protocol::reason_name(*o.reason)) : "") + " " + o.detail);
  }
}

Word256 balance(const protocol::Network& net, std::size_t node, const Address& token, const Address& who) {
  return net.node(node).world().read({token, "balances", who});
}

vm::Transaction transfer(const std::string& id, const Address& token, const Address& from, const Address& to,
                         Word256 value, Word256 fee, const Address& sender) {
  return {id, sender, token, "transferProxy", {from.word(), to.word(), value, fee}};
}

// ---- 1 ----
std::string attack1() {
  protocol::Network net(3, node_config());
  protocol::Issuer issuer(net, testing::solver());
  net.load(testing::corpus({"multi_vuln_token"}));
  Address token = *issuer.deploy("d", "MultiVulnToken", {Word256(1000)}, kDeployer).front().created;
  Word256 value = Word256::from_big(pow2(255) + 1), fee = Word256::from_big(pow2(255));
  auto tx = transfer("atk1", token, kDeployer, kAttacker, value, fee, kRelay);

  all_rejected(issuer.submit(tx), RejectReason::NoTheorem, "attack transaction");
  for (std::size_t i = 0; i < net.size(); ++i) {
    require(balance(net, i, token, kAttacker).is_zero(), "attacker balance changed on node " + std::to_string(i));
  }

  auto proof = issuer.prove(tx, nullptr);
  require(proof.attempt.has_value(), "forced prove failed: " + proof.error);
  require(proof.attempt->verdict == smt::Verdict::Refuted,
          std::string("forced prove: ") + std::string(smt::verdict_name(proof.attempt->verdict)));
  require(proof.attempt->counterexample.has_value(), "no counterexample");
  const smt::Model& m = proof.attempt->counterexample->model;
  auto v = m.int_of("_value"), f = m.int_of("_fee");
  require(v && f, "counterexample lacks _value/_fee");
  mpz_class sum = wrap(mpz(*f) + mpz(*v));
  require(sum < mpz(*v), "counterexample does not overflow: add(_fee,_value) = " + sum.get_str());
  return "Reject(NoTheorem) on 3 nodes, counterexample add(_fee,_value) = " + sum.get_str() + " < _value";
}

// ---- 2 ----
std::string attack2() {
  protocol::Network net(3, node_config());
  protocol::Issuer issuer(net, testing::solver());
  net.load(testing::corpus({"multi_vuln_token", "attacks"}));
  Address token = *issuer.deploy("d", "MultiVulnToken", {Word256(1000)}, kDeployer).front().created;
  Address attacker =
      *issuer.deploy("a", "reentrancy_attack", {token.word(), kCollector.word()}, kDeployer).front().created;
  auto hyp = lang::parse_expression(testing::kTransferHypothesis);
  auto fund = issuer.submit_proven(transfer("fund", token, kDeployer, attacker, Word256(5), Word256(0), kDeployer),
                                   hyp.get());
  all_status(fund.second, Outcome::Status::Committed, "funding transfer");

  vm::Transaction atk{"atk2", kDeployer, attacker, "attack", {}};
  all_rejected(issuer.submit(atk), RejectReason::NoTheorem, "plain attack");
  auto [proof, outs] = issuer.submit_proven(atk, nullptr);
  all_rejected(outs, std::nullopt, "proved attack");

  int clears = 0;
  for (const auto& e : proof.exec.trace.events) {
    if (const auto* c = std::get_if<vm::ev::CallEnter>(&e); c && c->function == "clear") ++clears;
  }
  require(clears == 10, "trace has " + std::to_string(clears) + " clear bodies");
  Word256 collected;
  for (const auto& ch : proof.exec.delta.changes) {
    if (ch.key.account == token && ch.key.key == kCollector) collected = ch.after;
  }
  require(collected == Word256(50), "dry run moves " + collected.to_dec() + " to the collector");

  require(proof.attempt.has_value(), "prove failed: " + proof.error);
  const auto& a = *proof.attempt;
  require(a.verdict == smt::Verdict::Refuted, std::string("verdict ") + std::string(smt::verdict_name(a.verdict)));
  bool sum_refuted = false;
  for (std::size_t i = 0; i < a.goal_labels.size() && i < a.goal_verdicts.size(); ++i) {
    if (a.goal_labels[i].find("sum(balances) == totalSupply") != std::string::npos &&
        a.goal_verdicts[i] == smt::Verdict::Refuted) {
      sum_refuted = true;
    }
  }
  require(sum_refuted, "sum invariant goal not refuted");
  require(a.counterexample.has_value(), "no counterexample");
  static const std::regex bal_re(R"((^|\.)bal@\d+$)");
  std::string witness;
  for (const auto& [name, val] : a.counterexample->model.values) {
    if (val.kind == smt::ModelValue::Kind::Int && std::regex_search(name, bal_re) && val.n > 0) witness = name;
  }
  require(!witness.empty(), "no bal > 0 in the model");
  for (std::size_t i = 0; i < net.size(); ++i) {
    require(balance(net, i, token, kCollector).is_zero(), "collector credited on node " + std::to_string(i));
    require(balance(net, i, token, attacker) == Word256(5), "attacker balance changed");
  }
  return "rejected, 10 clear bodies, sum invariant refuted with " + witness + " > 0";
}

// ---- 3 ----
std::string transfer_theorem() {
  protocol::Network net(1, node_config());
  protocol::Issuer issuer(net, testing::solver());
  net.load(testing::corpus({"multi_vuln_token"}));
  Address token = *issuer.deploy("d", "MultiVulnToken", {Word256(1000)}, kDeployer).front().created;
  auto hyp = lang::parse_expression(testing::kTransferHypothesis);
  auto proof = issuer.prove(transfer("t", token, kDeployer, kAlice, Word256(10), Word256(1), kDeployer), hyp.get());
  require(proof.attempt.has_value(), proof.error);
  const auto& a = *proof.attempt;
  require(a.verdict == smt::Verdict::Proven, std::string("verdict ") + std::string(smt::verdict_name(a.verdict)));
  require(a.goals == 2, std::to_string(a.goals) + " goals");
  for (auto g : a.goal_verdicts) require(g == smt::Verdict::Proven, "a goal is not proven");
  return "Proven, 2 goals";
}

// ---- 4 ----
std::string reuse() {
  protocol::Network net(3, node_config());
  protocol::Issuer issuer(net, testing::solver());
  net.load(testing::corpus({"multi_vuln_token"}));
  Address token = *issuer.deploy("d", "MultiVulnToken", {Word256(1000)}, kDeployer).front().created;
  auto hyp = lang::parse_expression(testing::kTransferHypothesis);
  auto [proof, outs] =
      issuer.publish(transfer("sample", token, kDeployer, kAlice, Word256(10), Word256(1), kDeployer), hyp.get());
  all_status(outs, Outcome::Status::Accepted, "workflow C");
  std::uint64_t before = net.node_solver_calls();
  struct T {
    Address from, to;
    std::uint64_t v, f;
    Address sender;
  };
  std::vector<T> txs{{kDeployer, kAlice, 10, 1, kDeployer},
                     {kDeployer, kBob, 20, 2, kDeployer},
                     {kAlice, kBob, 5, 0, kAlice},
                     {kBob, kAlice, 7, 3, kBob},
                     {kDeployer, kAlice, 100, 10, kRelay}};
  int n = 0;
  for (const auto& t : txs) {
    auto o = issuer.submit(transfer("b" + std::to_string(++n), token, t.from, t.to, Word256(t.v), Word256(t.f), t.sender));
    all_status(o, Outcome::Status::Committed, "benign tx " + std::to_string(n));
  }
  std::uint64_t calls = net.node_solver_calls() - before;
  require(calls == 0, std::to_string(calls) + " node solver calls");
  return "5 commits, 0 node solver calls";
}

// ---- 5 ----
std::string serialize(const cli::Session& s) {
  std::string out = s.outcome().report_text();
  for (std::size_t i = 0; i < s.config().nodes; ++i) {
    const auto& n = const_cast<cli::Session&>(s).net().node(i);
    out += "== node " + std::to_string(i) + "\n" + n.world().snapshot_json() + n.repo().to_json() + n.log_text();
  }
  return out;
}

std::string determinism() {
  std::string first;
  for (int run = 0; run < 2; ++run) {
    cli::RunConfig cfg;
    cfg.nodes = 3;
    cfg.solver = testing::solver();
    cli::Session s(cfg);
    s.run_file(testing::source_dir() + "/scenarios/corpus.tct");
    require(s.outcome().ok, "corpus scenario failed: " + s.outcome().failure);
    require(s.nodes_agree(), "nodes differ after run " + std::to_string(run + 1));
    std::string text = serialize(s);
    if (run == 0) first = text;
    else require(text == first, "second run differs from the first");
  }
  return "3 nodes agree, 2 runs byte-identical (" + std::to_string(first.size()) + " bytes)";
}

// ---- 6 ----
std::string deployment() {
  protocol::Network net(1, node_config());
  protocol::Issuer issuer(net, testing::solver());
  net.load(testing::corpus({"multi_vuln_token"}));
  auto hyp = lang::parse_expression(testing::kDeployHypothesis);
  auto proof = issuer.prove_deploy("MultiVulnToken", {Word256(1000)}, kDeployer, hyp.get());
  require(proof.attempt.has_value(), proof.error);
  const auto& a = *proof.attempt;
  require(a.verdict == smt::Verdict::Proven, std::string("verdict ") + std::string(smt::verdict_name(a.verdict)));
  require(a.vc.count(vcgen::AssumptionKind::Invariant) == 0, "deployment VC assumes invariants");
  std::string why;
  require(testing::golden_matches("deploy_multivulntoken.vc", a.vc_text, &why), why);
  return "Proven, " + std::to_string(a.goals) + " goals, 0 invariant assumptions, dump matches golden";
}

// ---- 7 ----
std::string wallet() {
  protocol::Network net(3, node_config());
  protocol::Issuer issuer(net, testing::solver());
  net.load(testing::corpus({"wallet_like"}));
  Address owner = Address::from_u64(1), heir = Address::from_u64(2), mallory = Address::from_u64(0x66);
  Address w = *issuer.deploy("w", "WalletLike", {}, owner).front().created;
  vm::Transaction hijack{"h", mallory, w, "fallback", {Word256(7), mallory.word()}};
  auto p = issuer.prove(hijack, nullptr);
  require(p.error_code == Errc::ModifiesViolation, "owner write not flagged: " + p.error);
  require(p.exec.trace.completed(), "hijack path did not complete concretely");
  all_rejected(issuer.submit_proven(hijack, nullptr).second, RejectReason::NoTheorem, "hijack");
  auto [proof, outs] = issuer.submit_proven({"c", owner, w, "changeOwner", {heir.word()}}, nullptr);
  all_status(outs, Outcome::Status::Committed, "changeOwner");
  for (std::size_t i = 0; i < net.size(); ++i) {
    require(net.node(i).world().read({w, "owner", std::nullopt}) == heir.word(), "owner not updated");
  }
  return "ModifiesViolation at VC build; changeOwner committed";
}

// ---- 8 ----
std::string axioms() {
  std::mt19937_64 rng(20261016);
  auto rand_word = [&]() -> Word256 {
    switch (rng() % 5) {
      case 0: return Word256(rng() % 8);
      case 1: return Word256::max() - Word256(rng() % 8);
      case 2: return Word256::from_big(pow2(255)) + Word256(rng() % 8);
      case 3: return Word256(rng());
      default: {
        BigInt v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 64) | BigInt(rng());
        return Word256::from_big(v);
      }
    }
  };

  // the solver-side definitions, exactly as emitted
  auto prog = lang::load_program(
      "contract S { mapping(address => uint256) m; }\n"
      "contract W { uint256 s; uint256 d; uint256 p;\n"
      "  function f(uint256 a, uint256 b) { s = a + b; d = a - b; p = a * b; } }\n");
  std::map<std::string, std::string> defs;
  {
    std::string header = smt::emit_script(vcgen::VerificationCondition{}, {}).text;
    for (const auto& e : smt::parse_sexprs(header)) {
      if (e.is_atom || e.list.size() != 5 || !e.list[0].is("define-fun")) continue;
      std::string name = e.list[1].atom;
      if (name == "add" || name == "sub" || name == "mul") {
        std::string body = smt::to_string(e.list[4]);
        body = std::regex_replace(body, std::regex("TwoE256"), two256().get_str());
        defs[name] = body;
      }
    }
  }
  require(defs.size() == 3, "script lacks add/sub/mul definitions");

  vm::WorldState arith;
  arith.register_program(prog);
  Address wacct = Address::from_u64(0x5000);
  arith.apply({{{wacct, prog.find("W")->code_hash}}, {}, std::nullopt});
  auto sum_expr = lang::parse_expression("sum(m)");
  const Hash32 scode = prog.find("S")->code_hash;

  const int kChecks = 10000;
  for (int i = 0; i < kChecks; ++i) {
    // sum-update law over a map with at most 8 nonzero entries
    vm::WorldState w;
    w.register_program(prog);
    Address acct = Address::from_u64(0x4000);
    vm::StateDelta init;
    init.created.push_back({acct, scode});
    std::map<Address, Word256> m;
    int entries = static_cast<int>(rng() % 9);
    for (int k = 0; k < entries; ++k) {
      Address key = Address::from_u64(1 + rng() % 12);
      Word256 v = rand_word();
      if (v.is_zero()) v = Word256(1);
      m[key] = v;
    }
    for (const auto& [k, v] : m) init.changes.push_back({{acct, "m", k}, Word256(), v});
    w.apply(init);
    vm::PropertyEnv env;
    env.self = acct;
    env.world = &w;
    mpz_class before = mpz(vm::eval_property(*sum_expr, env).n);
    mpz_class oracle_before = 0;
    for (const auto& [k, v] : m) oracle_before += mpz(v);
    require(before == oracle_before, "sum of initial map differs from oracle at check " + std::to_string(i));

    Address key = Address::from_u64(1 + rng() % 12);
    Word256 nv = rng() % 4 == 0 ? Word256() : rand_word();
    Word256 old = m.count(key) ? m[key] : Word256();
    w.apply({{}, {{{acct, "m", key}, old, nv}}, std::nullopt});
    mpz_class after = mpz(vm::eval_property(*sum_expr, env).n);
    require(after == before - mpz(old) + mpz(nv), "sum-update law fails at check " + std::to_string(i));
    m[key] = nv;
    mpz_class recount = 0;
    for (const auto& [k, v] : m) recount += mpz(v);
    require(after == recount, "sum after store differs from oracle at check " + std::to_string(i));

    // wrap laws: interpreter, word type and solver definitions against GMP
    Word256 a = rand_word(), b = rand_word();
    mpz_class x = mpz(a), y = mpz(b);
    mpz_class add = wrap(x + y), sub = wrap(x - y), mul = wrap(x * y);
    require(mpz(a + b) == add && mpz(a - b) == sub && mpz(a * b) == mul, "word arithmetic differs from oracle");
    auto r = vm::execute(arith, {"w", kDeployer, wacct, "f", {a, b}});
    require(r.status == vm::ExecStatus::Committed, "arith contract reverted");
    std::map<std::string, Word256> got{{"s", Word256()}, {"d", Word256()}, {"p", Word256()}};
    for (const auto& ch : r.delta.changes) got[ch.key.slot] = ch.after;
    require(mpz(got["s"]) == add && mpz(got["d"]) == sub && mpz(got["p"]) == mul,
            "interpreter arithmetic differs from oracle at check " + std::to_string(i));
    for (const auto& [name, want] : std::map<std::string, mpz_class>{{"add", add}, {"sub", sub}, {"mul", mul}}) {
      std::string text = "(let ((a " + x.get_str() + ") (b " + y.get_str() + ")) " + defs[name] + ")";
      BigInt v = smt::eval_model_term(smt::parse_sexprs(text).front()).n;
      require(mpz(v) == want, "solver '" + name + "' differs from oracle at check " + std::to_string(i));
    }
  }
  return std::to_string(kChecks) + " sum-update checks and " + std::to_string(kChecks) +
         " add/sub/mul checks agree with GMP";
}

// ---- 9 ----
class Fuzzer {
 public:
  Fuzzer(const protocol::Node& node, std::uint64_t seed) : node_(node), rng_(seed) {
    const auto& w = node.world();
    for (const auto& [addr, acc] : w.accounts()) {
      pool_.insert(addr);
      for (const auto& [slot, m] : acc.maps) {
        for (const auto& [k, v] : m) pool_.insert(k);
      }
    }
    for (int i = 0; i < 4; ++i) pool_.insert(Address::from_u64(0xf000 + i));
  }

  struct Result {
    int matched = 0;
    int attempts = 0;
    std::vector<std::string> violations;
  };

  Result run(const repo::Theorem& t, int want, int max_attempts) {
    Result res;
    const auto& base = node_.world();
    const lang::ResolvedContract* rc = node_.program().find_by_hash(t.code);
    const lang::FunctionDef* fn = rc ? rc->find_function(t.function) : nullptr;
    if (!fn) {
      res.violations.push_back("function missing");
      return res;
    }
    std::vector<Address> instances;
    for (const auto& [addr, acc] : base.accounts()) {
      if (acc.code_hash == t.code) instances.push_back(addr);
    }
    lang::ExprPtr hyp = t.hypothesis == "true" ? nullptr : lang::parse_expression(t.hypothesis);
    vm::WorldState w = base;
    vm::ExecOptions debug;
    debug.debug_asserts = true;
    while (res.matched < want && res.attempts < max_attempts) {
      ++res.attempts;
      if (res.attempts % 64 == 0) w = base;
      Address target = instances[rng_() % instances.size()];
      vm::Transaction tx = generate(w, target, *fn);
      try {
        if (hyp && !vm::eval_hypothesis(*hyp, *fn, tx.args, tx.origin, tx.target, w)) continue;
        bool pre = true;
        for (const auto& p : fn->pre) pre = pre && vm::eval_hypothesis(*p, *fn, tx.args, tx.origin, tx.target, w);
        if (!pre) continue;
      } catch (const Error& e) {
        if (e.code() == Errc::HypothesisEvalError) continue;
        throw;
      }
      vm::ExecutionResult r = vm::execute(w, tx, debug);
      if (r.status == vm::ExecStatus::Reverted && r.revert_reason == "AssertFailed") {
        vm::ExecutionResult plain = vm::execute(w, tx);
        if (plain.trace.completed() && trace::path_hash(plain.trace) == t.path) {
          res.violations.push_back(tx.function + ": assertion fails on the certified path");
        }
        continue;
      }
      if (!r.trace.completed() || trace::path_hash(r.trace) != t.path) continue;
      ++res.matched;
      std::set<Address> touched{tx.target};
      for (const auto& ch : r.delta.changes) touched.insert(ch.key.account);
      w.apply(r.delta);
      for (const auto& a : touched) {
        for (const auto& bad : protocol::violated_invariants(w, a)) {
          res.violations.push_back(tx.function + " breaks '" + bad + "'");
        }
      }
      if (!res.violations.empty()) break;
    }
    return res;
  }

 private:
  Address any() {
    auto it = pool_.begin();
    std::advance(it, rng_() % pool_.size());
    return *it;
  }
  BigInt upto(const BigInt& hi) {
    if (hi <= 0) return 0;
    switch (rng_() % 4) {
      case 0: return 0;
      case 1: return hi;
      default: {
        BigInt r = 0;
        for (int i = 0; i < 5; ++i) r = (r << 64) | BigInt(rng_());
        return r % (hi + 1);
      }
    }
  }
  BigInt big() {
    switch (rng_() % 4) {
      case 0: return BigInt(rng_() % 1000);
      case 1: return pow2(static_cast<unsigned>(rng_() % 256)) - BigInt(rng_() % 3);
      case 2: return BigInt(rng_());
      default: {
        BigInt r = 0;
        for (int i = 0; i < 4; ++i) r = (r << 64) | BigInt(rng_());
        return r;
      }
    }
  }
  Word256 word(const BigInt& v) { return Word256::from_big(v); }
  BigInt read(const vm::WorldState& w, const Address& a, const std::string& slot, std::optional<Address> key = {}) {
    return w.read({a, slot, key}).to_big();
  }
  // a pool address holding a nonzero entry in `slot`, or any address
  Address holder(const vm::WorldState& w, const Address& a, const std::string& slot) {
    std::vector<Address> hs;
    if (const auto* acc = w.find(a)) {
      if (auto it = acc->maps.find(slot); it != acc->maps.end()) {
        for (const auto& [k, v] : it->second) hs.push_back(k);
      }
    }
    return hs.empty() || rng_() % 8 == 0 ? any() : hs[rng_() % hs.size()];
  }

  vm::Transaction generate(const vm::WorldState& w, const Address& target, const lang::FunctionDef& fn) {
    vm::Transaction tx;
    tx.id = "fuzz";
    tx.target = target;
    tx.function = fn.name;
    tx.origin = any();
    const std::string& f = fn.name;
    if (f == "transferProxy") {
      Address from = holder(w, target, "balances");
      BigInt total = upto(read(w, target, "balances", from));
      BigInt fee = upto(total);
      tx.origin = any();
      tx.args = {from.word(), any().word(), word(total - fee), word(fee)};
    } else if (f == "transfer") {
      tx.origin = holder(w, target, "balances");
      tx.args = {any().word(), word(upto(read(w, target, "balances", tx.origin)))};
    } else if (f == "deposit") {
      tx.args = {word(rng_() % 2 ? big() : BigInt(rng_() % 10000))};
    } else if (f == "changeOwner") {
      tx.origin = rng_() % 8 ? Address(w.read({target, "owner", std::nullopt})) : any();
      tx.args = {any().word()};
    } else if (f == "fallback") {
      tx.args = {word(rng_() % 16), any().word()};
    } else if (f == "sweep") {
      tx.args = {any().word()};
    } else if (f == "swap") {
      tx.origin = holder(w, target, "balX");
      BigInt x = read(w, target, "reserveX"), y = read(w, target, "reserveY");
      BigInt funds = read(w, target, "balX", tx.origin);
      // exact division: dx = t - x for a divisor t of x*y above x
      std::vector<BigInt> ds;
      BigInt xy = x * y;
      for (BigInt d = 1; d * d <= xy && ds.size() < 4096; ++d) {
        if (xy % d != 0) continue;
        for (const BigInt& t : std::array<BigInt, 2>{d, BigInt(xy / d)}) {
          if (t > x && t - x <= funds) ds.push_back(t - x);
        }
      }
      BigInt dx = ds.empty() ? upto(funds) : ds[rng_() % ds.size()];
      BigInt den = 1 + BigInt(rng_() % (1u << 20));
      tx.args = {word(dx), rng_() % 16 ? Word256() : word(upto(den)), word(den)};
    } else if (f == "addLiquidity") {
      tx.origin = holder(w, target, "balX");
      BigInt x = read(w, target, "reserveX"), y = read(w, target, "reserveY");
      BigInt g = boost::multiprecision::gcd(x, y);
      BigInt sx = g == 0 ? BigInt(1) : x / g, sy = g == 0 ? BigInt(1) : y / g;
      BigInt kx = sx == 0 ? BigInt(0) : read(w, target, "balX", tx.origin) / sx;
      BigInt ky = sy == 0 ? BigInt(0) : read(w, target, "balY", tx.origin) / sy;
      BigInt k = upto(kx < ky ? kx : ky);
      tx.args = {word(k * sx), word(k * sy)};
    } else if (f == "removeLiquidity") {
      tx.origin = holder(w, target, "liquidity");
      tx.args = {word(upto(read(w, target, "liquidity", tx.origin)))};
    } else {
      for (std::size_t i = 0; i < fn.params.size(); ++i) tx.args.push_back(rng_() % 2 ? any().word() : word(big()));
    }
    return tx;
  }

  const protocol::Node& node_;
  std::mt19937_64 rng_;
  std::set<Address> pool_;
};

std::string soundness_fuzz() {
  cli::RunConfig cfg;
  cfg.nodes = 1;
  cfg.solver = testing::solver();
  cli::Session s(cfg);
  s.run_file(testing::source_dir() + "/scenarios/corpus.tct");
  require(s.outcome().ok, "corpus scenario failed: " + s.outcome().failure);
  const auto& node = s.net().node(0);
  require(node.repo().size() > 0, "no stored theorems");
  std::uint64_t seed = 99;
  std::ostringstream summary, attempts;
  int total = 0;
  for (const auto& [id, t] : node.repo().all()) {
    Fuzzer fz(node, seed++);
    auto r = fz.run(t, 1000, 400000);
    std::string name = t.contract + "::" + t.function;
    if (!r.violations.empty()) throw Failed{name + ": " + r.violations.front()};
    require(r.matched >= 1000, name + ": only " + std::to_string(r.matched) + " matching transactions in " +
                                   std::to_string(r.attempts) + " attempts");
    total += r.matched;
    attempts << (attempts.tellp() > 0 ? ", " : "") << t.function << " " << r.attempts;
  }
  summary << node.repo().size() << " theorems x 1000 matching transactions, no invariant violated (" << total
          << " runs; attempts: " << attempts.str() << ")";
  return summary.str();
}

// ---- 10 ----
std::string uniswap() {
  protocol::Network net(3, node_config());
  protocol::Issuer issuer(net, testing::solver());
  net.load(testing::corpus({"constant_product_pair"}));
  Address lp = Address::from_u64(0x10);
  Address pair =
      *issuer.deploy("p", "ConstantProductPair", {Word256(1000), Word256(1000), Word256(10000)}, lp).front().created;
  auto hyp = lang::parse_expression(testing::kSwapHypothesis);
  auto [proof, outs] = issuer.submit_proven({"s", lp, pair, "swap", {Word256(250), Word256(0), Word256(1)}}, hyp.get());

  // (a) concrete swap
  require(proof.exec.status == vm::ExecStatus::Committed, "swap reverted");
  require(proof.exec.return_value == Word256(200), "dy = " + proof.exec.return_value.value_or(Word256()).to_dec());
  std::map<std::string, Word256> post{{"reserveX", Word256(1000)}, {"reserveY", Word256(1000)}};
  for (const auto& ch : proof.exec.delta.changes) {
    if (ch.key.account == pair && !ch.key.key) post[ch.key.slot] = ch.after;
  }
  mpz_class product = mpz(post["reserveX"]) * mpz(post["reserveY"]);
  require(product == 1000000, "x*y after swap = " + product.get_str());

  // (b) symbolic product goal
  require(proof.attempt.has_value(), "prove failed: " + proof.error);
  const auto& a = *proof.attempt;
  std::optional<smt::Verdict> product_goal;
  for (std::size_t i = 0; i < a.vc.goals.size() && i < a.goal_verdicts.size(); ++i) {
    if (a.vc.goals[i].origin == trace::GoalOrigin::Postcondition) product_goal = a.goal_verdicts[i];
  }
  require(product_goal.has_value(), "no product goal");
  std::string note;
  if (a.verdict == smt::Verdict::Proven) {
    require(*product_goal == smt::Verdict::Proven, "product goal not proven");
    all_status(outs, Outcome::Status::Committed, "swap");
    for (std::size_t i = 0; i < net.size(); ++i) {
      const auto& w = net.node(i).world();
      mpz_class p = mpz(w.read({pair, "reserveX", std::nullopt})) * mpz(w.read({pair, "reserveY", std::nullopt}));
      require(p == 1000000, "committed x*y = " + p.get_str());
    }
    note = "product goal Proven";
  } else if (a.verdict == smt::Verdict::Unknown) {
    std::string why;
    require(testing::golden_matches("swap.smt2", a.script, &why), "Unknown and script differs from golden: " + why);
    note = "product goal Unknown (" + a.reason + "), script matches golden";
  } else {
    throw Failed{"product goal refuted"};
  }
  return "dy = 200, x*y = 10^6, " + note;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
  };
  std::vector<Criterion> all{
      {"attack1", attack1},     {"attack2", attack2},       {"transfer-theorem", transfer_theorem}, {"reuse", reuse},
      {"determinism", determinism}, {"deployment", deployment}, {"wallet", wallet},     {"axioms", axioms},
      {"soundness-fuzz", soundness_fuzz}, {"uniswap", uniswap},
  };
  int failed = 0, n = 0;
  for (const auto& c : all) {
    ++n;
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      detail = c.run();
      ok = true;
    } catch (const Failed& f) {
      detail = f.why;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs >= 60.0) {
      ok = false;
      detail += "; took over 60 s";
    }
    if (!ok) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1f s", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << n << " " << c.name << ": " << detail << " (" << timing << ")"
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
