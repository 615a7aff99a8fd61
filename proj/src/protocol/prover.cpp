// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/protocol/prover.hpp"

#include <algorithm>
#include <sstream>

#include "tct/lang/printer.hpp"
#include "tct/trace/path.hpp"

namespace tct::protocol {

std::string hypothesis_text(const lang::Expr* hyp) { return hyp ? lang::print(*hyp) : "true"; }

std::string Counterexample::text() const {
  std::ostringstream os;
  os << "counterexample" << (pinned ? " (transaction inputs)" : "") << '\n';
  for (const auto& [k, v] : inputs) os << "  " << k << " = " << v << '\n';
  for (const auto& [k, v] : values) os << "  " << k << " = " << v << '\n';
  for (const auto& g : refuted) os << "  violated: " << g << '\n';
  return os.str();
}

namespace {

Counterexample make_cex(const vcgen::VerificationCondition& vc, const smt::CheckResult& r, bool pinned) {
  Counterexample c;
  c.pinned = pinned;
  c.model = r.model;
  auto text = [&](const std::string& name) -> std::optional<std::string> {
    const smt::ModelValue* v = r.model.find(name);
    if (!v || v->kind == smt::ModelValue::Kind::Array) return std::nullopt;
    return v->text();
  };
  for (const auto& in : vc.inputs) {
    if (auto v = text(in)) c.inputs.emplace_back(in, *v);
  }
  for (const auto& d : vc.decls) {
    if (d.sort == trace::Sort::Map) {
      const smt::ModelValue* m = r.model.find(d.name);
      if (!m || m->kind != smt::ModelValue::Kind::Array) continue;
      for (const auto& i : vc.indices) {
        if (i->kind != trace::Term::Kind::Var) continue;
        auto key = r.model.int_of(i->name);
        if (!key) continue;
        c.values.emplace_back(d.name + "[" + i->name + "]", m->arr.at(*key).str());
      }
      continue;
    }
    if (std::find(vc.inputs.begin(), vc.inputs.end(), d.name) != vc.inputs.end()) continue;
    if (auto v = text(d.name)) c.values.emplace_back(d.name, *v);
  }
  for (const auto& d : vc.defs) {
    if (d.sort == trace::Sort::Map) continue;
    if (auto v = text(d.name)) c.values.emplace_back(d.name, *v);
  }
  for (const auto& g : vc.goals) {
    if (!g.skolem.empty()) {
      if (auto v = text(g.skolem)) c.values.emplace_back(g.skolem, *v);
    }
  }
  for (const auto& m : vc.maps) {
    auto it = r.model.sums.find(m);
    if (it != r.model.sums.end()) c.values.emplace_back("sum(" + m + ")", it->second.str());
  }
  for (std::size_t i = 0; i < r.goals.size(); ++i) {
    if (r.goals[i] == smt::Verdict::Refuted) {
      c.refuted.push_back(std::string(trace::origin_name(vc.goals[i].origin)) + ": " + vc.goals[i].label);
    }
  }
  return c;
}

}  // namespace

ProofAttempt prove_trace(const vm::Trace& tr, const lang::ResolvedProgram& program, const lang::Expr* hyp,
                         const smt::SolverConfig& solver, const std::vector<smt::Pin>& pins,
                         const std::string& origin_tx) {
  ProofAttempt a;
  trace::SsaProgram ssa = trace::extract_straightline(tr, program);
  trace::check_well_formed(ssa);
  a.ssa_text = trace::dump_ssa(ssa);
  a.vc = vcgen::build_vc(std::move(ssa), program, hyp);
  a.vc_text = vcgen::dump_vc(a.vc);
  a.goals = a.vc.goals.size();
  for (const auto& g : a.vc.goals) a.goal_labels.push_back(std::string(trace::origin_name(g.origin)) + ": " + g.label);

  smt::CheckResult r = smt::check_vc(a.vc, solver);
  a.script = r.script.text;
  a.solver_calls += r.solver_ran ? 1 : 0;
  a.verdict = r.verdict;
  a.goal_verdicts = r.goals;
  a.reason = r.reason;

  if (r.verdict == smt::Verdict::Proven) {
    repo::Theorem t;
    t.code = tr.entry_code;
    t.contract = a.vc.contract;
    t.function = tr.entry_function;
    t.hypothesis = hypothesis_text(hyp);
    t.path = trace::path_hash(tr);
    t.goals = static_cast<std::uint32_t>(a.goals);
    t.origin_tx = origin_tx;
    t.id = repo::theorem_id(t.code, t.function, t.hypothesis, t.path);
    a.theorem = t;
  } else if (r.verdict == smt::Verdict::Refuted) {
    a.counterexample = make_cex(a.vc, r, false);
    std::vector<smt::Pin> usable;
    for (const auto& p : pins) {
      if (std::find(a.vc.inputs.begin(), a.vc.inputs.end(), p.name) != a.vc.inputs.end()) usable.push_back(p);
    }
    if (!usable.empty()) {
      smt::CheckResult pinned = smt::check_vc(a.vc, solver, usable);
      a.solver_calls += pinned.solver_ran ? 1 : 0;
      if (pinned.verdict == smt::Verdict::Refuted) a.counterexample = make_cex(a.vc, pinned, true);
    }
  }
  return a;
}

}  // namespace tct::protocol
