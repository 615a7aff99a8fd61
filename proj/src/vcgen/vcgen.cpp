// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/vcgen/vcgen.hpp"

#include <set>
#include <sstream>

#include "tct/common/error.hpp"
#include "tct/lang/printer.hpp"
#include "tct/trace/symbolic.hpp"

namespace tct::vcgen {

using trace::SsaStmt;
using trace::Term;
using K = Term::Kind;
namespace t = trace::t;

std::string_view kind_name(AssumptionKind k) {
  switch (k) {
    case AssumptionKind::Range: return "range";
    case AssumptionKind::Hypothesis: return "hypothesis";
    case AssumptionKind::Invariant: return "invariant";
    case AssumptionKind::FreshStorage: return "fresh";
    case AssumptionKind::Precondition: return "pre";
    case AssumptionKind::Path: return "path";
    case AssumptionKind::Axiom: return "axiom";
  }
  return "?";
}

std::size_t VerificationCondition::count(AssumptionKind k) const {
  std::size_t n = 0;
  for (const auto& a : assumptions) n += a.kind == k ? 1 : 0;
  return n;
}

bool is_nonlinear(const Term& e) {
  auto lit = [](const TermPtr& a) { return a->kind == K::Num; };
  switch (e.kind) {
    case K::Mul:
      if (!lit(e.args[0]) && !lit(e.args[1])) return true;
      break;
    case K::App:
      if (e.name == "mul" && !lit(e.args[0]) && !lit(e.args[1])) return true;
      break;
    case K::Div:
    case K::Mod:
      if (!lit(e.args[1])) return true;
      break;
    default: break;
  }
  for (const auto& a : e.args) {
    if (is_nonlinear(*a)) return true;
  }
  return false;
}

namespace {

const BigInt kTwo160 = BigInt(1) << 160;
const BigInt kTwo256 = BigInt(1) << 256;

TermPtr between(const TermPtr& x, const BigInt& hi) {
  return t::bin(K::And, t::bin(K::Le, t::num(0), x), t::bin(K::Lt, x, t::num(hi)));
}

class Builder {
 public:
  Builder(trace::SsaProgram ssa, const lang::ResolvedProgram& prog) : ssa_(std::move(ssa)), prog_(prog) {}

  VerificationCondition run(const lang::Expr* hyp) {
    const lang::ResolvedContract* rc = prog_.find_by_hash(ssa_.entry_code);
    if (!rc) throw Error(Errc::NotFound, "no code for " + ssa_.entry_code.short_hex());
    const lang::FunctionDef* entry = entry_function(*rc);
    vc_.contract = ssa_.entry_contract;
    vc_.function = ssa_.entry_function;
    vc_.code = ssa_.entry_code;
    vc_.is_deployment = ssa_.is_deployment;

    // Translate everything first: version_of may still add initial symbols.
    std::vector<Assumption> hyp_a, inv_a, pre_a;
    std::vector<Goal> call_goals, mod_goals, inv_goals, post_goals;

    if (hyp) {
      if (entry) {
        lang::check_hypothesis_grammar(*hyp, *rc, *entry);
      } else {
        lang::FunctionDef none;
        none.name = "constructor";
        lang::check_hypothesis_grammar(*hyp, *rc, none);
      }
      trace::SymScope s = frame_scope(0, initial(0), nullptr, false);
      hyp_a.push_back({AssumptionKind::Hypothesis, trace::to_term(*hyp, s), lang::print(*hyp)});
    }

    for (std::size_t k = 0; k < ssa_.accounts.size(); ++k) {
      const auto* arc = prog_.find_by_hash(ssa_.accounts[k].code);
      if (ssa_.is_deployment && k == 0) {
        for (const auto& d : arc->def.storage) fresh(k, d);
        continue;
      }
      trace::SymScope s = account_scope(k, initial(k), false);
      for (const auto& inv : arc->def.invariants) {
        inv_a.push_back({AssumptionKind::Invariant, trace::to_term(*inv, s), label(k, lang::print(*inv))});
      }
    }

    if (entry) {
      trace::SymScope s = frame_scope(0, initial(0), nullptr, false);
      for (const auto& p : entry->pre) {
        pre_a.push_back({AssumptionKind::Precondition, trace::to_term(*p, s), lang::print(*p)});
      }
    }

    for (std::size_t f = 1; f < ssa_.frames.size(); ++f) callee_posts(f, call_goals);
    for (std::size_t i = 0; i < ssa_.writes.size(); ++i) modifies(i, mod_goals);

    for (std::size_t k = 0; k < ssa_.accounts.size(); ++k) {
      const auto* arc = prog_.find_by_hash(ssa_.accounts[k].code);
      std::map<std::string, std::string> cur = ssa_.accounts[k].current;
      trace::SymScope s = account_scope(k, cur, false);
      for (const auto& inv : arc->def.invariants) {
        inv_goals.push_back({GoalOrigin::Invariant, trace::to_term(*inv, s), label(k, lang::print(*inv))});
      }
    }

    if (entry && !entry->post.empty()) {
      std::map<std::string, std::string> cur = ssa_.accounts[0].current;
      trace::SymScope old = frame_scope(0, ssa_.frames[0].at_enter, nullptr, false);
      trace::SymScope s = frame_scope(0, cur, &old, false);
      for (const auto& p : entry->post) {
        post_goals.push_back({GoalOrigin::Postcondition, trace::to_term(*p, s), lang::print(*p)});
      }
    }

    // Now the statement list is final.
    std::vector<Assumption> path_a;
    std::vector<Goal> inline_goals;
    std::vector<std::string> initial_maps;
    for (const auto& st : ssa_.stmts) {
      switch (st.kind) {
        case SsaStmt::Kind::Define:
          vc_.decls.push_back({st.name, st.sort});
          if (st.sort == Sort::Map) {
            vc_.maps.push_back(st.name);
            initial_maps.push_back(st.name);
          }
          break;
        case SsaStmt::Kind::Assume: path_a.push_back({AssumptionKind::Path, st.term, st.note}); break;
        case SsaStmt::Kind::Assign:
        case SsaStmt::Kind::MapStore: {
          Sort sort = ssa_.symbols.at(st.name);
          vc_.defs.push_back({st.name, sort, st.term});
          if (sort == Sort::Map) vc_.maps.push_back(st.name);
          break;
        }
        case SsaStmt::Kind::Goal: inline_goals.push_back({st.origin, st.term, st.note, nullptr, ""}); break;
      }
    }

    auto append = [](auto& dst, auto& src) {
      for (auto& x : src) dst.push_back(std::move(x));
    };
    // inline asserts and callee posts interleave by position; asserts first is fine
    append(vc_.goals, inline_goals);
    append(vc_.goals, call_goals);
    append(vc_.goals, mod_goals);
    append(vc_.goals, inv_goals);
    append(vc_.goals, post_goals);
    for (std::size_t i = 0; i < vc_.goals.size(); ++i) {
      Goal& g = vc_.goals[i];
      g.body = g.term;
      if (g.term->kind == K::Forall) {
        g.skolem = "sk!" + std::to_string(i);
        g.body = trace::substitute(g.term->args[0], {{g.term->name, t::var(g.skolem)}});
      }
    }

    // Map axioms are ground instances over the index terms of the query.
    for (const auto& d : vc_.defs) collect_indices(*d.term);
    for (const auto* list : {&hyp_a, &inv_a, &pre_a, &path_a}) {
      for (const auto& a : *list) collect_indices(*a.term);
    }
    for (const auto& g : vc_.goals) {
      collect_indices(*g.body);
      if (!g.skolem.empty()) add_index(t::var(g.skolem));
    }

    // Quantified assumptions become instances at the same index terms.
    for (auto* list : {&hyp_a, &inv_a, &pre_a}) {
      for (auto& a : *list) a.term = ground(a.term);
    }

    std::vector<Assumption> range_a;
    for (const auto& st : ssa_.stmts) {
      if (st.kind != SsaStmt::Kind::Define) continue;
      if (st.range == trace::Range::WordMap) {
        for (const auto& i : vc_.indices) {
          range_a.push_back({AssumptionKind::Range, between(t::select(t::var(st.name), i), kTwo256), st.name});
        }
      } else if (auto r = range_of(st)) {
        range_a.push_back({AssumptionKind::Range, r, st.name});
      }
    }
    for (const auto& [sym, lbl] : fresh_maps_) {
      for (const auto& i : vc_.indices) {
        fresh_a_.push_back({AssumptionKind::FreshStorage, t::bin(K::Eq, t::select(t::var(sym), i), t::num(0)), lbl});
      }
    }

    append(vc_.assumptions, range_a);
    append(vc_.assumptions, hyp_a);
    append(vc_.assumptions, inv_a);
    append(vc_.assumptions, fresh_a_);
    append(vc_.assumptions, pre_a);
    append(vc_.assumptions, path_a);
    axioms();

    if (entry) {
      for (const auto& p : entry->params) vc_.inputs.push_back(p.name);
    }
    vc_.inputs.push_back("msg.sender");
    vc_.inputs.push_back("this");

    for (const auto& d : vc_.defs) vc_.nonlinear |= is_nonlinear(*d.term);
    for (const auto& a : vc_.assumptions) vc_.nonlinear |= is_nonlinear(*a.term);
    for (const auto& g : vc_.goals) vc_.nonlinear |= is_nonlinear(*g.term);
    return std::move(vc_);
  }

 private:
  const lang::FunctionDef* entry_function(const lang::ResolvedContract& rc) const {
    if (ssa_.is_deployment) return rc.def.constructor ? &*rc.def.constructor : nullptr;
    return rc.find_function(ssa_.entry_function);
  }

  std::map<std::string, std::string> initial(std::size_t k) const { return ssa_.accounts[k].initial; }

  std::string label(std::size_t k, const std::string& text) const {
    return "a" + std::to_string(k) + " " + ssa_.accounts[k].contract + ": " + text;
  }

  trace::SymScope account_scope(std::size_t k, const std::map<std::string, std::string>& versions, bool wrapping) {
    trace::SymScope s;
    const auto* arc = prog_.find_by_hash(ssa_.accounts[k].code);
    s.contract = &arc->def;
    s.self = ssa_.accounts[k].self;
    s.wrapping = wrapping;
    s.storage = [this, k, versions](const std::string& slot) -> TermPtr {
      return t::var(ssa_.version_of(k, versions, slot, prog_));
    };
    return s;
  }

  trace::SymScope frame_scope(std::size_t f, const std::map<std::string, std::string>& versions,
                              const trace::SymScope* old, bool wrapping) {
    const trace::FrameInfo& fr = ssa_.frames[f];
    trace::SymScope s = account_scope(fr.account, versions, wrapping);
    auto params = fr.params;
    s.local = [params](const std::string& n) -> TermPtr {
      for (const auto& [name, term] : params) {
        if (name == n) return term;
      }
      return nullptr;
    };
    s.sender = fr.sender;
    s.self = fr.self;
    s.old = old;
    return s;
  }

  void fresh(std::size_t k, const lang::StorageDecl& d) {
    std::string sym = ssa_.version_of(k, {}, d.name, prog_);
    std::string lbl = ssa_.accounts[k].contract + "." + d.name + " starts at zero";
    if (d.type == lang::TypeTag::Map) {
      fresh_maps_.emplace_back(sym, lbl);  // entries instantiated once the indices are known
      fresh_a_.push_back({AssumptionKind::FreshStorage, t::bin(K::Eq, t::sum(t::var(sym)), t::num(0)), lbl});
    } else {
      fresh_a_.push_back({AssumptionKind::FreshStorage, t::bin(K::Eq, t::var(sym), t::num(0)), lbl});
    }
  }

  void callee_posts(std::size_t f, std::vector<Goal>& out) {
    const trace::FrameInfo& fr = ssa_.frames[f];
    const auto* arc = prog_.find_by_hash(ssa_.accounts[fr.account].code);
    const lang::FunctionDef* fn = arc->find_function(fr.function);
    if (!fn || fn->post.empty()) return;
    trace::SymScope old = frame_scope(f, fr.at_enter, nullptr, false);
    trace::SymScope s = frame_scope(f, fr.at_exit, &old, false);
    for (const auto& p : fn->post) {
      out.push_back({GoalOrigin::CalleePost, trace::to_term(*p, s),
                     fr.contract + "::" + fr.function + " frame " + std::to_string(f) + ": " + lang::print(*p)});
    }
  }

  void modifies(std::size_t i, std::vector<Goal>& out) {
    const trace::WriteInfo& w = ssa_.writes[i];
    const trace::FrameInfo& fr = ssa_.frames[w.frame];
    const auto* arc = prog_.find_by_hash(ssa_.accounts[fr.account].code);
    const lang::FunctionDef* fn =
        fr.function == "constructor" && arc->def.constructor ? &*arc->def.constructor : arc->find_function(fr.function);
    if (!fn || !fn->modifies) return;  // no clause: anything goes
    if (fn->is_constructor) return;
    std::vector<TermPtr> allowed;
    bool listed = false;
    trace::SymScope s = frame_scope(w.frame, fr.at_enter, nullptr, true);
    for (const auto& m : *fn->modifies) {
      if (m.slot != w.slot) continue;
      listed = true;
      if (!m.index || !w.index) return;  // whole slot listed
      allowed.push_back(t::bin(K::Eq, w.index, trace::to_term(*m.index, s)));
    }
    if (!listed) {
      throw Error(Errc::ModifiesViolation, "write to '" + w.slot + "' in " + fr.contract + "::" + fr.function +
                                               " is not covered by its #modifies clause");
    }
    std::string what;
    for (const auto& m : *fn->modifies) {
      if (m.slot == w.slot) what += (what.empty() ? "" : ", ") + m.slot + "[" + lang::print(*m.index) + "]";
    }
    out.push_back({GoalOrigin::Modifies, t::disj(allowed),
                   fr.contract + "::" + fr.function + " writes " + w.slot + "[" + trace::to_text(w.index) +
                       "] within " + what});
  }

  TermPtr range_of(const SsaStmt& st) const {
    TermPtr x = t::var(st.name);
    switch (st.range) {
      case trace::Range::None: return nullptr;
      case trace::Range::Word: return between(x, kTwo256);
      case trace::Range::Address: return between(x, kTwo160);
      case trace::Range::Bool: return between(x, 2);
      case trace::Range::WordMap: return nullptr;
    }
    return nullptr;
  }

  void axioms() {
    // One sum-update instance per store, one bound instance per map version.
    for (const auto& d : vc_.defs) {
      if (d.sort != Sort::Map || d.term->kind != K::Store) continue;
      const TermPtr& m = d.term->args[0];
      const TermPtr& i = d.term->args[1];
      const TermPtr& v = d.term->args[2];
      TermPtr rhs = t::bin(K::Add, t::bin(K::Sub, t::sum(m), t::select(m, i)), v);
      vc_.assumptions.push_back({AssumptionKind::Axiom, t::bin(K::Eq, t::sum(t::var(d.name)), rhs), "sum update " + d.name});
    }
    for (const auto& name : vc_.maps) {
      TermPtr m = t::var(name);
      for (const auto& a : vc_.indices) {
        TermPtr body = t::bin(K::And, t::bin(K::Le, t::num(0), t::select(m, a)), t::bin(K::Le, t::select(m, a), t::sum(m)));
        vc_.assumptions.push_back({AssumptionKind::Axiom, body, "sum bound " + name});
      }
    }
  }

  void add_index(const TermPtr& i) {
    for (const auto& f : trace::free_vars(*i)) {
      if (!f.empty() && f[0] == '?') return;
    }
    for (const auto& j : vc_.indices) {
      if (trace::term_equal(i, j)) return;
    }
    vc_.indices.push_back(i);
  }

  TermPtr ground(const TermPtr& e) const {
    if (e->kind == K::And) return t::bin(K::And, ground(e->args[0]), ground(e->args[1]));
    if (e->kind != K::Forall) return e;
    std::vector<TermPtr> parts;
    for (const auto& i : vc_.indices) parts.push_back(ground(trace::substitute(e->args[0], {{e->name, i}})));
    return t::conj(parts);
  }

  void collect_indices(const Term& e) {
    if (e.kind == K::Select || e.kind == K::Store) add_index(e.args[1]);
    for (const auto& a : e.args) collect_indices(*a);
  }

  trace::SsaProgram ssa_;
  const lang::ResolvedProgram& prog_;
  std::vector<std::pair<std::string, std::string>> fresh_maps_;
  VerificationCondition vc_;
  std::vector<Assumption> fresh_a_;
};

}  // namespace

VerificationCondition build_vc(trace::SsaProgram ssa, const lang::ResolvedProgram& program,
                               const lang::Expr* hypothesis) {
  return Builder(std::move(ssa), program).run(hypothesis);
}

std::string dump_vc(const VerificationCondition& vc) {
  std::ostringstream os;
  os << "// vc " << (vc.is_deployment ? "deployment " : "") << vc.contract << "::" << vc.function << " code "
     << vc.code.short_hex() << (vc.nonlinear ? " nonlinear" : "") << '\n';
  for (const auto& d : vc.decls) os << "const " << d.name << ": " << trace::sort_name(d.sort) << ";\n";
  for (const auto& d : vc.defs) {
    os << "define " << d.name << ": " << trace::sort_name(d.sort) << " := " << trace::to_text(d.term) << ";\n";
  }
  for (const auto& a : vc.assumptions) {
    os << "assume[" << kind_name(a.kind) << "] " << trace::to_text(a.term) << ";";
    if (!a.label.empty()) os << "  // " << a.label;
    os << '\n';
  }
  for (std::size_t i = 0; i < vc.goals.size(); ++i) {
    const auto& g = vc.goals[i];
    os << "goal " << i << " [" << trace::origin_name(g.origin) << "] " << trace::to_text(g.term) << ";";
    if (!g.skolem.empty()) os << "  // witness " << g.skolem;
    if (!g.label.empty()) os << "  // " << g.label;
    os << '\n';
  }
  return os.str();
}

}  // namespace tct::vcgen
