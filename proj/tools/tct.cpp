// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Command-line entry point: scenario runner plus one-shot verbs that act on
// a network prepared by --setup scenario files.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tct/cli/scenario.hpp"
#include "tct/common/error.hpp"
#include "tct/trace/path.hpp"
#include "tct/vm/interpreter.hpp"

#ifndef TCT_DEFAULT_SOLVER
#define TCT_DEFAULT_SOLVER "z3"
#endif

namespace {

using namespace tct;

enum Exit { kOk = 0, kExpectation = 1, kUsage = 2, kSolver = 3 };

struct Common {
  std::size_t nodes = 3;
  std::string solver;
  int timeout_ms = -1;
  std::string dump_dir;
  bool debug_asserts = false;
  bool timestamps = false;
  std::string config;
  std::vector<std::string> setup;
  std::vector<std::string> sources;
};

struct CallArgs {
  std::string call;
  std::string from;
  std::string under;
  std::string out;
  bool prove = false;
  std::string id = "cli";
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--nodes", c.nodes, "number of nodes")->check(CLI::Range(1, 64));
  app->add_option("--solver", c.solver, "SMT solver executable (default $TCT_SOLVER or z3)");
  app->add_option("--timeout-ms", c.timeout_ms, "solver timeout per query (default $TCT_TIMEOUT_MS)");
  app->add_option("--dump-dir", c.dump_dir, "write snapshots and proof artifacts here");
  app->add_flag("--debug-asserts", c.debug_asserts, "evaluate invariants after every call frame");
  app->add_flag("--timestamps", c.timestamps, "add wall-clock timings to the report");
  app->add_option("--config", c.config, "JSON file with nodes / solver / timeout_ms");
  app->add_option("--setup", c.setup, "scenario files run before the command");
  app->add_option("--source", c.sources, "MiniSol files loaded before the command");
}

cli::RunConfig make_config(const Common& c) {
  cli::RunConfig cfg;
  cfg.solver.path = TCT_DEFAULT_SOLVER;
  if (const char* s = std::getenv("TCT_SOLVER")) cfg.solver.path = s;
  if (const char* t = std::getenv("TCT_TIMEOUT_MS")) {
    try {
      cfg.solver.timeout_ms = std::stoi(t);
    } catch (const std::exception&) {
      throw Error(Errc::Usage, "TCT_TIMEOUT_MS is not a number");
    }
  }
  if (!c.config.empty()) cli::load_config_file(c.config, cfg);
  cfg.nodes = c.nodes;
  if (!c.solver.empty()) cfg.solver.path = c.solver;
  if (c.timeout_ms >= 0) cfg.solver.timeout_ms = c.timeout_ms;
  if (!c.dump_dir.empty()) cfg.dump_dir = c.dump_dir;
  cfg.debug_asserts = cfg.debug_asserts || c.debug_asserts;
  cfg.timestamps = c.timestamps;
  return cfg;
}

// Builds the session and runs --source / --setup. Returns false if a setup
// expectation failed.
bool prepare(cli::Session& s, const Common& c) {
  for (const auto& src : c.sources) s.load_source(src);
  for (const auto& f : c.setup) {
    s.run_file(f);
    if (!s.outcome().ok) {
      std::cout << s.outcome().report_text();
      if (s.outcome().solver_failure) throw Error(Errc::SolverFailure, "setup failed: solver unavailable");
      return false;
    }
  }
  return true;
}

int run_scenarios(const Common& c, const std::vector<std::string>& files) {
  int rc = kOk;
  for (const auto& f : files) {
    cli::Session s(make_config(c));
    s.run_file(f);
    std::string text = s.outcome().report_text();
    if (files.size() > 1) std::cout << "== " << f << "\n";
    std::cout << text;
    if (!s.outcome().ok) rc = s.outcome().solver_failure ? kSolver : kExpectation;
  }
  return rc;
}

std::string from_of(const CallArgs& a) {
  if (a.from.empty()) throw Error(Errc::Usage, "--from is required");
  return a.from;
}

int cmd_deploy(const Common& c, const CallArgs& a) {
  cli::Session s(make_config(c));
  if (!prepare(s, c)) return kExpectation;
  s.run_line("deploy " + a.id + " " + a.call + " from " + from_of(a), ".");
  std::cout << s.outcome().report.back() << "\n";
  const auto& outs = s.last_outcomes();
  return !outs.empty() && outs.front().status == protocol::Outcome::Status::Committed ? kOk : kExpectation;
}

int cmd_prove(const Common& c, const CallArgs& a) {
  cli::Session s(make_config(c));
  if (!prepare(s, c)) return kExpectation;
  cli::CallSpec spec = cli::parse_call(a.call);
  lang::ExprPtr hyp = s.parse_hypothesis(a.under);
  protocol::Issuer::Proof p;
  vm::Transaction tx;
  if (spec.target.empty()) {
    std::vector<Word256> args;
    for (const auto& x : spec.args) args.push_back(s.resolve_value(x));
    p = s.issuer().prove_deploy(spec.function, args, s.resolve_address(from_of(a)), hyp.get());
  } else {
    tx = s.make_tx(a.id, spec, from_of(a));
    p = s.issuer().prove(tx, hyp.get());
  }
  s.dump_proof(a.id, p);
  std::cout << a.call << " under " << protocol::hypothesis_text(hyp.get()) << ": " << s.describe_proof(p) << "\n";
  if (p.error_code == Errc::SolverFailure) return kSolver;
  if (!p.attempt || p.attempt->verdict != smt::Verdict::Proven) return kExpectation;
  if (!a.out.empty()) {
    if (spec.target.empty()) throw Error(Errc::Usage, "--out needs a call transaction, not a deployment");
    cli::save_theorem_file(a.out, *p.attempt->theorem, tx);
    std::cout << "wrote " << a.out << "\n";
  }
  return kOk;
}

int cmd_submit(const Common& c, const CallArgs& a) {
  cli::Session s(make_config(c));
  if (!prepare(s, c)) return kExpectation;
  std::string line = "submit " + a.id + " " + a.call + " from " + from_of(a);
  if (a.prove) line += " prove";
  if (!a.under.empty()) line += " under " + a.under;
  s.run_line(line, ".");
  std::cout << s.outcome().report.back() << "\n";
  const auto& outs = s.last_outcomes();
  return !outs.empty() && outs.front().status == protocol::Outcome::Status::Committed ? kOk : kExpectation;
}

int cmd_inspect(const Common& c, const std::string& what, const CallArgs& a) {
  cli::Session s(make_config(c));
  if (!prepare(s, c)) return kExpectation;
  const auto& node = s.net().node(0);
  if (what == "repo") {
    std::cout << node.repo().to_json();
    return kOk;
  }
  if (what == "state") {
    std::cout << node.world().snapshot_json();
    return kOk;
  }
  if (what == "log") {
    std::cout << node.log_text();
    return kOk;
  }
  if (a.call.empty()) throw Error(Errc::Usage, "inspect " + what + " needs a call");
  cli::CallSpec spec = cli::parse_call(a.call);
  vm::ExecutionResult r;
  if (spec.target.empty()) {
    const auto* rc = node.program().find(spec.function);
    if (!rc) throw Error(Errc::NotFound, "no contract '" + spec.function + "'");
    std::vector<Word256> args;
    for (const auto& x : spec.args) args.push_back(s.resolve_value(x));
    r = vm::deploy(node.world(), *rc, args, s.resolve_address(from_of(a)));
  } else {
    r = vm::execute(node.world(), s.make_tx(a.id, spec, from_of(a)));
  }
  if (what == "trace") {
    std::cout << trace::dump_trace(r.trace);
    return kOk;
  }
  lang::ExprPtr hyp = s.parse_hypothesis(a.under);
  auto ssa = trace::extract_straightline(r.trace, node.program());
  if (what == "ssa") {
    std::cout << trace::dump_ssa(ssa);
    return kOk;
  }
  auto vc = vcgen::build_vc(std::move(ssa), node.program(), hyp.get());
  if (what == "vc") {
    std::cout << vcgen::dump_vc(vc);
    return kOk;
  }
  if (what == "smt") {
    std::cout << smt::emit_script(vc, {}).text;
    return kOk;
  }
  throw Error(Errc::Usage, "inspect: unknown view '" + what + "'");
}

int cmd_repo(const Common& c, const std::string& file) {
  repo::TheoremRepo r;
  if (!file.empty()) {
    r = repo::TheoremRepo::load(file);
  } else {
    cli::Session s(make_config(c));
    if (!prepare(s, c)) return kExpectation;
    r = s.net().node(0).repo();
  }
  for (const auto& [id, t] : r.all()) {
    std::cout << t.id.short_hex() << "  " << t.contract << "::" << t.function << "  under " << t.hypothesis
              << "  path " << t.path.short_hex() << "  goals " << t.goals << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tct: transactions that carry theorems"};
  app.require_subcommand(1);
  Common common;
  CallArgs call;
  std::vector<std::string> scenarios;
  std::string what, repo_file;

  auto* run = app.add_subcommand("run", "run scenario files");
  add_common(run, common);
  run->add_option("scenario", scenarios, "scenario files")->required();

  auto add_call = [&](CLI::App* sub) {
    add_common(sub, common);
    sub->add_option("--from", call.from, "sender account (name or address)");
    sub->add_option("--id", call.id, "transaction id");
  };
  auto* deploy = app.add_subcommand("deploy", "deploy a contract: Contract(args)");
  add_call(deploy);
  deploy->add_option("call", call.call, "Contract(args)")->required();

  auto* prove = app.add_subcommand("prove", "prove a call or a deployment");
  add_call(prove);
  prove->add_option("call", call.call, "target.fn(args) or Contract(args)")->required();
  prove->add_option("--under", call.under, "hypothesis");
  prove->add_option("--out", call.out, "write the theorem file here");

  auto* submit = app.add_subcommand("submit", "submit a call to the network");
  add_call(submit);
  submit->add_option("call", call.call, "target.fn(args)")->required();
  submit->add_flag("--prove", call.prove, "prove first and attach the theorem");
  submit->add_option("--under", call.under, "hypothesis for --prove");

  auto* inspect = app.add_subcommand("inspect", "dump trace | ssa | vc | smt | repo | state | log");
  add_call(inspect);
  inspect->add_option("what", what, "view")->required();
  inspect->add_option("call", call.call, "target.fn(args) or Contract(args)");
  inspect->add_option("--under", call.under, "hypothesis for the vc view");

  auto* repo_cmd = app.add_subcommand("repo", "list theorems of a repository file or of the prepared network");
  add_common(repo_cmd, common);
  repo_cmd->add_option("file", repo_file, "repository JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return run_scenarios(common, scenarios);
    if (*deploy) return cmd_deploy(common, call);
    if (*prove) return cmd_prove(common, call);
    if (*submit) return cmd_submit(common, call);
    if (*inspect) return cmd_inspect(common, what, call);
    if (*repo_cmd) return cmd_repo(common, repo_file);
  } catch (const Error& e) {
    std::cerr << "tct: " << e.what() << "\n";
    return e.code() == Errc::SolverFailure ? kSolver : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "tct: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
