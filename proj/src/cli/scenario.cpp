// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/cli/scenario.hpp"

#include <cctype>
#include <chrono>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tct/common/error.hpp"
#include "tct/lang/parser.hpp"
#include "tct/trace/path.hpp"

namespace tct::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) throw Error(Errc::NotFound, "cannot read " + p.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(Errc::PersistenceFailure, "cannot write " + p.string());
  f << text;
}

// strips the "Errc: " prefix an Error adds to its message
std::string bare_message(const Error& e) {
  std::string w = e.what();
  std::string prefix = std::string(errc_name(e.code())) + ": ";
  return w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
}

std::optional<Errc> parse_errc(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Errc::Usage); ++i) {
    if (errc_name(static_cast<Errc>(i)) == s) return static_cast<Errc>(i);
  }
  return std::nullopt;
}

// A directive split into: leading words, an optional call `x.f(...)`,
// trailing keyword words, and the hypothesis after `under`.
struct Directive {
  std::string verb;
  std::vector<std::string> lead;
  std::optional<std::string> call;
  std::vector<std::string> tail;
  std::optional<std::string> under;

  std::optional<std::string> option(const std::string& key) const {
    for (std::size_t i = 0; i + 1 < tail.size(); ++i) {
      if (tail[i] == key) return tail[i + 1];
    }
    return std::nullopt;
  }
  bool flag(const std::string& key) const {
    for (const auto& w : tail) {
      if (w == key) return true;
    }
    return false;
  }
};

Directive split(const std::string& line) {
  Directive d;
  std::string rest = line;
  if (auto u = rest.find(" under "); u != std::string::npos) {
    d.under = trim(rest.substr(u + 7));
    rest = rest.substr(0, u);
  }
  auto open = rest.find('(');
  if (open != std::string::npos) {
    std::size_t start = rest.find_last_of(" \t", open);
    start = start == std::string::npos ? 0 : start + 1;
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = open; i < rest.size(); ++i) {
      if (rest[i] == '(') ++depth;
      if (rest[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos) throw Error(Errc::Usage, "unbalanced parentheses");
    d.call = rest.substr(start, close + 1 - start);
    d.tail = words(rest.substr(close + 1));
    rest = rest.substr(0, start);
  }
  d.lead = words(rest);
  if (d.lead.empty()) throw Error(Errc::Usage, "empty directive");
  d.verb = d.lead.front();
  d.lead.erase(d.lead.begin());
  return d;
}

// number | name | (expr), with + - * ^ over unbounded integers
class ValueParser {
 public:
  ValueParser(std::string_view s, const std::map<std::string, Address>& names) : s_(s), names_(names) {}

  BigInt parse() {
    BigInt v = expr();
    skip();
    if (p_ != s_.size()) throw Error(Errc::Usage, "cannot read value '" + std::string(s_) + "'");
    return v;
  }

 private:
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }
  BigInt expr() {
    BigInt v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  BigInt term() {
    BigInt v = factor();
    while (eat('*')) v *= factor();
    return v;
  }
  BigInt factor() {
    BigInt b = atom();
    if (eat('^')) {
      BigInt e = factor();
      if (e < 0 || e > 4096) throw Error(Errc::Usage, "exponent out of range");
      return boost::multiprecision::pow(b, e.convert_to<unsigned>());
    }
    return b;
  }
  BigInt atom() {
    skip();
    if (eat('(')) {
      BigInt v = expr();
      if (!eat(')')) throw Error(Errc::Usage, "missing ')' in value");
      return v;
    }
    if (eat('-')) return -atom();
    std::size_t b = p_;
    while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
    std::string tok(s_.substr(b, p_ - b));
    if (tok.empty()) throw Error(Errc::Usage, "cannot read value '" + std::string(s_) + "'");
    if (tok == "true") return 1;
    if (tok == "false") return 0;
    if (auto it = names_.find(tok); it != names_.end()) return it->second.word().to_big();
    if (auto n = parse_bigint(tok)) return *n;
    throw Error(Errc::UnknownName, "unknown name '" + tok + "'");
  }

  std::string_view s_;
  const std::map<std::string, Address>& names_;
  std::size_t p_ = 0;
};

json tx_json(const vm::Transaction& tx) {
  json j;
  j["id"] = tx.id;
  j["origin"] = tx.origin.to_hex();
  j["target"] = tx.target.to_hex();
  j["function"] = tx.function;
  json a = json::array();
  for (const auto& w : tx.args) a.push_back(w.to_dec());
  j["args"] = std::move(a);
  return j;
}

vm::Transaction tx_from_json(const json& j) {
  vm::Transaction tx;
  tx.id = j.at("id").get<std::string>();
  auto o = Address::parse(j.at("origin").get<std::string>());
  auto t = Address::parse(j.at("target").get<std::string>());
  if (!o || !t) throw Error(Errc::PersistenceFailure, "bad address in witness");
  tx.origin = *o;
  tx.target = *t;
  tx.function = j.at("function").get<std::string>();
  for (const auto& a : j.at("args")) {
    auto w = Word256::parse(a.get<std::string>());
    if (!w) throw Error(Errc::PersistenceFailure, "bad argument in witness");
    tx.args.push_back(*w);
  }
  return tx;
}

std::string indent(const std::string& text) {
  std::string out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out += "    " + l + "\n";
  return out;
}

}  // namespace

void load_config_file(const std::string& path, RunConfig& cfg) {
  try {
    json j = json::parse(read_file(path));
    if (j.contains("nodes")) cfg.nodes = j["nodes"].get<std::size_t>();
    if (j.contains("solver")) cfg.solver.path = j["solver"].get<std::string>();
    if (j.contains("timeout_ms")) cfg.solver.timeout_ms = j["timeout_ms"].get<int>();
    if (j.contains("debug_asserts")) cfg.debug_asserts = j["debug_asserts"].get<bool>();
    if (j.contains("dump_dir")) cfg.dump_dir = j["dump_dir"].get<std::string>();
  } catch (const json::exception& e) {
    throw Error(Errc::Usage, "bad config file " + path + ": " + e.what());
  }
}

CallSpec parse_call(const std::string& text) {
  CallSpec c;
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') throw Error(Errc::Usage, "expected a call, got '" + text + "'");
  std::string head = trim(text.substr(0, open));
  if (auto dot = head.rfind('.'); dot != std::string::npos) {
    c.target = head.substr(0, dot);
    c.function = head.substr(dot + 1);
  } else {
    c.function = head;
  }
  if (c.function.empty()) throw Error(Errc::Usage, "missing function name in '" + text + "'");
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  int depth = 0;
  std::string cur;
  for (char ch : inner) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      c.args.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty() || !c.args.empty()) c.args.push_back(trim(cur));
  return c;
}

std::string ScenarioOutcome::report_text() const {
  if (report.empty()) return "";
  std::ostringstream os;
  for (const auto& l : report) os << l << '\n';
  os << "commits " << commits << ", rejects " << rejects << ", accepted " << accepts << ", theorems " << theorems
     << ", node solver calls " << node_solver_calls << ", issuer solver calls " << issuer_solver_calls << '\n';
  os << (ok ? "ok" : "FAILED: " + failure) << '\n';
  return os.str();
}

void save_theorem_file(const std::string& path, const repo::Theorem& t, const vm::Transaction& witness) {
  repo::TheoremRepo one;
  one.add(t);
  json j = json::parse(one.to_json());
  j["witness"] = tx_json(witness);
  write_file(path, j.dump(2) + "\n");
}

protocol::TheoremBundle load_theorem_file(const std::string& path) {
  std::string text = read_file(path);
  repo::TheoremRepo r = repo::TheoremRepo::from_json(text);
  if (r.size() != 1) throw Error(Errc::PersistenceFailure, path + ": expected exactly one theorem");
  try {
    json j = json::parse(text);
    return {r.all().begin()->second, tx_from_json(j.at("witness"))};
  } catch (const json::exception& e) {
    throw Error(Errc::PersistenceFailure, path + ": " + e.what());
  }
}

// ---- Session ----

Session::Session(RunConfig cfg) : cfg_(std::move(cfg)) {
  protocol::NodeConfig nc;
  nc.solver = cfg_.solver;
  nc.exec.debug_asserts = cfg_.debug_asserts;
  net_ = std::make_unique<protocol::Network>(cfg_.nodes, nc);
  issuer_ = std::make_unique<protocol::Issuer>(*net_, cfg_.solver);
}

void Session::load_source(const fs::path& file) { net_->load(lang::load_program(read_file(file))); }

Address Session::resolve_address(const std::string& name) const {
  if (auto it = names_.find(name); it != names_.end()) return it->second;
  if (auto a = Address::parse(name)) return *a;
  BigInt v = ValueParser(name, names_).parse();
  if (!Address::fits(v)) throw Error(Errc::Usage, "'" + name + "' is not an address");
  return Address(Word256::from_big(v));
}

Word256 Session::resolve_value(const std::string& text) const {
  return Word256::from_big(ValueParser(text, names_).parse());
}

vm::Transaction Session::make_tx(const std::string& id, const CallSpec& call, const std::string& from) const {
  vm::Transaction tx;
  tx.id = id;
  tx.origin = resolve_address(from);
  tx.target = resolve_address(call.target);
  tx.function = call.function;
  for (const auto& a : call.args) tx.args.push_back(resolve_value(a));
  return tx;
}

lang::ExprPtr Session::parse_hypothesis(const std::string& text) const {
  if (text.empty() || text == "true") return nullptr;
  return lang::parse_expression(text);
}

void Session::note(const std::string& line) { out_.report.push_back(line); }

bool Session::fail(const std::string& why) {
  note("    expectation failed: " + why);
  if (out_.ok) {
    out_.ok = false;
    out_.failure = "[" + std::to_string(step_) + "] " + why;
  }
  return false;
}

std::string Session::summarize(const std::vector<protocol::Outcome>& outs) {
  if (outs.empty()) return "not sent";
  const auto& o = outs.front();
  switch (o.status) {
    case protocol::Outcome::Status::Committed: ++out_.commits; break;
    case protocol::Outcome::Status::Rejected: ++out_.rejects; break;
    case protocol::Outcome::Status::Accepted: ++out_.accepts; break;
  }
  auto one = [](const protocol::Outcome& x) {
    std::string s(protocol::status_name(x.status));
    if (x.reason) s += " " + std::string(protocol::reason_name(*x.reason));
    if (x.theorem) s += " theorem " + x.theorem->short_hex();
    if (x.created) s += " at " + x.created->to_hex();
    if (!x.detail.empty()) s += " (" + x.detail + ")";
    return s;
  };
  std::string first = one(o);
  for (const auto& x : outs) {
    if (one(x) != first) {
      std::string all = "nodes disagree:";
      for (const auto& y : outs) all += " [" + one(y) + "]";
      return all;
    }
  }
  return first + " on " + std::to_string(outs.size()) + " node" + (outs.size() == 1 ? "" : "s");
}

std::string Session::describe_proof(const protocol::Issuer::Proof& p) const {
  if (!p.attempt) return "error " + p.error;
  const auto& a = *p.attempt;
  std::ostringstream os;
  os << smt::verdict_name(a.verdict) << ", " << a.goals << " goal" << (a.goals == 1 ? "" : "s");
  if (a.verdict == smt::Verdict::Unknown && !a.reason.empty()) os << " (" << a.reason << ")";
  if (a.theorem) {
    const auto& t = *a.theorem;
    os << "\n    theorem " << t.id.short_hex() << " = (" << t.contract << " code " << t.code.short_hex() << ", "
       << t.function << ", " << t.hypothesis << ", path " << t.path.short_hex() << ")";
  }
  if (a.counterexample) os << "\n" << indent(a.counterexample->text());
  std::string s = os.str();
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

void Session::dump_proof(const std::string& name, const protocol::Issuer::Proof& p) const {
  if (cfg_.dump_dir.empty()) return;
  fs::path dir = fs::path(cfg_.dump_dir) / "proofs";
  write_file(dir / (name + ".trace"), trace::dump_trace(p.exec.trace));
  if (!p.attempt) return;
  write_file(dir / (name + ".ssa"), p.attempt->ssa_text);
  write_file(dir / (name + ".vc"), p.attempt->vc_text);
  write_file(dir / (name + ".smt2"), p.attempt->script);
}

bool Session::nodes_agree() const {
  const auto& n0 = net_->node(0);
  for (std::size_t i = 1; i < net_->size(); ++i) {
    const auto& n = net_->node(i);
    if (n.world().snapshot_json() != n0.world().snapshot_json() || n.repo().to_json() != n0.repo().to_json() ||
        n.log_text() != n0.log_text()) {
      return false;
    }
  }
  return true;
}

void Session::snapshot(const std::string& label) {
  if (cfg_.dump_dir.empty()) return;
  for (std::size_t i = 0; i < net_->size(); ++i) {
    fs::path dir = fs::path(cfg_.dump_dir) / label / ("node" + std::to_string(i));
    const auto& n = net_->node(i);
    write_file(dir / "world.json", n.world().snapshot_json());
    write_file(dir / "repo.json", n.repo().to_json());
    write_file(dir / "log.json", n.log_text());
  }
}

bool Session::run_line(const std::string& raw, const fs::path& base) {
  std::string line = trim(raw);
  if (line.empty() || line.front() == '#') return true;
  ++step_;
  auto started = std::chrono::steady_clock::now();
  Directive d = split(line);
  std::string tag = "[" + std::to_string(step_) + "] ";
  auto need = [&](std::size_t n) {
    if (d.lead.size() != n) throw Error(Errc::Usage, "'" + d.verb + "' takes " + std::to_string(n) + " argument(s)");
  };
  auto need_call = [&]() -> CallSpec {
    if (!d.call) throw Error(Errc::Usage, "'" + d.verb + "' needs a call");
    return parse_call(*d.call);
  };
  auto from = [&]() {
    auto f = d.option("from");
    if (!f) throw Error(Errc::Usage, "'" + d.verb + "' needs 'from <account>'");
    return *f;
  };
  auto outcomes_all = [&](protocol::Outcome::Status st, std::optional<protocol::RejectReason> r) {
    if (last_outcomes_.empty()) return false;
    for (const auto& o : last_outcomes_) {
      if (o.status != st || (r && o.reason != r)) return false;
    }
    return true;
  };
  bool ok = true;
  std::string result;

  if (d.verb == "load") {
    need(1);
    load_source(base / d.lead[0]);
    result = "loaded " + d.lead[0];
  } else if (d.verb == "account") {
    need(2);
    Address a = resolve_address(d.lead[1]);
    names_[d.lead[0]] = a;
    result = d.lead[0] + " = " + a.to_hex();
  } else if (d.verb == "deploy") {
    need(1);
    CallSpec c = need_call();
    std::vector<Word256> args;
    for (const auto& a : c.args) args.push_back(resolve_value(a));
    last_proof_.reset();
    last_outcomes_ = issuer_->deploy(d.lead[0], c.function, args, resolve_address(from()));
    if (!last_outcomes_.empty() && last_outcomes_.front().created) names_[d.lead[0]] = *last_outcomes_.front().created;
    result = "deploy " + d.lead[0] + " " + c.function + " -> " + summarize(last_outcomes_);
  } else if (d.verb == "submit" || d.verb == "publish" || d.verb == "prove") {
    need(1);
    CallSpec c = need_call();
    vm::Transaction tx = make_tx(d.lead[0], c, from());
    lang::ExprPtr hyp = parse_hypothesis(d.under.value_or(""));
    std::string head = d.verb + " " + tx.id + " " + c.target + "." + c.function;
    if (d.verb == "submit" && !d.flag("prove")) {
      last_proof_.reset();
      last_outcomes_ = issuer_->submit(tx);
      result = head + " -> " + summarize(last_outcomes_);
    } else {
      std::pair<protocol::Issuer::Proof, std::vector<protocol::Outcome>> r;
      if (d.verb == "submit") r = issuer_->submit_proven(tx, hyp.get());
      else if (d.verb == "publish") r = issuer_->publish(tx, hyp.get());
      else r.first = issuer_->prove(tx, hyp.get());
      last_proof_ = std::move(r.first);
      if (last_proof_->error_code == Errc::SolverFailure) out_.solver_failure = true;
      dump_proof(tx.id, *last_proof_);
      result = head + " under " + protocol::hypothesis_text(hyp.get()) + ": " + describe_proof(*last_proof_);
      if (d.verb != "prove") {
        last_outcomes_ = std::move(r.second);
        result += "\n    -> " + summarize(last_outcomes_);
      }
      if (auto save = d.option("save")) {
        if (last_proof_->attempt && last_proof_->attempt->theorem) {
          save_theorem_file((base / *save).string(), *last_proof_->attempt->theorem, tx);
          result += "\n    saved " + *save;
        }
      }
    }
  } else if (d.verb == "prove-deploy") {
    need(1);
    CallSpec c = need_call();
    std::vector<Word256> args;
    for (const auto& a : c.args) args.push_back(resolve_value(a));
    lang::ExprPtr hyp = parse_hypothesis(d.under.value_or(""));
    last_proof_ = issuer_->prove_deploy(c.function, args, resolve_address(from()), hyp.get());
    if (last_proof_->error_code == Errc::SolverFailure) out_.solver_failure = true;
    dump_proof(d.lead[0], *last_proof_);
    result = "prove-deploy " + d.lead[0] + " " + c.function + " under " + protocol::hypothesis_text(hyp.get()) +
             ": " + describe_proof(*last_proof_);
  } else if (d.verb == "import-theorem") {
    need(1);
    protocol::Message m;
    m.kind = protocol::Message::Kind::Publish;
    m.bundle = load_theorem_file((base / d.lead[0]).string());
    last_proof_.reset();
    last_outcomes_ = net_->broadcast(std::move(m));
    result = "import-theorem " + d.lead[0] + " -> " + summarize(last_outcomes_);
  } else if (d.verb == "expect-commit") {
    need(0);
    result = "expect-commit";
    if (!outcomes_all(protocol::Outcome::Status::Committed, std::nullopt)) ok = fail("not committed on every node");
  } else if (d.verb == "expect-accept") {
    need(0);
    result = "expect-accept";
    if (!outcomes_all(protocol::Outcome::Status::Accepted, std::nullopt)) ok = fail("not accepted on every node");
  } else if (d.verb == "expect-reject") {
    need(1);
    auto r = protocol::parse_reason(d.lead[0]);
    if (!r) throw Error(Errc::Usage, "unknown reject reason '" + d.lead[0] + "'");
    result = "expect-reject " + d.lead[0];
    if (!outcomes_all(protocol::Outcome::Status::Rejected, r)) ok = fail("not rejected with " + d.lead[0] + " on every node");
  } else if (d.verb == "expect-verdict") {
    need(1);
    result = "expect-verdict " + d.lead[0];
    if (!last_proof_ || !last_proof_->attempt) {
      ok = fail("no proof attempt");
    } else if (smt::verdict_name(last_proof_->attempt->verdict) != d.lead[0]) {
      ok = fail(std::string("verdict is ") + std::string(smt::verdict_name(last_proof_->attempt->verdict)));
    }
  } else if (d.verb == "expect-error") {
    need(1);
    auto code = parse_errc(d.lead[0]);
    if (!code) throw Error(Errc::Usage, "unknown error code '" + d.lead[0] + "'");
    result = "expect-error " + d.lead[0];
    if (!last_proof_ || last_proof_->error_code != code) ok = fail("no " + d.lead[0] + " error");
  } else if (d.verb == "expect-storage") {
    // expect-storage acct.slot[key] == value
    std::string rest = trim(line.substr(d.verb.size()));
    auto eq = rest.find("==");
    if (eq == std::string::npos) throw Error(Errc::Usage, "expect-storage needs '=='");
    std::string lhs = trim(rest.substr(0, eq));
    Word256 want = resolve_value(trim(rest.substr(eq + 2)));
    auto dot = lhs.find('.');
    if (dot == std::string::npos) throw Error(Errc::Usage, "expect-storage needs account.slot");
    vm::SlotKey key;
    key.account = resolve_address(lhs.substr(0, dot));
    std::string slot = lhs.substr(dot + 1);
    if (auto br = slot.find('['); br != std::string::npos) {
      if (slot.back() != ']') throw Error(Errc::Usage, "bad index in '" + lhs + "'");
      key.key = resolve_address(slot.substr(br + 1, slot.size() - br - 2));
      slot = slot.substr(0, br);
    }
    key.slot = slot;
    result = "expect-storage " + lhs + " == " + want.to_dec();
    for (std::size_t i = 0; i < net_->size() && ok; ++i) {
      Word256 got = net_->node(i).world().read(key);
      if (got != want) ok = fail("node " + std::to_string(i) + " has " + got.to_dec());
    }
  } else if (d.verb == "expect-solver-calls") {
    need(1);
    std::uint64_t want = resolve_value(d.lead[0]).to_big().convert_to<std::uint64_t>();
    std::uint64_t got = net_->node_solver_calls() - solver_mark_;
    solver_mark_ = net_->node_solver_calls();
    result = "expect-solver-calls " + std::to_string(want);
    if (got != want) ok = fail("nodes made " + std::to_string(got) + " solver calls");
  } else if (d.verb == "expect-theorems") {
    need(1);
    std::size_t want = resolve_value(d.lead[0]).to_big().convert_to<std::size_t>();
    result = "expect-theorems " + std::to_string(want);
    for (std::size_t i = 0; i < net_->size() && ok; ++i) {
      if (net_->node(i).repo().size() != want) {
        ok = fail("node " + std::to_string(i) + " stores " + std::to_string(net_->node(i).repo().size()));
      }
    }
  } else if (d.verb == "expect-invariants") {
    need(1);
    Address a = resolve_address(d.lead[0]);
    result = "expect-invariants " + d.lead[0];
    for (std::size_t i = 0; i < net_->size() && ok; ++i) {
      auto bad = protocol::violated_invariants(net_->node(i).world(), a);
      if (!bad.empty()) ok = fail("node " + std::to_string(i) + " violates " + bad.front());
    }
  } else if (d.verb == "expect-return") {
    need(1);
    Word256 want = resolve_value(d.lead[0]);
    result = "expect-return " + want.to_dec();
    if (last_outcomes_.empty() || !last_outcomes_.front().return_value) {
      ok = fail("no return value");
    } else if (*last_outcomes_.front().return_value != want) {
      ok = fail("returned " + last_outcomes_.front().return_value->to_dec());
    }
  } else if (d.verb == "expect-agree") {
    need(0);
    result = "expect-agree";
    if (!nodes_agree()) ok = fail("node states differ");
  } else if (d.verb == "snapshot") {
    need(1);
    snapshot(d.lead[0]);
    const auto& n0 = net_->node(0);
    Hash32 digest = sha256(n0.world().snapshot_json() + n0.repo().to_json() + n0.log_text());
    result = "snapshot " + d.lead[0] + " " + digest.short_hex() + (nodes_agree() ? " (nodes agree)" : " (nodes differ)");
  } else {
    throw Error(Errc::Usage, "unknown directive '" + d.verb + "'");
  }

  if (cfg_.timestamps) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    result += "  [" + std::to_string(ms.count()) + " ms]";
  }
  out_.report.insert(out_.report.end() - (ok ? 0 : 1), tag + result);
  out_.node_solver_calls = net_->node_solver_calls();
  out_.issuer_solver_calls = issuer_->solver_calls();
  out_.theorems = net_->node(0).repo().size();
  return ok;
}

void Session::run_file(const fs::path& path) {
  std::string text = read_file(path);
  std::istringstream is(text);
  std::size_t n = 0;
  for (std::string line; std::getline(is, line);) {
    ++n;
    try {
      if (!run_line(line, path.parent_path())) return;
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ":" + std::to_string(n) + ": " + bare_message(e));
    }
  }
}

}  // namespace tct::cli
