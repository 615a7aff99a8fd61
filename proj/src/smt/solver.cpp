// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/smt/solver.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <cstring>

#include "tct/common/error.hpp"

namespace tct::smt {

namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    const char* dir = std::getenv("TMPDIR");
    path_ = std::string(dir && *dir ? dir : "/tmp") + "/tct-XXXXXX.smt2";
    std::vector<char> buf(path_.begin(), path_.end());
    buf.push_back('\0');
    int fd = ::mkstemps(buf.data(), 5);
    if (fd < 0) throw Error(Errc::SolverFailure, "cannot create a temporary script file: " + std::string(std::strerror(errno)));
    path_.assign(buf.data());
    std::size_t off = 0;
    while (off < content.size()) {
      ssize_t n = ::write(fd, content.data() + off, content.size() - off);
      if (n < 0) {
        if (errno == EINTR) continue;
        ::close(fd);
        ::unlink(path_.c_str());
        throw Error(Errc::SolverFailure, "cannot write the script file");
      }
      off += static_cast<std::size_t>(n);
    }
    ::close(fd);
  }
  ~TempFile() { ::unlink(path_.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct ProcessResult {
  std::string out;
  int exit_code = -1;
  bool killed = false;
};

ProcessResult run_process(const std::vector<std::string>& argv, int wall_ms) {
  int fds[2];
  if (::pipe(fds) != 0) throw Error(Errc::SolverFailure, "pipe failed");
  pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    throw Error(Errc::SolverFailure, "fork failed");
  }
  if (pid == 0) {
    ::dup2(fds[1], 1);
    ::dup2(fds[1], 2);
    ::close(fds[0]);
    ::close(fds[1]);
    int devnull = ::open("/dev/null", O_RDONLY);
    if (devnull >= 0) ::dup2(devnull, 0);
    std::vector<char*> args;
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    ::execvp(args[0], args.data());
    ::_exit(127);
  }
  ::close(fds[1]);
  ProcessResult r;
  auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(wall_ms);
  char buf[65536];
  for (;;) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now()).count();
    if (left <= 0) {
      ::kill(pid, SIGKILL);
      r.killed = true;
      break;
    }
    pollfd p{fds[0], POLLIN, 0};
    int rc = ::poll(&p, 1, static_cast<int>(std::min<long long>(left, 1000)));
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (rc == 0) continue;
    ssize_t n = ::read(fds[0], buf, sizeof buf);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    r.out.append(buf, static_cast<std::size_t>(n));
  }
  ::close(fds[0]);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proven: return "Proven";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

SolverAnswer run_solver(const std::string& script, const std::string& path, int timeout_ms) {
  SolverAnswer ans;
  TempFile file(script);
  ProcessResult pr = run_process({path, "-smt2", "-t:" + std::to_string(timeout_ms), file.path()}, timeout_ms + 2000);
  ans.output = pr.out;
  if (pr.killed) {
    ans.status = SatStatus::Unknown;
    ans.reason = "wall-clock timeout";
    return ans;
  }
  if (pr.exit_code == 127 && pr.out.empty()) throw Error(Errc::SolverFailure, "cannot run solver '" + path + "'");
  std::vector<SExpr> items;
  try {
    items = parse_sexprs(pr.out);
  } catch (const Error&) {
    throw Error(Errc::SolverFailure, "unreadable solver output: " + pr.out.substr(0, 400));
  }
  if (items.empty()) throw Error(Errc::SolverFailure, "solver printed nothing (exit " + std::to_string(pr.exit_code) + ")");
  const SExpr& first = items[0];
  if (first.is("sat")) {
    ans.status = SatStatus::Sat;
  } else if (first.is("unsat")) {
    ans.status = SatStatus::Unsat;
  } else if (first.is("unknown") || first.is("timeout")) {
    ans.status = SatStatus::Unknown;
  } else {
    throw Error(Errc::SolverFailure, "solver error: " + pr.out.substr(0, 400));
  }
  for (std::size_t i = 1; i < items.size(); ++i) {
    const SExpr& it = items[i];
    if (it.is_atom || it.list.empty()) continue;
    if (it.list.size() == 2 && it.list[0].is(":reason-unknown")) {
      ans.reason = it.list[1].atom;
    } else if (it.list[0].is("error")) {
      // get-value after unsat fails; only matters when a model was expected
      if (ans.status == SatStatus::Sat) throw Error(Errc::SolverFailure, "solver error: " + to_string(it));
    } else if (ans.status == SatStatus::Sat && !it.list[0].is_atom) {
      ans.model = parse_model(it);
      ans.has_model = true;
    }
  }
  if (ans.status == SatStatus::Unknown && ans.reason.empty()) ans.reason = "unknown";
  return ans;
}

CheckResult check_vc(const vcgen::VerificationCondition& vc, const SolverConfig& cfg, const std::vector<Pin>& pins) {
  CheckResult r;
  r.script = emit_script(vc, pins);
  r.goals.assign(vc.goals.size(), Verdict::Unknown);
  int timeout = cfg.timeout_ms.value_or(vc.nonlinear ? kNonlinearTimeoutMs : kDefaultTimeoutMs);
  if (timeout <= 0) {
    r.reason = "timeout 0";
    return r;
  }
  SolverAnswer a = run_solver(r.script.text, cfg.path, timeout);
  r.solver_ran = true;
  r.reason = a.reason;
  switch (a.status) {
    case SatStatus::Unsat:
      r.verdict = Verdict::Proven;
      r.goals.assign(vc.goals.size(), Verdict::Proven);
      break;
    case SatStatus::Sat:
      r.verdict = Verdict::Refuted;
      r.model = a.model;
      r.has_model = a.has_model;
      for (std::size_t i = 0; i < r.script.goal_names.size(); ++i) {
        const ModelValue* v = a.model.find(r.script.goal_names[i]);
        if (v && v->kind == ModelValue::Kind::Bool && !v->b) r.goals[i] = Verdict::Refuted;
      }
      break;
    case SatStatus::Unknown:
      r.verdict = Verdict::Unknown;
      // a partial model after unknown is not evidence of anything
      break;
  }
  return r;
}

}  // namespace tct::smt
