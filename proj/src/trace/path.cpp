// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/trace/path.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "tct/common/error.hpp"

namespace tct::trace {

namespace {

constexpr std::string_view kVersion = "tct-path-v1";

enum Tag : std::uint8_t {
  kAssign = 0x01,
  kStorageWrite = 0x02,
  kStorageRead = 0x03,
  kBranch = 0x04,
  kRequirePass = 0x05,
  kAssertSite = 0x06,
  kCallEnter = 0x07,
  kCallExit = 0x08,
  kRevert = 0x09,
  kComplete = 0x0A,
};

void put_sid(ByteWriter& w, const vm::StatementId& s) {
  w.hash(s.code);
  w.str(s.function);
  w.u32(s.index);
}

std::string sid_text(const vm::StatementId& s) {
  return s.code.short_hex() + ":" + s.function + "#" + std::to_string(s.index);
}

}  // namespace

std::vector<std::uint8_t> path_encoding(const vm::Trace& trace) {
  if (!trace.completed() && !trace.reverted()) {
    throw Error(Errc::IncompleteTrace, "trace of " + trace.entry_function + " has no terminal event");
  }
  ByteWriter w;
  w.str(kVersion);
  w.hash(trace.entry_code);
  w.str(trace.entry_function);
  std::map<Address, std::uint32_t> ordinal{{trace.entry_account, 0}};
  for (const auto& event : trace.events) {
    std::visit(
        [&](const auto& e) {
          using E = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<E, vm::ev::Assign>) {
            w.u8(kAssign);
            put_sid(w, e.at);
          } else if constexpr (std::is_same_v<E, vm::ev::StorageWrite>) {
            w.u8(kStorageWrite);
            put_sid(w, e.at);
          } else if constexpr (std::is_same_v<E, vm::ev::StorageRead>) {
            w.u8(kStorageRead);
            put_sid(w, e.at);
          } else if constexpr (std::is_same_v<E, vm::ev::Branch>) {
            w.u8(kBranch);
            put_sid(w, e.at);
            w.u8(e.taken ? 1 : 0);
          } else if constexpr (std::is_same_v<E, vm::ev::RequirePass>) {
            w.u8(kRequirePass);
            put_sid(w, e.at);
          } else if constexpr (std::is_same_v<E, vm::ev::AssertSite>) {
            w.u8(kAssertSite);
            put_sid(w, e.at);
          } else if constexpr (std::is_same_v<E, vm::ev::CallEnter>) {
            auto it = ordinal.find(e.callee);
            if (it == ordinal.end()) {
              it = ordinal.emplace(e.callee, static_cast<std::uint32_t>(ordinal.size())).first;
            }
            w.u8(kCallEnter);
            put_sid(w, e.at);
            w.hash(e.callee_code);
            w.u32(it->second);
            w.str(e.function);
          } else if constexpr (std::is_same_v<E, vm::ev::CallExit>) {
            w.u8(kCallExit);
            put_sid(w, e.at);
          } else if constexpr (std::is_same_v<E, vm::ev::Revert>) {
            w.u8(kRevert);
            put_sid(w, e.at);
          } else {
            w.u8(kComplete);
          }
        },
        event);
  }
  return w.data();
}

PathHash path_hash(const vm::Trace& trace) { return sha256(path_encoding(trace)); }

std::string dump_trace(const vm::Trace& trace) {
  std::ostringstream os;
  os << "trace " << (trace.is_deployment ? "deploy " : "call ") << trace.entry_code.short_hex() << ':'
     << trace.entry_function << " account=" << trace.entry_account.to_hex()
     << " origin=" << trace.origin.to_hex() << '\n';
  auto key = [](const std::optional<Address>& k) { return k ? "[" + k->to_hex() + "]" : std::string(); };
  std::size_t n = 0;
  for (const auto& event : trace.events) {
    char pos[16];
    std::snprintf(pos, sizeof pos, "%04zu ", n++);
    os << pos;
    std::visit(
        [&](const auto& e) {
          using E = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<E, vm::ev::Assign>) {
            os << "Assign " << sid_text(e.at) << ' ' << e.local;
          } else if constexpr (std::is_same_v<E, vm::ev::StorageWrite>) {
            os << "StorageWrite " << sid_text(e.at) << ' ' << e.account.to_hex() << ' ' << e.slot << key(e.index);
          } else if constexpr (std::is_same_v<E, vm::ev::StorageRead>) {
            os << "StorageRead " << sid_text(e.at) << ' ' << e.account.to_hex() << ' ' << e.slot << key(e.index);
          } else if constexpr (std::is_same_v<E, vm::ev::Branch>) {
            os << "Branch " << sid_text(e.at) << ' ' << (e.taken ? "taken" : "not-taken");
          } else if constexpr (std::is_same_v<E, vm::ev::RequirePass>) {
            os << "RequirePass " << sid_text(e.at);
          } else if constexpr (std::is_same_v<E, vm::ev::AssertSite>) {
            os << "AssertSite " << sid_text(e.at);
          } else if constexpr (std::is_same_v<E, vm::ev::CallEnter>) {
            os << "CallEnter " << sid_text(e.at) << ' ' << e.caller.to_hex() << " -> " << e.callee.to_hex() << ' '
               << e.callee_code.short_hex() << ':' << e.function;
          } else if constexpr (std::is_same_v<E, vm::ev::CallExit>) {
            os << "CallExit " << sid_text(e.at);
          } else if constexpr (std::is_same_v<E, vm::ev::Revert>) {
            os << "Revert " << sid_text(e.at) << " \"" << e.reason << '"';
          } else {
            os << "Complete";
          }
        },
        event);
    os << '\n';
  }
  return os.str();
}

}  // namespace tct::trace
