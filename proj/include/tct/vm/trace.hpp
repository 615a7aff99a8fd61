// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tct/common/hash.hpp"
#include "tct/common/word256.hpp"

namespace tct::vm {

/// Anchors an event to a statement: code hash, function, pre-order index.
struct StatementId {
  Hash32 code;
  std::string function;
  std::uint32_t index = 0;

  friend bool operator==(const StatementId&, const StatementId&) = default;
};

namespace ev {

struct Assign {
  StatementId at;
  std::string local;
};
struct StorageWrite {
  StatementId at;
  Address account;
  std::string slot;
  std::optional<Address> index;
};
struct StorageRead {
  StatementId at;
  Address account;
  std::string slot;
  std::optional<Address> index;
};
struct Branch {
  StatementId at;
  bool taken = false;
};
struct RequirePass {
  StatementId at;
};
struct AssertSite {
  StatementId at;
};
struct CallEnter {
  StatementId at;
  Address caller;
  Address callee;
  Hash32 callee_code;
  std::string function;
};
struct CallExit {
  StatementId at;
};
struct Revert {
  StatementId at;
  std::string reason;
};
/// Terminal marker of a normally completed transaction.
struct Complete {};

}  // namespace ev

using TraceEvent = std::variant<ev::Assign, ev::StorageWrite, ev::StorageRead, ev::Branch, ev::RequirePass,
                                ev::AssertSite, ev::CallEnter, ev::CallExit, ev::Revert, ev::Complete>;

struct Trace {
  Hash32 entry_code;
  std::string entry_function;
  Address entry_account;
  Address origin;
  bool is_deployment = false;
  std::vector<TraceEvent> events;

  bool completed() const { return !events.empty() && std::holds_alternative<ev::Complete>(events.back()); }
  bool reverted() const { return !events.empty() && std::holds_alternative<ev::Revert>(events.back()); }
};

}  // namespace tct::vm
