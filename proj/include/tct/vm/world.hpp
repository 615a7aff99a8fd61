// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tct/common/hash.hpp"
#include "tct/common/word256.hpp"
#include "tct/lang/resolve.hpp"

namespace tct::vm {

struct Account {
  Hash32 code_hash;
  std::map<std::string, Word256> scalars;
  std::map<std::string, std::map<Address, Word256>> maps;  // zero entries are absent
};

/// (account, slot) for scalars, (account, slot, key) for map entries.
struct SlotKey {
  Address account;
  std::string slot;
  std::optional<Address> key;

  friend auto operator<=>(const SlotKey&, const SlotKey&) = default;
  friend bool operator==(const SlotKey&, const SlotKey&) = default;
};

struct SlotChange {
  SlotKey key;
  Word256 before;
  Word256 after;
};

struct Creation {
  Address address;
  Hash32 code_hash;
};

/// Effects of one transaction. Empty for reverted executions.
struct StateDelta {
  std::vector<Creation> created;
  std::vector<SlotChange> changes;  // sorted by key, before != after
  std::optional<std::uint64_t> next_address;

  bool empty() const { return created.empty() && changes.empty() && !next_address; }
};

class WorldState {
 public:
  static constexpr std::uint64_t kFirstFreshAddress = 0xc0de0001;

  /// Makes the contracts' code available for deployment and calls.
  void register_program(const lang::ResolvedProgram& program);
  const lang::ResolvedContract* code(const Hash32& h) const;
  const lang::ResolvedContract* code_by_name(std::string_view name) const;

  const Account* find(const Address& a) const;
  bool is_contract(const Address& a) const { return find(a) != nullptr; }

  /// Unwritten slots and map entries read as zero.
  Word256 read(const SlotKey& k) const;

  std::uint64_t next_address() const { return next_address_; }
  Address peek_fresh_address() const { return Address::from_u64(next_address_); }

  void apply(const StateDelta& d);

  /// Canonical JSON: sorted keys, lowercase hex addresses, decimal words.
  std::string snapshot_json() const;

  const std::map<Address, Account>& accounts() const { return accounts_; }

 private:
  std::map<Hash32, std::shared_ptr<const lang::ResolvedContract>> code_;
  std::map<Address, Account> accounts_;
  std::uint64_t next_address_ = kFirstFreshAddress;
};

}  // namespace tct::vm
