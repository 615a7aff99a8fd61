// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/vm/world.hpp"

#include "json.hpp"

#include "tct/common/error.hpp"

namespace tct::vm {

void WorldState::register_program(const lang::ResolvedProgram& program) {
  for (const auto& c : program.contracts) {
    if (!code_.count(c.code_hash)) code_[c.code_hash] = std::make_shared<const lang::ResolvedContract>(c);
  }
}

const lang::ResolvedContract* WorldState::code(const Hash32& h) const {
  auto it = code_.find(h);
  return it == code_.end() ? nullptr : it->second.get();
}

const lang::ResolvedContract* WorldState::code_by_name(std::string_view name) const {
  for (const auto& [h, c] : code_) {
    if (c->def.name == name) return c.get();
  }
  return nullptr;
}

const Account* WorldState::find(const Address& a) const {
  auto it = accounts_.find(a);
  return it == accounts_.end() ? nullptr : &it->second;
}

Word256 WorldState::read(const SlotKey& k) const {
  const Account* acc = find(k.account);
  if (!acc) return Word256();
  if (k.key) {
    auto m = acc->maps.find(k.slot);
    if (m == acc->maps.end()) return Word256();
    auto e = m->second.find(*k.key);
    return e == m->second.end() ? Word256() : e->second;
  }
  auto s = acc->scalars.find(k.slot);
  return s == acc->scalars.end() ? Word256() : s->second;
}

void WorldState::apply(const StateDelta& d) {
  for (const auto& c : d.created) {
    const lang::ResolvedContract* rc = code(c.code_hash);
    if (!rc) throw Error(Errc::NotFound, "no code registered for " + c.code_hash.hex());
    Account acc;
    acc.code_hash = c.code_hash;
    for (const auto& s : rc->def.storage) {
      if (s.type == lang::TypeTag::Map) {
        acc.maps[s.name];
      } else {
        acc.scalars[s.name] = Word256();
      }
    }
    accounts_[c.address] = std::move(acc);
  }
  for (const auto& ch : d.changes) {
    auto it = accounts_.find(ch.key.account);
    if (it == accounts_.end()) throw Error(Errc::UnknownAccount, "delta writes to " + ch.key.account.to_hex());
    if (ch.key.key) {
      auto& m = it->second.maps[ch.key.slot];
      if (ch.after.is_zero()) {
        m.erase(*ch.key.key);
      } else {
        m[*ch.key.key] = ch.after;
      }
    } else {
      it->second.scalars[ch.key.slot] = ch.after;
    }
  }
  if (d.next_address) next_address_ = *d.next_address;
}

std::string WorldState::snapshot_json() const {
  nlohmann::ordered_json accounts = nlohmann::ordered_json::object();
  for (const auto& [addr, acc] : accounts_) {
    nlohmann::ordered_json storage = nlohmann::ordered_json::object();
    // Merge scalars and maps into one name-sorted object.
    const lang::ResolvedContract* rc = code(acc.code_hash);
    std::map<std::string, nlohmann::ordered_json> slots;
    for (const auto& [n, v] : acc.scalars) {
      const lang::StorageDecl* d = rc ? rc->find_storage(n) : nullptr;
      slots[n] = d && d->type == lang::TypeTag::Address ? Address(v).to_hex() : v.to_dec();
    }
    for (const auto& [n, m] : acc.maps) {
      nlohmann::ordered_json entries = nlohmann::ordered_json::object();
      for (const auto& [k, v] : m) entries[k.to_hex()] = v.to_dec();
      slots[n] = std::move(entries);
    }
    for (auto& [n, v] : slots) storage[n] = std::move(v);
    nlohmann::ordered_json a = nlohmann::ordered_json::object();
    a["code"] = acc.code_hash.hex();
    a["contract"] = rc ? rc->def.name : "";
    a["storage"] = std::move(storage);
    accounts[addr.to_hex()] = std::move(a);
  }
  nlohmann::ordered_json root = nlohmann::ordered_json::object();
  root["accounts"] = std::move(accounts);
  root["next_address"] = Address::from_u64(next_address_).to_hex();
  return root.dump(2) + "\n";
}

}  // namespace tct::vm
