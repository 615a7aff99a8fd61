// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tct/common/hash.hpp"

namespace tct::repo {

inline constexpr int kSchemaVersion = 1;

/// A proven statement: every call of `function` on code `code` whose
/// arguments and pre-state satisfy `hypothesis` and whose execution follows
/// path `path` preserves the invariants (and meets the other goals).
struct Theorem {
  Hash32 id;
  Hash32 code;
  std::string contract;
  std::string function;
  std::string hypothesis;  // canonical printed form, "true" when absent
  Hash32 path;
  std::uint32_t goals = 0;
  std::string origin_tx;  // transaction the theorem was first proven on
  std::uint64_t added_at = 0;

  friend bool operator==(const Theorem&, const Theorem&) = default;
};

Hash32 theorem_id(const Hash32& code, const std::string& function, const std::string& hypothesis, const Hash32& path);

class TheoremRepo {
 public:
  /// Adds a theorem; returns false when one with the same id is stored.
  /// Throws IncompleteEvidence when the id does not match the fields.
  bool add(const Theorem& t);
  const Theorem* find(const Hash32& id) const;
  /// Theorems about (code, function), in id order.
  std::vector<const Theorem*> about(const Hash32& code, const std::string& function) const;
  std::size_t size() const { return by_id_.size(); }
  const std::map<Hash32, Theorem>& all() const { return by_id_; }

  /// Canonical JSON text (sorted by id, two-space indent, trailing newline).
  std::string to_json() const;
  static TheoremRepo from_json(const std::string& text);

  /// Writes atomically (temp file and rename). Throws PersistenceFailure.
  void save(const std::string& path) const;
  static TheoremRepo load(const std::string& path);

 private:
  std::map<Hash32, Theorem> by_id_;
};

}  // namespace tct::repo
