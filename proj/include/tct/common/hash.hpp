// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tct {

/// 32-byte SHA-256 digest.
struct Hash32 {
  std::array<std::uint8_t, 32> bytes{};

  /// 0x-prefixed lowercase hex.
  std::string hex() const;
  /// First 8 hex digits without prefix, for compact human-facing dumps.
  std::string short_hex() const;
  static std::optional<Hash32> parse(std::string_view text);

  friend bool operator==(const Hash32&, const Hash32&) = default;
  friend auto operator<=>(const Hash32&, const Hash32&) = default;
};

Hash32 sha256(std::span<const std::uint8_t> data);
Hash32 sha256(std::string_view text);

/// Big-endian canonical byte encoder.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u32(std::uint32_t v);
  void bytes(std::span<const std::uint8_t> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }
  void hash(const Hash32& h) { bytes(h.bytes); }
  /// u32 length prefix followed by the raw bytes.
  void str(std::string_view s);

  const std::vector<std::uint8_t>& data() const { return buf_; }

 private:
  std::vector<std::uint8_t> buf_;
};

}  // namespace tct
