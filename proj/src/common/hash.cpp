// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/common/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace tct {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

std::string Hash32::hex() const {
  std::string out = "0x";
  out.reserve(66);
  for (auto b : bytes) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0xf]);
  }
  return out;
}

std::string Hash32::short_hex() const { return hex().substr(2, 8); }

std::optional<Hash32> Hash32::parse(std::string_view text) {
  if (text.size() == 66 && text[0] == '0' && text[1] == 'x') text.remove_prefix(2);
  if (text.size() != 64) return std::nullopt;
  Hash32 h;
  for (std::size_t i = 0; i < 32; ++i) {
    int hi = hex_value(text[2 * i]);
    int lo = hex_value(text[2 * i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    h.bytes[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return h;
}

Hash32 sha256(std::span<const std::uint8_t> data) {
  Hash32 h;
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), h.bytes.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != h.bytes.size()) {
    throw std::runtime_error("sha256 digest failed");
  }
  return h;
}

Hash32 sha256(std::string_view text) {
  return sha256(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

void ByteWriter::u32(std::uint32_t v) {
  u8(static_cast<std::uint8_t>(v >> 24));
  u8(static_cast<std::uint8_t>(v >> 16));
  u8(static_cast<std::uint8_t>(v >> 8));
  u8(static_cast<std::uint8_t>(v));
}

void ByteWriter::str(std::string_view s) {
  u32(static_cast<std::uint32_t>(s.size()));
  bytes(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

}  // namespace tct
