// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/common/word256.hpp"

#include <cctype>

namespace tct {

BigInt euclid_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a % b;
  if (r < 0) {
    q += (b > 0) ? -1 : 1;
  }
  return q;
}

BigInt euclid_mod(const BigInt& a, const BigInt& b) {
  BigInt r = a % b;
  if (r < 0) r += (b > 0) ? b : BigInt(-b);
  return r;
}

BigInt pow2(unsigned bits) {
  BigInt v = 1;
  v <<= bits;
  return v;
}

std::optional<BigInt> parse_bigint(std::string_view text) {
  if (text.empty()) return std::nullopt;
  BigInt value = 0;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    for (char c : text.substr(2)) {
      int digit;
      if (c >= '0' && c <= '9') digit = c - '0';
      else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
      else return std::nullopt;
      value = value * 16 + digit;
    }
    return value;
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

Word256 Word256::from_big(const BigInt& v) {
  static const BigInt modulus = pow2(256);
  return Word256(Rep(euclid_mod(v, modulus)));
}

std::optional<Word256> Word256::from_big_exact(const BigInt& v) {
  static const BigInt modulus = pow2(256);
  if (v < 0 || v >= modulus) return std::nullopt;
  return Word256(Rep(v));
}

std::optional<Word256> Word256::parse(std::string_view text) {
  auto big = parse_bigint(text);
  if (!big) return std::nullopt;
  return from_big_exact(*big);
}

Word256 Word256::max() { return Word256(Rep(~Rep(0))); }

std::string Word256::to_dec() const { return v_.str(); }

std::string Word256::to_hex() const {
  if (v_ == 0) return "0x0";
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  Rep v = v_;
  while (v != 0) {
    out.push_back(digits[static_cast<unsigned>(v & 0xf)]);
    v >>= 4;
  }
  out += "x0";
  return {out.rbegin(), out.rend()};
}

Address::Address(const Word256& w) {
  static const Word256::Rep mask = (Word256::Rep(1) << 160) - 1;
  w_ = Word256(Word256::Rep(w.rep() & mask));
}

bool Address::fits(const BigInt& v) {
  static const BigInt limit = pow2(160);
  return v >= 0 && v < limit;
}

std::optional<Address> Address::parse(std::string_view text) {
  auto big = parse_bigint(text);
  if (!big || !fits(*big)) return std::nullopt;
  return Address(Word256(Word256::Rep(*big)));
}

std::string Address::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(42, '0');
  out[1] = 'x';
  Word256::Rep v = w_.rep();
  for (int i = 41; i >= 2; --i) {
    out[i] = digits[static_cast<unsigned>(v & 0xf)];
    v >>= 4;
  }
  return out;
}

}  // namespace tct
