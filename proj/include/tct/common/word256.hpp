// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tct {

/// Unbounded integer, used for annotation semantics and as the oracle-free
/// carrier between the VM and the SMT layer.
using BigInt = boost::multiprecision::cpp_int;

/// Floor division / modulo with a non-negative remainder, matching SMT-LIB
/// `div` and `mod` for a positive divisor. Divisor must be non-zero.
BigInt euclid_div(const BigInt& a, const BigInt& b);
BigInt euclid_mod(const BigInt& a, const BigInt& b);

/// 2^bits as a BigInt.
BigInt pow2(unsigned bits);

/// Parses a decimal or 0x-prefixed hexadecimal numeral.
std::optional<BigInt> parse_bigint(std::string_view text);

/// Unsigned 256-bit machine word. +, -, * wrap modulo 2^256.
class Word256 {
 public:
  using Rep = boost::multiprecision::uint256_t;

  Word256() = default;
  Word256(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Word256(const Rep& v) : v_(v) {}

  /// Reduces modulo 2^256; negative inputs wrap as in two's complement.
  static Word256 from_big(const BigInt& v);
  /// Returns nullopt when `v` is outside [0, 2^256).
  static std::optional<Word256> from_big_exact(const BigInt& v);
  static std::optional<Word256> parse(std::string_view text);
  static Word256 max();

  BigInt to_big() const { return BigInt(v_); }
  const Rep& rep() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  std::string to_dec() const;
  /// 0x-prefixed, lowercase, no leading zeros ("0x0" for zero).
  std::string to_hex() const;

  friend Word256 operator+(const Word256& a, const Word256& b) { return Word256(Rep(a.v_ + b.v_)); }
  friend Word256 operator-(const Word256& a, const Word256& b) { return Word256(Rep(a.v_ - b.v_)); }
  friend Word256 operator*(const Word256& a, const Word256& b) { return Word256(Rep(a.v_ * b.v_)); }
  // Callers must rule out a zero divisor.
  friend Word256 operator/(const Word256& a, const Word256& b) { return Word256(Rep(a.v_ / b.v_)); }
  friend Word256 operator%(const Word256& a, const Word256& b) { return Word256(Rep(a.v_ % b.v_)); }

  friend bool operator==(const Word256& a, const Word256& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Word256& a, const Word256& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rep v_ = 0;
};

/// 160-bit account address.
class Address {
 public:
  Address() = default;
  /// Truncates to the low 160 bits.
  explicit Address(const Word256& w);
  static Address from_u64(std::uint64_t v) { return Address(Word256(v)); }
  /// Accepts 0x-prefixed hex or decimal; rejects values >= 2^160.
  static std::optional<Address> parse(std::string_view text);
  static bool fits(const BigInt& v);

  const Word256& word() const { return w_; }
  /// 0x + 40 lowercase hex digits.
  std::string to_hex() const;

  friend bool operator==(const Address&, const Address&) = default;
  friend auto operator<=>(const Address&, const Address&) = default;

 private:
  Word256 w_;
};

}  // namespace tct
