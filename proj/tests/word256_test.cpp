// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <gmpxx.h>
#include <gtest/gtest.h>

#include <random>

#include "tct/common/word256.hpp"

namespace tct {
namespace {

mpz_class to_mpz(const Word256& w) { return mpz_class(w.to_dec()); }

Word256 random_word(std::mt19937_64& rng) {
  // mix of tiny, near-boundary and uniform values
  switch (rng() % 4) {
    case 0: return Word256(rng() % 16);
    case 1: return Word256::max() - Word256(rng() % 16);
    case 2: return Word256::from_big(pow2(255)) + Word256(rng() % 16) - Word256(8);
    default: {
      BigInt v = 0;
      for (int i = 0; i < 4; ++i) v = (v << 64) | BigInt(rng());
      return Word256::from_big(v);
    }
  }
}

TEST(Word256, WrappingArithmeticMatchesGmp) {
  std::mt19937_64 rng(7);
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), 2, 256);
  auto norm = [&](mpz_class v) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    return r;
  };
  for (int i = 0; i < 2000; ++i) {
    Word256 a = random_word(rng), b = random_word(rng);
    mpz_class x = to_mpz(a), y = to_mpz(b);
    EXPECT_EQ(to_mpz(a + b), norm(x + y));
    EXPECT_EQ(to_mpz(a - b), norm(x - y));
    EXPECT_EQ(to_mpz(a * b), norm(x * y));
    if (y != 0) {
      EXPECT_EQ(to_mpz(a / b), x / y);
      EXPECT_EQ(to_mpz(a % b), x % y);
    }
    EXPECT_EQ(a < b, x < y);
  }
}

TEST(Word256, TextRoundTrip) {
  Word256 w = Word256::from_big(pow2(255) + 1);
  EXPECT_EQ(w.to_dec(), "57896044618658097711785492504343953926634992332820282019728792003956564819969");
  EXPECT_EQ(Word256::parse(w.to_dec()), w);
  EXPECT_EQ(Word256::parse(w.to_hex()), w);
  EXPECT_FALSE(Word256::parse("not a number").has_value());
  EXPECT_EQ(Word256::from_big(pow2(256) + 3), Word256(3));
  EXPECT_EQ(Word256::from_big(BigInt(-1)), Word256::max());
  EXPECT_FALSE(Word256::from_big_exact(pow2(256)).has_value());
}

TEST(Address, RangeAndParsing) {
  EXPECT_TRUE(Address::fits(pow2(160) - 1));
  EXPECT_FALSE(Address::fits(pow2(160)));
  EXPECT_FALSE(Address::fits(BigInt(-1)));
  auto a = Address::parse("0xd0");
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, Address::from_u64(0xd0));
  EXPECT_EQ(a->to_hex(), "0x00000000000000000000000000000000000000d0");
}

}  // namespace
}  // namespace tct
