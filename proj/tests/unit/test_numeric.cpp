// Copyright 2026 The qbm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qbm/numeric.hpp"

using namespace qbm;

namespace {

// Independent integer oracle: signed value of a raw n-bit pattern.
std::int64_t signed_of(std::uint64_t raw, std::size_t n) {
  const std::int64_t v = static_cast<std::int64_t>(raw);
  return (raw >> (n - 1)) & 1 ? v - (std::int64_t{1} << n) : v;
}

// Independent oracle: unsigned n-bit pattern of a signed value.
std::uint64_t pattern_of(std::int64_t value, std::size_t n) {
  const std::int64_t mod = std::int64_t{1} << n;
  return static_cast<std::uint64_t>(((value % mod) + mod) % mod);
}

}  // namespace

TEST(TwosComplement, SevenInFourBits) {
  const auto bits = to_twos_complement(7, 4);
  EXPECT_EQ(bits.to_string(), "0111");
  EXPECT_TRUE(bits[0] && bits[1] && bits[2] && !bits[3]);
}

TEST(TwosComplement, Zero) { EXPECT_EQ(to_twos_complement(0, 4).to_string(), "0000"); }

TEST(TwosComplement, NegativeSeven) {
  // 2^4 - 7 = 9
  EXPECT_EQ(pattern_of(-7, 4), 9u);
  EXPECT_EQ(to_twos_complement(-7, 4).to_string(), "1001");
  EXPECT_EQ(from_twos_complement(BitVec::from_string("1001")), -7);
}

TEST(TwosComplement, ProductOfThreeAndSeven) {
  EXPECT_EQ(from_twos_complement(BitVec::from_string("00010101")), 21);
  EXPECT_EQ(from_twos_complement(BitVec::from_string("0000")), 0);
}

TEST(TwosComplement, RangeErrors) {
  EXPECT_THROW(to_twos_complement(8, 4), RangeError);
  EXPECT_THROW(to_twos_complement(-9, 4), RangeError);
  EXPECT_NO_THROW(to_twos_complement(-8, 4));
  EXPECT_THROW(SignedWord(2, 2), RangeError);
  EXPECT_THROW(SignedWord(0, 0), RangeError);
  EXPECT_THROW(from_twos_complement(BitVec()), RangeError);
}

TEST(TwosComplement, ExhaustiveRoundTripAgainstOracle) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::int64_t v = SignedWord::min_value(n); v <= SignedWord::max_value(n); ++v) {
      const auto bits = to_twos_complement(v, n);
      ASSERT_EQ(bits.to_uint(), pattern_of(v, n)) << v << " @" << n;
      ASSERT_EQ(from_twos_complement(bits), v);
    }
    for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << n); ++raw) {
      ASSERT_EQ(from_twos_complement(BitVec::from_uint(raw, n)), signed_of(raw, n));
    }
  }
}

TEST(TwosComplement, SixtyFourBitEdges) {
  EXPECT_EQ(from_twos_complement(BitVec::from_uint(~std::uint64_t{0}, 64)), -1);
  EXPECT_EQ(from_twos_complement(BitVec::from_uint(std::uint64_t{1} << 62, 63)),
            -(std::int64_t{1} << 62));
}

TEST(OnesComplement, Examples) {
  EXPECT_EQ(ones_complement(BitVec::from_string("0111")).to_string(), "1000");
  EXPECT_EQ(ones_complement(BitVec::from_string("0000")).to_string(), "1111");
}

TEST(OnesComplement, PlusOneIsNegation) {
  for (std::size_t w = 1; w <= 8; ++w) {
    const std::uint64_t mod = std::uint64_t{1} << w;
    for (std::uint64_t raw = 0; raw < mod; ++raw) {
      const auto v = BitVec::from_uint(raw, w);
      const auto c = ones_complement(v);
      ASSERT_EQ((c.to_uint() + raw + 1) % mod, 0u);
      ASSERT_EQ(ones_complement(c), v);
      // Same identity through the library adder.
      ASSERT_EQ(add_mod(c, v, true).to_uint(), 0u);
    }
  }
}

TEST(AddMod, MatchesIntegerArithmetic) {
  for (std::size_t w = 1; w <= 6; ++w) {
    const std::uint64_t mod = std::uint64_t{1} << w;
    for (std::uint64_t a = 0; a < mod; ++a) {
      for (std::uint64_t b = 0; b < mod; ++b) {
        const auto x = BitVec::from_uint(a, w);
        const auto y = BitVec::from_uint(b, w);
        ASSERT_EQ(add_mod(x, y).to_uint(), (a + b) % mod);
        ASSERT_EQ(sub_mod(x, y).to_uint(), (a + mod - b) % mod);
      }
    }
  }
  EXPECT_THROW(add_mod(BitVec(2), BitVec(3)), std::invalid_argument);
}

TEST(ArithmeticShift, BoothExampleRows) {
  const auto first = arithmetic_shift_right(BitVec::from_string("1001"),
                                            BitVec::from_string("0011"), false);
  EXPECT_EQ(first.a.to_string(), "1100");
  EXPECT_EQ(first.q.to_string(), "1001");
  EXPECT_TRUE(first.qm1);

  const auto second = arithmetic_shift_right(first.a, first.q, first.qm1);
  EXPECT_EQ(second.a.to_string(), "1110");
  EXPECT_EQ(second.q.to_string(), "0100");
  EXPECT_TRUE(second.qm1);
}

TEST(ArithmeticShift, ZeroIsFixedPoint) {
  const BitVec z(4);
  EXPECT_EQ(arithmetic_shift_right(z, z, false), (ShiftedRegisters{z, z, false}));
}

TEST(ArithmeticShift, HalvesTheConcatenationAndKeepsSign) {
  // A:Q:Q_-1 read as a (2n+1)-bit signed integer is floor-halved.
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t total = 2 * n + 1;
    for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << total); ++raw) {
      const bool qm1 = raw & 1;
      const auto q = BitVec::from_uint(raw >> 1, n);
      const auto a = BitVec::from_uint(raw >> (n + 1), n);
      const auto s = arithmetic_shift_right(a, q, qm1);

      const std::uint64_t out = (s.a.to_uint() << (n + 1)) | (s.q.to_uint() << 1) | s.qm1;
      const std::int64_t before = signed_of(raw, total);
      const std::int64_t halved = before >= 0 ? before / 2 : -((-before + 1) / 2);
      ASSERT_EQ(signed_of(out, total), halved);
      ASSERT_EQ(s.a.msb(), a.msb());
    }
  }
}

TEST(BoothRecode, SixteenBitChain) {
  const auto digits = booth_recode(BitVec::from_string("0010111011010010"));
  EXPECT_EQ(digits.to_string(), "01N100N10N1N01N0");
  EXPECT_EQ(digits[15], 0);
  EXPECT_EQ(digits.value(), 0b0010111011010010);
}

TEST(BoothRecode, SmallExamples) {
  EXPECT_EQ(booth_recode(BitVec::from_string("0000")).digits(), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(booth_recode(BitVec::from_string("0011")).digits(), (std::vector<int>{-1, 0, 1, 0}));
  EXPECT_EQ(booth_recode(BitVec::from_string("0011")).value(), 3);
  EXPECT_EQ(booth_recode(BitVec::from_string("1111")).digits(), (std::vector<int>{-1, 0, 0, 0}));
}

TEST(BoothRecode, ValuePreservedForEveryChainUpToSixteenBits) {
  for (std::size_t n = 1; n <= 16; ++n) {
    for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << n); ++raw) {
      const auto digits = booth_recode(BitVec::from_uint(raw, n));
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < n; ++i) sum += digits[i] * (std::int64_t{1} << i);
      ASSERT_EQ(sum, signed_of(raw, n)) << raw << " @" << n;
    }
  }
}

TEST(BoothRecode, RunOfOnesNeedsTwoOperations) {
  // 2^n + ... + 2^(n-k) = 2^(n+1) - 2^(n-k)
  for (std::int64_t n = 0; n <= 30; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      std::int64_t lhs = 0;
      for (std::int64_t j = n - k; j <= n; ++j) lhs += std::int64_t{1} << j;
      ASSERT_EQ(lhs, (std::int64_t{1} << (n + 1)) - (std::int64_t{1} << (n - k)));

      // A leading zero keeps the block positive; recoding leaves exactly the
      // two nonzero digits of the right-hand side.
      const auto digits = booth_recode(BitVec::from_uint(static_cast<std::uint64_t>(lhs), n + 2));
      std::size_t nonzero = 0;
      for (int d : digits.digits()) nonzero += d != 0;
      ASSERT_EQ(nonzero, 2u);
      ASSERT_EQ(digits[n + 1], 1);
      ASSERT_EQ(digits[n - k], -1);
    }
  }
}

TEST(BoothDigits, RejectsDigitsOutsideAlphabet) {
  EXPECT_THROW(BoothDigits({0, 2}), std::invalid_argument);
}

TEST(ClassicalBooth, ThreeTimesSevenTrace) {
  const auto run = classical_booth_multiply(SignedWord(3, 4), SignedWord(7, 4));
  EXPECT_EQ(run.product.value(), 21);
  EXPECT_EQ(run.product.width(), 8u);

  struct Row {
    const char* a;
    const char* q;
    bool qm1;
    std::size_t cycle;
    BoothAction action;
  };
  const std::vector<Row> expected{
      {"0000", "0011", false, 0, BoothAction::Initial},
      {"1001", "0011", false, 1, BoothAction::Subtract},
      {"1100", "1001", true, 1, BoothAction::Shift},
      {"1110", "0100", true, 2, BoothAction::Shift},
      {"0101", "0100", true, 3, BoothAction::Add},
      {"0010", "1010", false, 3, BoothAction::Shift},
      {"0001", "0101", false, 4, BoothAction::Shift},
  };
  ASSERT_EQ(run.trace.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const auto& row = run.trace[k];
    EXPECT_EQ(row.a.to_string(), expected[k].a) << "row " << k;
    EXPECT_EQ(row.q.to_string(), expected[k].q) << "row " << k;
    EXPECT_EQ(row.qm1, expected[k].qm1) << "row " << k;
    EXPECT_EQ(row.m.to_string(), "0111") << "row " << k;
    EXPECT_EQ(row.cycle, expected[k].cycle) << "row " << k;
    EXPECT_EQ(row.action, expected[k].action) << "row " << k;
  }
}

TEST(ClassicalBooth, ZeroMultiplierKeepsAZero) {
  for (std::int64_t y = -8; y <= 7; ++y) {
    const auto run = classical_booth_multiply(SignedWord(0, 4), SignedWord(y, 4));
    EXPECT_EQ(run.product.value(), 0);
    for (const auto& row : run.trace) EXPECT_EQ(row.a.to_uint(), 0u);
  }
}

TEST(ClassicalBooth, NegativeMultiplier) {
  EXPECT_EQ(classical_booth_multiply(SignedWord(-3, 4), SignedWord(7, 4)).product.value(), -21);
}

TEST(ClassicalBooth, ExactlyNCyclesEachEndingInAShift) {
  for (std::int64_t x = -8; x <= 7; ++x) {
    const auto run = classical_booth_multiply(SignedWord(x, 4), SignedWord(5, 4));
    std::size_t shifts = 0;
    for (const auto& row : run.trace) shifts += row.action == BoothAction::Shift;
    EXPECT_EQ(shifts, 4u);
    EXPECT_EQ(run.trace.back().cycle, 4u);
  }
}

TEST(ClassicalBooth, EveryPairMatchesNativeProduct) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::int64_t x = SignedWord::min_value(n); x <= SignedWord::max_value(n); ++x) {
      for (std::int64_t y = SignedWord::min_value(n); y <= SignedWord::max_value(n); ++y) {
        ASSERT_EQ(classical_booth_multiply(SignedWord(x, n), SignedWord(y, n)).product.value(),
                  x * y)
            << x << " * " << y << " @" << n;
      }
    }
  }
}

TEST(ClassicalBooth, WidthMismatchRejected) {
  EXPECT_THROW(classical_booth_multiply(SignedWord(1, 4), SignedWord(1, 5)),
               std::invalid_argument);
}

TEST(RenderTrace, HasColumnsAndRows) {
  const auto text =
      render_trace(classical_booth_multiply(SignedWord(3, 4), SignedWord(7, 4)).trace);
  EXPECT_EQ(text.rfind("A     Q     Q-1  M     Action\n", 0), 0u);
  EXPECT_NE(text.find("1001  0011  0    0111  A <- A-M"), std::string::npos);
  EXPECT_NE(text.find("0001  0101  0    0111  Shift"), std::string::npos);
}
