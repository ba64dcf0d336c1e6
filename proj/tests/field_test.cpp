// Copyright 2026 The Tower Interpolation Authors.
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

#include "test_util.hpp"

namespace tower {
namespace {

using testing::kQ;

TEST(PrimeField, InverseOfTwoModFive) {
  PrimeField f(5);
  EXPECT_EQ(f.from_int(2).inverse(), f.from_int(3));
  EXPECT_EQ(f.from_int(2) * f.from_int(3), f.one());
}

TEST(PrimeField, MultiplicationTableAgainstNaiveMod) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u}) {
    PrimeField f(q);
    for (std::int64_t a = 0; a < q; ++a) {
      for (std::int64_t b = 0; b < q; ++b) {
        EXPECT_EQ(f.from_int(a) * f.from_int(b), f.from_int((a * b) % q));
        EXPECT_EQ(f.from_int(a) + f.from_int(b), f.from_int((a + b) % q));
        EXPECT_EQ(f.from_int(a) - f.from_int(b), f.from_int(((a - b) % q + q) % q));
        if (b != 0) {
          EXPECT_EQ(f.from_int(a) / f.from_int(b) * f.from_int(b), f.from_int(a));
        }
      }
    }
  }
  PrimeField f7(7);
  EXPECT_EQ(f7.from_int(4) * f7.from_int(5), f7.from_int(6));
}

TEST(PrimeField, NegativeAndLargeIntegersReduce) {
  PrimeField f(7);
  EXPECT_EQ(f.from_int(-1), f.from_int(6));
  EXPECT_EQ(f.from_int(700000001), f.from_int(1));
  EXPECT_EQ(f.parse("-3"), f.from_int(4));
  EXPECT_EQ(f.parse("1/2"), f.from_int(4));
}

TEST(PrimeField, LargestModulusDoesNotOverflow) {
  PrimeField f(4294967291u);
  auto a = f.from_int(4294967290);
  EXPECT_EQ(a * a, f.one());
  EXPECT_EQ(a + a, f.from_int(4294967289));
  EXPECT_EQ(a.inverse(), a);
}

TEST(PrimeField, ZeroInversionThrows) {
  PrimeField f(11);
  try {
    (void)f.zero().inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroInversion);
  }
  EXPECT_THROW((void)(f.one() / f.zero()), Error);
}

TEST(PrimeField, MixedModuliThrow) {
  PrimeField f5(5), f7(7);
  try {
    (void)(f5.one() + f7.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedContexts);
  }
  EXPECT_THROW((void)(f5.one() == f7.one()), Error);
}

TEST(PrimeField, RejectsComposites) {
  for (std::uint32_t q : {0u, 1u, 4u, 9u, 15u, 65535u}) {
    try {
      PrimeField f(q);
      FAIL() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNonPrimeField);
    }
  }
  EXPECT_NO_THROW(PrimeField(65521));
}

TEST(PrimeField, NameAndText) {
  PrimeField f(101);
  EXPECT_EQ(f.name(), "F_101");
  EXPECT_EQ(f.from_int(-1).to_string(), "100");
}

TEST(RationalField, ExactFractionArithmetic) {
  EXPECT_EQ(kQ.parse("1/2") + kQ.parse("1/3"), kQ.parse("5/6"));
  EXPECT_EQ(kQ.parse("2/4"), kQ.parse("1/2"));
  EXPECT_EQ(kQ.parse("-1/2") * kQ.parse("-2"), kQ.one());
  EXPECT_EQ(kQ.parse("3/7").inverse(), kQ.parse("7/3"));
  EXPECT_EQ(kQ.parse("5/6").to_string(), "5/6");
  EXPECT_EQ(kQ.parse(" 4 ").to_string(), "4");
  EXPECT_EQ(kQ.name(), "Q");
}

TEST(RationalField, BigValuesStayExact) {
  auto a = kQ.parse("123456789012345678901234567890/7");
  EXPECT_EQ(a * a.inverse(), kQ.one());
  EXPECT_EQ((a - a), kQ.zero());
}

TEST(RationalField, ZeroInversionAndParseErrors) {
  EXPECT_THROW((void)kQ.zero().inverse(), Error);
  for (const char* bad : {"", "1/0", "abc", "1.5", "1//2", "/3"}) {
    try {
      (void)kQ.parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::kParseError || e.code() == ErrorCode::kZeroInversion) << bad;
    }
  }
}

TEST(Power, MatchesRepeatedMultiplication) {
  PrimeField f(13);
  auto b = f.from_int(6);
  auto acc = f.one();
  for (std::uint64_t e = 0; e < 30; ++e) {
    EXPECT_EQ(power(b, e, f.one()), acc);
    acc = acc * b;
  }
}

TEST(Error, CodeNamesPrefixMessages) {
  Error e(ErrorCode::kNotTower, "witness");
  EXPECT_EQ(std::string(e.what()), "NotTower: witness");
  EXPECT_EQ(to_string(ErrorCode::kTargetTooLarge), "TargetTooLarge");
}

}  // namespace
}  // namespace tower
