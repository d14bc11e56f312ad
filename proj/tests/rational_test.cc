// Copyright 2026 The Cyclobound Authors
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

#include "cyclobound/rational.h"

#include <gtest/gtest.h>

#include <limits>
#include <random>

namespace cyclobound {
namespace {

TEST(Rational, ReducesAndNormalisesSign) {
  const Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(0, -5), Rational(0));
  EXPECT_EQ(Rational(0, -5).den(), 1);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, SerialisesWithSlash) {
  EXPECT_EQ(Rational(15).str(), "15/1");
  EXPECT_EQ(Rational(-3, 6).str(), "-1/2");
  EXPECT_EQ(Rational(0).str(), "0/1");
}

TEST(Rational, ArithmeticAgainstCrossMultiplication) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::int64_t> value(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> positive(1, 1000);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t a = value(rng), b = positive(rng);
    const std::int64_t c = value(rng), d = positive(rng);
    const Rational x(a, b), y(c, d);
    EXPECT_EQ(x + y, Rational(a * d + c * b, b * d));
    EXPECT_EQ(x - y, Rational(a * d - c * b, b * d));
    EXPECT_EQ(x * y, Rational(a * c, b * d));
    if (c != 0) EXPECT_EQ(x / y, Rational(a * d, b * c));
    EXPECT_EQ(x < y, a * d < c * b);
    EXPECT_EQ(x == y, a * d == c * b);
    EXPECT_EQ((x - y).sign(), (a * d > c * b) - (a * d < c * b));
  }
}

TEST(Rational, OverflowThrows) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + Rational(1), std::overflow_error);
  EXPECT_THROW(big * Rational(2), std::overflow_error);
  EXPECT_THROW(Rational(1, 3) + Rational(1, std::numeric_limits<std::int64_t>::max()),
               std::overflow_error);
  // Large operands whose reduced result fits are fine.
  EXPECT_EQ(big * Rational(1, 2) * Rational(2), big);
}

TEST(Rational, ComparisonUsesWideProducts) {
  const std::int64_t m = std::numeric_limits<std::int64_t>::max();
  // (m-1)^2 and m(m-2) differ by one and both overflow 64 bits.
  EXPECT_GT(Rational(m - 1, m), Rational(m - 2, m - 1));
  EXPECT_GT(Rational(m), Rational(m - 1));
}

TEST(Rational, Binom2) {
  EXPECT_EQ(binom2(-3), 0);
  EXPECT_EQ(binom2(1), 0);
  EXPECT_EQ(binom2(2), 1);
  EXPECT_EQ(binom2(6), 15);
}

}  // namespace
}  // namespace cyclobound
