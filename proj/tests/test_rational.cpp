// Copyright 2026 The esembed Authors
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

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <span>

#include "esembed/errors.hpp"
#include "esembed/rational.hpp"
#include "esembed/rng.hpp"

namespace esembed {
namespace {

TEST(Rational, NormalisesSignAndGcd) {
  const Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(0, -5), Rational(0));
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Rational, ParsesAllNotations) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("0.05"), Rational(1, 20));
  EXPECT_EQ(Rational::parse("1e-10"), Rational(1, 10'000'000'000));
  EXPECT_EQ(Rational::parse("2.5e-3"), Rational(1, 400));
  EXPECT_EQ(Rational::parse(" 1/20 "), Rational(1, 20));
  for (const char* bad : {"", "abc", "1/0", "1e", "1.2.3", "--1", "1e99"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(Rational, FloorAndCeilRoundTowardInfinities) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(4).ceil(), 4);
}

TEST(Rational, ArithmeticAndOrdering) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_LT(Rational(99, 100), Rational(1));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(3, 4).to_string(), "3/4");
  EXPECT_EQ(Rational(-5).to_string(), "-5");
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(Rational, OverflowIsReported) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_THROW(big + big, std::overflow_error);
}

TEST(ScaledSqrt, FrozenValues) {
  // Reference values computed independently in floating point far from ties.
  EXPECT_EQ(scaled_sqrt_ceil(Rational(1), Rational(1, 20), 100), 23);   // 100/sqrt(20) = 22.36
  EXPECT_EQ(scaled_sqrt_floor(Rational(30), Rational(1, 20), 200), 1341);
  EXPECT_EQ(scaled_sqrt_ceil(Rational(2), Rational(1, 100), 100), 20);  // exact square
  EXPECT_EQ(scaled_sqrt_floor(Rational(2), Rational(1, 100), 100), 20);
  EXPECT_EQ(scaled_sqrt_ceil(Rational(10), Rational(1, 10'000'000'000), 1000), 1);
  EXPECT_EQ(scaled_sqrt_floor(Rational(100), Rational(1, 10'000'000'000), 1000), 1);
  EXPECT_EQ(scaled_sqrt_ceil(Rational(5), Rational(0), 1000), 0);
}

TEST(ScaledSqrt, AtMostAgreesWithFloor) {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Rational c(static_cast<std::int64_t>(rng.below(50) + 1), static_cast<std::int64_t>(rng.below(10) + 1));
    const Rational d(static_cast<std::int64_t>(rng.below(20)), 100);
    const auto k = static_cast<std::int64_t>(rng.below(1000));
    const std::int64_t fl = scaled_sqrt_floor(c, d, k);
    const std::int64_t ce = scaled_sqrt_ceil(c, d, k);
    EXPECT_TRUE(at_most_scaled_sqrt(fl, c, d, k));
    EXPECT_FALSE(at_most_scaled_sqrt(fl + 1, c, d, k));
    EXPECT_TRUE(ce == fl || ce == fl + 1);
    const double approx = c.to_double() * std::sqrt(d.to_double()) * static_cast<double>(k);
    EXPECT_NEAR(static_cast<double>(fl), std::floor(approx), 1.0);
  }
  EXPECT_TRUE(at_most_scaled_sqrt(-5, Rational(1), Rational(1, 4), 10));
  EXPECT_THROW(scaled_sqrt_floor(Rational(-1), Rational(1, 4), 10), DomainError);
}

TEST(Isqrt, ExactAroundSquares) {
  for (std::uint64_t r : {0ULL, 1ULL, 2ULL, 1000ULL, 4294967295ULL, 3037000499ULL}) {
    const unsigned __int128 sq = static_cast<unsigned __int128>(r) * r;
    EXPECT_EQ(isqrt_floor(sq), r);
    if (r > 0) EXPECT_EQ(isqrt_floor(sq - 1), r - 1);
    EXPECT_EQ(isqrt_floor(sq + 1), r == 0 ? 1U : r);
  }
}

TEST(Rng, SeededStreamsAreReproducible) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  // std::mt19937_64 with the default seed has a standardised 10000th output.
  Rng standard(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = standard.next();
  EXPECT_EQ(x, 9981545732273789042ULL);
  EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
  EXPECT_NE(mix_seed(1, 0), mix_seed(2, 0));
}

TEST(Rng, BelowIsUnbiasedOnSmallRange) {
  Rng rng(3);
  std::array<int, 6> counts{};
  for (int i = 0; i < 60000; ++i) ++counts[rng.below(6)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(Rng, ShuffleHitsEveryPermutationOfThree) {
  Rng rng(11);
  std::map<std::array<int, 3>, int> seen;
  for (int i = 0; i < 6000; ++i) {
    std::array<int, 3> a{0, 1, 2};
    rng.shuffle(std::span<int>(a));
    ++seen[a];
  }
  ASSERT_EQ(seen.size(), 6U);
  for (const auto& [perm, count] : seen) EXPECT_NEAR(count, 1000, 150);
}

}  // namespace
}  // namespace esembed
