/* Copyright 2026 The MapMetrics Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "mapmetrics/sospa.h"

#include <gtest/gtest.h>

#include <cmath>

#include "mapmetrics/errors.h"
#include "mapmetrics/validation.h"

namespace mapmetrics {
namespace {

constexpr double kHalfSqrt2 = 0.70710678118654752440;

// Five vertices 1 m apart along (1, -1)/sqrt(2), and the same line moved 1 m
// along its normal.
Polyline DiagonalLine(double offset) {
  std::vector<Point> pts;
  for (int t = 0; t < 5; ++t) {
    pts.push_back({kHalfSqrt2 * t + kHalfSqrt2 * offset,
                   -kHalfSqrt2 * t + kHalfSqrt2 * offset});
  }
  return Polyline(pts);
}

TEST(SospaTest, IdenticalIsZero) {
  const Polyline x({{0, 0}, {1, 2}, {3, 1}});
  const SospaResult r = Sospa(x, x, {1.5, 1.0});
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.matched_count, 3u);
  EXPECT_EQ(r.unmatched_count, 0u);
}

TEST(SospaTest, SwappedPairCostsTwoHalfPenalties) {
  const Polyline x({{0, 0}, {1, 0}});
  const Polyline y({{1, 0}, {0, 0}});
  const SospaResult r = Sospa(x, y, {1.0, 1.0});
  EXPECT_DOUBLE_EQ(r.value, 1.0);
  EXPECT_EQ(r.matched_count, 1u);
  EXPECT_EQ(r.unmatched_count, 2u);
}

TEST(SospaTest, PerpendicularShiftMatchesEveryPoint) {
  const MetricParams params{1.5, 1.0};
  const SospaResult r = Sospa(DiagonalLine(0.0), DiagonalLine(1.0), params);
  EXPECT_NEAR(r.value, 5.0, 1e-12);
  EXPECT_EQ(r.matched_count, 5u);
  EXPECT_NEAR(SospaNormalized(DiagonalLine(0.0), DiagonalLine(1.0), params),
              0.8, 1e-12);
}

TEST(SospaTest, EmptyInputs) {
  const MetricParams params{2.0, 1.0};
  const Polyline x({{0, 0}, {5, 5}, {9, 9}});
  EXPECT_EQ(Sospa(Polyline(), Polyline(), params).value, 0.0);
  EXPECT_DOUBLE_EQ(Sospa(x, Polyline(), params).value, 3.0);
  EXPECT_EQ(NormalizeSospa(0.0, 0, 0, params), 0.0);
  EXPECT_EQ(SospaNormalized(x, Polyline(), params), 1.0);
}

TEST(SospaTest, FarApartNormalizesToExactlyOne) {
  for (double p : {1.0, 1.5, 2.0}) {
    const MetricParams params{0.7, p};
    const Polyline x({{0, 0}, {1, 0}, {2, 0}});
    const Polyline y({{0, 50}, {1, 50}});
    EXPECT_EQ(SospaNormalized(x, y, params), 1.0) << "p=" << p;
    EXPECT_EQ(Sospa(x, y, params).value, SospaUpperBound(3, 2, params));
  }
}

TEST(SospaTest, QuadraticExponent) {
  // Matching costs 0.25 against 1.0 for two unmatched points.
  const SospaResult r =
      Sospa(Polyline({{0, 0}}), Polyline({{0.5, 0}}), {1.0, 2.0});
  EXPECT_DOUBLE_EQ(r.raw_power_cost, 0.25);
  EXPECT_DOUBLE_EQ(r.value, 0.5);
}

TEST(SospaTest, MatchBeyondCutoffIsNeverTaken) {
  // d = 2 > c = 1.5: leaving both unmatched is cheaper.
  const SospaResult r =
      Sospa(Polyline({{0, 0}}), Polyline({{2, 0}}), {1.5, 1.0});
  EXPECT_DOUBLE_EQ(r.value, 1.5);
  EXPECT_TRUE(r.assignment.empty());
}

TEST(SospaTest, UpperBoundFormula) {
  EXPECT_DOUBLE_EQ(SospaUpperBound(3, 5, {1.5, 1.0}), 6.0);
  EXPECT_DOUBLE_EQ(SospaUpperBound(1, 1, {2.0, 2.0}), 2.0);
}

TEST(SospaTest, ClosedInputIsContractError) {
  const Polyline closed({{0, 0}, {1, 0}, {1, 1}}, true);
  const Polyline open({{0, 0}, {1, 0}});
  EXPECT_THROW(Sospa(closed, open, {}), ContractError);
  EXPECT_THROW(SospaNormalized(closed, open, {}), ContractError);
}

TEST(SospaTest, DimensionMismatchIsInputError) {
  EXPECT_THROW(Sospa(Polyline({{0, 0}}), Polyline({{0, 0, 0}}), {}),
               InputError);
}

TEST(SospaTest, InvalidParamsRejected) {
  const Polyline x({{0, 0}});
  EXPECT_THROW(Sospa(x, x, {0.0, 1.0}), InputError);
  EXPECT_THROW(Sospa(x, x, {1.0, 0.9}), InputError);
}

TEST(SospaTest, BruteForceGuard) {
  std::vector<Point> pts;
  for (int i = 0; i < 9; ++i) pts.push_back({double(i), 0.0});
  EXPECT_THROW(SospaBruteForce(Polyline(pts), Polyline(pts), {}),
               SizeGuardError);
}

TEST(SospaTest, DirectionalMinFindsReversal) {
  const Polyline x({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  const DirectionalSospaResult r =
      SospaDirectionalMin(x, Reverse(x), {1.0, 1.0});
  EXPECT_TRUE(r.reversed);
  EXPECT_EQ(r.best.value, 0.0);
  const DirectionalSospaResult same = SospaDirectionalMin(x, x, {1.0, 1.0});
  EXPECT_FALSE(same.reversed);
}

TEST(SospaTest, IsOrderedAssignment) {
  EXPECT_TRUE(IsOrderedAssignment({}));
  EXPECT_TRUE(IsOrderedAssignment({{0, 1}, {2, 3}}));
  EXPECT_FALSE(IsOrderedAssignment({{0, 1}, {1, 1}}));
  EXPECT_FALSE(IsOrderedAssignment({{1, 0}, {0, 1}}));
}

// Properties over random pairs. The brute-force enumeration is the oracle.
TEST(SospaProperty, MatchesBruteForceAndReportsConsistentAssignment) {
  RandomSource rng(101);
  const double exponents[] = {1.0, 1.5, 2.0};
  for (int trial = 0; trial < 300; ++trial) {
    const MetricParams params{rng.Uniform(0.1, 3.0), exponents[trial % 3]};
    const Polyline x = rng.RandomPolyline(rng.Int(0, 6), 3.0, false);
    const Polyline y = rng.RandomPolyline(rng.Int(0, 6), 3.0, false);
    const SospaResult dp = Sospa(x, y, params);
    const SospaResult brute = SospaBruteForce(x, y, params);
    EXPECT_TRUE(RelativelyEqual(dp.value, brute.value, 1e-12));
    EXPECT_TRUE(IsOrderedAssignment(dp.assignment));
    EXPECT_TRUE(RelativelyEqual(TraceCost(x, y, dp.assignment, params),
                                dp.raw_power_cost, 1e-12));
    EXPECT_LE(dp.value,
              SospaUpperBound(x.size(), y.size(), params) * (1 + 1e-15));
  }
}

TEST(SospaProperty, ReversingBothIsInvariant) {
  RandomSource rng(102);
  for (int trial = 0; trial < 300; ++trial) {
    const MetricParams params{rng.Uniform(0.1, 3.0), 1.0};
    const Polyline x = rng.RandomPolyline(rng.Int(0, 10), 3.0, false);
    const Polyline y = rng.RandomPolyline(rng.Int(0, 10), 3.0, false);
    EXPECT_TRUE(RelativelyEqual(Sospa(x, y, params).value,
                                Sospa(Reverse(x), Reverse(y), params).value,
                                1e-12));
  }
}

TEST(SospaProperty, NormalizedInUnitInterval) {
  RandomSource rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const MetricParams params{rng.Uniform(0.1, 3.0), trial % 2 ? 2.0 : 1.0};
    const double v =
        SospaNormalized(rng.RandomPolyline(rng.Int(0, 10), 3, false),
                        rng.RandomPolyline(rng.Int(0, 10), 3, false), params);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

}  // namespace
}  // namespace mapmetrics
